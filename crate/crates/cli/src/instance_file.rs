//! Plain-text point files: a header `d=<int> n=<int>` followed by `n` lines
//! of `d` comma-separated decimals.

use std::fmt::Write as _;
use std::path::Path;

use hybridk::PointSet;

use crate::error::{CliError, CliResult};

fn parse_err(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Parse { line, msg: msg.into() }
}

fn header_field(tok: Option<&str>, key: &str) -> Result<usize, String> {
    let tok = tok.ok_or_else(|| format!("missing `{key}=` in header"))?;
    let val = tok
        .strip_prefix(key)
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| format!("expected `{key}=<int>`, found `{tok}`"))?;
    val.parse().map_err(|_| format!("`{val}` is not a non-negative integer"))
}

pub fn parse_instance(text: &str) -> CliResult<PointSet> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    let mut toks = header.split_whitespace();
    let d = header_field(toks.next(), "d").map_err(|m| parse_err(1, m))?;
    let n = header_field(toks.next(), "n").map_err(|m| parse_err(1, m))?;
    if let Some(extra) = toks.next() {
        return Err(parse_err(1, format!("unexpected header token `{extra}`")));
    }
    if d == 0 {
        return Err(parse_err(1, "dimension must be at least 1"));
    }
    let mut flat = Vec::with_capacity(n * d);
    let mut rows = 0;
    for (i, line) in lines {
        let lineno = i + 1;
        if line.trim().is_empty() {
            if rows == n {
                continue;
            }
            return Err(parse_err(lineno, "blank line inside the point list"));
        }
        if rows == n {
            return Err(parse_err(lineno, format!("more than the declared {n} points")));
        }
        let before = flat.len();
        for field in line.split(',') {
            let v: f64 = field
                .trim()
                .parse()
                .map_err(|_| parse_err(lineno, format!("`{}` is not a number", field.trim())))?;
            if !v.is_finite() {
                return Err(parse_err(lineno, format!("coordinate `{}` is not finite", field.trim())));
            }
            flat.push(v);
        }
        if flat.len() - before != d {
            return Err(parse_err(
                lineno,
                format!("expected {d} coordinates, found {}", flat.len() - before),
            ));
        }
        rows += 1;
    }
    if rows != n {
        return Err(parse_err(rows + 2, format!("expected {n} points, found {rows}")));
    }
    PointSet::from_flat(d, flat).map_err(CliError::from)
}

pub fn format_instance(points: &PointSet) -> String {
    let mut out = format!("d={} n={}\n", points.dim(), points.len());
    for p in points.iter() {
        for (j, x) in p.iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            write!(out, "{x}").expect("writing to a String");
        }
        out.push('\n');
    }
    out
}

pub fn read_instance(path: &Path) -> CliResult<PointSet> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_instance(&text)
}

pub fn write_instance(path: &Path, points: &PointSet) -> CliResult<()> {
    std::fs::write(path, format_instance(points)).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}
