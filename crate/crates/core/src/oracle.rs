//! Brute-force ground truth.
//!
//! Nothing in this module calls into [`crate::preprocess`] or
//! [`crate::solver`]; the only shared code is the cost primitive of
//! [`crate::geometry`]. Four oracles are provided:
//!
//! * [`brute_force_discrete`]: exact minimum over all k-subsets of a finite
//!   candidate universe;
//! * [`brute_force_continuous`]: the discrete oracle over a grid covering the
//!   bounding box, with an explicit additive error bound;
//! * [`certified_optimum`]: branch and bound over k-tuples of boxes that
//!   returns a feasible solution together with a certified lower bound on the
//!   continuous optimum;
//! * [`kcenter_radius_exact`]: the continuous k-center radius, by enumerating
//!   the balls spanned by at most `d + 1` points.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};

use crate::error::{HybridError, Result};
use crate::geometry::{cost, euclid, threshold, BoundingBox, PointSet, Power};
use crate::par::{map_indexed, Execution};

/// Default cap on the number of k-subsets an exhaustive search may visit.
pub const DEFAULT_ENUMERATION_BUDGET: u128 = 50_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    pub centers: PointSet,
    /// Cost of `centers`, recomputed with [`crate::geometry::cost`].
    pub cost: f64,
    /// Size of the candidate universe (grid oracles) or number of search
    /// nodes (branch and bound).
    pub candidate_count: usize,
    /// Coverage radius of the candidate grid, or the final box diameter.
    pub grid_resolution: f64,
    /// Certified lower bound on the continuous optimum `OPT_r`. Equal to `cost`
    /// for exact searches over a discrete universe only when the universe is
    /// known to contain an optimum.
    pub lower_bound: f64,
}

impl OracleResult {
    /// `cost - lower_bound`.
    pub fn slack(&self) -> f64 {
        (self.cost - self.lower_bound).max(0.0)
    }
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

fn validate(points: &PointSet, k: usize, r: f64) -> Result<()> {
    if points.is_empty() {
        return Err(HybridError::invalid("oracle needs at least one point"));
    }
    if k == 0 {
        return Err(HybridError::invalid("k must be at least 1"));
    }
    if !(r >= 0.0 && r.is_finite()) {
        return Err(HybridError::invalid(format!("invalid radius {r}")));
    }
    Ok(())
}

/// Exact minimum of `cost(P, F, r, z)` over all subsets `F` of `candidates`
/// with `|F| <= k`. Ties go to the lexicographically smallest index tuple.
pub fn brute_force_discrete(
    points: &PointSet,
    k: usize,
    r: f64,
    z: Power,
    candidates: &PointSet,
    budget: u128,
    exec: Execution,
) -> Result<OracleResult> {
    validate(points, k, r)?;
    if candidates.is_empty() {
        return Err(HybridError::invalid("empty candidate set"));
    }
    if candidates.dim() != points.dim() {
        return Err(HybridError::DimensionMismatch {
            expected: points.dim(),
            found: candidates.dim(),
        });
    }
    let m = candidates.len();
    // cost is monotone in F, so subsets of exactly min(k, m) elements suffice
    let size = k.min(m);
    let required = binomial(m, size);
    if required > budget {
        return Err(HybridError::Budget {
            what: "candidate subsets",
            required,
            budget,
        });
    }
    let n = points.len();
    let dmat: Vec<f64> = candidates
        .iter()
        .flat_map(|c| points.iter().map(move |p| euclid(p, c)))
        .collect();

    let firsts = m - size + 1;
    let per_first = map_indexed(exec, firsts, |first| {
        let mut best = (f64::INFINITY, Vec::new());
        let mut tuple = vec![first];
        let row = dmat[first * n..(first + 1) * n].to_vec();
        enumerate(&dmat, n, m, size, r, z, &mut tuple, &row, &mut best);
        best
    });
    let (best_cost, best_tuple) = per_first
        .into_iter()
        .min_by(|a, b| a.0.total_cmp(&b.0).then_with(|| a.1.cmp(&b.1)))
        .expect("at least one subset");
    debug_assert!(best_cost.is_finite());
    let centers = candidates.select(&best_tuple);
    let cost = cost(points, &centers, r, z)?;
    Ok(OracleResult {
        centers,
        cost,
        candidate_count: m,
        grid_resolution: 0.0,
        lower_bound: cost,
    })
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    dmat: &[f64],
    n: usize,
    m: usize,
    size: usize,
    r: f64,
    z: Power,
    tuple: &mut Vec<usize>,
    mins: &[f64],
    best: &mut (f64, Vec<usize>),
) {
    if tuple.len() == size {
        let c: f64 = mins.iter().map(|&d| threshold(d, r, z)).sum();
        if c < best.0 {
            *best = (c, tuple.clone());
        }
        return;
    }
    let start = tuple.last().map_or(0, |&i| i + 1);
    let remaining = size - tuple.len();
    let mut next = vec![0.0; n];
    for i in start..=(m - remaining) {
        let row = &dmat[i * n..(i + 1) * n];
        for ((out, &a), &b) in next.iter_mut().zip(mins).zip(row) {
            *out = a.min(b);
        }
        tuple.push(i);
        enumerate(dmat, n, m, size, r, z, tuple, &next, best);
        tuple.pop();
    }
}

/// Lower bound on `OPT_r` implied by a grid oracle whose centers can be moved
/// by at most `rho` from any continuous solution.
fn grid_lower_bound(cost: f64, n: usize, rho: f64, z: Power) -> f64 {
    match z {
        Power::Linear => (cost - n as f64 * rho).max(0.0),
        // sum (a + rho)^2 <= (sqrt(OPT) + sqrt(n) rho)^2 by Cauchy-Schwarz
        Power::Squared => (cost.sqrt() - (n as f64).sqrt() * rho).max(0.0).powi(2),
    }
}

/// Cell centers of side `2 * resolution / sqrt(d)` covering `bbox`, so every
/// point of the box is within `resolution` of some returned point.
fn covering_grid(bbox: &BoundingBox, resolution: f64, limit: u128) -> Result<PointSet> {
    let dim = bbox.dim();
    let side = 2.0 * resolution / (dim as f64).sqrt();
    let counts: Vec<u64> = (0..dim)
        .map(|j| (((bbox.hi[j] - bbox.lo[j]) / side).ceil() as u64).max(1))
        .collect();
    let total = counts
        .iter()
        .try_fold(1u128, |acc, &c| acc.checked_mul(c as u128))
        .unwrap_or(u128::MAX);
    if total > limit {
        return Err(HybridError::Budget {
            what: "oracle grid cells (use a coarser resolution)",
            required: total,
            budget: limit,
        });
    }
    let mut out = PointSet::with_capacity(dim, total as usize);
    let mut idx = vec![0u64; dim];
    let mut p = vec![0.0; dim];
    loop {
        for j in 0..dim {
            // center the cell block on the box
            let span = counts[j] as f64 * side;
            let start = 0.5 * (bbox.lo[j] + bbox.hi[j]) - 0.5 * span;
            p[j] = start + (idx[j] as f64 + 0.5) * side;
        }
        out.push_unchecked(&p);
        let mut j = 0;
        loop {
            if j == dim {
                return Ok(out);
            }
            idx[j] += 1;
            if idx[j] < counts[j] {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
    }
}

/// The distinct input points in lexicographic order, an optimal solution
/// whenever `k` is at least their number.
fn distinct_points_solution(points: &PointSet, r: f64, z: Power) -> Result<OracleResult> {
    let mut rows = points.to_rows();
    rows.sort_by(|a, b| crate::geometry::lex_cmp(a, b));
    rows.dedup();
    let centers = PointSet::from_rows(&rows)?;
    Ok(OracleResult {
        cost: cost(points, &centers, r, z)?,
        centers,
        candidate_count: 0,
        grid_resolution: 0.0,
        lower_bound: 0.0,
    })
}

/// Discrete oracle over a grid covering the bounding box of `P` inflated by
/// `r`. Every continuous center set has a grid counterpart with each center
/// moved by at most `resolution`, so the returned cost exceeds `OPT_r` by at
/// most `n * resolution` for `z = 1`. When `k` is at least the number of
/// distinct points, the points themselves are returned at cost 0.
pub fn brute_force_continuous(
    points: &PointSet,
    k: usize,
    r: f64,
    z: Power,
    resolution: f64,
    budget: u128,
    exec: Execution,
) -> Result<OracleResult> {
    validate(points, k, r)?;
    if !(resolution > 0.0 && resolution.is_finite()) {
        return Err(HybridError::invalid(format!("resolution must be positive, got {resolution}")));
    }
    if k >= points.distinct_count() {
        return distinct_points_solution(points, r, z);
    }
    let bbox = BoundingBox::of(points)?.inflate(r);
    // a grid with more cells than this can never pass the subset budget
    let cell_limit = if k == 1 { budget } else { budget.min(1 << 26) };
    let grid = covering_grid(&bbox, resolution, cell_limit)?;
    let required = binomial(grid.len(), k.min(grid.len()));
    if required > budget {
        return Err(HybridError::Budget {
            what: "oracle grid subsets (use a coarser resolution)",
            required,
            budget,
        });
    }
    let mut res = brute_force_discrete(points, k, r, z, &grid, budget, exec)?;
    res.grid_resolution = resolution;
    res.lower_bound = grid_lower_bound(res.cost, points.len(), resolution, z);
    Ok(res)
}

/// Approximate 1-median (`z = 1`) or 1-mean (`z = 2`) of `x` by the grid
/// oracle with `k = 1, r = 0`. Additive error at most `|X| * resolution` for
/// `z = 1`.
pub fn one_median_exact(x: &PointSet, resolution: f64, z: Power) -> Result<(Vec<f64>, f64)> {
    let res = brute_force_continuous(x, 1, 0.0, z, resolution, DEFAULT_ENUMERATION_BUDGET, Execution::Sequential)?;
    Ok((res.centers.point(0).to_vec(), res.cost))
}

#[derive(Debug, Clone, PartialEq)]
struct Cell {
    lo: Vec<f64>,
    hi: Vec<f64>,
}

impl Cell {
    fn center(&self) -> Vec<f64> {
        self.lo.iter().zip(&self.hi).map(|(a, b)| 0.5 * (a + b)).collect()
    }

    fn widest(&self) -> (usize, f64) {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(a, b)| b - a)
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |acc, (j, w)| if w > acc.1 { (j, w) } else { acc })
    }

    fn min_max_dist(&self, p: &[f64]) -> (f64, f64) {
        let (mut near, mut far) = (0.0, 0.0);
        for j in 0..p.len() {
            let (lo, hi) = (self.lo[j], self.hi[j]);
            let gap = if p[j] < lo {
                lo - p[j]
            } else if p[j] > hi {
                p[j] - hi
            } else {
                0.0
            };
            let reach = (p[j] - lo).abs().max((hi - p[j]).abs());
            near += gap * gap;
            far += reach * reach;
        }
        (near.sqrt(), far.sqrt())
    }

    fn key(&self) -> Vec<u64> {
        self.lo.iter().chain(&self.hi).map(|x| x.to_bits()).collect()
    }
}

struct Node {
    lb: f64,
    seq: u64,
    cells: Vec<Cell>,
}

impl PartialEq for Node {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Node {}
impl PartialOrd for Node {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Node {
    fn cmp(&self, other: &Self) -> Ordering {
        // newest first among equal bounds, so ties are explored depth-first
        self.lb.total_cmp(&other.lb).then(other.seq.cmp(&self.seq))
    }
}

/// Lower bound on `cost_r(P, F)` over all `F` with one center in each cell.
///
/// Points whose nearest cell is unambiguous are grouped by cell; within a
/// group the convex per-point costs are bounded below by the larger of the
/// per-point minima over the cell and the tangent plane at the cell center.
/// Ambiguous points fall back to the per-point minimum over all cells.
fn cell_lower_bound(points: &PointSet, cells: &[Cell], r: f64, z: Power, scratch: &mut LbScratch) -> f64 {
    let k = cells.len();
    let dim = points.dim();
    scratch.reset(k, dim, cells);
    let mut ambiguous = 0.0;
    for p in points.iter() {
        for (j, c) in cells.iter().enumerate() {
            scratch.near[j] = c.min_max_dist(p);
        }
        let (owner, far) = scratch
            .near
            .iter()
            .enumerate()
            .fold((0, f64::INFINITY), |acc, (j, &(_, f))| if f < acc.1 { (j, f) } else { acc });
        let determined = scratch
            .near
            .iter()
            .enumerate()
            .all(|(j, &(n, _))| j == owner || far <= n);
        if !determined {
            ambiguous += scratch
                .near
                .iter()
                .map(|&(n, _)| threshold(n, r, z))
                .fold(f64::INFINITY, f64::min);
            continue;
        }
        let (near, far) = scratch.near[owner];
        if far <= r || near <= r {
            // the thresholded cost reaches zero inside the cell
            continue;
        }
        let g = &mut scratch.groups[owner];
        g.per_point += threshold(near, r, z);
        let c0 = &scratch.centers[owner];
        let d0 = euclid(p, c0);
        g.value += threshold(d0, r, z);
        if d0 > 0.0 {
            let slope = match z {
                Power::Linear => 1.0,
                Power::Squared => 2.0 * (d0 - r).max(0.0),
            } / d0;
            for j in 0..dim {
                g.grad[j] += slope * (c0[j] - p[j]);
            }
        }
    }
    let grouped: f64 = scratch
        .groups
        .iter()
        .zip(cells)
        .map(|(g, c)| {
            let drop: f64 = g
                .grad
                .iter()
                .enumerate()
                .map(|(j, gj)| gj.abs() * 0.5 * (c.hi[j] - c.lo[j]))
                .sum();
            g.per_point.max(g.value - drop)
        })
        .sum();
    grouped + ambiguous
}

#[derive(Default)]
struct Group {
    per_point: f64,
    value: f64,
    grad: Vec<f64>,
}

#[derive(Default)]
struct LbScratch {
    near: Vec<(f64, f64)>,
    groups: Vec<Group>,
    centers: Vec<Vec<f64>>,
}

impl LbScratch {
    fn reset(&mut self, k: usize, dim: usize, cells: &[Cell]) {
        self.near.resize(k, (0.0, 0.0));
        self.groups.resize_with(k, Group::default);
        for g in &mut self.groups {
            g.per_point = 0.0;
            g.value = 0.0;
            g.grad.clear();
            g.grad.resize(dim, 0.0);
        }
        self.centers = cells.iter().map(Cell::center).collect();
    }
}

/// Branch and bound over k-tuples of boxes.
///
/// Starting from `k` copies of the bounding box of `P` (optimal centers lie
/// in the convex hull), the tuple with the smallest lower bound is split
/// along the widest axis of its widest box. Box centers give feasible
/// solutions. The search stops once the best feasible cost is within
/// `rel_gap` (relative) of the smallest open lower bound and returns both.
pub fn certified_optimum(
    points: &PointSet,
    k: usize,
    r: f64,
    z: Power,
    rel_gap: f64,
    node_budget: usize,
) -> Result<OracleResult> {
    validate(points, k, r)?;
    if !(rel_gap >= 0.0) {
        return Err(HybridError::invalid("relative gap must be non-negative"));
    }
    let dim = points.dim();
    if k >= points.distinct_count() {
        return distinct_points_solution(points, r, z);
    }
    let bbox = BoundingBox::of(points)?;
    let root = Cell {
        lo: bbox.lo.clone(),
        hi: bbox.hi.clone(),
    };
    let scale = bbox.diagonal().max(1e-300);
    let abs_tol = 1e-12 * scale;

    let mut scratch = LbScratch::default();
    let mut heap = BinaryHeap::new();
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut seq = 0u64;
    let mut best_cost = f64::INFINITY;
    let mut best_centers = PointSet::new(dim);
    let mut closed_lb = f64::INFINITY;
    let mut explored = 0usize;
    let mut finest = bbox.diagonal();

    let mut visit = |cells: Vec<Cell>,
                     heap: &mut BinaryHeap<Reverse<Node>>,
                     best_cost: &mut f64,
                     best_centers: &mut PointSet,
                     scratch: &mut LbScratch,
                     explored: &mut usize|
     -> Result<()> {
        let mut key: Vec<Vec<u64>> = cells.iter().map(Cell::key).collect();
        key.sort();
        if !seen.insert(key.concat()) {
            return Ok(());
        }
        *explored += 1;
        if *explored > node_budget {
            return Err(HybridError::Budget {
                what: "branch-and-bound nodes",
                required: *explored as u128,
                budget: node_budget as u128,
            });
        }
        let mut centers = PointSet::with_capacity(dim, cells.len());
        for c in &cells {
            centers.push_unchecked(&c.center());
        }
        let ub = crate::geometry::cost_unchecked(points, &centers, r, z);
        if ub < *best_cost {
            *best_cost = ub;
            *best_centers = centers;
        }
        let lb = cell_lower_bound(points, &cells, r, z, scratch).min(ub);
        seq += 1;
        heap.push(Reverse(Node { lb, seq, cells }));
        Ok(())
    };

    visit(
        vec![root; k],
        &mut heap,
        &mut best_cost,
        &mut best_centers,
        &mut scratch,
        &mut explored,
    )?;

    let lower_bound = loop {
        let Some(Reverse(node)) = heap.pop() else {
            break closed_lb.min(best_cost);
        };
        let target = (rel_gap * best_cost).max(abs_tol);
        if best_cost - node.lb <= target {
            break node.lb.min(closed_lb);
        }
        if node.lb >= best_cost - target {
            // cannot improve enough to matter, but keep its bound honest
            closed_lb = closed_lb.min(node.lb);
            continue;
        }
        let (which, (axis, width)) = node
            .cells
            .iter()
            .map(Cell::widest)
            .enumerate()
            .fold((0, (0, f64::NEG_INFINITY)), |acc, (i, w)| if w.1 > acc.1 .1 { (i, w) } else { acc });
        if width <= abs_tol {
            closed_lb = closed_lb.min(node.lb);
            continue;
        }
        finest = finest.min(width);
        let cell = &node.cells[which];
        let mid = 0.5 * (cell.lo[axis] + cell.hi[axis]);
        for half in 0..2 {
            let mut cells = node.cells.clone();
            if half == 0 {
                cells[which].hi[axis] = mid;
            } else {
                cells[which].lo[axis] = mid;
            }
            visit(
                cells,
                &mut heap,
                &mut best_cost,
                &mut best_centers,
                &mut scratch,
                &mut explored,
            )?;
        }
    };

    let cost = cost(points, &best_centers, r, z)?;
    Ok(OracleResult {
        centers: best_centers,
        cost,
        candidate_count: explored,
        grid_resolution: finest,
        lower_bound: lower_bound.min(cost).max(0.0),
    })
}

/// Smallest ball containing all of `support` on its boundary, within the
/// affine hull of `support`. `None` for affinely dependent supports.
fn circumball(support: &[&[f64]]) -> Option<(Vec<f64>, f64)> {
    let p0 = support[0];
    let dim = p0.len();
    let m = support.len() - 1;
    if m == 0 {
        return Some((p0.to_vec(), 0.0));
    }
    let dirs: Vec<Vec<f64>> = support[1..]
        .iter()
        .map(|p| p.iter().zip(p0).map(|(a, b)| a - b).collect())
        .collect();
    // Gram system: 2 <v_i, v_j> l_j = |v_i|^2
    let mut a = vec![vec![0.0; m + 1]; m];
    for i in 0..m {
        for j in 0..m {
            a[i][j] = 2.0 * dot(&dirs[i], &dirs[j]);
        }
        a[i][m] = dot(&dirs[i], &dirs[i]);
    }
    let lambda = solve_dense(a)?;
    let mut center = p0.to_vec();
    for (l, v) in lambda.iter().zip(&dirs) {
        for j in 0..dim {
            center[j] += l * v[j];
        }
    }
    let radius = euclid(&center, p0);
    Some((center, radius))
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Gaussian elimination with partial pivoting on an augmented matrix.
fn solve_dense(mut a: Vec<Vec<f64>>) -> Option<Vec<f64>> {
    let m = a.len();
    let scale = a
        .iter()
        .flat_map(|row| row[..m].iter())
        .fold(0.0f64, |s, x| s.max(x.abs()));
    for col in 0..m {
        let piv = (col..m).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[piv][col].abs() <= 1e-12 * scale.max(1e-300) {
            return None;
        }
        a.swap(col, piv);
        for i in 0..m {
            if i != col {
                let f = a[i][col] / a[col][col];
                for j in col..=m {
                    a[i][j] -= f * a[col][j];
                }
            }
        }
    }
    Some((0..m).map(|i| a[i][m] / a[i][i]).collect())
}

/// Optimal continuous k-center radius: the smallest `rho` such that `k`
/// closed balls of radius `rho` cover `P`.
///
/// Each ball of an optimal solution can be shrunk to the minimum enclosing
/// ball of its cluster, which is spanned by at most `d + 1` points; the search
/// enumerates those balls and all covers by at most `k` of them.
pub fn kcenter_radius_exact(points: &PointSet, k: usize, budget: u128) -> Result<f64> {
    validate(points, k, 0.0)?;
    let n = points.len();
    if n > 128 {
        return Err(HybridError::invalid("exact k-center oracle supports at most 128 points"));
    }
    let full: u128 = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let max_support = (points.dim() + 1).min(n);
    let mut balls: Vec<(f64, u128)> = Vec::new();
    let mut idx = Vec::new();
    for size in 1..=max_support {
        if binomial(n, size) > budget {
            return Err(HybridError::Budget {
                what: "k-center support sets",
                required: binomial(n, size),
                budget,
            });
        }
        idx.clear();
        idx.extend(0..size);
        loop {
            let support: Vec<&[f64]> = idx.iter().map(|&i| points.point(i)).collect();
            if let Some((c, rad)) = circumball(&support) {
                let tol = 1e-9 * rad.max(1e-300) + 1e-12;
                let mask = points
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| euclid(p, &c) <= rad + tol)
                    .fold(0u128, |m, (i, _)| m | (1u128 << i));
                balls.push((rad, mask));
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    balls.sort_by(|a, b| a.0.total_cmp(&b.0));
    balls.dedup_by(|a, b| a.1 == b.1 && a.0 >= b.0);
    // smallest prefix of radius-sorted balls that admits a cover by k balls
    let covers = |t: usize| -> bool { cover_exists(&balls[..=t], k, full, 0) };
    let (mut lo, mut hi) = (0usize, balls.len() - 1);
    if !covers(hi) {
        return Err(HybridError::Infeasible("no cover found".into()));
    }
    while lo < hi {
        let mid = (lo + hi) / 2;
        if covers(mid) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(balls[lo].0)
}

fn cover_exists(balls: &[(f64, u128)], k: usize, full: u128, covered: u128) -> bool {
    if covered == full {
        return true;
    }
    if k == 0 {
        return false;
    }
    // the lowest uncovered point must be covered by some ball
    let target = (!covered & full).trailing_zeros();
    balls
        .iter()
        .filter(|b| b.1 >> target & 1 == 1)
        .any(|b| cover_exists(balls, k - 1, full, covered | b.1))
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
