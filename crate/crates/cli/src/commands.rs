use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hybridk::oracle::{brute_force_continuous, brute_force_discrete, certified_optimum, DEFAULT_ENUMERATION_BUDGET};
use hybridk::par::map_indexed;
use hybridk::preprocess::{reduce_to_kmedian, solve_center_like};
use hybridk::rng::derive_seed;
use hybridk::solver::full_pipeline;
use hybridk::{hybrid_clustering, AlgoConfig, Execution, HybridError, Instance, Mode, PointSet, Power, SearchState};

use crate::error::{CliError, CliResult};
use crate::gen::{generate, BlobCenters, Dist, GenSpec};
use crate::instance_file::{format_instance, read_instance, write_instance};
use crate::record::{BenchCell, ResultRecord};

#[derive(Debug, Parser)]
#[command(name = "hybridk", version, about = "Hybrid k-clustering: k balls of radius r, thresholded distance cost")]
pub struct Cli {
    /// Pretty-print records instead of one JSON object per line.
    #[arg(long, global = true)]
    pub pretty: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a synthetic instance.
    Gen(GenArgs),
    /// Run a solver on an instance.
    Solve(SolveArgs),
    /// Run an exhaustive oracle on a small instance.
    Oracle(OracleArgs),
    /// Evaluate given centers on an instance.
    Eval(EvalArgs),
    /// Sweep generated instances and emit one record per cell.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DistKind {
    Uniform,
    GaussianMixture,
    TwoScale,
}

#[derive(Debug, Clone, Args)]
pub struct DistArgs {
    #[arg(long, value_enum, default_value_t = DistKind::Uniform)]
    pub dist: DistKind,
    /// Side of the box centers and uniform points are drawn from.
    #[arg(long, default_value_t = 10.0)]
    pub side: f64,
    /// Mixture components or random blob count.
    #[arg(long, default_value_t = 3)]
    pub components: usize,
    #[arg(long, default_value_t = 1.0)]
    pub spread: f64,
    /// Fixed blob centers such as `3,3;6,6`.
    #[arg(long)]
    pub blob_centers: Option<String>,
    #[arg(long, default_value_t = 1.0)]
    pub blob_radius: f64,
    #[arg(long, default_value_t = 0)]
    pub stragglers: usize,
    #[arg(long, default_value_t = 1.0)]
    pub gap: f64,
}

impl DistArgs {
    pub fn to_dist(&self) -> CliResult<Dist> {
        Ok(match self.dist {
            DistKind::Uniform => Dist::Uniform { side: self.side },
            DistKind::GaussianMixture => Dist::GaussianMixture {
                components: self.components,
                spread: self.spread,
                side: self.side,
            },
            DistKind::TwoScale => Dist::TwoScale {
                blobs: match &self.blob_centers {
                    Some(s) => BlobCenters::Fixed(parse_blob_centers(s)?),
                    None => BlobCenters::Random {
                        count: self.components,
                        side: self.side,
                    },
                },
                blob_radius: self.blob_radius,
                stragglers: self.stragglers,
                gap: self.gap,
            },
        })
    }
}

fn parse_blob_centers(s: &str) -> CliResult<Vec<Vec<f64>>> {
    s.split(';')
        .map(|c| {
            c.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<f64>()
                        .map_err(|_| CliError::Usage(format!("bad blob coordinate `{x}`")))
                })
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub dist: DistArgs,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub d: usize,
    #[arg(long, env = "HYBRIDK_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ProblemArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 0.0)]
    pub r: f64,
    /// Exponent: 1 for the median variant, 2 for the means variant.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=2))]
    pub z: u32,
}

impl ProblemArgs {
    fn power(&self) -> Power {
        Power::from_exponent(self.z).expect("range-checked by the parser")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Theory,
    Practical,
}

#[derive(Debug, Clone, Args)]
pub struct AlgoArgs {
    #[arg(long, value_enum, default_value_t = ModeArg::Practical)]
    pub mode: ModeArg,
    #[arg(long)]
    pub branch_cap: Option<usize>,
    #[arg(long)]
    pub beta: Option<usize>,
    #[arg(long)]
    pub beta_prime: Option<usize>,
    #[arg(long)]
    pub subset_cap: Option<usize>,
    #[arg(long)]
    pub repetitions: Option<usize>,
    #[arg(long)]
    pub grid_cap: Option<usize>,
    #[arg(long)]
    pub leaf_budget: Option<u64>,
    /// Run every loop on the calling thread.
    #[arg(long)]
    pub sequential: bool,
}

impl AlgoArgs {
    pub fn config(&self, eps: f64, seed: u64) -> AlgoConfig {
        let d = AlgoConfig::default();
        AlgoConfig {
            eps,
            seed,
            mode: match self.mode {
                ModeArg::Theory => Mode::Theory,
                ModeArg::Practical => Mode::Practical,
            },
            beta: self.beta,
            beta_prime: self.beta_prime,
            branch_cap: self.branch_cap.unwrap_or(d.branch_cap),
            subset_cap: self.subset_cap.unwrap_or(d.subset_cap),
            repetitions: self.repetitions.unwrap_or(d.repetitions),
            grid_cap: self.grid_cap.unwrap_or(d.grid_cap),
            leaf_budget: self.leaf_budget.unwrap_or(d.leaf_budget),
            execution: if self.sequential {
                Execution::Sequential
            } else {
                Execution::Parallel
            },
            ..d
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Pipeline,
    CenterLike,
    KmedianReduce,
}

#[derive(Debug, Clone, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub instance: PathBuf,
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long, default_value_t = 0.5)]
    pub eps: f64,
    #[command(flatten)]
    pub algo: AlgoArgs,
    #[arg(long, env = "HYBRIDK_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Algorithm::Pipeline)]
    pub algorithm: Algorithm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleMethod {
    /// Exhaustive search over a grid of the given resolution.
    Grid,
    /// Exhaustive search over the input points as candidate centers.
    Discrete,
    /// Branch and bound to a relative optimality gap.
    Certified,
}

#[derive(Debug, Clone, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub instance: PathBuf,
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long, value_enum, default_value_t = OracleMethod::Grid)]
    pub method: OracleMethod,
    /// Grid coverage radius.
    #[arg(long, default_value_t = 0.05)]
    pub resolution: f64,
    /// Relative gap for the certified method.
    #[arg(long, default_value_t = 0.01)]
    pub gap: f64,
    /// Subset budget (grid, discrete) or node budget (certified).
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
    pub budget: u128,
    #[arg(long, env = "HYBRIDK_SEED", default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    #[arg(long)]
    pub instance: PathBuf,
    /// Centers in the instance file format.
    #[arg(long)]
    pub centers: PathBuf,
    #[arg(long, default_value_t = 0.0)]
    pub r: f64,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=2))]
    pub z: u32,
    #[arg(long, default_value_t = 1.0)]
    pub radius_factor: f64,
    #[arg(long, env = "HYBRIDK_SEED", default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub dist: DistArgs,
    #[arg(long, value_delimiter = ',', default_value = "20")]
    pub n: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "2")]
    pub d: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "2")]
    pub k: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "0.5")]
    pub r: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = "0.5")]
    pub eps: Vec<f64>,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=2))]
    pub z: u32,
    /// Instances per parameter combination.
    #[arg(long, default_value_t = 1)]
    pub instances: usize,
    /// Largest n that also gets a certified oracle cost.
    #[arg(long, default_value_t = 20)]
    pub oracle_max_n: usize,
    #[command(flatten)]
    pub algo: AlgoArgs,
    #[arg(long, env = "HYBRIDK_SEED", default_value_t = 0)]
    pub seed: u64,
}

fn elapsed_ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

fn emit(out: &mut dyn Write, rec: &ResultRecord, pretty: bool) -> CliResult<()> {
    let text = if pretty { rec.to_pretty() } else { rec.to_line() };
    writeln!(out, "{text}").map_err(|source| CliError::Io {
        path: "<output>".into(),
        source,
    })
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult<()> {
    match &cli.command {
        Command::Gen(a) => cmd_gen(a, out),
        Command::Solve(a) => emit(out, &cmd_solve(a)?, cli.pretty),
        Command::Oracle(a) => emit(out, &cmd_oracle(a)?, cli.pretty),
        Command::Eval(a) => emit(out, &cmd_eval(a)?, cli.pretty),
        Command::Bench(a) => {
            for rec in cmd_bench(a)? {
                emit(out, &rec, cli.pretty)?;
            }
            Ok(())
        }
    }
}

pub fn cmd_gen(a: &GenArgs, out: &mut dyn Write) -> CliResult<()> {
    let spec = GenSpec {
        n: a.n,
        d: a.d,
        dist: a.dist.to_dist()?,
    };
    let points = generate(&spec, a.seed)?;
    match &a.out {
        Some(path) => write_instance(path, &points),
        None => out.write_all(format_instance(&points).as_bytes()).map_err(|source| CliError::Io {
            path: "<output>".into(),
            source,
        }),
    }
}

/// Solves `points` with the chosen algorithm and reports the result.
pub fn solve_points(
    points: &PointSet,
    problem: &ProblemArgs,
    cfg: &AlgoConfig,
    algorithm: Algorithm,
) -> CliResult<ResultRecord> {
    let t = Instant::now();
    let (k, r, z) = (problem.k, problem.r, problem.power());
    let instance = Instance::new(points.clone(), k, r, z)?;
    let (centers, factor, name, source) = match algorithm {
        Algorithm::Pipeline => {
            let o = full_pipeline(&instance, cfg)?;
            (o.solution.centers, 1.0 + cfg.eps, "pipeline", Some(o.source.name().to_string()))
        }
        Algorithm::CenterLike => {
            let o = solve_center_like(points, k, r, z, cfg.eps, cfg.center_like_budget, cfg.mode == Mode::Practical)?
                .ok_or_else(|| HybridError::Infeasible("input is not k-center-like for this radius".into()))?;
            (o.solution.centers, 1.0 + cfg.eps, "center_like", None)
        }
        Algorithm::KmedianReduce => {
            let sol = reduce_to_kmedian(points, k, r, z, cfg.eps, |p, k| {
                let mut best: Option<hybridk::Solution> = None;
                for rep in 0..cfg.repetitions {
                    let state = SearchState::root(p.dim(), k, derive_seed(cfg.seed, rep as u64));
                    let s = hybrid_clustering(&state, p, k, 0.0, z, cfg)?;
                    if best.as_ref().is_none_or(|b| s.better_than(b)) {
                        best = Some(s);
                    }
                }
                Ok(best.expect("at least one repetition").centers)
            })?;
            (sol.centers, 1.0, "kmedian_reduce", None)
        }
    };
    let mut rec = ResultRecord::evaluated(points, &centers, k, r, z, factor, name, cfg.seed)?;
    rec.eps = Some(cfg.eps);
    rec.source = source;
    rec.wall_time_ms = elapsed_ms(t);
    Ok(rec)
}

pub fn cmd_solve(a: &SolveArgs) -> CliResult<ResultRecord> {
    let points = read_instance(&a.instance)?;
    let cfg = a.algo.config(a.eps, a.seed);
    solve_points(&points, &a.problem, &cfg, a.algorithm)
}

pub fn cmd_oracle(a: &OracleArgs) -> CliResult<ResultRecord> {
    let t = Instant::now();
    let points = read_instance(&a.instance)?;
    let (k, r, z) = (a.problem.k, a.problem.r, a.problem.power());
    let res = match a.method {
        OracleMethod::Grid => brute_force_continuous(&points, k, r, z, a.resolution, a.budget, Execution::Parallel)?,
        OracleMethod::Discrete => brute_force_discrete(&points, k, r, z, &points, a.budget, Execution::Parallel)?,
        OracleMethod::Certified => {
            let nodes = usize::try_from(a.budget).unwrap_or(usize::MAX);
            certified_optimum(&points, k, r, z, a.gap, nodes)?
        }
    };
    let mut rec = ResultRecord::evaluated(&points, &res.centers, k, r, z, 1.0, "oracle", a.seed)?;
    rec.lower_bound = Some(res.lower_bound);
    rec.wall_time_ms = elapsed_ms(t);
    Ok(rec)
}

pub fn cmd_eval(a: &EvalArgs) -> CliResult<ResultRecord> {
    let t = Instant::now();
    let points = read_instance(&a.instance)?;
    let centers = read_instance(&a.centers)?;
    if centers.dim() != points.dim() {
        return Err(HybridError::DimensionMismatch {
            expected: points.dim(),
            found: centers.dim(),
        }
        .into());
    }
    let z = Power::from_exponent(a.z)?;
    let mut rec = ResultRecord::evaluated(&points, &centers, centers.len(), a.r, z, a.radius_factor, "eval", a.seed)?;
    rec.wall_time_ms = elapsed_ms(t);
    Ok(rec)
}

struct Cell {
    n: usize,
    d: usize,
    k: usize,
    r: f64,
    eps: f64,
}

/// One record per (n, d, k, r, eps, instance) cell, in sweep order. Cell `i`
/// uses the seed `derive_seed(master, i)` both to generate its instance and
/// to seed the solver, so a cell can be reproduced with `gen` and `solve`.
pub fn cmd_bench(a: &BenchArgs) -> CliResult<Vec<ResultRecord>> {
    let dist = a.dist.to_dist()?;
    let z = Power::from_exponent(a.z)?;
    let mut cells = Vec::new();
    for &n in &a.n {
        for &d in &a.d {
            for &k in &a.k {
                for &r in &a.r {
                    for &eps in &a.eps {
                        for _ in 0..a.instances {
                            cells.push(Cell { n, d, k, r, eps });
                        }
                    }
                }
            }
        }
    }
    let exec = if a.algo.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let records = map_indexed(exec, cells.len(), |i| {
        let c = &cells[i];
        let seed = derive_seed(a.seed, i as u64);
        let cfg = AlgoConfig {
            execution: Execution::Sequential,
            ..a.algo.config(c.eps, seed)
        };
        let problem = ProblemArgs {
            k: c.k,
            r: c.r,
            z: a.z,
        };
        let cell = BenchCell {
            index: i,
            n: c.n,
            d: c.d,
            instance_seed: seed,
        };
        let outcome = generate(
            &GenSpec {
                n: c.n,
                d: c.d,
                dist: dist.clone(),
            },
            seed,
        )
        .and_then(|points| {
            let mut rec = solve_points(&points, &problem, &cfg, Algorithm::Pipeline)?;
            if c.n <= a.oracle_max_n {
                let o = certified_optimum(&points, c.k, c.r, z, 0.01, 20_000_000)?;
                rec.oracle_cost = Some(o.cost);
            }
            Ok(rec)
        });
        let mut rec = outcome.unwrap_or_else(|e| ResultRecord {
            centers: Vec::new(),
            k: c.k,
            r: c.r,
            z: a.z,
            eps: Some(c.eps),
            radius_factor: 1.0 + c.eps,
            cost: f64::NAN,
            covered_count: 0,
            seed,
            wall_time_ms: 0.0,
            algorithm: "pipeline".into(),
            source: None,
            lower_bound: None,
            cluster_sizes: None,
            cell: None,
            oracle_cost: None,
            error: Some(e.to_string()),
        });
        rec.cell = Some(cell);
        rec
    });
    Ok(records)
}
