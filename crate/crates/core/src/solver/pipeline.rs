use crate::error::{HybridError, Result};
use crate::geometry::{cost, Instance, PointSet, Power, Solution};
use crate::par::{map_indexed, Execution};
use crate::preprocess::{
    combine_components, discretize, opt_guess_ladder, reduce_to_kmedian, separation_lower_bound, solve_center_like,
    ComponentDecomposition, OptGuess,
};
use crate::rng::{derive_path, derive_seed};

use super::search::{hybrid_clustering, SearchState};
use super::{AlgoConfig, Mode};

const STREAM_RESTART: u64 = 0;
const STREAM_DIRECT: u64 = 1;
const STREAM_KMEDIAN: u64 = 2;
const STREAM_GUESS: u64 = 3;

/// Which procedure produced a pipeline candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateSource {
    CenterLike,
    KMedian,
    /// The recursive search on the input points.
    Direct,
    /// Per-component searches on the discretized input for one OPT guess.
    Discretized,
}

impl CandidateSource {
    pub fn name(self) -> &'static str {
        match self {
            CandidateSource::CenterLike => "center-like",
            CandidateSource::KMedian => "k-median",
            CandidateSource::Direct => "direct",
            CandidateSource::Discretized => "discretized",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PipelineOutcome {
    /// Best candidate, evaluated at radius `(1 + eps) r` on the input points.
    pub solution: Solution,
    pub source: CandidateSource,
    /// OPT guess behind the winning candidate, if any.
    pub guess: Option<f64>,
    pub candidates: usize,
    pub guesses_tried: usize,
}

struct Candidate {
    source: CandidateSource,
    guess: Option<f64>,
    solution: Solution,
}

fn run_search(points: &PointSet, k: usize, r: f64, z: Power, cfg: &AlgoConfig, seed: u64) -> Result<Solution> {
    hybrid_clustering(&SearchState::root(points.dim(), k, seed), points, k, r, z, cfg)
}

fn best_of(cands: Vec<Candidate>) -> Option<Candidate> {
    cands.into_iter().reduce(|a, b| if b.solution.better_than(&a.solution) { b } else { a })
}

/// Full bicriteria pipeline.
///
/// Candidates come from the k-center-like enumeration, from k-median
/// solutions evaluated at radius `r`, from the recursive search on the input,
/// and, for every OPT guess compatible with the discretization, from
/// per-component searches combined by the budget DP. Every candidate is
/// evaluated with `cost_{(1+eps) r}` on the input points and the least one
/// (ties by centers) is returned. The randomized part runs `repetitions`
/// times from derived seeds; the candidates of all restarts compete.
pub fn full_pipeline(instance: &Instance, cfg: &AlgoConfig) -> Result<PipelineOutcome> {
    cfg.validate()?;
    let points = &instance.points;
    let (k, r, z, eps) = (instance.k, instance.r, instance.z, cfg.eps);
    let factor = 1.0 + eps;

    let mut shared: Vec<Candidate> = Vec::new();
    if r > 0.0 {
        match solve_center_like(points, k, r, z, eps, cfg.center_like_budget, cfg.mode == Mode::Practical) {
            Ok(Some(out)) => shared.push(Candidate {
                source: CandidateSource::CenterLike,
                guess: None,
                solution: out.solution,
            }),
            Ok(None) | Err(HybridError::Budget { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    let upper_shared = shared
        .iter()
        .map(|c| cost(points, &c.solution.centers, r, z))
        .collect::<Result<Vec<f64>>>()?
        .into_iter()
        .fold(f64::INFINITY, f64::min);

    let runs = map_indexed(cfg.execution, cfg.repetitions, |rep| {
        restart(instance, cfg, derive_path(cfg.seed, &[STREAM_RESTART, rep as u64]), upper_shared)
    });
    let mut cands = shared;
    let mut guesses_tried = 0;
    for run in runs {
        let (mut c, g) = run?;
        cands.append(&mut c);
        guesses_tried += g;
    }
    let count = cands.len();
    let best = best_of(cands).ok_or(HybridError::NoCandidates)?;
    debug_assert_eq!(best.solution.radius_factor, factor);
    Ok(PipelineOutcome {
        solution: best.solution,
        source: best.source,
        guess: best.guess,
        candidates: count,
        guesses_tried,
    })
}

/// One restart: searches on the input, the k-median search, and the
/// discretized searches for every useful guess.
fn restart(instance: &Instance, cfg: &AlgoConfig, seed: u64, upper_shared: f64) -> Result<(Vec<Candidate>, usize)> {
    let points = &instance.points;
    let (k, r, z, eps) = (instance.k, instance.r, instance.z, cfg.eps);
    let factor = 1.0 + eps;
    let theory = cfg.mode == Mode::Theory;
    let inner = AlgoConfig {
        execution: Execution::Sequential,
        ..cfg.clone()
    };
    let finish = |source, guess, centers: PointSet| -> Result<Candidate> {
        Ok(Candidate {
            source,
            guess,
            solution: Solution::evaluate(points, centers, r, factor, z)?,
        })
    };
    let tolerate = |res: Result<Solution>| -> Result<Option<Solution>> {
        match res {
            Ok(s) => Ok(Some(s)),
            Err(HybridError::Budget { .. }) if theory => Ok(None),
            Err(e) => Err(e),
        }
    };

    let mut cands = Vec::new();
    if let Some(sol) = tolerate(run_search(points, k, r, z, &inner, derive_seed(seed, STREAM_DIRECT)))? {
        cands.push(finish(CandidateSource::Direct, None, sol.centers)?);
    }
    if r > 0.0 {
        if let Some(km) = tolerate(run_search(points, k, 0.0, z, &inner, derive_seed(seed, STREAM_KMEDIAN)))? {
            let at_r = reduce_to_kmedian(points, k, r, z, eps, |_, _| Ok(km.centers))?;
            cands.push(finish(CandidateSource::KMedian, None, at_r.centers)?);
        }
    }
    if r == 0.0 {
        return Ok((cands, 0));
    }

    // a guess G matters only when G <= OPT_r <= 2G
    let mut ladder = opt_guess_ladder(points, k, r, eps)?;
    if !theory {
        let upper = cands
            .iter()
            .map(|c| cost(points, &c.solution.centers, r, z))
            .collect::<Result<Vec<f64>>>()?
            .into_iter()
            .fold(upper_shared, f64::min);
        let lower = separation_lower_bound(points, k, r, z);
        ladder.retain(|g| g.value * 2.0 >= lower && g.value <= upper);
    }
    let decomps: Vec<(OptGuess, ComponentDecomposition)> = ladder
        .iter()
        .filter_map(|g| discretize(points, k, r, eps, g.value).ok().map(|d| (*g, d)))
        .filter(|(_, d)| d.components.len() <= k)
        .collect();

    for (g, d) in &decomps {
        let spare = k - d.components.len();
        // table[c][b]: centers for component c with b centers, and their cost
        // at (1+eps) r on the component's original points
        let mut table: Vec<Vec<Option<(f64, PointSet)>>> = Vec::with_capacity(d.components.len());
        for (ci, comp) in d.components.iter().enumerate() {
            let most = (spare + 1).min(comp.distinct_count()).max(1);
            let least = if d.components.len() == 1 { most } else { 1 };
            let members = points.select(&d.members[ci]);
            let mut row = vec![None; k + 1];
            for b in least..=most {
                let s = derive_path(seed, &[STREAM_GUESS, g.index as u64, ci as u64, b as u64]);
                if let Some(sol) = tolerate(run_search(comp, b, r, z, &inner, s))? {
                    let c = cost(&members, &sol.centers, factor * r, z)?;
                    row[b] = Some((c, sol.centers));
                }
            }
            table.push(row);
        }
        let costs: Vec<Vec<f64>> = table
            .iter()
            .map(|row| row.iter().map(|e| e.as_ref().map_or(f64::INFINITY, |e| e.0)).collect())
            .collect();
        let alloc = match combine_components(&costs, k) {
            Ok(a) => a,
            Err(HybridError::Infeasible(_)) => continue,
            Err(e) => return Err(e),
        };
        let mut centers = PointSet::new(points.dim());
        for (row, &b) in table.iter().zip(&alloc) {
            if let Some((_, c)) = &row[b] {
                centers.extend_from(c)?;
            }
        }
        cands.push(finish(CandidateSource::Discretized, Some(g.value), centers)?);
    }
    Ok((cands, decomps.len()))
}
