//! Candidate centers for one node of the search tree.
//!
//! Four sources feed the candidate set `R` of a node with chosen centers `F'`:
//!
//! 1. grids `Grid(c, 16r, delta r)` around every `c` in `F'`;
//! 2. uniform samples `S_q` of the points farther than `q` from `F'`, for `q`
//!    a power of two between `8r` and the diameter of `P`;
//! 3. grids `Grid(p, 8r/delta, delta r)` around every sampled point;
//! 4. sample-based 1-medians of `beta`-subsets of each `S_q`.
//!
//! Sources 1 and 3 vanish when `r = 0`. In practical mode every grid is
//! clipped to the bounding box of `P` (projection onto a convex set holding
//! `P` never increases a distance to `P`) and coarsened to at most `grid_cap`
//! cells, and `R` is cut to the per-level cap by stratified sampling across
//! the four sources. Only the selected subset medians are computed.

use std::collections::{HashMap, HashSet};

use rand::seq::index::sample;
use rand::Rng as _;

use crate::error::{HybridError, Result};
use crate::geometry::{
    euclid, grid_points_in_box, grid_scan_size, max_pairwise_distance, min_nonzero_pairwise_distance, BoundingBox,
    GridOffset, PointSet, Power, GRID_POINT_LIMIT,
};
use crate::oracle::binomial;
use crate::rng::{derive_path, rng_from};

use super::config::SearchParams;
use super::sample_median::approx_solution_on_sample_with;
use super::search::SearchState;

const STREAM_SAMPLE: u64 = 1;
const STREAM_SUBSET: u64 = 2;
const STREAM_SELECT: u64 = 3;

/// Data shared by every node of one search tree.
pub(crate) struct SearchContext<'a> {
    pub points: &'a PointSet,
    pub k: usize,
    pub r: f64,
    pub z: Power,
    pub params: SearchParams,
    pub theory_budget: u128,
    clip: BoundingBox,
    d_max: f64,
    q_floor: f64,
}

struct Batch {
    /// Indices into `points`, in sampling order.
    sample: Vec<usize>,
    subset_size: usize,
    subset_count: usize,
    exhaustive: bool,
}

impl<'a> SearchContext<'a> {
    pub fn new(
        points: &'a PointSet,
        k: usize,
        r: f64,
        z: Power,
        params: SearchParams,
        theory_budget: u128,
    ) -> Result<Self> {
        let d_max = max_pairwise_distance(points)?;
        let q_floor = if r > 0.0 {
            8.0 * r
        } else {
            min_nonzero_pairwise_distance(points).map_or(f64::INFINITY, |d| d / 2.0)
        };
        Ok(SearchContext {
            points,
            k,
            r,
            z,
            params,
            theory_budget,
            clip: BoundingBox::of(points)?,
            d_max,
            q_floor,
        })
    }

    /// Powers of two in `[q_floor, d_max]`.
    pub fn q_ladder(&self) -> Vec<f64> {
        let mut out = Vec::new();
        if !(self.q_floor.is_finite() && self.q_floor > 0.0) {
            return out;
        }
        let mut q = 2f64.powi(self.q_floor.log2().ceil() as i32);
        while q < self.q_floor {
            q *= 2.0;
        }
        while q / 2.0 >= self.q_floor {
            q /= 2.0;
        }
        while q <= self.d_max {
            out.push(q);
            q *= 2.0;
        }
        out
    }

    pub fn grid(&self, p: &[f64], lambda: f64, tau: f64) -> Result<PointSet> {
        if self.params.theory {
            return grid_points_in_box(p, lambda, tau, GridOffset::Origin, Some(&self.clip), GRID_POINT_LIMIT);
        }
        let cap = self.params.grid_cap as f64;
        let dim = p.len() as f64;
        let mut t = tau.min(lambda);
        loop {
            let scan = grid_scan_size(p, lambda, t, GridOffset::Origin, Some(&self.clip));
            if scan <= cap || t >= lambda {
                break;
            }
            t = (t * (scan / cap).powf(1.0 / dim) * 1.01).min(lambda);
        }
        grid_points_in_box(p, lambda, t, GridOffset::Origin, Some(&self.clip), u128::MAX)
    }

    fn grid_estimate(&self, p: &[f64], lambda: f64, tau: f64) -> f64 {
        let scan = grid_scan_size(p, lambda, tau.min(lambda), GridOffset::Origin, Some(&self.clip));
        if self.params.theory {
            scan
        } else {
            scan.min(self.params.grid_cap as f64)
        }
    }

    /// Candidate set of the node `state`; `nearest[i]` is the distance from
    /// point `i` to the chosen centers (infinite when none are chosen).
    pub fn candidates(&self, state: &SearchState, nearest: &[f64]) -> Result<PointSet> {
        let p = &self.params;
        let points = self.points;
        let dim = points.dim();
        let r = self.r;

        // source 1
        let mut near = PointSet::new(dim);
        if r > 0.0 {
            for c in state.chosen.iter() {
                near.extend_from(&self.grid(c, 16.0 * r, p.delta * r)?)?;
            }
        }

        // source 2
        let scales: Vec<f64> = if state.chosen.is_empty() {
            vec![f64::NEG_INFINITY]
        } else {
            self.q_ladder()
        };
        let mut batches = Vec::new();
        for (qi, &q) in scales.iter().enumerate() {
            let far: Vec<usize> = (0..points.len()).filter(|&i| nearest[i] > q).collect();
            if far.is_empty() {
                continue;
            }
            let size = p.sample_size(self.k, far.len());
            let mut rng = rng_from(derive_path(state.seed, &[STREAM_SAMPLE, qi as u64]));
            let sample: Vec<usize> = sample(&mut rng, far.len(), size).into_iter().map(|j| far[j]).collect();
            let subset_size = p.beta.min(sample.len());
            let all = binomial(sample.len(), subset_size);
            let exhaustive = all <= p.subset_cap as u128;
            let subset_count = if exhaustive { all as usize } else { p.subset_cap };
            batches.push((
                qi as u64,
                Batch {
                    sample,
                    subset_size,
                    subset_count,
                    exhaustive,
                },
            ));
        }
        let sampled: Vec<usize> = batches.iter().flat_map(|(_, b)| b.sample.iter().copied()).collect();

        // source 3 sizes
        let (lambda_far, tau_far) = (8.0 * r / p.delta, p.delta * r);
        let far_grid_sizes: Vec<f64> = if r > 0.0 {
            sampled
                .iter()
                .map(|&i| self.grid_estimate(points.point(i), lambda_far, tau_far))
                .collect()
        } else {
            Vec::new()
        };
        let far_grid_total: f64 = far_grid_sizes.iter().sum();

        // source 4 sizes
        let subset_total: usize = batches.iter().map(|(_, b)| b.subset_count).sum();

        let available = [near.len() as f64, sampled.len() as f64, far_grid_total, subset_total as f64];
        if p.theory {
            let total: f64 = available.iter().sum();
            if total > self.theory_budget as f64 {
                return Err(HybridError::Budget {
                    what: "candidate set",
                    required: total as u128,
                    budget: self.theory_budget,
                });
            }
        }
        let quota = allocate(&available, if p.theory { usize::MAX } else { p.level_cap });
        let mut rng = rng_from(derive_path(state.seed, &[STREAM_SELECT]));
        let mut out = PointSet::new(dim);

        take_some(&near, quota[0], &mut rng, &mut out);

        let sampled_set = points.select(&sampled);
        take_some(&sampled_set, quota[1], &mut rng, &mut out);

        if quota[2] > 0 {
            if quota[2] as f64 >= far_grid_total {
                for &i in &sampled {
                    out.extend_from(&self.grid(points.point(i), lambda_far, tau_far)?)?;
                }
            } else {
                let mut cache: HashMap<usize, PointSet> = HashMap::new();
                for _ in 0..quota[2] {
                    let i = sampled[rng.gen_range(0..sampled.len())];
                    if let std::collections::hash_map::Entry::Vacant(e) = cache.entry(i) {
                        e.insert(self.grid(points.point(i), lambda_far, tau_far)?);
                    }
                    let g = &cache[&i];
                    if !g.is_empty() {
                        out.push_unchecked(g.point(rng.gen_range(0..g.len())));
                    }
                }
            }
        }

        if quota[3] > 0 {
            let picks: Vec<usize> = if quota[3] >= subset_total {
                (0..subset_total).collect()
            } else {
                let mut v = sample(&mut rng, subset_total, quota[3]).into_vec();
                v.sort_unstable();
                v
            };
            let mut offset = 0;
            let mut picks = picks.into_iter().peekable();
            for (qi, b) in &batches {
                while let Some(&j) = picks.peek() {
                    if j >= offset + b.subset_count {
                        break;
                    }
                    picks.next();
                    let subset = self.subset(state.seed, *qi, b, j - offset);
                    let s = points.select(&subset);
                    let c = approx_solution_on_sample_with(&s, p.delta / 8.0, self.z, p.median_pool_cap)?;
                    out.push_unchecked(&c);
                }
                offset += b.subset_count;
            }
        }

        Ok(dedup_excluding(&out, &state.chosen))
    }

    /// The `j`-th subset of a batch: lexicographic rank `j` when every subset
    /// is enumerated, else a seeded uniform subset.
    fn subset(&self, seed: u64, qi: u64, b: &Batch, j: usize) -> Vec<usize> {
        let pos: Vec<usize> = if b.exhaustive {
            unrank_combination(b.sample.len(), b.subset_size, j as u128)
        } else {
            let mut rng = rng_from(derive_path(seed, &[STREAM_SUBSET, qi, j as u64]));
            let mut v = sample(&mut rng, b.sample.len(), b.subset_size).into_vec();
            v.sort_unstable();
            v
        };
        pos.into_iter().map(|i| b.sample[i]).collect()
    }
}

/// Splits `cap` across sources as evenly as their sizes allow.
fn allocate(available: &[f64], cap: usize) -> Vec<usize> {
    let mut quota = vec![0usize; available.len()];
    let mut left = cap;
    loop {
        let open: Vec<usize> = (0..available.len()).filter(|&i| (quota[i] as f64) < available[i]).collect();
        if open.is_empty() || left == 0 {
            return quota;
        }
        let share = (left / open.len()).max(1);
        for i in open {
            if left == 0 {
                break;
            }
            let give = (share as f64).min(available[i] - quota[i] as f64).min(left as f64) as usize;
            quota[i] += give;
            left -= give;
        }
    }
}

fn take_some(from: &PointSet, quota: usize, rng: &mut crate::rng::Rng, out: &mut PointSet) {
    if quota >= from.len() {
        for p in from.iter() {
            out.push_unchecked(p);
        }
    } else if quota > 0 {
        let mut idx = sample(rng, from.len(), quota).into_vec();
        idx.sort_unstable();
        for i in idx {
            out.push_unchecked(from.point(i));
        }
    }
}

fn dedup_excluding(cands: &PointSet, exclude: &PointSet) -> PointSet {
    let key = |p: &[f64]| -> Vec<u64> { p.iter().map(|x| (x + 0.0).to_bits()).collect() };
    let mut seen: HashSet<Vec<u64>> = exclude.iter().map(key).collect();
    let mut out = PointSet::with_capacity(cands.dim(), cands.len());
    for p in cands.iter() {
        if seen.insert(key(p)) {
            out.push_unchecked(p);
        }
    }
    out
}

/// Lexicographic `rank`-th `t`-subset of `0..n`.
pub(crate) fn unrank_combination(n: usize, t: usize, mut rank: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(t);
    let mut next = 0;
    for slot in 0..t {
        let mut i = next;
        loop {
            let below = binomial(n - i - 1, t - slot - 1);
            if rank < below {
                break;
            }
            rank -= below;
            i += 1;
        }
        out.push(i);
        next = i + 1;
    }
    out
}

/// Candidate set of the search node `state` over the points `points`, as used
/// by the recursive search.
pub fn build_candidate_set(
    state: &SearchState,
    points: &PointSet,
    k: usize,
    r: f64,
    z: Power,
    cfg: &super::AlgoConfig,
) -> Result<PointSet> {
    state.check(points, k)?;
    if state.remaining == 0 {
        return Err(HybridError::invalid("candidate sets are only built for nodes with m >= 1"));
    }
    let params = cfg.search_params(k, state.remaining)?;
    let ctx = SearchContext::new(points, k, r, z, params, cfg.theory_budget)?;
    let nearest: Vec<f64> = points
        .iter()
        .map(|p| state.chosen.iter().map(|c| euclid(p, c)).fold(f64::INFINITY, f64::min))
        .collect();
    ctx.candidates(state, &nearest)
}
