use std::cmp::Ordering;

use crate::error::{HybridError, Result};
use crate::geometry::{compare_candidates, euclid, threshold, PointSet, Power, Solution};
use crate::par::{map_indexed, Execution};
use crate::rng::derive_seed;

use super::candidates::SearchContext;
use super::AlgoConfig;

/// A node of the search tree: the centers fixed so far, how many more may be
/// added, and the seed of the node's random streams.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchState {
    pub chosen: PointSet,
    pub remaining: usize,
    pub seed: u64,
}

impl SearchState {
    /// Root node: nothing chosen, `k` centers to place.
    pub fn root(dim: usize, k: usize, seed: u64) -> Self {
        SearchState {
            chosen: PointSet::new(dim),
            remaining: k,
            seed,
        }
    }

    /// Child number `index`, adding `center` if given.
    fn child(&self, center: Option<&[f64]>, index: usize) -> Self {
        let mut chosen = self.chosen.clone();
        if let Some(c) = center {
            chosen.push_unchecked(c);
        }
        SearchState {
            chosen,
            remaining: self.remaining - 1,
            seed: derive_seed(self.seed, index as u64),
        }
    }

    pub(crate) fn check(&self, points: &PointSet, k: usize) -> Result<()> {
        if points.is_empty() {
            return Err(HybridError::invalid("the search needs at least one point"));
        }
        if self.chosen.dim() != points.dim() {
            return Err(HybridError::DimensionMismatch {
                expected: points.dim(),
                found: self.chosen.dim(),
            });
        }
        if self.chosen.len() + self.remaining > k {
            return Err(HybridError::invalid(format!(
                "{} chosen plus {} remaining exceeds k = {k}",
                self.chosen.len(),
                self.remaining
            )));
        }
        Ok(())
    }
}

/// Best leaf found below a node: cost at the inflated radius and centers.
type Leaf = Option<(f64, PointSet)>;

fn better(a: Leaf, b: Leaf) -> Leaf {
    match (a, b) {
        (None, b) => b,
        (a, None) => a,
        (Some(a), Some(b)) => {
            if compare_candidates(b.0, b.1.as_flat(), a.0, a.1.as_flat()) == Ordering::Less {
                Some(b)
            } else {
                Some(a)
            }
        }
    }
}

impl SearchContext<'_> {
    fn leaf_cost(&self, nearest: &[f64], r_eval: f64) -> f64 {
        nearest.iter().map(|&d| threshold(d, r_eval, self.z)).sum()
    }

    fn explore(&self, state: &SearchState, nearest: &[f64], r_eval: f64, exec: Execution) -> Result<Leaf> {
        let own: Leaf = if state.chosen.is_empty() {
            None
        } else {
            Some((self.leaf_cost(nearest, r_eval), state.chosen.clone()))
        };
        if state.remaining == 0 {
            return Ok(own);
        }
        let cands = self.candidates(state, nearest)?;
        if self.params.theory {
            let tree = (cands.len() as u128 + 1).checked_pow(state.remaining as u32);
            if tree.is_none_or(|t| t > self.theory_budget) {
                return Err(HybridError::Budget {
                    what: "search tree",
                    required: tree.unwrap_or(u128::MAX),
                    budget: self.theory_budget,
                });
            }
        }
        let points = self.points;
        if state.remaining == 1 {
            let mut best = own;
            let mut best_cost = best.as_ref().map_or(f64::INFINITY, |b| b.0);
            for c in cands.iter() {
                let cost: f64 = points
                    .iter()
                    .zip(nearest)
                    .map(|(p, &d)| threshold(d.min(euclid(p, c)), r_eval, self.z))
                    .sum();
                if cost <= best_cost {
                    let mut centers = state.chosen.clone();
                    centers.push_unchecked(c);
                    best = better(best, Some((cost, centers)));
                    best_cost = best.as_ref().map_or(f64::INFINITY, |b| b.0);
                }
            }
            return Ok(best);
        }
        let count = cands.len() + 1;
        let results = map_indexed(exec, count, |i| -> Result<Leaf> {
            let center = (i < cands.len()).then(|| cands.point(i));
            let child = state.child(center, i);
            let near: Vec<f64> = match center {
                Some(c) => points.iter().zip(nearest).map(|(p, &d)| d.min(euclid(p, c))).collect(),
                None => nearest.to_vec(),
            };
            self.explore(&child, &near, r_eval, Execution::Sequential)
        });
        let mut best = None;
        for res in results {
            best = better(best, res?);
        }
        Ok(best)
    }
}

/// Recursive candidate search from `state`: at every node, branch on each
/// candidate center and on adding nothing, and return the explored center set
/// of least cost at the inflated radius `(1 + delta') r`.
///
/// Seeds of children derive from the parent seed and the child index, and
/// the minimum is taken over `(cost, centers)` pairs, so the result does not
/// depend on whether branches run in parallel.
pub fn hybrid_clustering(
    state: &SearchState,
    points: &PointSet,
    k: usize,
    r: f64,
    z: Power,
    cfg: &AlgoConfig,
) -> Result<Solution> {
    state.check(points, k)?;
    if !(r >= 0.0 && r.is_finite()) {
        return Err(HybridError::invalid(format!("radius must be finite and >= 0, got {r}")));
    }
    let params = cfg.search_params(k, state.remaining)?;
    let factor = params.radius_factor();
    let ctx = SearchContext::new(points, k, r, z, params, cfg.theory_budget)?;
    let nearest: Vec<f64> = points
        .iter()
        .map(|p| state.chosen.iter().map(|c| euclid(p, c)).fold(f64::INFINITY, f64::min))
        .collect();
    match ctx.explore(state, &nearest, factor * r, cfg.execution)? {
        Some((_, centers)) => Solution::evaluate(points, centers, r, factor, z),
        None => Err(HybridError::NoCandidates),
    }
}
