use crate::error::{HybridError, Result};
use crate::par::Execution;

/// How candidate sets are sized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Parameters derived from `eps` and `k` exactly as the approximation
    /// analysis requires. Refuses with a budget error once the search would
    /// exceed [`AlgoConfig::theory_budget`].
    Theory,
    /// Small user-tunable sample sizes with capped, coarsened grids.
    #[default]
    Practical,
}

/// Tuning knobs of the recursive search and the pipeline.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgoConfig {
    pub eps: f64,
    pub seed: u64,
    pub mode: Mode,
    /// Grid and median precision; defaults to `eps / (10k)`.
    pub delta: Option<f64>,
    /// Subset size for the sample-based 1-median step.
    pub beta: Option<usize>,
    /// Sample size per distance scale; defaults to `min(|P_q|, 30 k beta)`.
    pub beta_prime: Option<usize>,
    /// Max random subsets per scale when enumerating all of them is too many.
    pub subset_cap: usize,
    /// Max candidates kept per recursion level.
    pub branch_cap: usize,
    /// Max size of a single candidate grid; spacing is widened to fit.
    pub grid_cap: usize,
    /// Bound on the number of leaves of one search tree; per-level branching
    /// is capped at `leaf_budget^(1/k)`.
    pub leaf_budget: u64,
    /// Max candidates examined by the sample-based 1-median.
    pub median_pool_cap: usize,
    /// Independent restarts of each randomized search.
    pub repetitions: usize,
    /// Subset budget of the k-center-like enumeration.
    pub center_like_budget: u128,
    /// Max tree size accepted in theory mode.
    pub theory_budget: u128,
    pub execution: Execution,
}

impl Default for AlgoConfig {
    fn default() -> Self {
        AlgoConfig {
            eps: 0.5,
            seed: 0,
            mode: Mode::Practical,
            delta: None,
            beta: None,
            beta_prime: None,
            subset_cap: 200,
            branch_cap: 400,
            grid_cap: 256,
            leaf_budget: 40_000,
            median_pool_cap: 16,
            repetitions: 10,
            center_like_budget: 5_000_000,
            theory_budget: 1_000_000_000,
            execution: Execution::default(),
        }
    }
}

/// Parameters of one search, resolved for a given depth `k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchParams {
    pub delta: f64,
    /// `delta / 3`; solutions are reported at radius `(1 + delta') r`.
    pub delta_prime: f64,
    pub beta: usize,
    /// `None` means `min(|P_q|, 30 k beta)`.
    pub beta_prime: Option<usize>,
    pub subset_cap: usize,
    /// Effective per-level branching cap.
    pub level_cap: usize,
    pub grid_cap: usize,
    pub median_pool_cap: usize,
    pub theory: bool,
}

impl SearchParams {
    pub fn radius_factor(&self) -> f64 {
        1.0 + self.delta_prime
    }

    pub(crate) fn sample_size(&self, k: usize, available: usize) -> usize {
        let target = match self.beta_prime {
            Some(b) => b,
            None => 30usize.saturating_mul(k.max(1)).saturating_mul(self.beta),
        };
        target.min(available)
    }
}

impl AlgoConfig {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.eps > 0.0 && self.eps < 1.0) {
            return Err(HybridError::invalid(format!("eps must lie in (0, 1), got {}", self.eps)));
        }
        if let Some(d) = self.delta {
            if !(d > 0.0 && d < 0.5) {
                return Err(HybridError::invalid(format!("delta must lie in (0, 1/2), got {d}")));
            }
        }
        if self.beta == Some(0) {
            return Err(HybridError::invalid("beta must be at least 1"));
        }
        if let (Some(b), Some(bp)) = (self.beta, self.beta_prime) {
            if bp < b {
                return Err(HybridError::invalid(format!("beta' = {bp} is smaller than beta = {b}")));
            }
        }
        if self.subset_cap == 0 || self.branch_cap == 0 || self.grid_cap == 0 || self.repetitions == 0 {
            return Err(HybridError::invalid("caps and repetitions must be positive"));
        }
        if self.leaf_budget == 0 || self.median_pool_cap == 0 {
            return Err(HybridError::invalid("leaf and median budgets must be positive"));
        }
        Ok(())
    }

    /// Resolves defaults for a search over `k` centers.
    pub fn params(&self, k: usize) -> Result<SearchParams> {
        self.search_params(k, k)
    }

    /// Like [`AlgoConfig::params`], with the branching cap sized for a tree of
    /// the given depth.
    pub fn search_params(&self, k: usize, depth: usize) -> Result<SearchParams> {
        self.validate()?;
        let depth = depth.max(1);
        let k = k.max(1);
        let delta = self.delta.unwrap_or(self.eps / (10.0 * k as f64));
        let theory = self.mode == Mode::Theory;
        let beta = match (self.beta, theory) {
            (Some(b), _) => b,
            (None, true) => (1.0 / delta).ceil() as usize,
            (None, false) => 10,
        };
        let beta_prime = match (self.beta_prime, theory) {
            (Some(b), _) => Some(b),
            (None, true) => {
                let v = beta as f64 * 150.0 * k as f64 / delta.powi(3);
                Some(if v >= usize::MAX as f64 { usize::MAX } else { v.ceil() as usize })
            }
            (None, false) => None,
        };
        let level_cap = if theory {
            usize::MAX
        } else {
            let root = (self.leaf_budget as f64).powf(1.0 / depth as f64).floor() as usize;
            self.branch_cap.min(root.max(1))
        };
        Ok(SearchParams {
            delta,
            delta_prime: delta / 3.0,
            beta,
            beta_prime,
            subset_cap: self.subset_cap,
            level_cap,
            grid_cap: if theory { usize::MAX } else { self.grid_cap },
            median_pool_cap: if theory { usize::MAX } else { self.median_pool_cap },
            theory,
        })
    }
}
