//! Regime handling before the main search.
//!
//! * k-center-like inputs (`r > OPT_r`) are solved directly by enumerating
//!   center sets on grids around a farthest-first 2-approximate k-center.
//! * k-median-like inputs (`OPT_r >= 2nr/eps`) reduce to k-median.
//! * Everything in between is discretized: points are grouped into connected
//!   components of the `2(OPT + r)` threshold graph and snapped to a fine grid,
//!   which bounds the aspect ratio of every component. Components are solved
//!   separately and their center budgets combined by a knapsack-style DP.
//!
//! `OPT_r` is unknown, so callers iterate over a geometric ladder of guesses.

use crate::error::{HybridError, Result};
use crate::geometry::{
    euclid, max_pairwise_distance, min_nonzero_pairwise_distance, threshold, GridOffset, PointSet,
    Power, Solution,
};
use crate::oracle::binomial;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptGuess {
    pub value: f64,
    pub index: usize,
}

fn check_eps(eps: f64) -> Result<()> {
    if !(eps > 0.0 && eps < 1.0) {
        return Err(HybridError::invalid(format!("eps must lie in (0, 1), got {eps}")));
    }
    Ok(())
}

/// Guesses `lo * 2^i` for `lo = eps * d_min / (2n)` up to `hi = n * d_max`,
/// where `d_min` is the smallest non-zero pairwise distance. For every
/// `OPT_r` in `[lo, hi]` some guess `G` has `G <= OPT_r <= 2G`. Inputs without
/// a non-zero distance get the single guess `0`.
pub fn opt_guess_ladder(points: &PointSet, _k: usize, _r: f64, eps: f64) -> Result<Vec<OptGuess>> {
    check_eps(eps)?;
    let n = points.len();
    let zero = vec![OptGuess { value: 0.0, index: 0 }];
    if n < 2 {
        return Ok(zero);
    }
    let Some(d_min) = min_nonzero_pairwise_distance(points) else {
        return Ok(zero);
    };
    let d_max = max_pairwise_distance(points)?;
    let lo = eps * d_min / (2.0 * n as f64);
    let hi = n as f64 * d_max;
    let mut out = Vec::new();
    let mut g = lo;
    while g <= hi * (1.0 + 1e-12) {
        out.push(OptGuess {
            value: g,
            index: out.len(),
        });
        g *= 2.0;
    }
    Ok(out)
}

/// Farthest-first traversal seeded at point 0, ties to the lowest index.
/// Returns the indices of the chosen centers and, per point, the distance to
/// the nearest chosen center. Stops early once every point is covered.
pub(crate) fn farthest_first(points: &PointSet, k: usize) -> (Vec<usize>, Vec<f64>) {
    let mut chosen = vec![0];
    let mut dist: Vec<f64> = points.iter().map(|p| euclid(p, points.point(0))).collect();
    while chosen.len() < k {
        let (far, d) = dist
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |acc, (i, &d)| if d > acc.1 { (i, d) } else { acc });
        if d <= 0.0 {
            break;
        }
        chosen.push(far);
        let c = points.point(far);
        for (i, p) in points.iter().enumerate() {
            dist[i] = dist[i].min(euclid(p, c));
        }
    }
    (chosen, dist)
}

/// 2-approximate k-center by farthest-first traversal: the returned radius is
/// at most twice the optimal k-center radius.
pub fn gonzalez_kcenter(points: &PointSet, k: usize) -> Result<(PointSet, f64)> {
    if points.is_empty() || k == 0 {
        return Err(HybridError::invalid("k-center needs points and k >= 1"));
    }
    let (chosen, dist) = farthest_first(points, k);
    let radius = dist.iter().copied().fold(0.0, f64::max);
    Ok((points.select(&chosen), radius))
}

/// Lower bound on `OPT_r` from the farthest-first traversal: the first `k + 1`
/// traversal points are pairwise at least `R` apart, so two of them share a
/// center and one of the two is at least `R / 2` away from it.
pub fn separation_lower_bound(points: &PointSet, k: usize, r: f64, z: Power) -> f64 {
    if points.is_empty() {
        return 0.0;
    }
    let (_, dist) = farthest_first(points, k);
    let radius = dist.iter().copied().fold(0.0, f64::max);
    threshold(radius / 2.0, r, z)
}

/// Result of the k-center-like procedure.
#[derive(Debug, Clone, PartialEq)]
pub struct CenterLikeOutcome {
    /// Centers evaluated at radius `(1 + eps) r`.
    pub solution: Solution,
    /// Grid spacing actually used; equals `eps * r` unless coarsened.
    pub grid_spacing: f64,
    pub candidate_count: usize,
}

/// k-center-like regime.
///
/// Verifies that `k` balls of radius `4r` around a 2-approximate k-center
/// cover `P` (otherwise `OPT_r >= r` and `Ok(None)` is returned), builds the
/// union of `Grid(c, 6r, eps r)` over those centers, and enumerates all center
/// sets of size at most `k` drawn from it, minimizing `cost_r`. Grid cells
/// farther than `2r` plus the spacing from every input point are dropped:
/// a minimal optimal solution has every center within `2r` of a point.
///
/// When the number of subsets exceeds `budget`, `coarsen = true` widens the
/// grid spacing until it fits (reported in the outcome); otherwise a budget
/// error is returned.
pub fn solve_center_like(
    points: &PointSet,
    k: usize,
    r: f64,
    z: Power,
    eps: f64,
    budget: u128,
    coarsen: bool,
) -> Result<Option<CenterLikeOutcome>> {
    check_eps(eps)?;
    if !(r > 0.0 && r.is_finite()) {
        return Err(HybridError::invalid("the k-center-like procedure needs r > 0"));
    }
    if points.is_empty() || k == 0 {
        return Err(HybridError::invalid("k-center-like procedure needs points and k >= 1"));
    }
    let (kc, radius) = gonzalez_kcenter(points, k)?;
    if radius > 4.0 * r {
        return Ok(None);
    }
    let mut spacing = eps * r;
    let candidates = loop {
        let cands = center_like_candidates(points, &kc, r, spacing)?;
        let size = k.min(cands.len());
        let required = binomial(cands.len(), size);
        if required <= budget {
            break cands;
        }
        if !coarsen {
            return Err(HybridError::Budget {
                what: "k-center-like subsets",
                required,
                budget,
            });
        }
        spacing *= 1.2;
        if spacing > 6.0 * r {
            return Err(HybridError::Budget {
                what: "k-center-like subsets at coarsest grid",
                required,
                budget,
            });
        }
    };
    let tuple = min_cost_subset(points, &candidates, k.min(candidates.len()), r, z);
    let centers = candidates.select(&tuple);
    let solution = Solution::evaluate(points, centers, r, 1.0 + eps, z)?;
    Ok(Some(CenterLikeOutcome {
        solution,
        grid_spacing: spacing,
        candidate_count: candidates.len(),
    }))
}

fn center_like_candidates(points: &PointSet, kc: &PointSet, r: f64, spacing: f64) -> Result<PointSet> {
    let reach = 2.0 * r + spacing;
    let mut out = PointSet::new(points.dim());
    let mut seen = std::collections::HashSet::new();
    for c in kc.iter() {
        let grid = crate::geometry::grid_points(c, 6.0 * r, spacing, GridOffset::Origin)?;
        for g in grid.iter() {
            if !points.iter().any(|p| euclid(p, g) <= reach) {
                continue;
            }
            let key: Vec<u64> = g.iter().map(|x| x.to_bits()).collect();
            if seen.insert(key) {
                out.push_unchecked(g);
            }
        }
    }
    Ok(out)
}

/// Lexicographically first `size`-subset of `candidates` minimizing
/// `cost_r`; stops at the first zero-cost subset.
fn min_cost_subset(points: &PointSet, candidates: &PointSet, size: usize, r: f64, z: Power) -> Vec<usize> {
    let n = points.len();
    let m = candidates.len();
    let dist: Vec<f64> = candidates
        .iter()
        .flat_map(|c| points.iter().map(move |p| euclid(p, c)))
        .collect();
    let mut best = (f64::INFINITY, Vec::new());
    let mut stack: Vec<Vec<f64>> = vec![vec![f64::INFINITY; n]; size + 1];
    let mut idx: Vec<usize> = Vec::with_capacity(size);

    // iterative lexicographic enumeration with per-depth running minima
    let mut next = 0usize;
    loop {
        if idx.len() == size {
            let c: f64 = stack[size].iter().map(|&d| threshold(d, r, z)).sum();
            if c < best.0 {
                best = (c, idx.clone());
                if c == 0.0 {
                    return best.1;
                }
            }
            next = idx.pop().expect("size >= 1") + 1;
            continue;
        }
        let depth = idx.len();
        if next > m - (size - depth) {
            match idx.pop() {
                Some(i) => {
                    next = i + 1;
                    continue;
                }
                None => break,
            }
        }
        let (lower, upper) = stack.split_at_mut(depth + 1);
        let row = &dist[next * n..(next + 1) * n];
        for ((out, &a), &b) in upper[0].iter_mut().zip(&lower[depth]).zip(row) {
            *out = a.min(b);
        }
        idx.push(next);
        next += 1;
    }
    best.1
}

/// `OPT_r >= 2nr/eps`, evaluated on a guess of `OPT_r`.
pub fn kmedian_regime_holds(opt_guess: f64, n: usize, r: f64, eps: f64) -> bool {
    opt_guess >= 2.0 * n as f64 * r / eps
}

/// k-median-like regime: solve k-median (`r = 0`) with `kmedian_solver` and
/// report the centers evaluated at radius `r`. A `(1 + eps/3)`-approximate
/// k-median is a `(1 + eps)`-approximation of `OPT_r` when
/// `OPT_r >= 2nr/eps`; outside that regime the result is still a feasible
/// candidate.
pub fn reduce_to_kmedian<F>(points: &PointSet, k: usize, r: f64, z: Power, eps: f64, kmedian_solver: F) -> Result<Solution>
where
    F: FnOnce(&PointSet, usize) -> Result<PointSet>,
{
    check_eps(eps)?;
    let centers = kmedian_solver(points, k)?;
    if centers.len() > k {
        return Err(HybridError::invalid(format!(
            "k-median solver returned {} centers for k = {k}",
            centers.len()
        )));
    }
    Solution::evaluate(points, centers, r, 1.0, z)
}

/// Connected components of the threshold graph and the snapped multiset.
#[derive(Debug, Clone, PartialEq)]
pub struct ComponentDecomposition {
    /// Snapped points of each component.
    pub components: Vec<PointSet>,
    /// Indices into the original point set, per component, ascending.
    pub members: Vec<Vec<usize>>,
    /// The whole snapped multiset, in original point order.
    pub snapped: PointSet,
    /// Side of the snapping grid, `eps * opt_guess / (sqrt(d) n)`.
    pub snap_cell: f64,
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // smaller root wins so representatives are stable
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Aspect-ratio discretization for a guess `opt_guess` of `OPT_r`, valid when
/// `eps * opt_guess / (2n) <= r <= opt_guess`.
///
/// Points closer than `2(opt_guess + r)` are joined; each point is then moved
/// to the center of its cell in a grid of side `eps * opt_guess / (sqrt(d) n)`.
pub fn discretize(points: &PointSet, _k: usize, r: f64, eps: f64, opt_guess: f64) -> Result<ComponentDecomposition> {
    check_eps(eps)?;
    let n = points.len();
    if n == 0 {
        return Err(HybridError::invalid("cannot discretize an empty point set"));
    }
    if !(opt_guess > 0.0 && opt_guess.is_finite()) {
        return Err(HybridError::Regime(format!("OPT guess must be positive, got {opt_guess}")));
    }
    let floor = eps * opt_guess / (2.0 * n as f64);
    if !(floor <= r && r <= opt_guess) {
        return Err(HybridError::Regime(format!(
            "need {floor} <= r <= {opt_guess}, got r = {r}"
        )));
    }
    let edge = 2.0 * (opt_guess + r);
    let mut sets = DisjointSets::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if euclid(points.point(i), points.point(j)) <= edge {
                sets.union(i, j);
            }
        }
    }
    let dim = points.dim();
    let snap_cell = eps * opt_guess / ((dim as f64).sqrt() * n as f64);
    let mut snapped = PointSet::with_capacity(dim, n);
    let mut buf = vec![0.0; dim];
    for p in points.iter() {
        for (b, &x) in buf.iter_mut().zip(p) {
            *b = ((x / snap_cell).floor() + 0.5) * snap_cell;
        }
        snapped.push_unchecked(&buf);
    }
    let mut root_slot: Vec<Option<usize>> = vec![None; n];
    let mut members: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        let root = sets.find(i);
        let slot = *root_slot[root].get_or_insert_with(|| {
            members.push(Vec::new());
            members.len() - 1
        });
        members[slot].push(i);
    }
    let components = members.iter().map(|m| snapped.select(m)).collect();
    Ok(ComponentDecomposition {
        components,
        members,
        snapped,
        snap_cell,
    })
}

/// Max pairwise distance over min non-zero pairwise distance; `None` when all
/// points coincide.
pub fn aspect_ratio(points: &PointSet) -> Option<f64> {
    let lo = min_nonzero_pairwise_distance(points)?;
    Some(max_pairwise_distance(points).ok()? / lo)
}

/// Budget allocation across components.
///
/// `table[c][b]` is the best known cost of component `c` with exactly `b`
/// centers (missing entries count as infinite). Returns budgets with
/// `sum <= k` minimizing the total, ties broken towards smaller budgets for
/// earlier components.
pub fn combine_components(table: &[Vec<f64>], k: usize) -> Result<Vec<usize>> {
    if table.is_empty() {
        return Ok(Vec::new());
    }
    let entry = |c: usize, b: usize| table[c].get(b).copied().unwrap_or(f64::INFINITY);
    let comps = table.len();
    // best[c][u]: min total of components c.. using at most u centers
    let mut best = vec![vec![f64::INFINITY; k + 1]; comps + 1];
    best[comps].iter_mut().for_each(|v| *v = 0.0);
    let mut pick = vec![vec![0usize; k + 1]; comps];
    for c in (0..comps).rev() {
        for u in 0..=k {
            for b in 0..=u {
                let v = entry(c, b) + best[c + 1][u - b];
                if v < best[c][u] {
                    best[c][u] = v;
                    pick[c][u] = b;
                }
            }
        }
    }
    if !best[0][k].is_finite() {
        return Err(HybridError::Infeasible(format!(
            "{comps} components cannot be served with k = {k} centers"
        )));
    }
    let mut alloc = Vec::with_capacity(comps);
    let mut u = k;
    for row in pick.iter() {
        let b = row[u];
        alloc.push(b);
        u -= b;
    }
    Ok(alloc)
}
