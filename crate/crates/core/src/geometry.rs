//! Exact primitives: points, distances, the thresholded hybrid cost, cluster
//! assignment and grid candidate generation.
//!
//! Everything here is a pure function of its inputs. Hot loops inside the
//! crate use the unchecked helpers (`euclid`, `nearest`, `cost_unchecked`);
//! the public functions validate dimensions and parameters first.

use std::cmp::Ordering;

use crate::error::{HybridError, Result};

/// Exponent applied to the thresholded distance: `1` is the hybrid k-median
/// objective, `2` the hybrid k-means objective.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Power {
    #[default]
    Linear,
    Squared,
}

impl Power {
    pub fn from_exponent(z: u32) -> Result<Self> {
        match z {
            1 => Ok(Power::Linear),
            2 => Ok(Power::Squared),
            _ => Err(HybridError::invalid(format!("power z must be 1 or 2, got {z}"))),
        }
    }

    pub fn exponent(self) -> u32 {
        match self {
            Power::Linear => 1,
            Power::Squared => 2,
        }
    }

    #[inline]
    pub fn apply(self, x: f64) -> f64 {
        match self {
            Power::Linear => x,
            Power::Squared => x * x,
        }
    }
}

/// A single point of R^d with finite coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Point(Vec<f64>);

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        check_coords(&coords)?;
        Ok(Point(coords))
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

impl AsRef<[f64]> for Point {
    fn as_ref(&self) -> &[f64] {
        &self.0
    }
}

fn check_coords(coords: &[f64]) -> Result<()> {
    if coords.is_empty() {
        return Err(HybridError::invalid("points need at least one coordinate"));
    }
    if let Some(bad) = coords.iter().find(|c| !c.is_finite()) {
        return Err(HybridError::invalid(format!("non-finite coordinate {bad}")));
    }
    Ok(())
}

/// Ordered multiset of points of a common dimension, stored row-major.
/// Duplicates are kept as separate points.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PointSet {
    dim: usize,
    data: Vec<f64>,
}

impl PointSet {
    pub fn new(dim: usize) -> Self {
        PointSet { dim, data: Vec::new() }
    }

    pub fn with_capacity(dim: usize, n: usize) -> Self {
        PointSet {
            dim,
            data: Vec::with_capacity(dim * n),
        }
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let first = rows
            .first()
            .ok_or_else(|| HybridError::invalid("cannot infer dimension of an empty point list"))?;
        let mut set = PointSet::with_capacity(first.as_ref().len(), rows.len());
        for row in rows {
            set.push(row.as_ref())?;
        }
        Ok(set)
    }

    /// Builds a set from a flat row-major buffer.
    pub fn from_flat(dim: usize, data: Vec<f64>) -> Result<Self> {
        if dim == 0 || !data.len().is_multiple_of(dim) {
            return Err(HybridError::invalid(format!(
                "buffer of length {} is not a multiple of dimension {dim}",
                data.len()
            )));
        }
        check_coords_all(&data)?;
        Ok(PointSet { dim, data })
    }

    pub fn push(&mut self, p: &[f64]) -> Result<()> {
        if self.dim == 0 && self.data.is_empty() {
            self.dim = p.len();
        }
        if p.len() != self.dim {
            return Err(HybridError::DimensionMismatch {
                expected: self.dim,
                found: p.len(),
            });
        }
        check_coords(p)?;
        self.data.extend_from_slice(p);
        Ok(())
    }

    /// Appends without validation; callers guarantee dimension and finiteness.
    pub(crate) fn push_unchecked(&mut self, p: &[f64]) {
        debug_assert_eq!(p.len(), self.dim);
        self.data.extend_from_slice(p);
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        if self.dim == 0 {
            0
        } else {
            self.data.len() / self.dim
        }
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    #[inline]
    pub fn point(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &[f64]> + '_ {
        // chunks_exact panics on zero; an empty set with dim 0 yields nothing.
        self.data.chunks_exact(self.dim.max(1))
    }

    pub fn as_flat(&self) -> &[f64] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.iter().map(<[f64]>::to_vec).collect()
    }

    pub fn select(&self, indices: &[usize]) -> PointSet {
        let mut out = PointSet::with_capacity(self.dim, indices.len());
        for &i in indices {
            out.push_unchecked(self.point(i));
        }
        out
    }

    pub fn extend_from(&mut self, other: &PointSet) -> Result<()> {
        if other.is_empty() {
            return Ok(());
        }
        if self.is_empty() && self.dim == 0 {
            self.dim = other.dim;
        }
        if other.dim != self.dim {
            return Err(HybridError::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        self.data.extend_from_slice(&other.data);
        Ok(())
    }

    /// Number of distinct points (bitwise coordinate equality).
    pub fn distinct_count(&self) -> usize {
        let mut rows: Vec<&[f64]> = self.iter().collect();
        rows.sort_by(|a, b| lex_cmp(a, b));
        rows.dedup_by(|a, b| a == b);
        rows.len()
    }
}

fn check_coords_all(data: &[f64]) -> Result<()> {
    match data.iter().find(|c| !c.is_finite()) {
        Some(bad) => Err(HybridError::invalid(format!("non-finite coordinate {bad}"))),
        None => Ok(()),
    }
}

/// Total lexicographic order on coordinate slices.
pub fn lex_cmp(a: &[f64], b: &[f64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.total_cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

/// Axis-aligned box.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundingBox {
    pub lo: Vec<f64>,
    pub hi: Vec<f64>,
}

impl BoundingBox {
    pub fn of(points: &PointSet) -> Result<Self> {
        if points.is_empty() {
            return Err(HybridError::invalid("bounding box of an empty point set"));
        }
        let mut lo = points.point(0).to_vec();
        let mut hi = lo.clone();
        for p in points.iter() {
            for j in 0..p.len() {
                lo[j] = lo[j].min(p[j]);
                hi[j] = hi[j].max(p[j]);
            }
        }
        Ok(BoundingBox { lo, hi })
    }

    pub fn inflate(&self, by: f64) -> Self {
        BoundingBox {
            lo: self.lo.iter().map(|x| x - by).collect(),
            hi: self.hi.iter().map(|x| x + by).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn contains(&self, p: &[f64]) -> bool {
        p.iter()
            .zip(self.lo.iter().zip(&self.hi))
            .all(|(x, (l, h))| l <= x && x <= h)
    }

    pub fn clamp_into(&self, p: &mut [f64]) {
        for (j, x) in p.iter_mut().enumerate() {
            *x = x.clamp(self.lo[j], self.hi[j]);
        }
    }

    pub fn diagonal(&self) -> f64 {
        euclid(&self.lo, &self.hi)
    }
}

/// Euclidean distance without dimension checks.
#[inline]
pub(crate) fn euclid(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let t = x - y;
            t * t
        })
        .sum::<f64>()
        .sqrt()
}

/// `(max(d - r, 0))^z`.
#[inline]
pub(crate) fn threshold(d: f64, r: f64, z: Power) -> f64 {
    z.apply((d - r).max(0.0))
}

/// Index and distance of the nearest center, lowest index on ties.
#[inline]
pub(crate) fn nearest(p: &[f64], centers: &PointSet) -> (usize, f64) {
    let mut best = (0, f64::INFINITY);
    for (i, c) in centers.iter().enumerate() {
        let d = euclid(p, c);
        if d < best.1 {
            best = (i, d);
        }
    }
    best
}

/// Hybrid cost without validation, summed in point-index order.
pub(crate) fn cost_unchecked(points: &PointSet, centers: &PointSet, r: f64, z: Power) -> f64 {
    points
        .iter()
        .map(|p| threshold(nearest(p, centers).1, r, z))
        .sum()
}

fn check_dims(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(HybridError::DimensionMismatch { expected: a, found: b });
    }
    Ok(())
}

fn check_radius(r: f64) -> Result<()> {
    if !(r >= 0.0 && r.is_finite()) {
        return Err(HybridError::invalid(format!("radius must be finite and non-negative, got {r}")));
    }
    Ok(())
}

/// Euclidean distance.
pub fn dist(p: &[f64], q: &[f64]) -> Result<f64> {
    check_dims(p.len(), q.len())?;
    Ok(euclid(p, q))
}

/// Thresholded distance `(max(d(p, q) - r, 0))^z`.
pub fn dist_r(p: &[f64], q: &[f64], r: f64, z: Power) -> Result<f64> {
    check_radius(r)?;
    Ok(threshold(dist(p, q)?, r, z))
}

/// `sum_p dist_r(p, F)`: every point pays its thresholded distance to the
/// nearest center.
pub fn cost(points: &PointSet, centers: &PointSet, r: f64, z: Power) -> Result<f64> {
    check_radius(r)?;
    if centers.is_empty() {
        return Err(HybridError::invalid("cost is undefined for an empty center set"));
    }
    if !points.is_empty() {
        check_dims(points.dim(), centers.dim())?;
    }
    Ok(cost_unchecked(points, centers, r, z))
}

/// Nearest-center partition of a point set.
#[derive(Debug, Clone, PartialEq)]
pub struct Assignment {
    /// Index of the nearest center per point, lowest index on ties.
    pub owner: Vec<usize>,
    /// Distance from each point to its owner.
    pub distance: Vec<f64>,
}

impl Assignment {
    pub fn per_point_cost(&self, r: f64, z: Power) -> Vec<f64> {
        self.distance.iter().map(|&d| threshold(d, r, z)).collect()
    }

    pub fn covered_count(&self, radius: f64) -> usize {
        self.distance.iter().filter(|&&d| d <= radius).count()
    }

    /// Point indices grouped by owner; `clusters()[c]` lists the points served by center `c`.
    pub fn clusters(&self, n_centers: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); n_centers];
        for (p, &c) in self.owner.iter().enumerate() {
            out[c].push(p);
        }
        out
    }
}

pub fn assign_clusters(points: &PointSet, centers: &PointSet) -> Result<Assignment> {
    if centers.is_empty() {
        return Err(HybridError::invalid("cannot assign to an empty center set"));
    }
    if !points.is_empty() {
        check_dims(points.dim(), centers.dim())?;
    }
    let (owner, distance) = points.iter().map(|p| nearest(p, centers)).unzip();
    Ok(Assignment { owner, distance })
}

pub fn max_pairwise_distance(points: &PointSet) -> Result<f64> {
    if points.is_empty() {
        return Err(HybridError::invalid("max pairwise distance of an empty set"));
    }
    let mut best = 0.0f64;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            best = best.max(euclid(points.point(i), points.point(j)));
        }
    }
    Ok(best)
}

/// Smallest non-zero pairwise distance, `None` if all points coincide.
pub fn min_nonzero_pairwise_distance(points: &PointSet) -> Option<f64> {
    let mut best = f64::INFINITY;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let d = euclid(points.point(i), points.point(j));
            if d > 0.0 && d < best {
                best = d;
            }
        }
    }
    best.is_finite().then_some(best)
}

/// An instance `(P, k, r, z)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub points: PointSet,
    pub k: usize,
    pub r: f64,
    pub z: Power,
}

impl Instance {
    pub fn new(points: PointSet, k: usize, r: f64, z: Power) -> Result<Self> {
        if points.is_empty() {
            return Err(HybridError::invalid("instance has no points"));
        }
        if k == 0 {
            return Err(HybridError::invalid("k must be at least 1"));
        }
        check_radius(r)?;
        Ok(Instance { points, k, r, z })
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn dim(&self) -> usize {
        self.points.dim()
    }
}

/// A center set together with the radius factor it was evaluated at and the
/// resulting cost `cost_{factor * r}(P, centers)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub centers: PointSet,
    pub radius_factor: f64,
    pub cost: f64,
}

impl Solution {
    pub fn evaluate(points: &PointSet, centers: PointSet, r: f64, radius_factor: f64, z: Power) -> Result<Self> {
        if !(radius_factor >= 1.0 && radius_factor.is_finite()) {
            return Err(HybridError::invalid(format!("radius factor must be >= 1, got {radius_factor}")));
        }
        let cost = cost(points, &centers, radius_factor * r, z)?;
        Ok(Solution {
            centers,
            radius_factor,
            cost,
        })
    }

    /// Same centers evaluated at another radius factor.
    pub fn reevaluate(&self, points: &PointSet, r: f64, radius_factor: f64, z: Power) -> Result<Self> {
        Solution::evaluate(points, self.centers.clone(), r, radius_factor, z)
    }

    /// Ordering used by every min-reduction: cost first, then centers
    /// lexicographically, so ties resolve identically in any execution order.
    pub fn better_than(&self, other: &Solution) -> bool {
        compare_candidates(self.cost, self.centers.as_flat(), other.cost, other.centers.as_flat()) == Ordering::Less
    }
}

pub(crate) fn compare_candidates(ca: f64, fa: &[f64], cb: f64, fb: &[f64]) -> Ordering {
    ca.total_cmp(&cb).then_with(|| lex_cmp(fa, fb))
}

/// Where the grid lines of [`grid_points`] are anchored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GridOffset {
    /// Cells `[i*s, (i+1)*s)` per axis.
    #[default]
    Origin,
    /// Cells `[p + i*s, p + (i+1)*s)` per axis, anchored at the query point.
    AtPoint,
}

/// Upper bound `(ceil(2 lambda sqrt(d) / tau) + 1)^d` on the size of a grid.
pub fn grid_cardinality_bound(dim: usize, lambda: f64, tau: f64) -> f64 {
    let per_axis = (2.0 * lambda * (dim as f64).sqrt() / tau).ceil() + 1.0;
    per_axis.powi(dim as i32)
}

/// Default refusal threshold for [`grid_points`].
pub const GRID_POINT_LIMIT: u128 = 20_000_000;

/// One representative (the cell center) from every half-open cell of side
/// `tau / sqrt(d)` that meets the closed ball `B(p, lambda)`. Every point of the
/// ball lies within `tau / 2` of some returned point.
pub fn grid_points(p: &[f64], lambda: f64, tau: f64, offset: GridOffset) -> Result<PointSet> {
    grid_points_in_box(p, lambda, tau, offset, None, GRID_POINT_LIMIT)
}

/// [`grid_points`] restricted to cells that meet `clip`; representatives are
/// clamped into `clip`, which keeps the coverage guarantee for points of
/// `B(p, lambda)` inside the box. Refuses with a budget error when the cell
/// range to scan exceeds `limit`.
pub fn grid_points_in_box(
    p: &[f64],
    lambda: f64,
    tau: f64,
    offset: GridOffset,
    clip: Option<&BoundingBox>,
    limit: u128,
) -> Result<PointSet> {
    check_coords(p)?;
    if !(tau > 0.0 && tau.is_finite()) || !(tau <= lambda) || !lambda.is_finite() {
        return Err(HybridError::invalid(format!(
            "grid needs 0 < tau <= lambda, got tau = {tau}, lambda = {lambda}"
        )));
    }
    if let Some(b) = clip {
        check_dims(p.len(), b.dim())?;
    }
    let dim = p.len();
    let ranges = match cell_ranges(p, lambda, tau, offset, clip) {
        Some(r) => r,
        None => return Ok(PointSet::new(dim)),
    };
    let total = ranges
        .iter()
        .map(|&(lo, hi)| (hi - lo + 1) as u128)
        .try_fold(1u128, |acc, c| acc.checked_mul(c))
        .unwrap_or(u128::MAX);
    if total > limit {
        return Err(HybridError::Budget {
            what: "grid cells",
            required: total,
            budget: limit,
        });
    }
    let side = tau / (dim as f64).sqrt();
    let anchor = |j: usize| match offset {
        GridOffset::Origin => 0.0,
        GridOffset::AtPoint => p[j],
    };
    let lambda_sq = lambda * lambda;
    let mut out = PointSet::new(dim);
    let mut idx: Vec<i64> = ranges.iter().map(|r| r.0).collect();
    let mut rep = vec![0.0; dim];
    loop {
        // squared distance from p to the closure of the cell
        let mut d2 = 0.0;
        for j in 0..dim {
            let lo = anchor(j) + idx[j] as f64 * side;
            let hi = lo + side;
            let gap = if p[j] < lo {
                lo - p[j]
            } else if p[j] > hi {
                p[j] - hi
            } else {
                0.0
            };
            d2 += gap * gap;
            rep[j] = lo + 0.5 * side;
        }
        if d2 <= lambda_sq {
            if let Some(b) = clip {
                b.clamp_into(&mut rep);
            }
            out.push_unchecked(&rep);
        }
        // odometer increment
        let mut j = 0;
        loop {
            if j == dim {
                return Ok(out);
            }
            if idx[j] < ranges[j].1 {
                idx[j] += 1;
                break;
            }
            idx[j] = ranges[j].0;
            j += 1;
        }
    }
}

/// Number of cells [`grid_points_in_box`] would scan.
pub(crate) fn grid_scan_size(p: &[f64], lambda: f64, tau: f64, offset: GridOffset, clip: Option<&BoundingBox>) -> f64 {
    match cell_ranges(p, lambda, tau, offset, clip) {
        Some(r) => r.iter().map(|&(lo, hi)| (hi - lo + 1) as f64).product(),
        None => 0.0,
    }
}

fn cell_ranges(
    p: &[f64],
    lambda: f64,
    tau: f64,
    offset: GridOffset,
    clip: Option<&BoundingBox>,
) -> Option<Vec<(i64, i64)>> {
    let dim = p.len();
    let side = tau / (dim as f64).sqrt();
    (0..dim)
        .map(|j| {
            let a = match offset {
                GridOffset::Origin => 0.0,
                GridOffset::AtPoint => p[j],
            };
            let (mut lo, mut hi) = (p[j] - lambda, p[j] + lambda);
            if let Some(b) = clip {
                lo = lo.max(b.lo[j]);
                hi = hi.min(b.hi[j]);
                if lo > hi {
                    return None;
                }
            }
            Some((((lo - a) / side).floor() as i64, ((hi - a) / side).floor() as i64))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ps(rows: &[&[f64]]) -> PointSet {
        PointSet::from_rows(rows).unwrap()
    }

    fn four_points() -> (PointSet, PointSet) {
        (
            ps(&[&[3.0, 6.0], &[1.0, 5.0], &[5.0, 1.0], &[6.0, 9.0]]),
            ps(&[&[3.0, 3.0], &[6.0, 6.0]]),
        )
    }

    #[test]
    fn dist_examples() {
        assert_eq!(dist(&[0.0, 0.0], &[3.0, 4.0]).unwrap(), 5.0);
        assert_eq!(dist(&[1.5, -2.0], &[1.5, -2.0]).unwrap(), 0.0);
        assert_eq!(dist(&[3.0, 6.0], &[3.0, 3.0]).unwrap(), 3.0);
        assert!(matches!(
            dist(&[0.0], &[0.0, 1.0]),
            Err(HybridError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn dist_r_examples() {
        let (o, p) = ([0.0, 0.0], [3.0, 4.0]);
        assert_eq!(dist_r(&o, &p, 2.0, Power::Linear).unwrap(), 3.0);
        assert_eq!(dist_r(&o, &p, 7.0, Power::Linear).unwrap(), 0.0);
        assert_eq!(dist_r(&o, &p, 2.0, Power::Squared).unwrap(), 9.0);
        assert!(dist_r(&o, &p, -1.0, Power::Linear).is_err());
    }

    #[test]
    fn cost_four_points() {
        let (p, f) = four_points();
        let expected = 2.0 * (1.0 + 8f64.sqrt() - 2.0);
        let c = cost(&p, &f, 2.0, Power::Linear).unwrap();
        assert!((c - expected).abs() < 1e-12, "{c} vs {expected}");
    }

    #[test]
    fn cost_line_and_coverage() {
        let p = ps(&[&[0.0], &[1.0], &[7.0]]);
        let f = ps(&[&[0.0]]);
        assert_eq!(cost(&p, &f, 1.0, Power::Linear).unwrap(), 6.0);
        assert_eq!(cost(&p, &f, 7.0, Power::Linear).unwrap(), 0.0);
        assert!(cost(&p, &PointSet::new(1), 1.0, Power::Linear).is_err());
    }

    #[test]
    fn assignment_examples() {
        let p = ps(&[&[0.0, 0.0], &[10.0, 0.0]]);
        assert_eq!(assign_clusters(&p, &p).unwrap().owner, vec![0, 1]);
        let mid = ps(&[&[5.0, 0.0]]);
        assert_eq!(assign_clusters(&mid, &p).unwrap().owner, vec![0]);
        let (p, f) = four_points();
        assert_eq!(assign_clusters(&p, &f).unwrap().owner, vec![0, 0, 0, 1]);
        assert!(assign_clusters(&p, &PointSet::new(2)).is_err());
    }

    #[test]
    fn grid_line_example() {
        let g = grid_points(&[0.0], 2.0, 1.0, GridOffset::Origin).unwrap();
        assert_eq!(g.as_flat(), &[-1.5, -0.5, 0.5, 1.5, 2.5]);
    }

    #[test]
    fn grid_rejects_bad_spacing() {
        assert!(grid_points(&[0.0], 1.0, 0.0, GridOffset::Origin).is_err());
        assert!(grid_points(&[0.0], 1.0, 2.0, GridOffset::Origin).is_err());
        assert!(matches!(
            grid_points(&[0.0, 0.0, 0.0], 100.0, 1e-3, GridOffset::Origin),
            Err(HybridError::Budget { .. })
        ));
    }

    #[test]
    fn grid_anchored_at_point() {
        let g = grid_points(&[0.3], 1.0, 1.0, GridOffset::AtPoint).unwrap();
        let got: Vec<f64> = g.as_flat().iter().map(|x| (x * 1e9).round() / 1e9).collect();
        assert_eq!(got, vec![-0.2, 0.8, 1.8]);
    }

    #[test]
    fn pairwise_extremes() {
        let p = ps(&[&[0.0], &[3.0], &[10.0]]);
        assert_eq!(max_pairwise_distance(&p).unwrap(), 10.0);
        assert_eq!(max_pairwise_distance(&ps(&[&[4.0, 4.0]])).unwrap(), 0.0);
        let (red, _) = four_points();
        assert!((max_pairwise_distance(&red).unwrap() - 65f64.sqrt()).abs() < 1e-12);
        assert!(max_pairwise_distance(&PointSet::new(2)).is_err());
        assert_eq!(min_nonzero_pairwise_distance(&ps(&[&[1.0], &[1.0]])), None);
    }

    #[test]
    fn point_validation() {
        assert!(Point::new(vec![]).is_err());
        assert!(Point::new(vec![f64::NAN]).is_err());
        let mut s = PointSet::new(2);
        assert!(s.push(&[1.0]).is_err());
        assert!(s.push(&[1.0, f64::INFINITY]).is_err());
        s.push(&[1.0, 2.0]).unwrap();
        s.push(&[1.0, 2.0]).unwrap();
        assert_eq!(s.len(), 2);
        assert_eq!(s.distinct_count(), 1);
    }

    #[test]
    fn instance_validation() {
        let p = ps(&[&[0.0]]);
        assert!(Instance::new(p.clone(), 0, 1.0, Power::Linear).is_err());
        assert!(Instance::new(p.clone(), 1, -1.0, Power::Linear).is_err());
        assert!(Power::from_exponent(3).is_err());
        assert!(Instance::new(p, 1, 0.0, Power::Squared).is_ok());
    }
}
