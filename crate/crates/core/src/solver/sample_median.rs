//! Approximate 1-median (or 1-mean) of a cluster computed from a small
//! uniform sample of it.

use rand::Rng as _;

use crate::error::{HybridError, Result};
use crate::geometry::{euclid, max_pairwise_distance, PointSet, Power};
use crate::oracle::binomial;
use crate::rng::{derive_seed, rng_from};

/// Pool size used by [`approx_solution_on_sample`].
pub const DEFAULT_POOL_CAP: usize = 4096;

const WEISZFELD_ITERATIONS: usize = 30;

/// Candidate center for the cluster `S` was sampled from.
///
/// The pool holds every point of `S`, coordinate-wise means of subsets of `S`
/// of size up to `min(|S|, ceil(1/delta))`, and the Weiszfeld estimate
/// (`z = 1`) or the centroid (`z = 2`) of `S`. The member with the smallest
/// `sum_{s in S} d(s, c)^z` is returned.
pub fn approx_solution_on_sample(s: &PointSet, delta: f64, z: Power) -> Result<Vec<f64>> {
    approx_solution_on_sample_with(s, delta, z, DEFAULT_POOL_CAP)
}

/// [`approx_solution_on_sample`] with at most `pool_cap` subset means. When
/// there are more subsets than that, a deterministic pseudo-random selection
/// keyed on the sample itself is used.
pub fn approx_solution_on_sample_with(s: &PointSet, delta: f64, z: Power, pool_cap: usize) -> Result<Vec<f64>> {
    if s.is_empty() {
        return Err(HybridError::invalid("sample for the 1-median step is empty"));
    }
    if !(delta > 0.0 && delta.is_finite()) {
        return Err(HybridError::invalid(format!("delta must be positive, got {delta}")));
    }
    let n = s.len();
    let dim = s.dim();
    let score = |c: &[f64]| -> f64 { s.iter().map(|p| z.apply(euclid(p, c))).sum() };

    let mut best = s.point(0).to_vec();
    let mut best_cost = score(&best);
    let mut consider = |c: &[f64]| {
        let v = score(c);
        if v < best_cost {
            best_cost = v;
            best.clear();
            best.extend_from_slice(c);
        }
    };
    for p in s.iter().skip(1) {
        consider(p);
    }
    let centroid = centroid(s);
    match z {
        Power::Linear => consider(&weiszfeld(s, &centroid)),
        Power::Squared => consider(&centroid),
    }

    let max_size = n.min((1.0 / delta).ceil().min(n as f64) as usize);
    let total: u128 = (2..=max_size).map(|t| binomial(n, t)).sum();
    let mut mean = vec![0.0; dim];
    let mut add_mean = |idx: &[usize], consider: &mut dyn FnMut(&[f64])| {
        mean.iter_mut().for_each(|m| *m = 0.0);
        for &i in idx {
            for (m, x) in mean.iter_mut().zip(s.point(i)) {
                *m += x;
            }
        }
        let t = idx.len() as f64;
        mean.iter_mut().for_each(|m| *m /= t);
        consider(&mean);
    };
    if total <= pool_cap as u128 {
        for t in 2..=max_size {
            let mut idx: Vec<usize> = (0..t).collect();
            loop {
                add_mean(&idx, &mut consider);
                if !next_combination(&mut idx, n) {
                    break;
                }
            }
        }
    } else if max_size >= 2 {
        let mut rng = rng_from(sample_key(s));
        let mut perm: Vec<usize> = (0..n).collect();
        for j in 0..pool_cap {
            let t = 2 + j % (max_size - 1);
            for i in 0..t {
                perm.swap(i, rng.gen_range(i..n));
            }
            add_mean(&perm[..t], &mut consider);
        }
    }
    Ok(best)
}

fn sample_key(s: &PointSet) -> u64 {
    s.as_flat()
        .iter()
        .fold(s.len() as u64, |h, x| derive_seed(h, x.to_bits()))
}

/// Advances `idx` to the next `idx.len()`-subset of `0..n` in lexicographic
/// order; returns `false` after the last one.
pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let t = idx.len();
    let mut i = t;
    while i > 0 {
        i -= 1;
        if idx[i] < n - t + i {
            idx[i] += 1;
            for j in i + 1..t {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

pub(crate) fn centroid(s: &PointSet) -> Vec<f64> {
    let mut c = vec![0.0; s.dim()];
    for p in s.iter() {
        for (a, x) in c.iter_mut().zip(p) {
            *a += x;
        }
    }
    let n = s.len() as f64;
    c.iter_mut().for_each(|a| *a /= n);
    c
}

/// Weiszfeld iterations for the geometric median. At an iterate that
/// coincides with a data point the Vardi-Zhang step is used instead: it stops
/// if that point is optimal and otherwise moves off it.
pub(crate) fn weiszfeld(s: &PointSet, start: &[f64]) -> Vec<f64> {
    let diameter = max_pairwise_distance(s).unwrap_or(0.0);
    if diameter == 0.0 {
        return s.point(0).to_vec();
    }
    let tiny = 1e-12 * diameter;
    let dim = start.len();
    let mut x = start.to_vec();
    let mut num = vec![0.0; dim];
    let mut pull = vec![0.0; dim];
    for _ in 0..WEISZFELD_ITERATIONS {
        num.iter_mut().for_each(|v| *v = 0.0);
        pull.iter_mut().for_each(|v| *v = 0.0);
        let mut den = 0.0;
        let mut coincident = 0usize;
        for p in s.iter() {
            let d = euclid(p, &x);
            if d <= tiny {
                coincident += 1;
                continue;
            }
            let w = 1.0 / d;
            den += w;
            for j in 0..dim {
                num[j] += w * p[j];
                pull[j] += w * (p[j] - x[j]);
            }
        }
        if den == 0.0 {
            break;
        }
        let t: Vec<f64> = num.iter().map(|v| v / den).collect();
        if coincident == 0 {
            x = t;
            continue;
        }
        let strength = pull.iter().map(|v| v * v).sum::<f64>().sqrt();
        let eta = coincident as f64;
        if strength <= eta {
            break;
        }
        let keep = eta / strength;
        for j in 0..dim {
            x[j] = (1.0 - keep) * t[j] + keep * x[j];
        }
    }
    x
}
