//! Seeded synthetic instances.

use rand::Rng;
use rand_distr::{Distribution, Normal, StandardNormal};

use hybridk::rng::rng_from;
use hybridk::PointSet;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq)]
pub enum Dist {
    /// Uniform in `[0, side]^d`.
    Uniform { side: f64 },
    /// Isotropic Gaussians of deviation `spread` around `components` centers
    /// drawn uniformly in `[0, side]^d`.
    GaussianMixture { components: usize, spread: f64, side: f64 },
    /// Points uniform in balls of radius `blob_radius`, plus `stragglers`
    /// points at distance `blob_radius + U(0, gap)` from a blob center.
    /// Blob centers are given or drawn uniformly in `[0, side]^d`.
    TwoScale {
        blobs: BlobCenters,
        blob_radius: f64,
        stragglers: usize,
        gap: f64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum BlobCenters {
    Random { count: usize, side: f64 },
    Fixed(Vec<Vec<f64>>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub n: usize,
    pub d: usize,
    pub dist: Dist,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

impl GenSpec {
    pub fn validate(&self) -> CliResult<()> {
        if self.n == 0 || self.d == 0 {
            return Err(usage("n and d must be positive"));
        }
        let positive = |v: f64, what: &str| {
            if v > 0.0 && v.is_finite() {
                Ok(())
            } else {
                Err(usage(format!("{what} must be positive, got {v}")))
            }
        };
        match &self.dist {
            Dist::Uniform { side } => positive(*side, "side"),
            Dist::GaussianMixture {
                components,
                spread,
                side,
            } => {
                if *components == 0 {
                    return Err(usage("a mixture needs at least one component"));
                }
                positive(*spread, "spread")?;
                positive(*side, "side")
            }
            Dist::TwoScale {
                blobs,
                blob_radius,
                stragglers,
                gap,
            } => {
                positive(*blob_radius, "blob radius")?;
                if !(*gap >= 0.0 && gap.is_finite()) {
                    return Err(usage(format!("gap must be non-negative, got {gap}")));
                }
                if *stragglers > self.n {
                    return Err(usage("more stragglers than points"));
                }
                match blobs {
                    BlobCenters::Random { count, side } => {
                        if *count == 0 {
                            return Err(usage("need at least one blob"));
                        }
                        positive(*side, "side")
                    }
                    BlobCenters::Fixed(c) => {
                        if c.is_empty() || c.iter().any(|p| p.len() != self.d) {
                            return Err(usage(format!("blob centers must be non-empty {}-vectors", self.d)));
                        }
                        Ok(())
                    }
                }
            }
        }
    }
}

fn unit_direction<R: Rng>(rng: &mut R, d: usize) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..d).map(|_| StandardNormal.sample(rng)).collect();
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-12 {
            return v.into_iter().map(|x| x / norm).collect();
        }
    }
}

/// Deterministic instance for `(spec, seed)`.
pub fn generate(spec: &GenSpec, seed: u64) -> CliResult<PointSet> {
    spec.validate()?;
    let mut rng = rng_from(seed);
    let (n, d) = (spec.n, spec.d);
    let mut out = PointSet::with_capacity(d, n);
    let mut row = vec![0.0; d];
    match &spec.dist {
        Dist::Uniform { side } => {
            for _ in 0..n {
                row.iter_mut().for_each(|x| *x = rng.gen_range(0.0..*side));
                out.push(&row)?;
            }
        }
        Dist::GaussianMixture {
            components,
            spread,
            side,
        } => {
            let centers: Vec<Vec<f64>> = (0..*components)
                .map(|_| (0..d).map(|_| rng.gen_range(0.0..*side)).collect())
                .collect();
            let noise = Normal::new(0.0, *spread).map_err(|e| usage(e.to_string()))?;
            for _ in 0..n {
                let c = &centers[rng.gen_range(0..centers.len())];
                for (x, m) in row.iter_mut().zip(c) {
                    *x = m + noise.sample(&mut rng);
                }
                out.push(&row)?;
            }
        }
        Dist::TwoScale {
            blobs,
            blob_radius,
            stragglers,
            gap,
        } => {
            let centers: Vec<Vec<f64>> = match blobs {
                BlobCenters::Fixed(c) => c.clone(),
                BlobCenters::Random { count, side } => (0..*count)
                    .map(|_| (0..d).map(|_| rng.gen_range(0.0..*side)).collect())
                    .collect(),
            };
            for i in 0..n {
                let dense = i < n - stragglers;
                let c = &centers[i % centers.len()];
                let dir = unit_direction(&mut rng, d);
                let dist = if dense {
                    blob_radius * rng.gen::<f64>().powf(1.0 / d as f64)
                } else {
                    blob_radius + gap * rng.gen::<f64>()
                };
                for ((x, m), u) in row.iter_mut().zip(c).zip(&dir) {
                    *x = m + dist * u;
                }
                out.push(&row)?;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_is_deterministic_and_in_box() {
        let spec = GenSpec {
            n: 10,
            d: 2,
            dist: Dist::Uniform { side: 3.0 },
        };
        let a = generate(&spec, 1).unwrap();
        assert_eq!(a, generate(&spec, 1).unwrap());
        assert_ne!(a, generate(&spec, 2).unwrap());
        assert!(a.as_flat().iter().all(|&x| (0.0..3.0).contains(&x)));
    }

    #[test]
    fn mixture_has_n_points() {
        let spec = GenSpec {
            n: 17,
            d: 3,
            dist: Dist::GaussianMixture {
                components: 3,
                spread: 0.5,
                side: 10.0,
            },
        };
        assert_eq!(generate(&spec, 0).unwrap().len(), 17);
    }

    #[test]
    fn two_scale_distances() {
        let spec = GenSpec {
            n: 30,
            d: 2,
            dist: Dist::TwoScale {
                blobs: BlobCenters::Fixed(vec![vec![3.0, 3.0], vec![6.0, 6.0]]),
                blob_radius: 1.0,
                stragglers: 4,
                gap: 0.5,
            },
        };
        let p = generate(&spec, 5).unwrap();
        for (i, x) in p.iter().enumerate() {
            let c = if i % 2 == 0 { [3.0, 3.0] } else { [6.0, 6.0] };
            let dist = hybridk::dist(x, &c).unwrap();
            if i < 26 {
                assert!(dist <= 1.0 + 1e-12);
            } else {
                assert!((1.0 - 1e-12..=1.5 + 1e-12).contains(&dist));
            }
        }
    }

    #[test]
    fn bad_specs_rejected() {
        let bad = |dist: Dist| generate(&GenSpec { n: 5, d: 2, dist }, 0).is_err();
        assert!(bad(Dist::Uniform { side: 0.0 }));
        assert!(bad(Dist::GaussianMixture {
            components: 0,
            spread: 1.0,
            side: 1.0
        }));
        assert!(bad(Dist::TwoScale {
            blobs: BlobCenters::Fixed(vec![vec![1.0]]),
            blob_radius: 1.0,
            stragglers: 0,
            gap: 0.0
        }));
    }
}
