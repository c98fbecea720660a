//! Hybrid k-clustering: place `k` closed balls of radius `r` in R^d so that the
//! summed distance from uncovered points to their nearest ball is minimal.
//!
//! The objective interpolates between k-median (`r = 0`) and k-center (zero
//! cost). This crate provides:
//!
//! * [`geometry`]: exact primitives (distances, the thresholded cost, cluster
//!   assignment, grid candidate generation);
//! * [`oracle`]: brute-force solvers that serve as ground truth at desk scale;
//! * [`preprocess`]: regime detection (k-center-like, k-median-like) and the
//!   aspect-ratio discretization with its component-budget dynamic program;
//! * [`solver`]: the recursive candidate-set search and the full
//!   `(1+eps, 1+eps)` bicriteria pipeline.
//!
//! With the `parallel` feature (on by default) the data-parallel loops run on
//! rayon. Without it, or with [`Execution::Sequential`], the same loops run on
//! the calling thread and produce bit-identical results.

pub mod error;
pub mod geometry;
pub mod oracle;
pub mod par;
pub mod preprocess;
pub mod rng;
pub mod solver;

pub use error::{HybridError, Result};
pub use geometry::{
    assign_clusters, cost, dist, dist_r, grid_points, max_pairwise_distance, Assignment, BoundingBox,
    GridOffset, Instance, Point, PointSet, Power, Solution,
};
pub use par::Execution;
pub use solver::{full_pipeline, hybrid_clustering, AlgoConfig, Mode, PipelineOutcome, SearchState};
