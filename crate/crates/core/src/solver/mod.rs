//! Recursive candidate search and the full pipeline built on it.

mod candidates;
mod config;
mod pipeline;
mod sample_median;
mod search;

pub use candidates::build_candidate_set;
pub use config::{AlgoConfig, Mode, SearchParams};
pub use pipeline::{full_pipeline, CandidateSource, PipelineOutcome};
pub use sample_median::{approx_solution_on_sample, approx_solution_on_sample_with, DEFAULT_POOL_CAP};
pub use search::{hybrid_clustering, SearchState};
