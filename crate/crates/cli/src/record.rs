use serde::{Deserialize, Serialize};

use hybridk::{assign_clusters, PointSet, Power};

use crate::error::CliResult;

/// One result line. Optional fields are omitted when absent.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub centers: Vec<Vec<f64>>,
    pub k: usize,
    pub r: f64,
    pub z: u32,
    pub eps: Option<f64>,
    pub radius_factor: f64,
    pub cost: f64,
    pub covered_count: usize,
    pub seed: u64,
    pub wall_time_ms: f64,
    pub algorithm: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower_bound: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cluster_sizes: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cell: Option<BenchCell>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_cost: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Sweep coordinates of a bench row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchCell {
    pub index: usize,
    pub n: usize,
    pub d: usize,
    pub instance_seed: u64,
}

impl ResultRecord {
    /// Record for `centers` on `points`, filling cost, coverage and cluster
    /// sizes from an exact evaluation at radius `radius_factor * r`.
    #[allow(clippy::too_many_arguments)]
    pub fn evaluated(
        points: &PointSet,
        centers: &PointSet,
        k: usize,
        r: f64,
        z: Power,
        radius_factor: f64,
        algorithm: &str,
        seed: u64,
    ) -> CliResult<Self> {
        let assignment = assign_clusters(points, centers)?;
        let radius = radius_factor * r;
        let cost = hybridk::cost(points, centers, radius, z)?;
        let sizes = assignment.clusters(centers.len()).iter().map(Vec::len).collect();
        Ok(ResultRecord {
            centers: centers.to_rows(),
            k,
            r,
            z: z.exponent(),
            eps: None,
            radius_factor,
            cost,
            covered_count: assignment.covered_count(radius),
            seed,
            wall_time_ms: 0.0,
            algorithm: algorithm.to_string(),
            source: None,
            lower_bound: None,
            cluster_sizes: Some(sizes),
            cell: None,
            oracle_cost: None,
            error: None,
        })
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    pub fn to_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("records serialize")
    }

    /// The record with its timing zeroed, for reproducibility comparisons.
    pub fn without_time(&self) -> Self {
        ResultRecord {
            wall_time_ms: 0.0,
            ..self.clone()
        }
    }
}
