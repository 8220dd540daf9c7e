//! Pipeline configuration with documented defaults.

use serde::{Deserialize, Serialize};

use crate::groebner::GroebnerConfig;

/// Tunable resource bounds and switches for the verdict pipeline.
///
/// Defaults: `max_basis_size` 4096, `max_degree` 128,
/// `shear_search_bound` 200 pairs, `seed` 0, `strict_pole` off.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct PipelineConfig {
    /// Groebner basis size bound; exceeding it aborts with a resource error.
    pub max_basis_size: usize,
    /// Total degree bound inside basis computations.
    pub max_degree: usize,
    /// How many (lambda, mu) shear pairs the normalization search tries.
    pub shear_search_bound: usize,
    /// Seed reported in the output and used by reproducibility suites.
    pub seed: u64,
    /// Require a pole of order at least 2 in the affineness test instead of
    /// at least 1.
    pub strict_pole: bool,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            max_basis_size: 4096,
            max_degree: 128,
            shear_search_bound: 200,
            seed: 0,
            strict_pole: false,
        }
    }
}

impl PipelineConfig {
    pub fn groebner(&self) -> GroebnerConfig {
        GroebnerConfig {
            max_basis_size: self.max_basis_size,
            max_degree: self.max_degree,
        }
    }
}
