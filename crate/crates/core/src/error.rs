//! Error types shared across the pipeline.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Structured resource-limit failure from the Groebner engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResourceError {
    #[error("basis size limit exceeded ({reached} > {limit})")]
    BasisSize { limit: usize, reached: usize },
    #[error("total degree limit exceeded ({reached} > {limit})")]
    Degree { limit: usize, reached: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("zero input: {0}")]
    ZeroInput(String),
    #[error("the derivation has r = 0; the x-adic valuation of r must be finite")]
    ZeroCoefficientR,
    #[error("denominator vanishes at x = 0: {0}")]
    NonLocal(String),
    #[error("base polynomial must have degree at least 2, got {0}")]
    DegreeTooSmall(usize),
    #[error("reduction modulo x is constant; no fiber cover exists")]
    ConstantReduction,
    #[error("component ({i}, {j}) is vacuous: the fiber polynomial has degree {d} < 2")]
    VacuousComponent { i: u8, j: u8, d: usize },
    #[error("value {0} is a branch value; a regular value is required")]
    RegularValueRequired(String),
    #[error("r is a unit; the action admits a global slice and no pole data exists")]
    UnitR,
    #[error("normalization failed after trying {tried} shear pairs")]
    NormalizationFailed { tried: usize },
    #[error(transparent)]
    Resource(#[from] ResourceError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
