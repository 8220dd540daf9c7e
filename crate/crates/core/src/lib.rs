//! Exact decision procedure for properness of twin-triangular additive group
//! actions on affine 3-space over the discrete valuation ring Q[x] localized
//! at (x).
//!
//! The pipeline models a derivation r*d/dy + p1(y)*d/dz1 + p2(y)*d/dz2,
//! normalizes it by linear shears of the z-coordinates, lifts the generic
//! pair of roots of the fiber polynomials through a Hensel factorization,
//! and decides the properness criterion by radical membership tests in a
//! universal "pair of roots" quotient ring.

pub mod coeff;
pub mod config;
// pub mod criterion;
pub mod derivation;
pub mod error;
pub mod groebner;
pub mod local;
pub mod multipoly;
pub mod normalize;
pub mod pair;
pub mod rational;
// pub mod report;
pub mod unipoly;

pub use coeff::Coeff;
pub use config::PipelineConfig;

pub use derivation::{branch_data, check_free, coaction, invariant, BranchData, TwinDerivation};
pub use error::{Error, ResourceError, Result};
pub use groebner::{buchberger, eliminate, is_unit_ideal, radical_member, GroebnerBasis, GroebnerConfig, Ideal};
pub use local::{LocalElement, TruncSeries, Valuation};
pub use multipoly::{MonomialOrder, MultiPoly};
pub use normalize::{apply_shear, normalize, Shear};
pub use pair::{
    divided_difference, hensel_factorize, invert, lift_root_pair, HenselFactorization,
    PairAlgebra, PairSeries, QuasiInverse,
};
pub use rational::Rational;
pub use unipoly::UniPoly;
