//! Arbitrary-precision rational scalars.
//!
//! All coefficient arithmetic in the crate is exact; `Rational` is the
//! reduced-fraction big rational from the `num` stack (stored in lowest
//! terms with positive denominator).

use num::BigInt;

pub type Rational = num::BigRational;

/// Shorthand for a rational from an integer pair.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for an integer rational.
pub fn rint(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}
