//! Coefficient ring abstraction shared by the polynomial types.
//!
//! Two rings implement it: exact rationals and elements of the localization
//! of Q[x] at (x). Inversion is partial because the local ring is not a
//! field.

use std::fmt;
use std::ops::{Neg, Sub};

use num::traits::{One, Zero};

use crate::rational::Rational;

pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
{
    /// Multiplicative inverse when the element is a unit of the ring.
    fn try_inv(&self) -> Option<Self>;
    /// Canonical image of a rational scalar.
    fn embed(q: &Rational) -> Self;
}

impl Coeff for Rational {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
    fn embed(q: &Rational) -> Self {
        q.clone()
    }
}
