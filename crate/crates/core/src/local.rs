//! The discrete valuation ring of rational-coefficient polynomials in x
//! localized at (x), with x-adic valuation and truncated series expansion.

use std::fmt;

use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::unipoly::UniPoly;

pub const X: &str = "x";

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl Valuation {
    pub fn finite(&self) -> Option<u64> {
        match self {
            Valuation::Finite(k) => Some(*k),
            Valuation::Infinite => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(k) => write!(f, "{}", k),
            Valuation::Infinite => write!(f, "infinity"),
        }
    }
}

/// Element of Q[x] localized at (x): a reduced fraction whose denominator
/// does not vanish at x = 0. The denominator is kept monic.
#[derive(Clone, PartialEq, Debug)]
pub struct LocalElement {
    num: UniPoly<Rational>,
    den: UniPoly<Rational>,
}

impl LocalElement {
    pub fn new(num: UniPoly<Rational>, den: UniPoly<Rational>) -> Result<Self> {
        assert_eq!(num.var(), X);
        assert_eq!(den.var(), X);
        if den.is_zero() {
            return Err(Error::ZeroInput("zero denominator".into()));
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        if den.coeff(0).is_zero() {
            return Err(Error::NonLocal(format!("{}", den)));
        }
        let lc = den.leading_coeff();
        num = num.scale(&lc.recip());
        den = den.scale(&lc.recip());
        Ok(LocalElement { num, den })
    }

    pub fn from_poly(num: UniPoly<Rational>) -> Self {
        LocalElement {
            num,
            den: UniPoly::one(X),
        }
    }

    pub fn from_rational(q: Rational) -> Self {
        LocalElement::from_poly(UniPoly::constant(X, q))
    }

    pub fn from_i64(n: i64) -> Self {
        LocalElement::from_rational(crate::rational::rint(n))
    }

    /// The monomial x^k.
    pub fn x_power(k: usize) -> Self {
        LocalElement::from_poly(UniPoly::monomial(X, Rational::from(num::BigInt::from(1)), k))
    }

    pub fn zero() -> Self {
        LocalElement::from_poly(UniPoly::zero(X))
    }

    pub fn one() -> Self {
        LocalElement::from_poly(UniPoly::one(X))
    }

    pub fn numerator(&self) -> &UniPoly<Rational> {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly<Rational> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        LocalElement::new(num, den).expect("sum of local elements is local")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LocalElement {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let num = self.num.mul(&other.num);
        let den = self.den.mul(&other.den);
        LocalElement::new(num, den).expect("product of local elements is local")
    }

    /// Division inside the local ring; fails when the quotient acquires a
    /// pole at x = 0.
    pub fn try_div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::ZeroInput("division by zero".into()));
        }
        LocalElement::new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    /// Largest k with x^k dividing the element; infinite for zero.
    pub fn valuation(&self) -> Valuation {
        if self.is_zero() {
            return Valuation::Infinite;
        }
        let mut k = 0u64;
        while self.num.coeff(k as usize).is_zero() {
            k += 1;
        }
        Valuation::Finite(k)
    }

    pub fn is_unit(&self) -> bool {
        self.valuation() == Valuation::Finite(0)
    }

    /// Write the element as x^n * u with u a unit.
    pub fn unit_factor(&self) -> Result<(u64, LocalElement)> {
        if self.is_zero() {
            return Err(Error::ZeroInput("unit factorization of zero".into()));
        }
        let n = self.valuation().finite().unwrap();
        let shifted = UniPoly::new(X, self.num.coeffs()[n as usize..].to_vec());
        Ok((
            n,
            LocalElement::new(shifted, self.den.clone()).expect("unit part is local"),
        ))
    }

    /// Power series expansion truncated below x^N.
    pub fn expand(&self, n: usize) -> TruncSeries {
        let num = TruncSeries::from_poly(&self.num, n);
        let den = TruncSeries::from_poly(&self.den, n);
        num.mul(&den.inv().expect("denominator is a unit at x = 0"))
    }

    /// Residue class modulo x.
    pub fn reduce_mod_x(&self) -> Rational {
        self.num.coeff(0) / self.den.coeff(0)
    }
}

impl fmt::Display for LocalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            let ns = self.num.to_string();
            if ns.contains('+') || ns.contains(" - ") {
                write!(f, "({})/({})", self.num, self.den)
            } else {
                write!(f, "{}/({})", self.num, self.den)
            }
        }
    }
}

impl std::ops::Add for LocalElement {
    type Output = LocalElement;
    fn add(self, other: LocalElement) -> LocalElement {
        LocalElement::add(&self, &other)
    }
}

impl std::ops::Sub for LocalElement {
    type Output = LocalElement;
    fn sub(self, other: LocalElement) -> LocalElement {
        LocalElement::sub(&self, &other)
    }
}

impl std::ops::Mul for LocalElement {
    type Output = LocalElement;
    fn mul(self, other: LocalElement) -> LocalElement {
        LocalElement::mul(&self, &other)
    }
}

impl std::ops::Neg for LocalElement {
    type Output = LocalElement;
    fn neg(self) -> LocalElement {
        LocalElement::neg(&self)
    }
}

impl Zero for LocalElement {
    fn zero() -> Self {
        LocalElement::from_poly(UniPoly::zero(X))
    }
    fn is_zero(&self) -> bool {
        LocalElement::is_zero(self)
    }
}

impl One for LocalElement {
    fn one() -> Self {
        LocalElement::from_poly(UniPoly::one(X))
    }
}

impl crate::coeff::Coeff for LocalElement {
    fn try_inv(&self) -> Option<Self> {
        if self.is_unit() {
            Some(
                LocalElement::new(self.den.clone(), self.num.clone())
                    .expect("inverse of a unit is local"),
            )
        } else {
            None
        }
    }
    fn embed(q: &Rational) -> Self {
        LocalElement::from_rational(q.clone())
    }
}

/// Truncated power series in x over Q: all arithmetic is valid modulo x^N
/// where N is the (exclusive) precision.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncSeries {
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        TruncSeries { coeffs }
    }

    pub fn zero(prec: usize) -> Self {
        TruncSeries {
            coeffs: vec![Rational::zero(); prec],
        }
    }

    pub fn from_poly(p: &UniPoly<Rational>, prec: usize) -> Self {
        let coeffs = (0..prec).map(|k| p.coeff(k)).collect();
        TruncSeries { coeffs }
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn common_prec(&self, other: &Self) -> usize {
        self.precision().min(other.precision())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.common_prec(other);
        TruncSeries {
            coeffs: (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.common_prec(other);
        TruncSeries {
            coeffs: (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.common_prec(other);
        let mut coeffs = vec![Rational::zero(); n];
        for i in 0..n {
            if self.coeff(i).is_zero() {
                continue;
            }
            for j in 0..n - i {
                coeffs[i + j] += self.coeff(i) * other.coeff(j);
            }
        }
        TruncSeries { coeffs }
    }

    /// Multiplicative inverse; requires a unit constant term.
    pub fn inv(&self) -> Option<Self> {
        let c0 = self.coeff(0);
        if c0.is_zero() {
            return None;
        }
        let n = self.precision();
        let mut coeffs = vec![Rational::zero(); n];
        let c0_inv = c0.recip();
        coeffs[0] = c0_inv.clone();
        for k in 1..n {
            let mut acc = Rational::zero();
            for j in 0..k {
                acc += self.coeff(k - j) * coeffs[j].clone();
            }
            coeffs[k] = -acc * c0_inv.clone();
        }
        Some(TruncSeries { coeffs })
    }

    pub fn truncate(&self, prec: usize) -> Self {
        TruncSeries {
            coeffs: (0..prec).map(|k| self.coeff(k)).collect(),
        }
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = UniPoly::new(X, self.coeffs.clone());
        write!(f, "{} + O(x^{})", p, self.precision())
    }
}
