//! Dense univariate polynomials over an exact coefficient ring.

use std::fmt;

use num::traits::{Signed, ToPrimitive, Zero};
use num::BigInt;

use crate::coeff::Coeff;
use crate::rational::Rational;

/// Univariate polynomial, coefficients stored lowest degree first.
/// The leading coefficient is nonzero unless the polynomial is zero.
#[derive(Clone, PartialEq, Debug)]
pub struct UniPoly<C: Coeff> {
    var: String,
    coeffs: Vec<C>,
}

impl<C: Coeff> UniPoly<C> {
    pub fn new(var: &str, mut coeffs: Vec<C>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly {
            var: var.to_string(),
            coeffs,
        }
    }

    pub fn zero(var: &str) -> Self {
        UniPoly::new(var, vec![])
    }

    pub fn constant(var: &str, c: C) -> Self {
        UniPoly::new(var, vec![c])
    }

    pub fn one(var: &str) -> Self {
        UniPoly::constant(var, C::one())
    }

    /// The monomial `c * var^k`.
    pub fn monomial(var: &str, c: C, k: usize) -> Self {
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        UniPoly::new(var, coeffs)
    }

    pub fn var_poly(var: &str) -> Self {
        UniPoly::monomial(var, C::one(), 1)
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; zero polynomial reports degree 0 and `is_zero` distinguishes it.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading_coeff(&self) -> C {
        self.coeffs.last().cloned().unwrap_or_else(C::zero)
    }

    fn check_same_var(&self, other: &Self) {
        assert_eq!(
            self.var, other.var,
            "univariate operation on mismatched variables"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same_var(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        UniPoly::new(&self.var, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        UniPoly::new(
            &self.var,
            self.coeffs.iter().map(|c| -c.clone()).collect::<Vec<_>>(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_same_var(other);
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(&self.var);
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(&self.var, coeffs)
    }

    pub fn scale(&self, c: &C) -> Self {
        UniPoly::new(
            &self.var,
            self.coeffs.iter().map(|a| a.clone() * c.clone()).collect::<Vec<_>>(),
        )
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = UniPoly::one(&self.var);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero(&self.var);
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(k, c)| c.clone() * C::embed(&Rational::from(BigInt::from(k as i64 + 1))))
            .collect();
        UniPoly::new(&self.var, coeffs)
    }

    /// Antiderivative with zero constant term.
    pub fn formal_integral(&self) -> Self {
        let mut coeffs = vec![C::zero()];
        for (k, c) in self.coeffs.iter().enumerate() {
            let inv = C::embed(&Rational::from(BigInt::from(k as i64 + 1)))
                .try_inv()
                .expect("integer is invertible in a Q-algebra");
            coeffs.push(c.clone() * inv);
        }
        UniPoly::new(&self.var, coeffs)
    }

    pub fn eval(&self, point: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * point.clone() + c.clone();
        }
        acc
    }

    /// Composition `self(other)`; the result lives in `other`'s variable.
    pub fn compose(&self, other: &Self) -> Self {
        let mut acc = UniPoly::zero(other.var());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(other);
            acc = acc.add(&UniPoly::constant(other.var(), c.clone()));
        }
        acc
    }

    /// Map coefficients into another ring.
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> UniPoly<D> {
        UniPoly::new(&self.var, self.coeffs.iter().map(f).collect())
    }
}

impl UniPoly<Rational> {
    pub fn from_i64(var: &str, coeffs: &[i64]) -> Self {
        UniPoly::new(
            var,
            coeffs
                .iter()
                .map(|&n| Rational::from(BigInt::from(n)))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading_coeff();
        self.scale(&lc.recip())
    }

    /// Euclidean division; divisor must be nonzero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        self.check_same_var(divisor);
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut rem = self.clone();
        let mut quo = UniPoly::zero(&self.var);
        let dlc = divisor.leading_coeff();
        let dd = divisor.degree();
        while !rem.is_zero() && rem.degree() >= dd {
            let k = rem.degree() - dd;
            let c = rem.leading_coeff() / dlc.clone();
            let term = UniPoly::monomial(&self.var, c, k);
            rem = rem.sub(&term.mul(divisor));
            quo = quo.add(&term);
        }
        (quo, rem)
    }

    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        self.check_same_var(other);
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> crate::error::Result<Self> {
        if self.is_zero() {
            return Err(crate::error::Error::ZeroInput(
                "squarefree part of the zero polynomial".into(),
            ));
        }
        let g = self.gcd(&self.derivative());
        Ok(self.div_rem(&g).0.monic())
    }

    /// Removes from `self` every irreducible factor shared with `other`.
    pub fn coprime_part(&self, other: &Self) -> Self {
        assert!(!self.is_zero());
        let mut h = self.clone();
        loop {
            let g = h.gcd(other);
            if g.is_constant() {
                return h.monic();
            }
            h = h.div_rem(&g).0;
        }
    }

    /// All rational roots with multiplicity forgotten, in ascending order.
    ///
    /// Returns `None` when the constant or leading coefficient is too large
    /// to enumerate divisors for.
    pub fn rational_roots(&self) -> Option<Vec<Rational>> {
        if self.is_zero() {
            return Some(vec![]);
        }
        let mut p = self.clone();
        let mut roots = vec![];
        while p.coeff(0).is_zero() && p.degree() > 0 {
            roots.push(Rational::zero());
            p = UniPoly::new(&self.var, p.coeffs[1..].to_vec());
        }
        if p.degree() == 0 {
            roots.sort();
            roots.dedup();
            return Some(roots);
        }
        // Clear denominators to an integer polynomial.
        let mut denom_lcm = BigInt::from(1);
        for c in p.coeffs() {
            denom_lcm = num::integer::lcm(denom_lcm, c.denom().clone());
        }
        let ints: Vec<BigInt> = p
            .coeffs()
            .iter()
            .map(|c| (c * Rational::from(denom_lcm.clone())).to_integer())
            .collect();
        let a0 = ints[0].abs();
        let an = ints.last().unwrap().abs();
        let d0 = divisors(&a0)?;
        let dn = divisors(&an)?;
        for num in &d0 {
            for den in &dn {
                for sign in [1i64, -1] {
                    let cand = Rational::new(num * BigInt::from(sign), den.clone());
                    if self.eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
        roots.sort();
        roots.dedup();
        Some(roots)
    }
}

/// Positive divisors by trial division; bails out on large inputs.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    if n.is_zero() {
        return Some(vec![BigInt::from(1)]);
    }
    let nu = n.to_u64()?;
    if nu > 1_000_000_000_000 {
        return None;
    }
    let mut ds = vec![];
    let mut k = 1u64;
    while k * k <= nu {
        if nu % k == 0 {
            ds.push(BigInt::from(k));
            ds.push(BigInt::from(nu / k));
        }
        k += 1;
    }
    ds.sort();
    ds.dedup();
    Some(ds)
}

impl<C: Coeff> fmt::Display for UniPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = c.to_string();
            let needs_paren = cs.contains('+') || cs.contains('-') || cs.contains('/');
            if k == 0 {
                if needs_paren {
                    write!(f, "({})", cs)?;
                } else {
                    write!(f, "{}", cs)?;
                }
            } else {
                if cs == "1" {
                } else if needs_paren {
                    write!(f, "({})*", cs)?;
                } else {
                    write!(f, "{}*", cs)?;
                }
                if k == 1 {
                    write!(f, "{}", self.var)?;
                } else {
                    write!(f, "{}^{}", self.var, k)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rint};

    fn y(coeffs: &[i64]) -> UniPoly<Rational> {
        UniPoly::from_i64("y", coeffs)
    }

    #[test]
    fn gcd_common_factor() {
        // gcd(y^2 - 1, y - 1) = y - 1
        assert_eq!(y(&[-1, 0, 1]).gcd(&y(&[-1, 1])), y(&[-1, 1]));
    }

    #[test]
    fn gcd_coprime() {
        // gcd(2y, 1 + y^2) = 1
        assert_eq!(y(&[0, 2]).gcd(&y(&[1, 0, 1])), y(&[1]));
    }

    #[test]
    fn gcd_euclidean_chain() {
        // gcd(y^3 - y, y^2 - 1) = y^2 - 1
        assert_eq!(y(&[0, -1, 0, 1]).gcd(&y(&[-1, 0, 1])), y(&[-1, 0, 1]));
    }

    #[test]
    fn gcd_zero_conventions() {
        assert!(y(&[]).gcd(&y(&[])).is_zero());
        assert_eq!(y(&[]).gcd(&y(&[0, 2])), y(&[0, 1]));
        assert_eq!(y(&[7]).gcd(&y(&[])), y(&[1]));
    }

    #[test]
    fn squarefree_examples() {
        // 4y^2 -> y
        assert_eq!(y(&[0, 0, 4]).squarefree_part().unwrap(), y(&[0, 1]));
        // y^2 - 1 already squarefree
        assert_eq!(y(&[-1, 0, 1]).squarefree_part().unwrap(), y(&[-1, 0, 1]));
        // t^2(t - 1) -> t(t - 1) = t^2 - t
        let t = |c: &[i64]| UniPoly::from_i64("t", c);
        assert_eq!(t(&[0, 0, -1, 1]).squarefree_part().unwrap(), t(&[0, -1, 1]));
        assert!(t(&[]).squarefree_part().is_err());
    }

    #[test]
    fn integral_examples() {
        // 2y -> y^2
        assert_eq!(y(&[0, 2]).formal_integral(), y(&[0, 0, 1]));
        // 1 + y^4 -> y + y^5/5  (even exponent family, m = 2)
        let p = y(&[1, 0, 0, 0, 1]).formal_integral();
        assert_eq!(
            p,
            UniPoly::new("y", vec![rint(0), rint(1), rint(0), rint(0), rint(0), rat(1, 5)])
        );
        // 0 -> 0
        assert!(y(&[]).formal_integral().is_zero());
    }

    #[test]
    fn derivative_inverts_integral() {
        let p = y(&[3, -2, 0, 5]);
        assert_eq!(p.formal_integral().derivative(), p);
    }

    #[test]
    fn div_rem_and_divides() {
        let f = y(&[-1, 0, 1]);
        let g = y(&[-1, 1]);
        let (q, r) = f.div_rem(&g);
        assert!(r.is_zero());
        assert_eq!(q, y(&[1, 1]));
        assert!(g.divides(&f));
        assert!(!y(&[1, 1, 1]).divides(&f));
    }

    #[test]
    fn rational_roots_small() {
        // (y - 2)(2y + 1) = 2y^2 - 3y - 2
        let f = y(&[-2, -3, 2]);
        assert_eq!(f.rational_roots().unwrap(), vec![rat(-1, 2), rint(2)]);
        // y^2 + 1 has none
        assert!(y(&[1, 0, 1]).rational_roots().unwrap().is_empty());
        // y^3: root 0
        assert_eq!(y(&[0, 0, 0, 1]).rational_roots().unwrap(), vec![rint(0)]);
    }

    #[test]
    fn coprime_part_strips_shared_factors() {
        // f = y^2 (y-1), other = y -> y - 1
        let f = y(&[0, 0, -1, 1]);
        assert_eq!(f.coprime_part(&y(&[0, 1])), y(&[-1, 1]));
    }
}
