//! Sparse multivariate polynomials over an exact coefficient ring.
//!
//! Variables are an explicit ordered list; exponent vectors are compared
//! against that order (first variable most significant for lex). Graded
//! reverse lexicographic is the default order, lexicographic is used for
//! elimination.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::integer::{gcd, lcm};
use num::traits::{One, Signed, Zero};
use num::BigInt;

use crate::coeff::Coeff;
use crate::rational::Rational;
use crate::unipoly::UniPoly;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => {
                for (x, y) in a.iter().zip(b.iter()) {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::GrevLex => {
                let da: u64 = a.iter().map(|&e| e as u64).sum();
                let db: u64 = b.iter().map(|&e| e as u64).sum();
                match da.cmp(&db) {
                    Ordering::Equal => {}
                    other => return other,
                }
                // Ties: smaller exponent in the last differing variable wins.
                for (x, y) in a.iter().zip(b.iter()).rev() {
                    match x.cmp(y) {
                        Ordering::Equal => continue,
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// Sparse multivariate polynomial. No zero coefficients are stored and every
/// exponent vector has the length of the variable list.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly<C: Coeff> {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Coeff> MultiPoly<C> {
    pub fn zero(vars: &[&str]) -> Self {
        MultiPoly {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: C) -> Self {
        let mut p = MultiPoly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    pub fn one(vars: &[&str]) -> Self {
        MultiPoly::constant(vars, C::one())
    }

    pub fn var(vars: &[&str], name: &str) -> Self {
        let mut p = MultiPoly::zero(vars);
        let i = p.var_index(name).expect("variable not in list");
        let mut exp = vec![0; p.vars.len()];
        exp[i] = 1;
        p.terms.insert(exp, C::one());
        p
    }

    pub fn monomial(vars: &[&str], exps: &[u32], c: C) -> Self {
        let mut p = MultiPoly::zero(vars);
        assert_eq!(exps.len(), p.vars.len());
        if !c.is_zero() {
            p.terms.insert(exps.to_vec(), c);
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_value(&self) -> Option<C> {
        if self.is_zero() {
            return Some(C::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, name: &str) -> u32 {
        match self.var_index(name) {
            None => 0,
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
        }
    }

    fn insert_term(&mut self, exp: Vec<u32>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(existing) => {
                let sum = existing.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    /// Re-express over a variable list extending the current one.
    pub fn with_vars(&self, vars: &[&str]) -> Self {
        let target: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let map: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| target.iter().position(|w| w == v))
            .collect();
        let mut out = MultiPoly {
            vars: target,
            terms: BTreeMap::new(),
        };
        for (exp, c) in &self.terms {
            let mut new_exp = vec![0u32; out.vars.len()];
            for (i, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => new_exp[j] = e,
                    None => panic!("with_vars drops variable {} with nonzero exponent", self.vars[i]),
                }
            }
            out.insert_term(new_exp, c.clone());
        }
        out
    }

    fn union_vars(&self, other: &Self) -> Vec<String> {
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let union = self.union_vars(other);
        let refs: Vec<&str> = union.iter().map(|s| s.as_str()).collect();
        (self.with_vars(&refs), other.with_vars(&refs))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = self.aligned(other);
        for (exp, c) in b.terms {
            a.insert_term(exp, c);
        }
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.aligned(other);
        let mut out = MultiPoly {
            vars: a.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let exp: Vec<u32> = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                out.insert_term(exp, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return MultiPoly {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        let mut out = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, a) in &self.terms {
            out.insert_term(e.clone(), a.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let refs: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let mut acc = MultiPoly::one(&refs);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self, name: &str) -> Self {
        let i = match self.var_index(name) {
            Some(i) => i,
            None => {
                return MultiPoly {
                    vars: self.vars.clone(),
                    terms: BTreeMap::new(),
                }
            }
        };
        let mut out = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut exp = e.clone();
            exp[i] -= 1;
            let factor = C::embed(&Rational::from(BigInt::from(e[i] as i64)));
            out.insert_term(exp, c.clone() * factor);
        }
        out
    }

    /// Simultaneous substitution of polynomials for variables.
    pub fn substitute_many(&self, images: &[(&str, &MultiPoly<C>)]) -> Self {
        let mut out: Option<MultiPoly<C>> = None;
        let idx: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| images.iter().position(|(name, _)| name == v))
            .collect();
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant(
                &self.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
                c.clone(),
            );
            for (i, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                match idx[i] {
                    Some(j) => term = term.mul(&images[j].1.pow(exp)),
                    None => {
                        let v = MultiPoly::var(
                            &self.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
                            &self.vars[i],
                        );
                        term = term.mul(&v.pow(exp));
                    }
                }
            }
            out = Some(match out {
                None => term,
                Some(acc) => acc.add(&term),
            });
        }
        out.unwrap_or_else(|| MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        })
    }

    pub fn substitute(&self, name: &str, image: &MultiPoly<C>) -> Self {
        self.substitute_many(&[(name, image)])
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MultiPoly<D> {
        let mut out = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            out.insert_term(e.clone(), f(c));
        }
        out
    }

    /// Coefficient of `name^k`, as a polynomial in the same variable list.
    pub fn coeff_of(&self, name: &str, k: u32) -> Self {
        let i = self.var_index(name).expect("variable not in list");
        let mut out = MultiPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            if e[i] == k {
                let mut exp = e.clone();
                exp[i] = 0;
                out.insert_term(exp, c.clone());
            }
        }
        out
    }

    /// Leading coefficient as a polynomial, with respect to one variable.
    pub fn leading_coeff_in(&self, name: &str) -> Self {
        self.coeff_of(name, self.degree_in(name))
    }

    /// Division with remainder with respect to one variable, requiring the
    /// divisor's leading coefficient in that variable to be an invertible
    /// constant.
    pub fn divrem_in_var(&self, divisor: &Self, name: &str) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let (mut rem, div) = self.aligned(divisor);
        let dd = div.degree_in(name);
        let lc = div
            .leading_coeff_in(name)
            .constant_value()
            .expect("divisor leading coefficient must be constant");
        let lc_inv = lc.try_inv().expect("divisor leading coefficient must be a unit");
        let vars_own = rem.vars.clone();
        let vars_ref: Vec<&str> = vars_own.iter().map(|s| s.as_str()).collect();
        let mut quo = MultiPoly::zero(&vars_ref);
        let vi = rem.var_index(name).expect("variable not in list");
        loop {
            let rd = rem.degree_in(name);
            if rem.is_zero() || rd < dd {
                return (quo, rem);
            }
            let lead = rem.coeff_of(name, rd).scale(&lc_inv);
            let mut shift_exp = vec![0u32; rem.vars.len()];
            shift_exp[vi] = rd - dd;
            let shift = MultiPoly::monomial(&vars_ref, &shift_exp, C::one());
            let t = lead.mul(&shift);
            quo = quo.add(&t);
            rem = rem.sub(&t.mul(&div));
            debug_assert!(rem.degree_in(name) < rd || rem.is_zero());
        }
    }

    /// Evaluate by substituting constants for every variable.
    pub fn eval_all(&self, point: &[(&str, C)]) -> C {
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let val = point
                    .iter()
                    .find(|(n, _)| *n == self.vars[i])
                    .map(|(_, v)| v.clone())
                    .expect("evaluation point missing a variable");
                for _ in 0..exp {
                    t = t * val.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// View as univariate when only `name` occurs with positive exponent.
    pub fn to_unipoly(&self, name: &str) -> Option<UniPoly<C>> {
        let i = self.var_index(name)?;
        let mut coeffs = vec![C::zero(); self.degree_in(name) as usize + 1];
        for (e, c) in &self.terms {
            for (j, &exp) in e.iter().enumerate() {
                if j != i && exp != 0 {
                    return None;
                }
            }
            coeffs[e[i] as usize] = c.clone();
        }
        Some(UniPoly::new(name, coeffs))
    }

    pub fn from_unipoly(up: &UniPoly<C>, vars: &[&str]) -> Self {
        let mut out = MultiPoly::zero(vars);
        let i = out.var_index(up.var()).expect("variable not in list");
        for (k, c) in up.coeffs().iter().enumerate() {
            let mut exp = vec![0u32; out.vars.len()];
            exp[i] = k as u32;
            out.insert_term(exp, c.clone());
        }
        out
    }
}

impl MultiPoly<Rational> {
    /// Leading term under a monomial order.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(Vec<u32>, Rational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
            .map(|(e, c)| (e.clone(), c.clone()))
    }

    /// Rational content: gcd of numerators over lcm of denominators, signed
    /// to make the grevlex leading coefficient positive.
    pub fn content(&self) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            num = gcd(num, c.numer().abs());
            den = lcm(den, c.denom().clone());
        }
        let mut content = Rational::new(num, den);
        if let Some((_, lc)) = self.leading_term(MonomialOrder::GrevLex) {
            if lc.is_negative() {
                content = -content;
            }
        }
        content
    }

    /// Divide by the content; result has coprime integer coefficients and a
    /// positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.content().recip())
    }

    /// Exact multivariate division; `None` when not exact.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "exact division by zero");
        let (mut rem, div) = self.aligned(divisor);
        let vars_own = rem.vars.clone();
        let vars_ref: Vec<&str> = vars_own.iter().map(|s| s.as_str()).collect();
        let mut quo = MultiPoly::zero(&vars_ref);
        let (dexp, dc) = div.leading_term(MonomialOrder::GrevLex)?;
        while !rem.is_zero() {
            let (rexp, rc) = rem.leading_term(MonomialOrder::GrevLex).unwrap();
            let mut qexp = vec![0u32; rexp.len()];
            for k in 0..rexp.len() {
                if rexp[k] < dexp[k] {
                    return None;
                }
                qexp[k] = rexp[k] - dexp[k];
            }
            let t = MultiPoly::monomial(&vars_ref, &qexp, rc / dc.clone());
            quo = quo.add(&t);
            rem = rem.sub(&t.mul(&div));
        }
        Some(quo)
    }

    /// Pseudo-remainder with respect to `name`: lc(g)^(deg f - deg g + 1) f = q g + r.
    pub fn prem(&self, divisor: &Self, name: &str) -> Self {
        let (mut rem, div) = self.aligned(divisor);
        let dd = div.degree_in(name);
        let fd = rem.degree_in(name);
        if rem.is_zero() || fd < dd {
            return rem;
        }
        let lc_g = div.leading_coeff_in(name);
        let vi = rem.var_index(name).unwrap();
        let vars_own = rem.vars.clone();
        let vars_ref: Vec<&str> = vars_own.iter().map(|s| s.as_str()).collect();
        let mut steps = fd - dd + 1;
        loop {
            let rd = rem.degree_in(name);
            if rem.is_zero() || rd < dd {
                break;
            }
            let lead = rem.coeff_of(name, rd);
            let mut shift_exp = vec![0u32; rem.vars.len()];
            shift_exp[vi] = rd - dd;
            let shift = MultiPoly::monomial(&vars_ref, &shift_exp, Rational::one());
            rem = rem.mul(&lc_g).sub(&lead.mul(&shift).mul(&div));
            steps -= 1;
        }
        // Match the exact power lc^(fd-dd+1) regardless of degree drops.
        for _ in 0..steps {
            rem = rem.mul(&lc_g);
        }
        rem
    }

    /// Resultant with respect to `name`, eliminating it, computed by the
    /// subresultant pseudo-remainder sequence.
    pub fn resultant(&self, other: &Self, name: &str) -> crate::error::Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(crate::error::Error::ZeroInput(
                "resultant of two zero polynomials".into(),
            ));
        }
        let (a0, b0) = self.aligned(other);
        let vars_own = a0.vars.clone();
        let vars_ref: Vec<&str> = vars_own.iter().map(|s| s.as_str()).collect();
        if a0.is_zero() || b0.is_zero() {
            return Ok(MultiPoly::zero(&vars_ref));
        }
        let mut a = a0;
        let mut b = b0;
        let mut sign = 1i64;
        if a.degree_in(name) < b.degree_in(name) {
            std::mem::swap(&mut a, &mut b);
            if a.degree_in(name) % 2 == 1 && b.degree_in(name) % 2 == 1 {
                sign = -sign;
            }
        }
        if b.degree_in(name) == 0 {
            // Res(a, c) = c^deg(a)
            let res = b.pow(a.degree_in(name));
            return Ok(if sign < 0 { res.neg() } else { res });
        }
        let mut g = MultiPoly::one(&vars_ref);
        let mut h = MultiPoly::one(&vars_ref);
        loop {
            let da = a.degree_in(name);
            let db = b.degree_in(name);
            let delta = da - db;
            if da % 2 == 1 && db % 2 == 1 {
                sign = -sign;
            }
            let r = a.prem(&b, name);
            let denom = g.mul(&h.pow(delta));
            a = b;
            let bnew = r
                .exact_div(&denom)
                .ok_or_else(|| crate::error::Error::Internal("subresultant division not exact".into()))?;
            b = bnew;
            g = a.leading_coeff_in(name);
            // h = g^delta / h^(delta - 1)
            h = if delta == 0 {
                h
            } else {
                g.pow(delta)
                    .exact_div(&h.pow(delta - 1))
                    .ok_or_else(|| crate::error::Error::Internal("subresultant h-update not exact".into()))?
            };
            if b.is_zero() {
                return Ok(if a.degree_in(name) > 0 {
                    MultiPoly::zero(&vars_ref)
                } else {
                    // Cannot happen: a constant a means the previous b was
                    // constant and the loop exited below.
                    MultiPoly::zero(&vars_ref)
                });
            }
            if b.degree_in(name) == 0 {
                let da = a.degree_in(name);
                // result = s * lc(b)^deg(a) / h^(deg(a) - 1)
                let num = b.pow(da);
                let res = num
                    .exact_div(&h.pow(da.saturating_sub(1)))
                    .ok_or_else(|| crate::error::Error::Internal("subresultant final division not exact".into()))?;
                return Ok(if sign < 0 { res.neg() } else { res });
            }
        }
    }
}

impl<C: Coeff> fmt::Display for MultiPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Vec<u32>, &C)> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| MonomialOrder::GrevLex.cmp(b, a));
        let mut first = true;
        for (e, c) in terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = c.to_string();
            let is_one = cs == "1";
            let constant_term = e.iter().all(|&x| x == 0);
            let needs_paren = cs.contains('+') || cs.contains(' ') || cs.contains('/');
            if constant_term || !is_one {
                if needs_paren {
                    write!(f, "({})", cs)?;
                } else {
                    write!(f, "{}", cs)?;
                }
            }
            let mut wrote_var = false;
            for (i, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                if !is_one || wrote_var || constant_term {
                    write!(f, "*")?;
                }
                wrote_var = true;
                if exp == 1 {
                    write!(f, "{}", self.vars[i])?;
                } else {
                    write!(f, "{}^{}", self.vars[i], exp)?;
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

    fn mp(vars: &[&str]) -> MultiPoly<Rational> {
        MultiPoly::zero(vars)
    }

    fn parse_terms(vars: &[&str], terms: &[(i64, &[u32])]) -> MultiPoly<Rational> {
        let mut p = mp(vars);
        for (c, e) in terms {
            p = p.add(&MultiPoly::monomial(vars, e, rint(*c)));
        }
        p
    }

    /// Sylvester determinant oracle by cofactor expansion.
    fn sylvester_resultant(
        f: &MultiPoly<Rational>,
        g: &MultiPoly<Rational>,
        name: &str,
    ) -> MultiPoly<Rational> {
        let (f, g) = f.aligned(g);
        let vars: Vec<&str> = f.vars().iter().map(|s| s.as_str()).collect();
        let m = f.degree_in(name) as usize;
        let n = g.degree_in(name) as usize;
        if m == 0 {
            return f.pow(n as u32);
        }
        if n == 0 {
            return g.pow(m as u32);
        }
        let size = m + n;
        let mut rows: Vec<Vec<MultiPoly<Rational>>> = vec![];
        for shift in 0..n {
            let mut row = vec![MultiPoly::zero(&vars); size];
            for k in 0..=m {
                row[shift + k] = f.coeff_of(name, (m - k) as u32);
            }
            rows.push(row);
        }
        for shift in 0..m {
            let mut row = vec![MultiPoly::zero(&vars); size];
            for k in 0..=n {
                row[shift + k] = g.coeff_of(name, (n - k) as u32);
            }
            rows.push(row);
        }
        det(&rows, &vars)
    }

    fn det(rows: &[Vec<MultiPoly<Rational>>], vars: &[&str]) -> MultiPoly<Rational> {
        let n = rows.len();
        if n == 0 {
            return MultiPoly::one(vars);
        }
        if n == 1 {
            return rows[0][0].clone();
        }
        let mut acc = MultiPoly::zero(vars);
        for j in 0..n {
            if rows[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<MultiPoly<Rational>>> = rows[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(k, _)| *k != j)
                        .map(|(_, p)| p.clone())
                        .collect()
                })
                .collect();
            let cof = rows[0][j].mul(&det(&minor, vars));
            acc = if j % 2 == 0 { acc.add(&cof) } else { acc.sub(&cof) };
        }
        acc
    }

    #[test]
    fn resultant_examples() {
        let vars = &["y", "t"];
        // Res_y(y^2 - t, 2y) = -4t
        let f = parse_terms(vars, &[(1, &[2, 0]), (-1, &[0, 1])]);
        let g = parse_terms(vars, &[(2, &[1, 0])]);
        let r = f.resultant(&g, "y").unwrap();
        assert_eq!(r, parse_terms(vars, &[(-4, &[0, 1])]));
        assert_eq!(r, sylvester_resultant(&f, &g, "y"));

        // Res_y(y - c, y - d) = c - d
        let vars2 = &["y", "c", "d"];
        let f = parse_terms(vars2, &[(1, &[1, 0, 0]), (-1, &[0, 1, 0])]);
        let g = parse_terms(vars2, &[(1, &[1, 0, 0]), (-1, &[0, 0, 1])]);
        let r = f.resultant(&g, "y").unwrap();
        assert_eq!(r, parse_terms(vars2, &[(1, &[0, 1, 0]), (-1, &[0, 0, 1])]));
        assert_eq!(r, sylvester_resultant(&f, &g, "y"));

        // Res_z(2z, y^2 - z^2) = 4y^2
        let vars3 = &["z", "y"];
        let f = parse_terms(vars3, &[(2, &[1, 0])]);
        let g = parse_terms(vars3, &[(1, &[0, 2]), (-1, &[2, 0])]);
        let r = f.resultant(&g, "z").unwrap();
        assert_eq!(r, parse_terms(vars3, &[(4, &[0, 2])]));
        assert_eq!(r, sylvester_resultant(&f, &g, "z"));
    }

    #[test]
    fn resultant_matches_sylvester_on_random_pairs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let vars = &["y", "t"];
        for _ in 0..40 {
            let mut f = mp(vars);
            let mut g = mp(vars);
            let df = rng.random_range(1..=4);
            let dg = rng.random_range(1..=4);
            for k in 0..=df {
                let c = rng.random_range(-3i64..=3);
                let et = rng.random_range(0..=1u32);
                f = f.add(&MultiPoly::monomial(vars, &[k, et], rint(c)));
            }
            for k in 0..=dg {
                let c = rng.random_range(-3i64..=3);
                let et = rng.random_range(0..=1u32);
                g = g.add(&MultiPoly::monomial(vars, &[k, et], rint(c)));
            }
            if f.degree_in("y") == 0 || g.degree_in("y") == 0 {
                continue;
            }
            let r1 = f.resultant(&g, "y").unwrap();
            let r2 = sylvester_resultant(&f, &g, "y");
            assert_eq!(r1, r2, "f={} g={}", f, g);
        }
    }

    #[test]
    fn resultant_vanishes_iff_common_factor() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let vars = &["y"];
        let mut checked = 0;
        for _ in 0..200 {
            let df = rng.random_range(1..=5usize);
            let dg = rng.random_range(1..=5usize);
            let rand_poly = |rng: &mut rand_chacha::ChaCha8Rng, d: usize| {
                let mut c: Vec<i64> = (0..=d).map(|_| rng.random_range(-4..=4)).collect();
                if c[d] == 0 {
                    c[d] = 1;
                }
                UniPoly::from_i64("y", &c)
            };
            let fu = rand_poly(&mut rng, df);
            let gu = rand_poly(&mut rng, dg);
            let f = MultiPoly::from_unipoly(&fu, vars);
            let g = MultiPoly::from_unipoly(&gu, vars);
            let r = f.resultant(&g, "y").unwrap();
            let has_common = fu.gcd(&gu).degree() > 0;
            assert_eq!(r.is_zero(), has_common, "f={} g={}", fu, gu);
            checked += 1;
        }
        assert_eq!(checked, 200);
    }

    #[test]
    fn divrem_in_var_reduces_degree() {
        let vars = &["a", "b"];
        // divide a^3 + b by b^2 + a (monic in b)
        let f = parse_terms(vars, &[(1, &[3, 0]), (1, &[0, 1])]);
        let g = parse_terms(vars, &[(1, &[0, 2]), (1, &[1, 0])]);
        let (q, r) = f.divrem_in_var(&g, "b");
        assert_eq!(f, q.mul(&g).add(&r));
        assert!(r.degree_in("b") < 2);
    }

    #[test]
    fn exact_division() {
        let vars = &["a", "b"];
        let f = parse_terms(vars, &[(1, &[1, 0]), (1, &[0, 1])]);
        let g = parse_terms(vars, &[(1, &[1, 0]), (-1, &[0, 1])]);
        let prod = f.mul(&g);
        assert_eq!(prod.exact_div(&f).unwrap(), g);
        assert!(parse_terms(vars, &[(1, &[1, 0])]).exact_div(&g).is_none());
    }

    #[test]
    fn substitution_is_parallel() {
        let vars = &["a", "b"];
        // swap a and b in a^2 b
        let f = parse_terms(vars, &[(1, &[2, 1])]);
        let a = MultiPoly::var(vars, "a");
        let b = MultiPoly::var(vars, "b");
        let swapped = f.substitute_many(&[("a", &b), ("b", &a)]);
        assert_eq!(swapped, parse_terms(vars, &[(1, &[1, 2])]));
    }

    #[test]
    fn grevlex_vs_lex_leading_terms() {
        let vars = &["a", "b"];
        // a^2 vs a b^2: grevlex picks a b^2 (higher total degree), lex picks a^2
        let f = parse_terms(vars, &[(1, &[2, 0]), (1, &[1, 2])]);
        assert_eq!(f.leading_term(MonomialOrder::GrevLex).unwrap().0, vec![1, 2]);
        assert_eq!(f.leading_term(MonomialOrder::Lex).unwrap().0, vec![2, 0]);
        // grevlex tie-break: a^2 b vs a b^2 -> a^2 b is larger
        let g = parse_terms(vars, &[(1, &[2, 1]), (1, &[1, 2])]);
        assert_eq!(g.leading_term(MonomialOrder::GrevLex).unwrap().0, vec![2, 1]);
    }

    #[test]
    fn content_and_primitive() {
        let vars = &["a"];
        let f = parse_terms(vars, &[(-4, &[1]), (-6, &[0])]);
        assert_eq!(f.content(), rint(-2));
        let p = f.primitive();
        assert_eq!(p, parse_terms(vars, &[(2, &[1]), (3, &[0])]));
        let half = MultiPoly::monomial(vars, &[1], rat(1, 2));
        assert_eq!(half.content(), rat(1, 2));
    }
}
