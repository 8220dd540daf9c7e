//! The universal "pair of roots" quotient ring and Hensel lifting inside it.
//!
//! For a base polynomial PB of degree d >= 2 in y, the ring
//! B = Q[a, b] / (DD) with DD the divided difference (PB(b) - PB(a))/(b - a)
//! parametrizes pairs of roots of PB - t sharing the same value t = PB(a).
//! Every statement quantified over pairs of distinct roots over every value
//! becomes a single computation in B. B is a free Q[a]-module of rank d - 1;
//! normal forms keep the b-degree below d - 1.
//!
//! Series over B divide only by elements that reduce to p(a) = PB'(a) times
//! a rational constant modulo x. All such divisions are deferred: a series
//! stores cleared numerators together with exponents (da, db) so that the
//! true coefficient is (listed value) / (p(a)^da * p(b)^db). Clearing
//! denominators can only introduce zeros along p(a) * p(b) = 0, and both
//! factors vanish only over critical values of PB — exactly the locus every
//! downstream radical-membership test already excludes, so the cleared
//! numerators decide the same conditions as the true coefficients.

use std::fmt;

use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::local::{LocalElement, TruncSeries};
use crate::multipoly::MultiPoly;
use crate::rational::Rational;
use crate::unipoly::UniPoly;

pub const VAR_A: &str = "a";
pub const VAR_B: &str = "b";
const PAIR_VARS: [&str; 2] = [VAR_A, VAR_B];

/// The quotient ring Q[a, b]/(divided difference of the base polynomial).
#[derive(Clone, Debug)]
pub struct PairAlgebra {
    base: UniPoly<Rational>,
    divided_diff: MultiPoly<Rational>,
    p_bar: UniPoly<Rational>,
    degree: usize,
}

/// Build the pair algebra from a base polynomial of degree >= 2.
pub fn divided_difference(base: &UniPoly<Rational>) -> Result<PairAlgebra> {
    let d = base.degree();
    if base.is_zero() || d < 2 {
        return Err(Error::DegreeTooSmall(if base.is_zero() { 0 } else { d }));
    }
    let mut dd = MultiPoly::zero(&PAIR_VARS);
    for (j, c) in base.coeffs().iter().enumerate() {
        if c.is_zero() || j == 0 {
            continue;
        }
        // c * (a^(j-1) + a^(j-2) b + ... + b^(j-1))
        for k in 0..j {
            dd = dd.add(&MultiPoly::monomial(
                &PAIR_VARS,
                &[(j - 1 - k) as u32, k as u32],
                c.clone(),
            ));
        }
    }
    Ok(PairAlgebra {
        base: base.clone(),
        divided_diff: dd,
        p_bar: base.derivative(),
        degree: d,
    })
}

impl PairAlgebra {
    pub fn base(&self) -> &UniPoly<Rational> {
        &self.base
    }

    /// The defining relation D(a, b).
    pub fn relation(&self) -> &MultiPoly<Rational> {
        &self.divided_diff
    }

    /// Degree d of the base polynomial; the algebra has rank d - 1 over Q[a].
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Derivative of the base polynomial (the ramification polynomial).
    pub fn p_bar(&self) -> &UniPoly<Rational> {
        &self.p_bar
    }

    fn unipoly_in(&self, p: &UniPoly<Rational>, var: &str) -> MultiPoly<Rational> {
        let q = UniPoly::new(var, p.coeffs().to_vec());
        MultiPoly::from_unipoly(&q, &PAIR_VARS)
    }

    /// p(a) as an element of the algebra.
    pub fn p_bar_a(&self) -> MultiPoly<Rational> {
        self.unipoly_in(&self.p_bar.clone(), VAR_A)
    }

    /// p(b), reduced to normal form.
    pub fn p_bar_b(&self) -> MultiPoly<Rational> {
        self.normal_form(&self.unipoly_in(&self.p_bar.clone(), VAR_B))
    }

    /// The shared base-curve coordinate t = PB(a).
    pub fn t_of_a(&self) -> MultiPoly<Rational> {
        self.unipoly_in(&self.base.clone(), VAR_A)
    }

    /// Normal form: reduce the b-degree below d - 1 by division by the
    /// relation (whose leading b-coefficient is a rational constant).
    pub fn normal_form(&self, f: &MultiPoly<Rational>) -> MultiPoly<Rational> {
        let f = f.with_vars(&PAIR_VARS);
        if (f.degree_in(VAR_B) as usize) < self.degree - 1 {
            return f;
        }
        f.divrem_in_var(&self.divided_diff, VAR_B).1
    }

    /// The involution exchanging the two roots, with reduction.
    pub fn swap(&self, f: &MultiPoly<Rational>) -> MultiPoly<Rational> {
        let f = f.with_vars(&PAIR_VARS);
        let a = MultiPoly::var(&PAIR_VARS, VAR_A);
        let b = MultiPoly::var(&PAIR_VARS, VAR_B);
        self.normal_form(&f.substitute_many(&[(VAR_A, &b), (VAR_B, &a)]))
    }
}

/// Truncated series over the pair algebra with deferred denominators: the
/// true coefficient of x^k is coeffs[k] / (p(a)^den_a * p(b)^den_b).
#[derive(Clone, Debug, PartialEq)]
pub struct PairSeries {
    coeffs: Vec<MultiPoly<Rational>>,
    den_a: u32,
    den_b: u32,
}

impl PairSeries {
    pub fn constant(c: MultiPoly<Rational>, prec: usize) -> Self {
        let mut coeffs = vec![MultiPoly::zero(&PAIR_VARS); prec];
        if prec > 0 {
            coeffs[0] = c.with_vars(&PAIR_VARS);
        }
        PairSeries {
            coeffs,
            den_a: 0,
            den_b: 0,
        }
    }

    pub fn from_rational_series(ts: &TruncSeries, prec: usize) -> Self {
        let coeffs = (0..prec)
            .map(|k| MultiPoly::constant(&PAIR_VARS, ts.coeff(k)))
            .collect();
        PairSeries {
            coeffs,
            den_a: 0,
            den_b: 0,
        }
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn denominators(&self) -> (u32, u32) {
        (self.den_a, self.den_b)
    }

    /// Cleared numerator coefficients (normal forms).
    pub fn coeffs(&self) -> &[MultiPoly<Rational>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Index of the first nonzero cleared coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, prec: usize) -> Self {
        PairSeries {
            coeffs: self.coeffs.iter().take(prec).cloned().collect(),
            den_a: self.den_a,
            den_b: self.den_b,
        }
    }

    fn padded(&self, prec: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        while coeffs.len() < prec {
            coeffs.push(MultiPoly::zero(&PAIR_VARS));
        }
        PairSeries {
            coeffs,
            den_a: self.den_a,
            den_b: self.den_b,
        }
    }

    fn raise_dens(&self, pa: &PairAlgebra, da: u32, db: u32) -> Self {
        if da == self.den_a && db == self.den_b {
            return self.clone();
        }
        assert!(da >= self.den_a && db >= self.den_b);
        let mult = pa
            .p_bar_a()
            .pow(da - self.den_a)
            .mul(&pa.p_bar_b().pow(db - self.den_b));
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| pa.normal_form(&c.mul(&mult)))
            .collect();
        PairSeries {
            coeffs,
            den_a: da,
            den_b: db,
        }
    }

    /// Strip common denominator powers when every coefficient divides out.
    pub fn normalize_dens(&self, pa: &PairAlgebra) -> Self {
        let mut out = self.clone();
        let pa_poly = pa.p_bar_a();
        let pb_poly = pa.p_bar_b();
        'outer_a: while out.den_a > 0 {
            let mut next = vec![];
            for c in &out.coeffs {
                if c.is_zero() {
                    next.push(c.clone());
                    continue;
                }
                match c.exact_div(&pa_poly) {
                    Some(q) => next.push(q),
                    None => break 'outer_a,
                }
            }
            out.coeffs = next;
            out.den_a -= 1;
        }
        'outer_b: while out.den_b > 0 {
            let mut next = vec![];
            for c in &out.coeffs {
                if c.is_zero() {
                    next.push(c.clone());
                    continue;
                }
                match c.exact_div(&pb_poly) {
                    Some(q) => next.push(pa.normal_form(&q)),
                    None => break 'outer_b,
                }
            }
            out.coeffs = next;
            out.den_b -= 1;
        }
        out
    }

    pub fn add(&self, other: &Self, pa: &PairAlgebra) -> Self {
        let da = self.den_a.max(other.den_a);
        let db = self.den_b.max(other.den_b);
        let x = self.raise_dens(pa, da, db);
        let y = other.raise_dens(pa, da, db);
        let prec = x.precision().min(y.precision());
        let coeffs = (0..prec).map(|k| x.coeffs[k].add(&y.coeffs[k])).collect();
        PairSeries {
            coeffs,
            den_a: da,
            den_b: db,
        }
    }

    pub fn neg(&self) -> Self {
        PairSeries {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
            den_a: self.den_a,
            den_b: self.den_b,
        }
    }

    pub fn sub(&self, other: &Self, pa: &PairAlgebra) -> Self {
        self.add(&other.neg(), pa)
    }

    pub fn mul(&self, other: &Self, pa: &PairAlgebra) -> Self {
        let prec = self.precision().min(other.precision());
        let mut coeffs = vec![MultiPoly::zero(&PAIR_VARS); prec];
        for i in 0..prec {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..prec - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&self.coeffs[i].mul(&other.coeffs[j]));
            }
        }
        let coeffs = coeffs.iter().map(|c| pa.normal_form(c)).collect();
        PairSeries {
            coeffs,
            den_a: self.den_a + other.den_a,
            den_b: self.den_b + other.den_b,
        }
    }

    /// Exchange the two roots: swap every coefficient and the denominators.
    pub fn swap(&self, pa: &PairAlgebra) -> Self {
        PairSeries {
            coeffs: self.coeffs.iter().map(|c| pa.swap(c)).collect(),
            den_a: self.den_b,
            den_b: self.den_a,
        }
    }

    /// True-value equality against plain polynomial coefficients: checks
    /// listed = expected * p(a)^den_a * p(b)^den_b coefficientwise in B.
    pub fn true_eq(&self, pa: &PairAlgebra, expected: &[MultiPoly<Rational>]) -> bool {
        let mult = pa.p_bar_a().pow(self.den_a).mul(&pa.p_bar_b().pow(self.den_b));
        for k in 0..self.precision() {
            let want = match expected.get(k) {
                Some(e) => pa.normal_form(&e.mul(&mult)),
                None => MultiPoly::zero(&PAIR_VARS),
            };
            if self.coeffs[k] != want {
                return false;
            }
        }
        true
    }

    /// Specialize the generic root a to a rational simple root; only valid
    /// for series whose coefficients are free of b.
    pub fn specialize_a(&self, pa: &PairAlgebra, a0: &Rational) -> Option<TruncSeries> {
        if self.den_b != 0 {
            return None;
        }
        let denom = pa.p_bar().eval(a0);
        if denom.is_zero() {
            return None;
        }
        let scale = denom.recip().pow(self.den_a as i32);
        let mut out = vec![];
        for c in &self.coeffs {
            let u = c.to_unipoly(VAR_A)?;
            out.push(u.eval(a0) * scale.clone());
        }
        Some(TruncSeries::new(out))
    }

    /// Series inverse when the true x^0 coefficient is exactly
    /// c * p(a)^ea * p(b)^eb for a nonzero rational c.
    fn invert_with_leading(
        &self,
        pa: &PairAlgebra,
        c: &Rational,
        ea: u32,
        eb: u32,
    ) -> Result<Self> {
        let prec = self.precision();
        let claimed = pa.normal_form(
            &pa.p_bar_a()
                .pow(self.den_a + ea)
                .mul(&pa.p_bar_b().pow(self.den_b + eb))
                .scale(c),
        );
        if self.coeffs.is_empty() || self.coeffs[0] != claimed {
            return Err(Error::Internal(
                "series leading coefficient does not match the tracked denominator shape".into(),
            ));
        }
        let mut inv0 = PairSeries::constant(
            MultiPoly::constant(&PAIR_VARS, c.recip()),
            prec,
        );
        inv0.den_a = ea;
        inv0.den_b = eb;
        let one = PairSeries::constant(MultiPoly::one(&PAIR_VARS), prec);
        let w = self.mul(&inv0, pa).sub(&one, pa);
        debug_assert!(w.coeffs[0].is_zero());
        let mut acc = PairSeries::constant(MultiPoly::one(&PAIR_VARS), prec);
        let mut term = PairSeries::constant(MultiPoly::one(&PAIR_VARS), prec);
        for _ in 1..prec {
            term = term.mul(&w, pa).neg();
            acc = acc.add(&term, pa);
        }
        Ok(inv0.mul(&acc, pa))
    }
}

impl fmt::Display for PairSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "] / (p_a^{} p_b^{})", self.den_a, self.den_b)
    }
}

/// Exact factorization P - t = S1 * M + x^n * S2 with M monic in y of the
/// degree of the mod-x reduction.
#[derive(Clone, Debug)]
pub struct HenselFactorization {
    /// Cofactor, polynomial in (x, t, y), valid representative below x^n.
    pub s1: MultiPoly<Rational>,
    /// Monic factor in y, polynomial in (x, t, y), below x^n.
    pub m: MultiPoly<Rational>,
    /// Exact remainder term, polynomial in (t, y) with local coefficients.
    pub s2: MultiPoly<LocalElement>,
    pub n: u64,
    /// Mod-x reduction of the input.
    pub base: UniPoly<Rational>,
    input: UniPoly<LocalElement>,
}

const VAR_X: &str = "x";
const VAR_T: &str = "t";
const VAR_Y: &str = "y";

/// Fold the x variable of a polynomial in (x, t, y) into local-ring
/// coefficients on (t, y).
fn fold_x(p: &MultiPoly<Rational>) -> MultiPoly<LocalElement> {
    let tv = [VAR_T, VAR_Y];
    let mut out = MultiPoly::zero(&tv);
    let xi = p.var_index(VAR_X).expect("x variable present");
    let ti = p.var_index(VAR_T).expect("t variable present");
    let yi = p.var_index(VAR_Y).expect("y variable present");
    for (e, c) in p.terms() {
        let coeff = LocalElement::x_power(e[xi] as usize)
            .mul(&LocalElement::from_rational(c.clone()));
        let m = MultiPoly::monomial(&tv, &[e[ti], e[yi]], coeff);
        out = out.add(&m);
    }
    out
}

fn local_poly_to_ty(p: &UniPoly<LocalElement>) -> MultiPoly<LocalElement> {
    let q = UniPoly::new(VAR_Y, p.coeffs().to_vec());
    MultiPoly::from_unipoly(&q, &[VAR_T, VAR_Y])
}

/// Reduce a polynomial in y with local coefficients modulo x.
pub fn reduce_mod_x(p: &UniPoly<LocalElement>) -> UniPoly<Rational> {
    p.map_coeffs(|c| c.reduce_mod_x())
}

/// Hensel factorization of P - t modulo x^n: computes the unique splitting
/// with a monic factor reducing to (PB - t)/lc and a cofactor reducing to
/// the constant lc, then the exact remainder S2.
pub fn hensel_factorize(p: &UniPoly<LocalElement>, n: u64) -> Result<HenselFactorization> {
    if n < 1 {
        return Err(Error::ZeroInput("hensel precision must be at least 1".into()));
    }
    let base = reduce_mod_x(p);
    if base.is_constant() {
        return Err(Error::ConstantReduction);
    }
    let lc = base.leading_coeff();
    let nn = n as usize;
    let tyv = [VAR_T, VAR_Y];

    // x-adic slices of P - t as polynomials in (t, y).
    let expansions: Vec<TruncSeries> = p.coeffs().iter().map(|c| c.expand(nn)).collect();
    let mut slices: Vec<MultiPoly<Rational>> = (0..nn)
        .map(|k| {
            let mut q = MultiPoly::zero(&tyv);
            for (j, series) in expansions.iter().enumerate() {
                let c = series.coeff(k);
                if !c.is_zero() {
                    q = q.add(&MultiPoly::monomial(&tyv, &[0, j as u32], c));
                }
            }
            q
        })
        .collect();
    slices[0] = slices[0].sub(&MultiPoly::var(&tyv, VAR_T));

    // Order-by-order splitting: S0 M_k + S_k M0 = E_k with deg_y M_k < d.
    let m0 = slices[0].scale(&lc.recip());
    let mut m_slices = vec![m0.clone()];
    let mut s_slices = vec![MultiPoly::constant(&tyv, lc.clone())];
    for k in 1..nn {
        let mut e = slices[k].clone();
        for i in 1..k {
            e = e.sub(&s_slices[i].mul(&m_slices[k - i]));
        }
        let (q, r) = e.divrem_in_var(&m0, VAR_Y);
        s_slices.push(q);
        m_slices.push(r.scale(&lc.recip()));
    }

    let xtyv = [VAR_X, VAR_T, VAR_Y];
    let mut s1 = MultiPoly::zero(&xtyv);
    let mut m = MultiPoly::zero(&xtyv);
    for k in 0..nn {
        let xk = MultiPoly::monomial(&xtyv, &[k as u32, 0, 0], Rational::one());
        s1 = s1.add(&xk.mul(&s_slices[k].with_vars(&xtyv)));
        m = m.add(&xk.mul(&m_slices[k].with_vars(&xtyv)));
    }

    // S2 = (P - t - S1 M) / x^n, exactly, with local coefficients.
    let p_minus_t = local_poly_to_ty(p).sub(&MultiPoly::from_unipoly(
        &UniPoly::monomial(VAR_T, LocalElement::one(), 1),
        &tyv,
    ));
    let prod = fold_x(&s1).mul(&fold_x(&m));
    let diff = p_minus_t.sub(&prod);
    let xn = LocalElement::x_power(nn);
    let mut s2 = MultiPoly::zero(&tyv);
    for (e, c) in diff.terms() {
        let q = c.try_div(&xn).map_err(|_| {
            Error::Internal("hensel remainder is not divisible by x^n".into())
        })?;
        s2 = s2.add(&MultiPoly::monomial(&tyv, e, q));
    }

    Ok(HenselFactorization {
        s1,
        m,
        s2,
        n,
        base,
        input: p.clone(),
    })
}

impl HenselFactorization {
    /// Check the defining identity P - t = S1 M + x^n S2 exactly in the
    /// local-coefficient polynomial ring.
    pub fn verify_identity(&self) -> bool {
        let tyv = [VAR_T, VAR_Y];
        let p_minus_t = local_poly_to_ty(&self.input).sub(&MultiPoly::from_unipoly(
            &UniPoly::monomial(VAR_T, LocalElement::one(), 1),
            &tyv,
        ));
        let xn = MultiPoly::constant(&tyv, LocalElement::x_power(self.n as usize));
        let rhs = fold_x(&self.s1)
            .mul(&fold_x(&self.m))
            .add(&xn.mul(&self.s2));
        p_minus_t == rhs
    }

    /// The monic factor with t specialized to PB(a), as y-coefficients of
    /// series over the pair algebra.
    fn factor_series_coeffs(&self, pa: &PairAlgebra, prec: usize) -> Vec<PairSeries> {
        let t_image = pa.t_of_a();
        let subst = self.m.substitute(VAR_T, &t_image.with_vars(&[VAR_X, VAR_T, VAR_Y, VAR_A, VAR_B]));
        let d = self.base.degree();
        (0..=d)
            .map(|j| {
                let cj = subst.coeff_of(VAR_Y, j as u32);
                let coeffs: Vec<MultiPoly<Rational>> = (0..prec)
                    .map(|k| cj.coeff_of(VAR_X, k as u32).with_vars(&PAIR_VARS))
                    .collect();
                PairSeries {
                    coeffs,
                    den_a: 0,
                    den_b: 0,
                }
            })
            .collect()
    }
}

/// Horner evaluation of a y-polynomial, given as series coefficients, at a
/// series point.
fn eval_series_poly(coeffs: &[PairSeries], point: &PairSeries, pa: &PairAlgebra) -> PairSeries {
    let prec = point.precision();
    let mut acc = PairSeries::constant(MultiPoly::zero(&PAIR_VARS), prec);
    for c in coeffs.iter().rev() {
        acc = acc.mul(point, pa).add(&c.padded(prec).truncate(prec), pa);
    }
    acc
}

/// Evaluate a y-polynomial with local coefficients at a series point.
pub fn eval_local_poly_at(
    p: &UniPoly<LocalElement>,
    point: &PairSeries,
    pa: &PairAlgebra,
) -> PairSeries {
    let prec = point.precision();
    let coeffs: Vec<PairSeries> = p
        .coeffs()
        .iter()
        .map(|c| PairSeries::from_rational_series(&c.expand(prec), prec))
        .collect();
    eval_series_poly(&coeffs, point, pa)
}

/// Newton lifting of the two generic roots a and b of the monic Hensel
/// factor, to precision n, doubling the precision each step. Divisions are
/// deferred into powers of p(a) (and p(b) for the swapped root).
pub fn lift_root_pair(
    h: &HenselFactorization,
    pa: &PairAlgebra,
    n: u64,
) -> Result<(PairSeries, PairSeries)> {
    if pa.base() != &h.base {
        return Err(Error::Internal(
            "pair algebra built from a different base polynomial".into(),
        ));
    }
    let nn = (n as usize).max(1);
    let lc = h.base.leading_coeff();
    let m_coeffs = h.factor_series_coeffs(pa, nn);
    let mprime_coeffs: Vec<PairSeries> = {
        let deriv = h.m.derivative(VAR_Y);
        let t_image = pa.t_of_a();
        let subst = deriv.substitute(
            VAR_T,
            &t_image.with_vars(&[VAR_X, VAR_T, VAR_Y, VAR_A, VAR_B]),
        );
        let d = h.base.degree();
        (0..d)
            .map(|j| {
                let cj = subst.coeff_of(VAR_Y, j as u32);
                let coeffs: Vec<MultiPoly<Rational>> = (0..nn)
                    .map(|k| cj.coeff_of(VAR_X, k as u32).with_vars(&PAIR_VARS))
                    .collect();
                PairSeries {
                    coeffs,
                    den_a: 0,
                    den_b: 0,
                }
            })
            .collect()
    };

    let mut sigma = PairSeries::constant(MultiPoly::var(&PAIR_VARS, VAR_A), 1);
    let mut prec = 1usize;
    while prec < nn {
        let next = (2 * prec).min(nn);
        sigma = sigma.padded(next);
        let truncated: Vec<PairSeries> = m_coeffs.iter().map(|c| c.truncate(next)).collect();
        let value = eval_series_poly(&truncated, &sigma, pa);
        let truncated_prime: Vec<PairSeries> =
            mprime_coeffs.iter().map(|c| c.truncate(next)).collect();
        let slope = eval_series_poly(&truncated_prime, &sigma, pa);
        let inv = slope.invert_with_leading(pa, &lc.clone().recip(), 1, 0)?;
        sigma = sigma.sub(&value.mul(&inv, pa), pa).truncate(next);
        sigma = sigma.normalize_dens(pa);
        prec = next;
    }
    let sigma_a = sigma.truncate(nn);
    let sigma_b = sigma_a.swap(pa);
    Ok((sigma_a, sigma_b))
}

/// Defect of the lifted root: M(sigma) over the pair algebra; all cleared
/// coefficients are zero exactly when the root condition holds mod (x^n, D).
pub fn root_defect(h: &HenselFactorization, pa: &PairAlgebra, sigma: &PairSeries) -> PairSeries {
    let coeffs = h.factor_series_coeffs(pa, sigma.precision());
    eval_series_poly(&coeffs, sigma, pa)
}

/// Result of quasi-inversion in the pair algebra.
#[derive(Clone, Debug, PartialEq)]
pub enum QuasiInverse {
    /// u * v = p(a)^k holds exactly in the quotient.
    Inverse { v: MultiPoly<Rational>, k: u32 },
    NotInvertible,
}

/// Rational functions in a, used transiently for inversion.
#[derive(Clone, Debug, PartialEq)]
struct Frac {
    num: UniPoly<Rational>,
    den: UniPoly<Rational>,
}

impl Frac {
    fn new(num: UniPoly<Rational>, den: UniPoly<Rational>) -> Self {
        assert!(!den.is_zero());
        if num.is_zero() {
            return Frac {
                num,
                den: UniPoly::one(VAR_A),
            };
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let lc = den.leading_coeff();
        num = num.scale(&lc.recip());
        den = den.scale(&lc.recip());
        Frac { num, den }
    }

    fn from_poly(p: UniPoly<Rational>) -> Self {
        Frac {
            num: p,
            den: UniPoly::one(VAR_A),
        }
    }

    fn zero() -> Self {
        Frac::from_poly(UniPoly::zero(VAR_A))
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn add(&self, o: &Self) -> Self {
        Frac::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    fn sub(&self, o: &Self) -> Self {
        Frac::new(
            self.num.mul(&o.den).sub(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    fn mul(&self, o: &Self) -> Self {
        Frac::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    fn div(&self, o: &Self) -> Self {
        assert!(!o.is_zero());
        Frac::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }
}

/// b-polynomials with coefficients in Q(a), dense.
type BPoly = Vec<Frac>;

fn bpoly_trim(p: &mut BPoly) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn bpoly_from_multi(f: &MultiPoly<Rational>) -> BPoly {
    let f = f.with_vars(&PAIR_VARS);
    let db = f.degree_in(VAR_B) as usize;
    let mut out = vec![Frac::zero(); db + 1];
    for j in 0..=db {
        let cj = f.coeff_of(VAR_B, j as u32);
        if let Some(u) = cj.to_unipoly(VAR_A) {
            out[j] = Frac::from_poly(u);
        }
    }
    bpoly_trim(&mut out);
    out
}

fn bpoly_divrem(f: &BPoly, g: &BPoly) -> (BPoly, BPoly) {
    assert!(!g.is_empty());
    let mut rem = f.clone();
    let mut quo = vec![Frac::zero(); f.len().saturating_sub(g.len()) + 1];
    let glc = g.last().unwrap();
    while rem.len() >= g.len() && !rem.is_empty() {
        let shift = rem.len() - g.len();
        let c = rem.last().unwrap().div(glc);
        quo[shift] = quo[shift].add(&c);
        for (i, gc) in g.iter().enumerate() {
            rem[shift + i] = rem[shift + i].sub(&c.mul(gc));
        }
        bpoly_trim(&mut rem);
    }
    bpoly_trim(&mut quo);
    (quo, rem)
}

fn bpoly_mul(f: &BPoly, g: &BPoly) -> BPoly {
    if f.is_empty() || g.is_empty() {
        return vec![];
    }
    let mut out = vec![Frac::zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        for (j, b) in g.iter().enumerate() {
            out[i + j] = out[i + j].add(&a.mul(b));
        }
    }
    bpoly_trim(&mut out);
    out
}

fn bpoly_sub(f: &BPoly, g: &BPoly) -> BPoly {
    let mut out = vec![Frac::zero(); f.len().max(g.len())];
    for (i, c) in f.iter().enumerate() {
        out[i] = out[i].add(c);
    }
    for (i, c) in g.iter().enumerate() {
        out[i] = out[i].sub(c);
    }
    bpoly_trim(&mut out);
    out
}

/// Quasi-inverse in the pair algebra: find v and minimal k with
/// u v = p(a)^k in the quotient, or certify that none exists.
pub fn invert(u: &MultiPoly<Rational>, pa: &PairAlgebra) -> QuasiInverse {
    let u_nf = pa.normal_form(u);
    if u_nf.is_zero() {
        return QuasiInverse::NotInvertible;
    }
    if let Some(c) = u_nf.constant_value() {
        return QuasiInverse::Inverse {
            v: MultiPoly::constant(&PAIR_VARS, c.recip()),
            k: 0,
        };
    }
    let d_rel = bpoly_from_multi(pa.relation());
    let u_b = bpoly_from_multi(&u_nf);

    // Extended Euclid tracking s with s*u = r modulo the relation.
    let mut r0 = u_b;
    let mut s0: BPoly = vec![Frac::from_poly(UniPoly::one(VAR_A))];
    let mut r1 = d_rel;
    let mut s1: BPoly = vec![];
    while !r1.is_empty() {
        let (q, rem) = bpoly_divrem(&r0, &r1);
        let s_new = bpoly_sub(&s0, &bpoly_mul(&q, &s1));
        r0 = std::mem::take(&mut r1);
        s0 = std::mem::replace(&mut s1, s_new);
        r1 = rem;
    }
    if r0.len() > 1 {
        // Nontrivial common factor with the relation: zero divisor.
        return QuasiInverse::NotInvertible;
    }
    let unit = r0.into_iter().next().expect("gcd of nonzero inputs is nonzero");
    // s = s0 / unit satisfies s*u = 1 modulo the relation, in Q(a)[b].
    let s: BPoly = s0.iter().map(|c| c.div(&unit)).collect();

    // Minimal denominator: lcm of the reduced coefficient denominators.
    let mut lcm = UniPoly::one(VAR_A);
    for c in &s {
        let g = lcm.gcd(&c.den);
        lcm = lcm.mul(&c.den.div_rem(&g).0);
    }
    let p_bar_a = UniPoly::new(VAR_A, pa.p_bar().coeffs().to_vec());
    if !lcm.is_constant() {
        let stray = lcm.coprime_part(&p_bar_a);
        if !stray.is_constant() {
            return QuasiInverse::NotInvertible;
        }
    }
    let mut k = 0u32;
    loop {
        let pk = p_bar_a.pow(k as usize);
        if s.iter().all(|c| c.den.divides(&pk.mul(&c.num))) {
            break;
        }
        k += 1;
        assert!(
            (k as usize) <= lcm.degree() + 1,
            "denominator clearing exceeded its bound"
        );
    }
    let pk = p_bar_a.pow(k as usize);
    let mut v = MultiPoly::zero(&PAIR_VARS);
    for (j, c) in s.iter().enumerate() {
        let cleared = pk.mul(&c.num).div_rem(&c.den).0;
        let as_multi = MultiPoly::from_unipoly(&cleared, &PAIR_VARS);
        let bj = MultiPoly::monomial(&PAIR_VARS, &[0, j as u32], Rational::one());
        v = v.add(&as_multi.mul(&bj));
    }
    QuasiInverse::Inverse {
        v: pa.normal_form(&v),
        k,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rint};

    fn ypoly(coeffs: &[i64]) -> UniPoly<Rational> {
        UniPoly::from_i64(VAR_Y, coeffs)
    }

    fn mp(terms: &[(i64, [u32; 2])]) -> MultiPoly<Rational> {
        let mut p = MultiPoly::zero(&PAIR_VARS);
        for (c, e) in terms {
            p = p.add(&MultiPoly::monomial(&PAIR_VARS, e, rint(*c)));
        }
        p
    }

    fn local_ypoly(coeffs: &[i64]) -> UniPoly<LocalElement> {
        UniPoly::new(
            VAR_Y,
            coeffs.iter().map(|&c| LocalElement::from_i64(c)).collect(),
        )
    }

    #[test]
    fn divided_difference_examples() {
        // y^2 -> a + b
        let pa = divided_difference(&ypoly(&[0, 0, 1])).unwrap();
        assert_eq!(pa.relation(), &mp(&[(1, [1, 0]), (1, [0, 1])]));
        // y^3 -> a^2 + ab + b^2
        let pa = divided_difference(&ypoly(&[0, 0, 0, 1])).unwrap();
        assert_eq!(
            pa.relation(),
            &mp(&[(1, [2, 0]), (1, [1, 1]), (1, [0, 2])])
        );
        // y(y^2+3)/3 -> (a^2 + ab + b^2 + 3)/3
        let base = UniPoly::new(VAR_Y, vec![rint(0), rint(1), rint(0), rat(1, 3)]);
        let pa = divided_difference(&base).unwrap();
        let expected = mp(&[(1, [2, 0]), (1, [1, 1]), (1, [0, 2]), (3, [0, 0])])
            .scale(&rat(1, 3));
        assert_eq!(pa.relation(), &expected);
        // degree < 2 is rejected
        assert!(divided_difference(&ypoly(&[1, 1])).is_err());
    }

    #[test]
    fn divided_difference_identity_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let a = MultiPoly::var(&PAIR_VARS, VAR_A);
        let b = MultiPoly::var(&PAIR_VARS, VAR_B);
        for _ in 0..50 {
            let d = rng.random_range(2..=6usize);
            let mut coeffs: Vec<i64> = (0..=d).map(|_| rng.random_range(-4..=4)).collect();
            if coeffs[d] == 0 {
                coeffs[d] = 1;
            }
            let base = ypoly(&coeffs);
            let pa = divided_difference(&base).unwrap();
            // (b - a) D = PB(b) - PB(a)
            let lhs = b.sub(&a).mul(pa.relation());
            let pb_b = MultiPoly::from_unipoly(
                &UniPoly::new(VAR_B, base.coeffs().to_vec()),
                &PAIR_VARS,
            );
            let pb_a = MultiPoly::from_unipoly(
                &UniPoly::new(VAR_A, base.coeffs().to_vec()),
                &PAIR_VARS,
            );
            assert_eq!(lhs, pb_b.sub(&pb_a));
            // PB(b) - PB(a) reduces to zero in the quotient
            assert!(pa.normal_form(&pb_b.sub(&pb_a)).is_zero());
        }
    }

    #[test]
    fn hensel_already_split() {
        // P = y^2, n = 1: S1 = 1, M = y^2 - t, S2 = 0
        let h = hensel_factorize(&local_ypoly(&[0, 0, 1]), 1).unwrap();
        assert!(h.verify_identity());
        assert!(h.s2.is_zero());
        let m_ty = h.m.with_vars(&[VAR_T, VAR_Y]);
        let expect = MultiPoly::monomial(&[VAR_T, VAR_Y], &[0, 2], rint(1))
            .sub(&MultiPoly::var(&[VAR_T, VAR_Y], VAR_T));
        assert_eq!(m_ty, expect);
        assert_eq!(h.s1.constant_value(), Some(rint(1)));
    }

    #[test]
    fn hensel_monicizes_leading_coefficient() {
        // P = y(y^2+3)/3, n = 1: S1 = 1/3, M = y^3 + 3y - 3t
        let p = UniPoly::new(
            VAR_Y,
            vec![
                LocalElement::zero(),
                LocalElement::one(),
                LocalElement::zero(),
                LocalElement::from_rational(rat(1, 3)),
            ],
        );
        let h = hensel_factorize(&p, 1).unwrap();
        assert!(h.verify_identity());
        assert!(h.s2.is_zero());
        assert_eq!(h.s1.constant_value(), Some(rat(1, 3)));
        let m_ty = h.m.with_vars(&[VAR_T, VAR_Y]);
        let expect = MultiPoly::monomial(&[VAR_T, VAR_Y], &[0, 3], rint(1))
            .add(&MultiPoly::monomial(&[VAR_T, VAR_Y], &[0, 1], rint(3)))
            .sub(&MultiPoly::monomial(&[VAR_T, VAR_Y], &[1, 0], rint(3)));
        assert_eq!(m_ty, expect);
    }

    #[test]
    fn hensel_monic_input_needs_no_remainder() {
        // P = y^2 + x y, n = 2: M = y^2 + x y - t, S1 = 1, S2 = 0
        let p = UniPoly::new(
            VAR_Y,
            vec![
                LocalElement::zero(),
                LocalElement::x_power(1),
                LocalElement::one(),
            ],
        );
        let h = hensel_factorize(&p, 2).unwrap();
        assert!(h.verify_identity());
        assert!(h.s2.is_zero());
        assert_eq!(h.s1.constant_value(), Some(rint(1)));
        assert_eq!(h.m.degree_in(VAR_Y), 2);
        assert_eq!(h.m.coeff_of(VAR_Y, 1).constant_value(), None);
    }

    #[test]
    fn hensel_rejects_constant_reduction() {
        // P = 1 + x y: reduction mod x is the constant 1
        let p = UniPoly::new(VAR_Y, vec![LocalElement::one(), LocalElement::x_power(1)]);
        assert!(matches!(hensel_factorize(&p, 1), Err(Error::ConstantReduction)));
    }

    #[test]
    fn lift_precision_one_is_the_root_itself() {
        let h = hensel_factorize(&local_ypoly(&[0, 0, 1]), 1).unwrap();
        let pa = divided_difference(&h.base).unwrap();
        let (sa, sb) = lift_root_pair(&h, &pa, 1).unwrap();
        assert!(sa.true_eq(&pa, &[MultiPoly::var(&PAIR_VARS, VAR_A)]));
        assert!(sb.true_eq(&pa, &[MultiPoly::var(&PAIR_VARS, VAR_B)]));
    }

    #[test]
    fn lift_solves_the_shifted_quadratic() {
        // P = y^2 + x y, n = 2: sigma_a = a - x/2
        let p = UniPoly::new(
            VAR_Y,
            vec![
                LocalElement::zero(),
                LocalElement::x_power(1),
                LocalElement::one(),
            ],
        );
        let h = hensel_factorize(&p, 2).unwrap();
        let pa = divided_difference(&h.base).unwrap();
        let (sa, sb) = lift_root_pair(&h, &pa, 2).unwrap();
        let a = MultiPoly::var(&PAIR_VARS, VAR_A);
        let minus_half = MultiPoly::constant(&PAIR_VARS, rat(-1, 2));
        assert!(sa.true_eq(&pa, &[a, minus_half.clone()]));
        let b_reduced = pa.normal_form(&MultiPoly::var(&PAIR_VARS, VAR_B));
        assert!(sb.true_eq(&pa, &[b_reduced, minus_half]));
        // defect vanishes mod (x^2, D)
        assert!(root_defect(&h, &pa, &sa).is_zero());
        assert!(root_defect(&h, &pa, &sb).is_zero());
    }

    #[test]
    fn invert_examples() {
        let pa = divided_difference(&ypoly(&[0, 0, 1])).unwrap();
        // u = 1 -> (1, 0)
        match invert(&MultiPoly::one(&PAIR_VARS), &pa) {
            QuasiInverse::Inverse { v, k } => {
                assert_eq!(v, MultiPoly::one(&PAIR_VARS));
                assert_eq!(k, 0);
            }
            _ => panic!("1 must be invertible"),
        }
        // u = p(a) = 2a: relation u v = p(a)^k
        let u = pa.p_bar_a();
        match invert(&u, &pa) {
            QuasiInverse::Inverse { v, k } => {
                let rel = pa.normal_form(&u.mul(&v));
                assert_eq!(rel, pa.normal_form(&pa.p_bar_a().pow(k)));
                assert!(k >= 1);
            }
            _ => panic!("p(a) must be quasi-invertible"),
        }
        // u = a - b reduces to 2a, also quasi-invertible
        let u = mp(&[(1, [1, 0]), (-1, [0, 1])]);
        match invert(&u, &pa) {
            QuasiInverse::Inverse { v, k } => {
                let rel = pa.normal_form(&pa.normal_form(&u).mul(&v));
                assert_eq!(rel, pa.normal_form(&pa.p_bar_a().pow(k)));
            }
            _ => panic!("a - b must be quasi-invertible for base y^2"),
        }
        // zero is never invertible
        assert_eq!(invert(&MultiPoly::zero(&PAIR_VARS), &pa), QuasiInverse::NotInvertible);
    }

    #[test]
    fn invert_detects_zero_divisors() {
        // Base (y^2 - 1)^2 ... use y^4 - 2y^2: derivative 4y^3 - 4y;
        // relation factors, and a - b is a genuine zero divisor for y^4:
        // For base y^4 the relation a^3+a^2 b+a b^2+b^3 meets a+b = 0, and
        // u = a + b vanishes on that component, so u cannot divide a power
        // of p(a).
        let pa = divided_difference(&ypoly(&[0, 0, 0, 0, 1])).unwrap();
        let u = mp(&[(1, [1, 0]), (1, [0, 1])]);
        assert_eq!(invert(&u, &pa), QuasiInverse::NotInvertible);
    }

    #[test]
    fn univariate_specialization_matches_newton_oracle() {
        // P = y^2 + x y at the rational point a0 = 3 (regular: p(3) = 6).
        let p = UniPoly::new(
            VAR_Y,
            vec![
                LocalElement::zero(),
                LocalElement::x_power(1),
                LocalElement::one(),
            ],
        );
        let n = 4usize;
        let h = hensel_factorize(&p, n as u64).unwrap();
        let pa = divided_difference(&h.base).unwrap();
        let (sa, _) = lift_root_pair(&h, &pa, n as u64).unwrap();
        let a0 = rint(3);
        let lam = h.base.eval(&a0);
        let got = sa.specialize_a(&pa, &a0).unwrap();

        // Independent univariate Newton oracle on P(y) - lam over Q[[x]].
        let mut root = TruncSeries::new(vec![a0.clone()]);
        let mut prec = 1;
        while prec < n {
            let next = (2 * prec).min(n);
            root = root.truncate(next);
            let mut padded = root.coeffs().to_vec();
            while padded.len() < next {
                padded.push(Rational::zero());
            }
            root = TruncSeries::new(padded);
            let eval = |series: &TruncSeries, poly: &UniPoly<LocalElement>| {
                let mut acc = TruncSeries::zero(next);
                for c in poly.coeffs().iter().rev() {
                    acc = acc.mul(series).add(&c.expand(next));
                }
                acc
            };
            let pv = eval(&root, &p).sub(&TruncSeries::new({
                let mut v = vec![lam.clone()];
                v.resize(next, Rational::zero());
                v
            }));
            let dpv = eval(&root, &p.derivative());
            root = root.sub(&pv.mul(&dpv.inv().unwrap()));
            prec = next;
        }
        assert_eq!(got.coeffs(), root.truncate(n).coeffs());
    }
}
