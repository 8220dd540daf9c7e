//! The verdict pipeline: transition cocycles of the quotient construction,
//! the affineness test on their pole structure, and the properness
//! criterion in generic (all regular values at once) and specialized
//! (single value) modes.
//!
//! Both quantifiers of the criterion — over pairs of distinct roots and
//! over regular values — are discharged by a single radical-membership
//! test in the pair algebra, with the base-curve coordinate t carried
//! implicitly as PB(a).

use num::traits::Zero;

use crate::config::PipelineConfig;
use crate::derivation::{branch_data, check_free, BranchComponent, TwinDerivation};
use crate::error::{Error, Result};
use crate::groebner::{eliminate, is_unit_ideal, radical_member, Ideal};
use crate::multipoly::{MonomialOrder, MultiPoly};
use crate::normalize::{normalize, Shear};
use crate::pair::{
    divided_difference, eval_local_poly_at, hensel_factorize, invert, lift_root_pair,
    PairAlgebra, PairSeries, QuasiInverse, VAR_A, VAR_B,
};
use crate::rational::Rational;
use crate::report::{Timings, VerdictReport};
use crate::unipoly::UniPoly;

const PAIR_VARS: [&str; 2] = [VAR_A, VAR_B];
const VAR_T: &str = "t";

/// A Laurent tail x^(-pole_order) * (c_0 + c_1 x + ...) over the pair
/// algebra, together with the branch data of the component it came from.
#[derive(Clone, Debug)]
pub struct LaurentCocycle {
    pub pole_order: u64,
    pub tail: PairSeries,
    pub algebra: PairAlgebra,
    /// Squarefree branch-value polynomial of the component, in t.
    pub alpha: UniPoly<Rational>,
    /// Mod-x integral of the component.
    pub integral_bar: UniPoly<Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AffineMode {
    /// The leading tail coefficient must be quasi-invertible outright.
    StrictUnit,
    /// The leading tail coefficient may vanish only over branch values.
    RegularLocus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Satisfied,
    Violated,
    Vacuous,
}

/// Evidence attached to a violated component: the eliminant of the zero
/// locus in t (with branch factors removed), and its rational roots. A
/// missing eliminant means the violation covers a dense set of values.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub eliminant: Option<UniPoly<Rational>>,
    pub rational_values: Vec<Rational>,
}

#[derive(Clone, Debug)]
pub struct ComponentVerdict {
    pub i: u8,
    pub j: u8,
    pub status: CheckStatus,
    pub fiber_degree: usize,
    pub pole_order: u64,
    /// Smallest index with a nonzero tail coefficient.
    pub true_valuation: Option<usize>,
    /// Which of the n tail coefficients are nonzero in the pair algebra.
    pub nonzero_coeffs: Vec<bool>,
    pub witness: Option<Witness>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Proper,
    Improper,
    NotFree,
    TriviallyProper,
    Indeterminate,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Proper => "PROPER",
            Verdict::Improper => "IMPROPER",
            Verdict::NotFree => "NOT_FREE",
            Verdict::TriviallyProper => "TRIVIALLY_PROPER",
            Verdict::Indeterminate => "INDETERMINATE",
        }
    }
}

/// Shared per-component data: pair algebra, Hensel factorization, and the
/// lifted pair of generic roots, all at precision n.
struct ComponentContext {
    branch: BranchComponent,
    algebra: PairAlgebra,
    sigma_a: PairSeries,
    sigma_b: PairSeries,
    n: u64,
}

fn component_context(d: &TwinDerivation, i: u8) -> Result<Option<ComponentContext>> {
    let n = d.n();
    if n == 0 {
        return Err(Error::UnitR);
    }
    let bd = branch_data(d)?;
    let branch = bd.component(i).clone();
    if branch.degree < 2 {
        return Ok(None);
    }
    let h = hensel_factorize(&d.integral_norm(i), n)?;
    let algebra = divided_difference(&h.base)?;
    let (sigma_a, sigma_b) = lift_root_pair(&h, &algebra, n)?;
    Ok(Some(ComponentContext {
        branch,
        algebra,
        sigma_a,
        sigma_b,
        n,
    }))
}

/// Transition cocycle of the restricted quotient: x^(-n) (sigma_a - sigma_b).
pub fn base_cocycle(d: &TwinDerivation, i: u8) -> Result<LaurentCocycle> {
    let ctx = component_context(d, i)?.ok_or_else(|| Error::VacuousComponent {
        i,
        j: i,
        d: 1,
    })?;
    let tail = ctx
        .sigma_a
        .sub(&ctx.sigma_b, &ctx.algebra)
        .normalize_dens(&ctx.algebra);
    Ok(LaurentCocycle {
        pole_order: ctx.n,
        tail,
        algebra: ctx.algebra,
        alpha: ctx.branch.alpha,
        integral_bar: ctx.branch.integral_bar,
    })
}

/// Lifted transition cocycle of the extended quotient:
/// x^(-n) (P_j(sigma_a) - P_j(sigma_b)) for the other component j.
pub fn lifted_cocycle(d: &TwinDerivation, i: u8, j: u8) -> Result<LaurentCocycle> {
    assert_ne!(i, j, "lifted cocycle needs two distinct components");
    let ctx = component_context(d, i)?.ok_or_else(|| Error::VacuousComponent {
        i,
        j,
        d: 1,
    })?;
    let p_j = d.integral_norm(j);
    let va = eval_local_poly_at(&p_j, &ctx.sigma_a, &ctx.algebra);
    let vb = eval_local_poly_at(&p_j, &ctx.sigma_b, &ctx.algebra);
    let tail = va.sub(&vb, &ctx.algebra).normalize_dens(&ctx.algebra);
    Ok(LaurentCocycle {
        pole_order: ctx.n,
        tail,
        algebra: ctx.algebra,
        alpha: ctx.branch.alpha,
        integral_bar: ctx.branch.integral_bar,
    })
}

/// Pull the branch polynomial back along t = PB(a).
fn alpha_pullback(alpha: &UniPoly<Rational>, integral_bar: &UniPoly<Rational>) -> MultiPoly<Rational> {
    let pb_in_a = UniPoly::new(VAR_A, integral_bar.coeffs().to_vec());
    MultiPoly::from_unipoly(&alpha.compose(&pb_in_a), &PAIR_VARS)
}

#[derive(Clone, Debug, PartialEq)]
pub struct AffineCertificate {
    pub true_valuation: Option<usize>,
    pub pole_ok: bool,
    pub leading_ok: bool,
}

/// Affineness of the bundle described by a cocycle: a genuine pole whose
/// leading coefficient is invertible in the required sense.
pub fn cocycle_affine(
    f: &LaurentCocycle,
    mode: AffineMode,
    cfg: &PipelineConfig,
) -> Result<(bool, AffineCertificate)> {
    let m = match f.tail.order() {
        Some(m) => m,
        None => {
            return Ok((
                false,
                AffineCertificate {
                    true_valuation: None,
                    pole_ok: false,
                    leading_ok: false,
                },
            ))
        }
    };
    let min_pole = if cfg.strict_pole { 2 } else { 1 };
    let pole_ok = f.pole_order >= m as u64 + min_pole;
    let leading = &f.tail.coeffs()[m];
    let leading_ok = match mode {
        AffineMode::StrictUnit => {
            matches!(invert(leading, &f.algebra), QuasiInverse::Inverse { .. })
        }
        AffineMode::RegularLocus => {
            let ideal = Ideal::new(
                vec![f.algebra.relation().clone(), leading.clone()],
                &PAIR_VARS,
                MonomialOrder::GrevLex,
            );
            let pullback = alpha_pullback(&f.alpha, &f.integral_bar);
            radical_member(&pullback, &ideal, &cfg.groebner())?
        }
    };
    Ok((
        pole_ok && leading_ok,
        AffineCertificate {
            true_valuation: Some(m),
            pole_ok,
            leading_ok,
        },
    ))
}

fn vacuous_verdict(d: &TwinDerivation, i: u8, j: u8) -> ComponentVerdict {
    ComponentVerdict {
        i,
        j,
        status: CheckStatus::Vacuous,
        fiber_degree: 1,
        pole_order: d.n(),
        true_valuation: None,
        nonzero_coeffs: vec![],
        witness: None,
    }
}

/// Fiber ideal over a fixed value: (PB(a) - lambda, D, c_0, ..., c_{n-1}).
fn fiber_is_unit(
    ctx_relation: &MultiPoly<Rational>,
    integral_bar: &UniPoly<Rational>,
    coeffs: &[MultiPoly<Rational>],
    lambda: &Rational,
    cfg: &PipelineConfig,
) -> Result<bool> {
    let pb_in_a = UniPoly::new(VAR_A, integral_bar.coeffs().to_vec());
    let fiber = MultiPoly::from_unipoly(&pb_in_a, &PAIR_VARS)
        .sub(&MultiPoly::constant(&PAIR_VARS, lambda.clone()));
    let mut gens = vec![fiber, ctx_relation.clone()];
    gens.extend(coeffs.iter().cloned());
    let ideal = Ideal::new(gens, &PAIR_VARS, MonomialOrder::GrevLex);
    is_unit_ideal(&ideal, &cfg.groebner())
}

/// Generic criterion component: all tail coefficients may vanish
/// simultaneously only over branch values. Discharges "every pair over
/// every regular value" in one radical-membership test.
pub fn generic_check(
    d: &TwinDerivation,
    i: u8,
    j: u8,
    cfg: &PipelineConfig,
) -> Result<ComponentVerdict> {
    assert_ne!(i, j);
    let ctx = match component_context(d, i)? {
        Some(ctx) => ctx,
        None => return Ok(vacuous_verdict(d, i, j)),
    };
    let cocycle = lifted_cocycle(d, i, j)?;
    let coeffs = cocycle.tail.coeffs();
    let nonzero: Vec<bool> = coeffs.iter().map(|c| !c.is_zero()).collect();
    let mut gens = vec![ctx.algebra.relation().clone()];
    gens.extend(coeffs.iter().filter(|c| !c.is_zero()).cloned());
    let ideal = Ideal::new(gens.clone(), &PAIR_VARS, MonomialOrder::GrevLex);
    let pullback = alpha_pullback(&ctx.branch.alpha, &ctx.branch.integral_bar);
    let satisfied = radical_member(&pullback, &ideal, &cfg.groebner())?;
    let witness = if satisfied {
        None
    } else {
        Some(extract_witness(&ctx, coeffs, cfg)?)
    };
    Ok(ComponentVerdict {
        i,
        j,
        status: if satisfied {
            CheckStatus::Satisfied
        } else {
            CheckStatus::Violated
        },
        fiber_degree: ctx.branch.degree,
        pole_order: ctx.n,
        true_valuation: cocycle.tail.order(),
        nonzero_coeffs: nonzero,
        witness,
    })
}

/// Eliminant of the violating locus in t, branch factors removed, plus its
/// rational roots. When the elimination ideal is zero the violation is
/// dense and a sampled rational witness is reported instead.
fn extract_witness(
    ctx: &ComponentContext,
    coeffs: &[MultiPoly<Rational>],
    cfg: &PipelineConfig,
) -> Result<Witness> {
    let vars = [VAR_A, VAR_B, VAR_T];
    let pb_in_a = UniPoly::new(VAR_A, ctx.branch.integral_bar.coeffs().to_vec());
    let t_minus_pb = MultiPoly::var(&vars, VAR_T)
        .sub(&MultiPoly::from_unipoly(&pb_in_a, &vars));
    let mut gens = vec![ctx.algebra.relation().with_vars(&vars), t_minus_pb];
    gens.extend(coeffs.iter().filter(|c| !c.is_zero()).map(|c| c.with_vars(&vars)));
    let ideal = Ideal::new(gens, &vars, MonomialOrder::Lex);
    let elim = eliminate(&ideal, &[VAR_T], &cfg.groebner())?;
    let mut gen_t: Option<UniPoly<Rational>> = None;
    for g in &elim {
        if let Some(u) = g.to_unipoly(VAR_T) {
            gen_t = Some(match gen_t {
                None => u,
                Some(prev) => prev.gcd(&u),
            });
        }
    }
    match gen_t {
        Some(e) if !e.is_zero() => {
            let e_reg = e.coprime_part(&ctx.branch.alpha);
            let rational_values = e_reg.rational_roots().unwrap_or_default();
            debug_assert!(rational_values
                .iter()
                .all(|v| !ctx.branch.alpha.eval(v).is_zero()));
            Ok(Witness {
                eliminant: Some(e_reg),
                rational_values,
            })
        }
        _ => {
            // Dense violation: almost every regular value is a witness.
            let mut sampled = vec![];
            let mut k = 0i64;
            let mut tries = 0;
            while tries < 100 {
                let lambda = crate::rational::rint(k);
                k = if k >= 0 { -(k + 1) } else { -k };
                if ctx.branch.alpha.eval(&lambda).is_zero() {
                    continue;
                }
                tries += 1;
                if !fiber_is_unit(
                    ctx.algebra.relation(),
                    &ctx.branch.integral_bar,
                    coeffs,
                    &lambda,
                    cfg,
                )? {
                    sampled.push(lambda);
                    break;
                }
            }
            Ok(Witness {
                eliminant: None,
                rational_values: sampled,
            })
        }
    }
}

/// Single-value criterion component at a regular value lambda: no pair of
/// roots over lambda kills all tail coefficients.
pub fn specialized_check(
    d: &TwinDerivation,
    i: u8,
    j: u8,
    lambda: &Rational,
    cfg: &PipelineConfig,
) -> Result<CheckStatus> {
    assert_ne!(i, j);
    let ctx = match component_context(d, i)? {
        Some(ctx) => ctx,
        None => {
            return Err(Error::VacuousComponent { i, j, d: 1 });
        }
    };
    if ctx.branch.alpha.eval(lambda).is_zero() {
        return Err(Error::RegularValueRequired(lambda.to_string()));
    }
    let cocycle = lifted_cocycle(d, i, j)?;
    let unit = fiber_is_unit(
        ctx.algebra.relation(),
        &ctx.branch.integral_bar,
        cocycle.tail.coeffs(),
        lambda,
        cfg,
    )?;
    Ok(if unit {
        CheckStatus::Satisfied
    } else {
        CheckStatus::Violated
    })
}

/// The full pipeline: freeness, unit normalization, shear normalization,
/// and the two generic component checks. Every failure mode is encoded in
/// the report.
pub fn properness_verdict(d: &TwinDerivation, cfg: &PipelineConfig) -> VerdictReport {
    let started = std::time::Instant::now();
    let mut report = VerdictReport::new(d, cfg);
    if !check_free(d) {
        report.verdict = Verdict::NotFree;
        report.timings = Timings::total_only(started.elapsed());
        return report;
    }
    if d.n() == 0 {
        report.verdict = Verdict::TriviallyProper;
        report.timings = Timings::total_only(started.elapsed());
        return report;
    }
    let normalized = d.unit_normalized();
    let (normalized, shears) = match normalize(&normalized, cfg.shear_search_bound) {
        Ok(pair) => pair,
        Err(e) => {
            report.verdict = Verdict::Indeterminate;
            report.indeterminate_reason = Some(e.to_string());
            report.timings = Timings::total_only(started.elapsed());
            return report;
        }
    };
    report.shears = shears;
    report.normalized = Some(normalized.clone());
    let mut component_times = vec![];
    for (i, j) in [(1u8, 2u8), (2u8, 1u8)] {
        let t0 = std::time::Instant::now();
        match generic_check(&normalized, i, j, cfg) {
            Ok(v) => report.components.push(v),
            Err(e) => {
                report.verdict = Verdict::Indeterminate;
                report.indeterminate_reason = Some(e.to_string());
                report.timings = Timings::total_only(started.elapsed());
                return report;
            }
        }
        component_times.push(t0.elapsed());
    }
    let any_violated = report
        .components
        .iter()
        .any(|c| c.status == CheckStatus::Violated);
    report.verdict = if any_violated {
        Verdict::Improper
    } else {
        Verdict::Proper
    };
    for c in &report.components {
        if let Some(w) = &c.witness {
            for v in &w.rational_values {
                if !report.witnesses.contains(v) {
                    report.witnesses.push(v.clone());
                }
            }
        }
    }
    report.witnesses.sort();
    report.timings = Timings::new(started.elapsed(), component_times);
    report
}

/// Deterministic enumeration of rational regular values, for consistency
/// suites: 0, 1, -1, 2, -2, ... skipping branch values.
pub fn regular_values(alpha: &UniPoly<Rational>, count: usize) -> Vec<Rational> {
    let mut out = vec![];
    let mut k = 0i64;
    while out.len() < count {
        let lambda = crate::rational::rint(k);
        k = if k >= 0 { -(k + 1) } else { -k };
        if !alpha.eval(&lambda).is_zero() {
            out.push(lambda);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local::LocalElement;
    use crate::rational::rint;

    fn lp(coeffs: &[i64]) -> UniPoly<LocalElement> {
        UniPoly::new(
            "y",
            coeffs.iter().map(|&c| LocalElement::from_i64(c)).collect(),
        )
    }

    fn d_n(n: usize) -> TwinDerivation {
        let mut p2 = vec![1i64];
        p2.extend(std::iter::repeat(0).take(n - 1));
        p2.push(1);
        TwinDerivation::new(LocalElement::x_power(1), lp(&[0, 2]), lp(&p2)).unwrap()
    }

    fn cfg() -> PipelineConfig {
        PipelineConfig::default()
    }

    #[test]
    fn base_cocycle_tail_is_the_root_difference() {
        // Pole order 1 and tail a - b for the degree-2 component of D1.
        let d = d_n(1);
        let c = base_cocycle(&d, 1).unwrap();
        assert_eq!(c.pole_order, 1);
        let a = MultiPoly::var(&PAIR_VARS, VAR_A);
        let b = MultiPoly::var(&PAIR_VARS, VAR_B);
        let expected = c.algebra.normal_form(&a.sub(&b));
        assert!(c.tail.true_eq(&c.algebra, &[expected]));
        // Same for the degree-3 component of D2.
        let d = d_n(2);
        let c = base_cocycle(&d, 2).unwrap();
        let expected = c.algebra.normal_form(&a.sub(&b));
        assert!(c.tail.true_eq(&c.algebra, &[expected]));
    }

    #[test]
    fn base_cocycle_on_a_linear_component_is_vacuous() {
        // p1 constant: fiber degree 1, no pairs.
        let d = TwinDerivation::new(LocalElement::x_power(1), lp(&[1]), lp(&[0, 2])).unwrap();
        assert!(matches!(
            base_cocycle(&d, 1),
            Err(Error::VacuousComponent { .. })
        ));
    }

    #[test]
    fn lifted_cocycle_of_d2_squares_the_roots() {
        // D2, i = 2, j = 1: tail = a^2 - b^2 at precision 1.
        let d = d_n(2);
        let c = lifted_cocycle(&d, 2, 1).unwrap();
        let a = MultiPoly::var(&PAIR_VARS, VAR_A);
        let b = MultiPoly::var(&PAIR_VARS, VAR_B);
        let expected = c.algebra.normal_form(&a.mul(&a).sub(&b.mul(&b)));
        assert!(c.tail.true_eq(&c.algebra, &[expected]));
    }

    #[test]
    fn lifted_cocycle_of_d1_reduces_along_the_relation() {
        // D1, i = 1, j = 2: P2(a) - P2(b) = (a - b)(1 + (a + b)/2) reduces
        // to a - b since a + b = 0 in the algebra of y^2.
        let d = d_n(1);
        let c = lifted_cocycle(&d, 1, 2).unwrap();
        let a = MultiPoly::var(&PAIR_VARS, VAR_A);
        let b = MultiPoly::var(&PAIR_VARS, VAR_B);
        let expected = c.algebra.normal_form(&a.sub(&b));
        assert!(c.tail.true_eq(&c.algebra, &[expected]));
    }

    #[test]
    fn affineness_examples() {
        let d = d_n(1);
        let c = base_cocycle(&d, 1).unwrap();
        // regular-locus mode: zeros of a - b force a critical pair.
        let (ok, cert) = cocycle_affine(&c, AffineMode::RegularLocus, &cfg()).unwrap();
        assert!(ok);
        assert_eq!(cert.true_valuation, Some(0));
        // no pole: tail shifted behind the pole order fails.
        let mut no_pole = c.clone();
        no_pole.pole_order = 0;
        let (ok, cert) = cocycle_affine(&no_pole, AffineMode::RegularLocus, &cfg()).unwrap();
        assert!(!ok);
        assert!(!cert.pole_ok);
        // strict-pole configuration requires order >= 2.
        let mut strict = cfg();
        strict.strict_pole = true;
        let (ok, _) = cocycle_affine(&c, AffineMode::RegularLocus, &strict).unwrap();
        assert!(!ok);
    }

    #[test]
    fn strict_unit_mode_accepts_units_and_rejects_zero_tails() {
        let d = d_n(1);
        let c = base_cocycle(&d, 1).unwrap();
        // a - b reduces to 2a + 2 in B(y^2 + 2y ... ) — for D1 the algebra
        // is y^2 + ... : the reduced tail is quasi-invertible.
        let (ok, _) = cocycle_affine(&c, AffineMode::StrictUnit, &cfg()).unwrap();
        assert!(ok);
        let mut zero_tail = c.clone();
        zero_tail.tail = PairSeries::constant(MultiPoly::zero(&PAIR_VARS), 1)
            .sub(&PairSeries::constant(MultiPoly::zero(&PAIR_VARS), 1), &c.algebra);
        let (ok, cert) = cocycle_affine(&zero_tail, AffineMode::StrictUnit, &cfg()).unwrap();
        assert!(!ok);
        assert_eq!(cert.true_valuation, None);
    }

    #[test]
    fn generic_check_matches_the_even_odd_family() {
        // D2, (i=2, j=1) is violated with rational witness t = 0.
        let d = d_n(2);
        let v = generic_check(&d, 2, 1, &cfg()).unwrap();
        assert_eq!(v.status, CheckStatus::Violated);
        let w = v.witness.unwrap();
        assert!(w.rational_values.contains(&rint(0)));
        // D1: both components satisfied.
        let d = d_n(1);
        for (i, j) in [(1, 2), (2, 1)] {
            let v = generic_check(&d, i, j, &cfg()).unwrap();
            assert_eq!(v.status, CheckStatus::Satisfied, "component ({}, {})", i, j);
        }
    }

    #[test]
    fn specialized_check_examples() {
        // D2 at lambda = 0 for (2, 1): violated.
        let d = d_n(2);
        assert_eq!(
            specialized_check(&d, 2, 1, &rint(0), &cfg()).unwrap(),
            CheckStatus::Violated
        );
        // D3 at lambda = 0 for (2, 1): satisfied.
        let d = d_n(3);
        assert_eq!(
            specialized_check(&d, 2, 1, &rint(0), &cfg()).unwrap(),
            CheckStatus::Satisfied
        );
        // Branch value is rejected: alpha_1 = t for P1 = y^2, so 0 is a
        // branch value of component 1.
        assert!(matches!(
            specialized_check(&d, 1, 2, &rint(0), &cfg()),
            Err(Error::RegularValueRequired(_))
        ));
    }

    #[test]
    fn verdict_family() {
        for n in [2usize, 4] {
            let r = properness_verdict(&d_n(n), &cfg());
            assert_eq!(r.verdict, Verdict::Improper, "D_{}", n);
            assert!(r.witnesses.contains(&rint(0)), "D_{} witness", n);
        }
        for n in [1usize, 3, 5] {
            let r = properness_verdict(&d_n(n), &cfg());
            assert_eq!(r.verdict, Verdict::Proper, "D_{}", n);
        }
    }

    #[test]
    fn verdict_trivial_and_not_free() {
        // r = 1: trivially proper.
        let d = TwinDerivation::new(LocalElement::one(), lp(&[0, 1]), lp(&[1])).unwrap();
        let r = properness_verdict(&d, &cfg());
        assert_eq!(r.verdict, Verdict::TriviallyProper);
        // common root: not free.
        let d = TwinDerivation::new(LocalElement::x_power(1), lp(&[0, 1]), lp(&[0, 1])).unwrap();
        let r = properness_verdict(&d, &cfg());
        assert_eq!(r.verdict, Verdict::NotFree);
    }

    #[test]
    fn verdict_vacuous_components_are_proper() {
        // Both residues constant: no pairs anywhere, free, n = 1.
        let d = TwinDerivation::new(LocalElement::x_power(1), lp(&[1, 0]), lp(&[3])).unwrap();
        let r = properness_verdict(&d, &cfg());
        assert_eq!(r.verdict, Verdict::Proper);
        assert!(r
            .components
            .iter()
            .all(|c| c.status == CheckStatus::Vacuous));
    }

    #[test]
    fn verdict_reports_normalization_failure_as_indeterminate() {
        let mut tight = cfg();
        tight.shear_search_bound = 1;
        let d = TwinDerivation::new(LocalElement::x_power(1), lp(&[0, 2]), lp(&[9, -12, 3]))
            .unwrap();
        let r = properness_verdict(&d, &tight);
        assert_eq!(r.verdict, Verdict::Indeterminate);
        assert!(r.indeterminate_reason.is_some());
    }

    #[test]
    fn pipeline_is_deterministic() {
        let r1 = properness_verdict(&d_n(2), &cfg());
        let r2 = properness_verdict(&d_n(2), &cfg());
        assert_eq!(
            r1.to_json_without_timings().to_string(),
            r2.to_json_without_timings().to_string()
        );
    }
}
