//! Coordinate changes making the criterion's hypotheses hold: both residue
//! classes nonzero and disjoint branch-locus preimages.

use num::traits::{One, Zero};

use crate::derivation::{branch_data, check_free, coaction, TwinDerivation, VAR_Z1, VAR_Z2};
use crate::error::{Error, Result};
use crate::local::LocalElement;
use crate::multipoly::MultiPoly;
use crate::rational::Rational;

/// Invertible linear change of the (z1, z2) coordinates.
#[derive(Clone, Debug, PartialEq)]
pub enum Shear {
    /// z1 <- z1 + z2; replaces p1 by p1 + p2.
    SwapIntoZ1,
    /// z2 <- lambda z2 + mu z1; replaces p2 by lambda p2 + mu p1.
    MixZ2 { lambda: Rational, mu: Rational },
}

impl Shear {
    pub fn identity() -> Self {
        Shear::MixZ2 {
            lambda: Rational::one(),
            mu: Rational::zero(),
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, Shear::MixZ2 { lambda, mu } if lambda.is_one() && mu.is_zero())
    }

    /// Matrix of the new coordinates in terms of the old ones, acting on
    /// the column (z1, z2).
    pub fn matrix(&self) -> [[Rational; 2]; 2] {
        match self {
            Shear::SwapIntoZ1 => [
                [Rational::one(), Rational::one()],
                [Rational::zero(), Rational::one()],
            ],
            Shear::MixZ2 { lambda, mu } => [
                [Rational::one(), Rational::zero()],
                [mu.clone(), lambda.clone()],
            ],
        }
    }
}

/// Conjugate the derivation by a shear; the twin-triangular shape is
/// preserved and r is untouched.
pub fn apply_shear(d: &TwinDerivation, shear: &Shear) -> Result<TwinDerivation> {
    match shear {
        Shear::SwapIntoZ1 => TwinDerivation::new(
            d.r().clone(),
            d.p(1).add(d.p(2)),
            d.p(2).clone(),
        ),
        Shear::MixZ2 { lambda, mu } => {
            if lambda.is_zero() {
                return Err(Error::ZeroInput("shear with lambda = 0 is not invertible".into()));
            }
            let p2 = d
                .p(2)
                .scale(&LocalElement::from_rational(lambda.clone()))
                .add(&d.p(1).scale(&LocalElement::from_rational(mu.clone())));
            TwinDerivation::new(d.r().clone(), d.p(1).clone(), p2)
        }
    }
}

/// Deterministic search order for (lambda, mu): expanding square rings with
/// lambda = 1, 2, 3, ... and mu = 0, 1, -1, 2, -2, ...; the identity pair
/// (1, 0) comes first.
fn shear_candidates(bound: usize) -> Vec<(i64, i64)> {
    let mut out = Vec::with_capacity(bound);
    let mut ring = 0i64;
    while out.len() < bound {
        for lam in 1..=(ring + 1) {
            let mus: Vec<i64> = if lam - 1 == ring {
                let mut v = vec![0];
                for m in 1..=ring {
                    v.push(m);
                    v.push(-m);
                }
                v
            } else {
                vec![ring, -ring]
            };
            for mu in mus {
                out.push((lam, mu));
                if out.len() == bound {
                    return out;
                }
            }
        }
        ring += 1;
    }
    out
}

fn residues_nonzero(d: &TwinDerivation) -> bool {
    !d.p_bar(1).is_zero() && !d.p_bar(2).is_zero()
}

fn preimages_disjoint(d: &TwinDerivation) -> Result<bool> {
    let bd = branch_data(d)?;
    let g = bd.component(1).preimage.gcd(&bd.component(2).preimage);
    Ok(g.is_constant() && !g.is_zero())
}

/// Normalize a free derivation with n >= 1: make both residue classes
/// nonzero, then search integer shears until the branch-locus preimages are
/// disjoint. The recorded shears conjugate the input to the output.
pub fn normalize(d: &TwinDerivation, bound: usize) -> Result<(TwinDerivation, Vec<Shear>)> {
    if !check_free(d) {
        return Err(Error::Internal("normalize requires a free derivation".into()));
    }
    if d.n() == 0 {
        return Err(Error::Internal(
            "normalize requires n >= 1; a unit r admits a slice".into(),
        ));
    }
    let mut shears = vec![];
    let mut cur = d.clone();
    if cur.p_bar(1).is_zero() {
        // Freeness forces p2 to have a nonzero constant residue.
        let s = Shear::SwapIntoZ1;
        cur = apply_shear(&cur, &s)?;
        shears.push(s);
    }
    if cur.p_bar(2).is_zero() {
        let s = Shear::MixZ2 {
            lambda: Rational::one(),
            mu: Rational::one(),
        };
        cur = apply_shear(&cur, &s)?;
        shears.push(s);
    }
    debug_assert!(residues_nonzero(&cur));

    let mut tried = 0usize;
    for (lam, mu) in shear_candidates(bound) {
        tried += 1;
        let shear = Shear::MixZ2 {
            lambda: crate::rational::rint(lam),
            mu: crate::rational::rint(mu),
        };
        let candidate = if shear.is_identity() {
            cur.clone()
        } else {
            apply_shear(&cur, &shear)?
        };
        if !residues_nonzero(&candidate) {
            continue;
        }
        if preimages_disjoint(&candidate)? {
            if !shear.is_identity() {
                shears.push(shear);
            }
            verify_normalized(&candidate)?;
            return Ok((candidate, shears));
        }
    }
    Err(Error::NormalizationFailed { tried })
}

/// Postconditions of a successful normalization, checked unconditionally.
fn verify_normalized(d: &TwinDerivation) -> Result<()> {
    if !residues_nonzero(d) {
        return Err(Error::Internal("normalized residue class is zero".into()));
    }
    let g = d.p_bar(1).gcd(&d.p_bar(2));
    if !(g.is_constant() && !g.is_zero()) {
        return Err(Error::Internal("normalized residues are not coprime".into()));
    }
    if !preimages_disjoint(d)? {
        return Err(Error::Internal("branch preimages are not disjoint".into()));
    }
    Ok(())
}

/// Check that the recorded shears conjugate the original co-action to the
/// normalized one: substituting the old-coordinate expressions of the new
/// variables into the normalized images must reproduce the matrix
/// combination of the original images.
pub fn verify_conjugacy(
    original: &TwinDerivation,
    normalized: &TwinDerivation,
    shears: &[Shear],
) -> bool {
    let mut m = [
        [Rational::one(), Rational::zero()],
        [Rational::zero(), Rational::one()],
    ];
    for s in shears {
        let sm = s.matrix();
        let mut next = [
            [Rational::zero(), Rational::zero()],
            [Rational::zero(), Rational::zero()],
        ];
        for i in 0..2 {
            for j in 0..2 {
                for (k, row) in m.iter().enumerate() {
                    next[i][j] += sm[i][k].clone() * row[j].clone();
                }
            }
        }
        m = next;
    }
    let c_old = coaction(original, "s");
    let c_new = coaction(normalized, "s");
    if c_old.y_image != c_new.y_image {
        return false;
    }
    let vars = [crate::derivation::VAR_Y, VAR_Z1, VAR_Z2, "s"];
    let z1 = MultiPoly::var(&vars, VAR_Z1);
    let z2 = MultiPoly::var(&vars, VAR_Z2);
    let lin = |row: &[Rational; 2]| {
        z1.scale(&LocalElement::from_rational(row[0].clone()))
            .add(&z2.scale(&LocalElement::from_rational(row[1].clone())))
    };
    let z1_expr = lin(&m[0]);
    let z2_expr = lin(&m[1]);
    for (i, img_new) in [(0usize, &c_new.z1_image), (1usize, &c_new.z2_image)] {
        let lhs = img_new.substitute_many(&[(VAR_Z1, &z1_expr), (VAR_Z2, &z2_expr)]);
        let rhs = c_old
            .z1_image
            .scale(&LocalElement::from_rational(m[i][0].clone()))
            .add(
                &c_old
                    .z2_image
                    .scale(&LocalElement::from_rational(m[i][1].clone())),
            );
        if lhs != rhs {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rint};
    use crate::unipoly::UniPoly;

    fn lp(coeffs: &[i64]) -> UniPoly<LocalElement> {
        UniPoly::new(
            crate::derivation::VAR_Y,
            coeffs.iter().map(|&c| LocalElement::from_i64(c)).collect(),
        )
    }

    fn x() -> LocalElement {
        LocalElement::x_power(1)
    }

    fn d_n(n: usize) -> TwinDerivation {
        let mut p2 = vec![1i64];
        p2.extend(std::iter::repeat(0).take(n - 1));
        p2.push(1);
        TwinDerivation::new(x(), lp(&[0, 2]), lp(&p2)).unwrap()
    }

    #[test]
    fn identity_shear_is_a_no_op() {
        let d = d_n(2);
        let d2 = apply_shear(&d, &Shear::identity()).unwrap();
        assert_eq!(d, d2);
    }

    #[test]
    fn mix_shear_adds_polynomials() {
        // D2 with (lambda = 1, mu = 1): p2 <- 1 + y^2 + 2y = (1 + y)^2
        let d = d_n(2);
        let s = Shear::MixZ2 {
            lambda: rint(1),
            mu: rint(1),
        };
        let d2 = apply_shear(&d, &s).unwrap();
        assert_eq!(d2.p_bar(2), UniPoly::from_i64("y", &[1, 2, 1]));
    }

    #[test]
    fn zero_lambda_is_rejected() {
        let d = d_n(2);
        let s = Shear::MixZ2 {
            lambda: rint(0),
            mu: rint(1),
        };
        assert!(apply_shear(&d, &s).is_err());
    }

    #[test]
    fn d_family_needs_no_shear() {
        for n in 1..=4 {
            let d = d_n(n);
            let (nd, shears) = normalize(&d, 200).unwrap();
            assert!(shears.is_empty(), "D_{} expected identity, got {:?}", n, shears);
            assert_eq!(nd, d);
        }
    }

    #[test]
    fn zero_first_residue_triggers_swap() {
        // p1 = x y (zero residue), p2 = 2 + x: free since residue of p2 is
        // the nonzero constant 2.
        let p1 = lp(&[0, 1]).scale(&x());
        let p2 = UniPoly::constant(
            "y",
            LocalElement::from_i64(2).add(&x()),
        );
        let d = TwinDerivation::new(x(), p1, p2).unwrap();
        assert!(check_free(&d));
        let (nd, shears) = normalize(&d, 200).unwrap();
        assert_eq!(shears[0], Shear::SwapIntoZ1);
        assert!(!nd.p_bar(1).is_zero());
        assert!(verify_conjugacy(&d, &nd, &shears));
    }

    #[test]
    fn constant_residues_are_vacuously_normalized() {
        let d = TwinDerivation::new(x(), lp(&[1, 0, 0]), lp(&[3])).unwrap();
        let (_, shears) = normalize(&d, 200).unwrap();
        assert!(shears.is_empty());
    }

    #[test]
    fn overlapping_preimages_force_a_shear() {
        // p1 = 2y, p2 = 3(y-1)(y-3): PB2 = y(y-3)^2 has branch values 4 and
        // 0 with preimages {1, 4} and {0, 3}. The preimage of the branch
        // locus of PB1 = y^2 is {0}, so the preimages overlap at y = 0 while
        // the residues stay coprime.
        let d = TwinDerivation::new(x(), lp(&[0, 2]), lp(&[9, -12, 3])).unwrap();
        assert!(check_free(&d));
        let bd = branch_data(&d).unwrap();
        let g = bd.component(1).preimage.gcd(&bd.component(2).preimage);
        assert!(g.degree() >= 1, "test setup: preimages must overlap");
        let (nd, shears) = normalize(&d, 200).unwrap();
        assert!(!shears.is_empty());
        assert!(preimages_disjoint(&nd).unwrap());
        assert!(verify_conjugacy(&d, &nd, &shears));
    }

    #[test]
    fn normalization_is_deterministic() {
        let d = TwinDerivation::new(x(), lp(&[0, 2]), lp(&[9, -12, 3])).unwrap();
        let (n1, s1) = normalize(&d, 200).unwrap();
        let (n2, s2) = normalize(&d, 200).unwrap();
        assert_eq!(n1, n2);
        assert_eq!(s1, s2);
    }

    #[test]
    fn exhausted_search_reports_failure() {
        let d = TwinDerivation::new(x(), lp(&[0, 2]), lp(&[9, -12, 3])).unwrap();
        match normalize(&d, 1) {
            Err(Error::NormalizationFailed { tried }) => assert_eq!(tried, 1),
            other => panic!("expected normalization failure, got {:?}", other),
        }
    }

    #[test]
    fn mix_preserves_freeness_and_conjugacy() {
        let d = d_n(3);
        let s = Shear::MixZ2 {
            lambda: rat(2, 1),
            mu: rat(-1, 1),
        };
        let d2 = apply_shear(&d, &s).unwrap();
        assert!(check_free(&d2));
        assert!(verify_conjugacy(&d, &d2, &[s]));
    }
}
