//! Twin-triangular derivations of A[y, z1, z2] over the local ring A and
//! their intrinsic computations: freeness, exponential co-action,
//! invariants, branch data.

use std::fmt;

use crate::error::{Error, Result};
use crate::local::{LocalElement, Valuation};
use crate::multipoly::MultiPoly;
use crate::rational::Rational;
use crate::unipoly::UniPoly;

pub const VAR_Y: &str = "y";
pub const VAR_Z1: &str = "z1";
pub const VAR_Z2: &str = "z2";

/// The derivation r d/dy + p1(y) d/dz1 + p2(y) d/dz2. The twin-triangular
/// shape is structural: r depends only on x, the p_i only on (x, y).
///
/// Stored alongside: n = valuation(r), the unit u with r = x^n u, and the
/// rescaled polynomials p_i / u. Dividing the derivation by the unit u
/// reparametrizes the group by a unit and preserves orbits and properness.
#[derive(Clone, PartialEq, Debug)]
pub struct TwinDerivation {
    r: LocalElement,
    p1: UniPoly<LocalElement>,
    p2: UniPoly<LocalElement>,
    n: u64,
    unit: LocalElement,
    p1_norm: UniPoly<LocalElement>,
    p2_norm: UniPoly<LocalElement>,
}

impl TwinDerivation {
    pub fn new(
        r: LocalElement,
        p1: UniPoly<LocalElement>,
        p2: UniPoly<LocalElement>,
    ) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::ZeroCoefficientR);
        }
        assert_eq!(p1.var(), VAR_Y);
        assert_eq!(p2.var(), VAR_Y);
        let (n, unit) = r.unit_factor()?;
        let unit_inv = crate::coeff::Coeff::try_inv(&unit).expect("unit part is invertible");
        let p1_norm = p1.scale(&unit_inv);
        let p2_norm = p2.scale(&unit_inv);
        Ok(TwinDerivation {
            r,
            p1,
            p2,
            n,
            unit,
            p1_norm,
            p2_norm,
        })
    }

    pub fn r(&self) -> &LocalElement {
        &self.r
    }

    pub fn p(&self, i: u8) -> &UniPoly<LocalElement> {
        match i {
            1 => &self.p1,
            2 => &self.p2,
            _ => panic!("component index must be 1 or 2"),
        }
    }

    /// x-adic valuation of r.
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn unit(&self) -> &LocalElement {
        &self.unit
    }

    /// p_i divided by the unit part of r.
    pub fn p_norm(&self, i: u8) -> &UniPoly<LocalElement> {
        match i {
            1 => &self.p1_norm,
            2 => &self.p2_norm,
            _ => panic!("component index must be 1 or 2"),
        }
    }

    /// Residue class of p_i / u modulo x.
    pub fn p_bar(&self, i: u8) -> UniPoly<Rational> {
        self.p_norm(i).map_coeffs(|c| c.reduce_mod_x())
    }

    /// The conjugate model with r = x^n and rescaled p_i.
    pub fn unit_normalized(&self) -> TwinDerivation {
        TwinDerivation::new(
            LocalElement::x_power(self.n as usize),
            self.p1_norm.clone(),
            self.p2_norm.clone(),
        )
        .expect("x^n is nonzero")
    }

    /// Integral of p_i with zero constant term.
    pub fn integral(&self, i: u8) -> UniPoly<LocalElement> {
        self.p(i).formal_integral()
    }

    /// Integral of the rescaled p_i with zero constant term.
    pub fn integral_norm(&self, i: u8) -> UniPoly<LocalElement> {
        self.p_norm(i).formal_integral()
    }

    /// Apply the derivation to a polynomial in (y, z1, z2) and possibly
    /// further formal parameters.
    pub fn apply(&self, f: &MultiPoly<LocalElement>) -> MultiPoly<LocalElement> {
        let vars: Vec<&str> = f.vars().iter().map(|s| s.as_str()).collect();
        let mut vars_y = vars.clone();
        if !vars_y.contains(&VAR_Y) {
            vars_y.push(VAR_Y);
        }
        let r_part = f
            .derivative(VAR_Y)
            .scale(&self.r);
        let p1_poly = MultiPoly::from_unipoly(&self.p1, &vars_y);
        let p2_poly = MultiPoly::from_unipoly(&self.p2, &vars_y);
        let z1_part = f.derivative(VAR_Z1).mul(&p1_poly);
        let z2_part = f.derivative(VAR_Z2).mul(&p2_poly);
        r_part.add(&z1_part).add(&z2_part)
    }
}

impl fmt::Display for TwinDerivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*dy + ({})*dz1 + ({})*dz2", self.r, self.p1, self.p2)
    }
}

/// Set-theoretic freeness: x^n, p1, p2 generate the unit ideal, i.e. r is a
/// unit or the residue classes have no common root.
pub fn check_free(d: &TwinDerivation) -> bool {
    if d.n() == 0 {
        return true;
    }
    let g = d.p_bar(1).gcd(&d.p_bar(2));
    !g.is_zero() && g.is_constant()
}

/// The exponential of the derivation: images of the coordinate functions
/// under the co-action, with a formal group parameter.
#[derive(Clone, Debug, PartialEq)]
pub struct CoactionMap {
    pub s_var: String,
    pub y_image: MultiPoly<LocalElement>,
    pub z1_image: MultiPoly<LocalElement>,
    pub z2_image: MultiPoly<LocalElement>,
}

impl CoactionMap {
    pub fn image(&self, generator: &str) -> &MultiPoly<LocalElement> {
        match generator {
            VAR_Y => &self.y_image,
            VAR_Z1 => &self.z1_image,
            VAR_Z2 => &self.z2_image,
            _ => panic!("unknown generator"),
        }
    }

    /// Apply the ring homomorphism to a polynomial in (y, z1, z2).
    pub fn apply_to(&self, f: &MultiPoly<LocalElement>) -> MultiPoly<LocalElement> {
        f.substitute_many(&[
            (VAR_Y, &self.y_image),
            (VAR_Z1, &self.z1_image),
            (VAR_Z2, &self.z2_image),
        ])
    }
}

/// Co-action of the derivation: y -> y + s r,
/// z_i -> z_i + (P_i(y + s r) - P_i(y)) / r with the division exact.
pub fn coaction(d: &TwinDerivation, s_var: &str) -> CoactionMap {
    let vars = [VAR_Y, VAR_Z1, VAR_Z2, s_var];
    let y = MultiPoly::var(&vars, VAR_Y);
    let s = MultiPoly::var(&vars, s_var);
    let y_image = y.add(&s.scale(&d.r));
    let z_image = |i: u8| {
        let p_int = d.integral(i);
        let p_of_y = MultiPoly::from_unipoly(&p_int, &vars);
        let p_shifted = p_of_y.substitute(VAR_Y, &y_image);
        let diff = p_shifted.sub(&p_of_y);
        let quotient = diff.map_coeffs(|c| {
            c.try_div(&d.r)
                .expect("the co-action difference is divisible by r")
        });
        let z = MultiPoly::var(&vars, if i == 1 { VAR_Z1 } else { VAR_Z2 });
        z.add(&quotient)
    };
    let z1_image = z_image(1);
    let z2_image = z_image(2);
    CoactionMap {
        s_var: s_var.to_string(),
        y_image,
        z1_image,
        z2_image,
    }
}

/// The invariant t_i = -r z_i + P_i(y); requires n >= 1 (otherwise y/r is a
/// slice and the quotient is a coordinate plane).
pub fn invariant(d: &TwinDerivation, i: u8) -> Result<MultiPoly<LocalElement>> {
    if d.n() == 0 {
        return Err(Error::UnitR);
    }
    let vars = [VAR_Y, VAR_Z1, VAR_Z2];
    let z = MultiPoly::var(&vars, if i == 1 { VAR_Z1 } else { VAR_Z2 });
    let p_int = MultiPoly::from_unipoly(&d.integral(i), &vars);
    Ok(p_int.sub(&z.scale(&d.r)))
}

/// Branch data of one component: the mod-x integral, the squarefree branch
/// value polynomial in t, and the squarefree preimage polynomial in y.
#[derive(Clone, Debug, PartialEq)]
pub struct BranchComponent {
    pub p_bar: UniPoly<Rational>,
    pub integral_bar: UniPoly<Rational>,
    pub alpha: UniPoly<Rational>,
    pub preimage: UniPoly<Rational>,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BranchData {
    pub components: [BranchComponent; 2],
}

impl BranchData {
    pub fn component(&self, i: u8) -> &BranchComponent {
        &self.components[(i - 1) as usize]
    }
}

fn branch_component(p_bar: &UniPoly<Rational>) -> Result<BranchComponent> {
    if p_bar.is_zero() {
        return Err(Error::ZeroInput(
            "branch data needs a nonzero residue class; normalize first".into(),
        ));
    }
    let integral_bar = p_bar.formal_integral();
    let degree = integral_bar.degree();
    if p_bar.is_constant() {
        // No critical points: empty branch locus.
        return Ok(BranchComponent {
            p_bar: p_bar.clone(),
            integral_bar,
            alpha: UniPoly::one("t"),
            preimage: UniPoly::one(VAR_Y),
            degree,
        });
    }
    // alpha = squarefree part of Res_y(PB(y) - t, p(y)) in t.
    let yt = [VAR_Y, "t"];
    let pb_minus_t = MultiPoly::from_unipoly(&integral_bar, &yt)
        .sub(&MultiPoly::var(&yt, "t"));
    let p_in_y = MultiPoly::from_unipoly(p_bar, &yt);
    let res = pb_minus_t.resultant(&p_in_y, VAR_Y)?;
    let alpha = res
        .to_unipoly("t")
        .ok_or_else(|| Error::Internal("branch resultant is not univariate in t".into()))?
        .squarefree_part()?;
    // preimage = squarefree part of Res_z(p(z), PB(y) - PB(z)) in y.
    let zy = ["z", VAR_Y];
    let p_in_z = MultiPoly::from_unipoly(&UniPoly::new("z", p_bar.coeffs().to_vec()), &zy);
    let pb_y = MultiPoly::from_unipoly(&integral_bar, &zy);
    let pb_z = MultiPoly::from_unipoly(&UniPoly::new("z", integral_bar.coeffs().to_vec()), &zy);
    let res = p_in_z.resultant(&pb_y.sub(&pb_z), "z")?;
    let preimage = res
        .to_unipoly(VAR_Y)
        .ok_or_else(|| Error::Internal("preimage resultant is not univariate in y".into()))?
        .squarefree_part()?;
    Ok(BranchComponent {
        p_bar: p_bar.clone(),
        integral_bar,
        alpha,
        preimage,
        degree,
    })
}

/// Branch data for both components of a derivation whose residue classes
/// are nonzero.
pub fn branch_data(d: &TwinDerivation) -> Result<BranchData> {
    Ok(BranchData {
        components: [branch_component(&d.p_bar(1))?, branch_component(&d.p_bar(2))?],
    })
}

/// Convenience: is the valuation of an element finite and positive.
pub fn positive_valuation(e: &LocalElement) -> bool {
    matches!(e.valuation(), Valuation::Finite(k) if k > 0)
}
