//! A small Buchberger engine over Q: reduced Groebner bases, ideal
//! membership, unit-ideal detection, radical membership via the
//! Rabinowitsch trick, and lexicographic elimination.

use std::collections::BTreeSet;

use num::traits::One;

use crate::error::{Error, ResourceError, Result};
use crate::multipoly::{MonomialOrder, MultiPoly};
use crate::rational::Rational;

/// Resource bounds for basis computations. Exceeding them produces a
/// structured error, never a wrong answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerConfig {
    pub max_basis_size: usize,
    pub max_degree: usize,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig {
            max_basis_size: 4096,
            max_degree: 128,
        }
    }
}

/// An ideal of Q[vars] given by generators, carried with its monomial order.
#[derive(Clone, Debug)]
pub struct Ideal {
    pub generators: Vec<MultiPoly<Rational>>,
    pub vars: Vec<String>,
    pub order: MonomialOrder,
}

impl Ideal {
    pub fn new(generators: Vec<MultiPoly<Rational>>, vars: &[&str], order: MonomialOrder) -> Self {
        let gens = generators
            .into_iter()
            .map(|g| g.with_vars(vars))
            .filter(|g| !g.is_zero())
            .collect();
        Ideal {
            generators: gens,
            vars: vars.iter().map(|s| s.to_string()).collect(),
            order,
        }
    }
}

/// A reduced Groebner basis: minimal, inter-reduced, monic generators sorted
/// by increasing leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub basis: Vec<MultiPoly<Rational>>,
    pub vars: Vec<String>,
    pub order: MonomialOrder,
}

fn monomial_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| x <= y)
}

fn monomial_lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b.iter()).map(|(x, y)| *x.max(y)).collect()
}

/// Full normal form of `f` with respect to `basis`.
fn reduce_full(
    f: &MultiPoly<Rational>,
    basis: &[MultiPoly<Rational>],
    order: MonomialOrder,
    cfg: &GroebnerConfig,
) -> Result<MultiPoly<Rational>> {
    let vars: Vec<&str> = f.vars().iter().map(|s| s.as_str()).collect();
    let mut work = f.clone();
    let mut out = MultiPoly::zero(&vars);
    let leads: Vec<(Vec<u32>, Rational)> = basis
        .iter()
        .map(|g| g.leading_term(order).expect("basis elements are nonzero"))
        .collect();
    while !work.is_zero() {
        if work.total_degree() as usize > cfg.max_degree {
            return Err(Error::Resource(ResourceError::Degree {
                limit: cfg.max_degree,
                reached: work.total_degree() as usize,
            }));
        }
        let (wm, wc) = work.leading_term(order).unwrap();
        let mut reduced = false;
        for (g, (gm, gc)) in basis.iter().zip(leads.iter()) {
            if monomial_divides(gm, &wm) {
                let quot_exp: Vec<u32> = wm.iter().zip(gm.iter()).map(|(a, b)| a - b).collect();
                let t = MultiPoly::monomial(&vars, &quot_exp, wc.clone() / gc.clone());
                work = work.sub(&t.mul(g));
                reduced = true;
                break;
            }
        }
        if !reduced {
            let t = MultiPoly::monomial(&vars, &wm, wc);
            out = out.add(&t);
            work = work.sub(&t);
        }
    }
    Ok(out)
}

fn s_poly(
    f: &MultiPoly<Rational>,
    g: &MultiPoly<Rational>,
    order: MonomialOrder,
) -> MultiPoly<Rational> {
    let vars: Vec<&str> = f.vars().iter().map(|s| s.as_str()).collect();
    let (fm, fc) = f.leading_term(order).unwrap();
    let (gm, gc) = g.leading_term(order).unwrap();
    let l = monomial_lcm(&fm, &gm);
    let ef: Vec<u32> = l.iter().zip(fm.iter()).map(|(a, b)| a - b).collect();
    let eg: Vec<u32> = l.iter().zip(gm.iter()).map(|(a, b)| a - b).collect();
    let tf = MultiPoly::monomial(&vars, &ef, fc.recip());
    let tg = MultiPoly::monomial(&vars, &eg, gc.recip());
    tf.mul(f).sub(&tg.mul(g))
}

/// Buchberger's algorithm with the normal pair-selection strategy, the
/// product and chain criteria, and content removal after every reduction.
pub fn buchberger(ideal: &Ideal, cfg: &GroebnerConfig) -> Result<GroebnerBasis> {
    let order = ideal.order;
    let mut basis: Vec<MultiPoly<Rational>> = ideal
        .generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.primitive())
        .collect();
    if basis.is_empty() {
        return Ok(GroebnerBasis {
            basis: vec![],
            vars: ideal.vars.clone(),
            order,
        });
    }

    // Queue keyed by total degree of the pair's lcm (normal strategy).
    let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let lcm_deg = |basis: &[MultiPoly<Rational>], i: usize, j: usize| -> u32 {
        let (mi, _) = basis[i].leading_term(order).unwrap();
        let (mj, _) = basis[j].leading_term(order).unwrap();
        monomial_lcm(&mi, &mj).iter().sum()
    };
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            queue.insert((lcm_deg(&basis, i, j), i, j));
        }
    }

    while let Some(&(deg, i, j)) = queue.iter().next() {
        queue.remove(&(deg, i, j));
        let (mi, _) = basis[i].leading_term(order).unwrap();
        let (mj, _) = basis[j].leading_term(order).unwrap();
        let l = monomial_lcm(&mi, &mj);
        // Product criterion: coprime leading monomials.
        if l.iter().sum::<u32>() == mi.iter().sum::<u32>() + mj.iter().sum::<u32>()
            && mi.iter().zip(mj.iter()).all(|(a, b)| *a == 0 || *b == 0)
        {
            continue;
        }
        // Chain criterion: some k with lm(k) dividing the lcm and both
        // side pairs already processed.
        let mut skip = false;
        for k in 0..basis.len() {
            if k == i || k == j {
                continue;
            }
            let (mk, _) = basis[k].leading_term(order).unwrap();
            if monomial_divides(&mk, &l) {
                let p1 = (k.min(i), k.max(i));
                let p2 = (k.min(j), k.max(j));
                let in_queue = |p: (usize, usize)| {
                    queue.contains(&(lcm_deg(&basis, p.0, p.1), p.0, p.1))
                };
                if !in_queue(p1) && !in_queue(p2) {
                    skip = true;
                    break;
                }
            }
        }
        if skip {
            continue;
        }
        let s = s_poly(&basis[i], &basis[j], order);
        let r = reduce_full(&s, &basis, order, cfg)?;
        if r.is_zero() {
            continue;
        }
        let r = r.primitive();
        if r.total_degree() as usize > cfg.max_degree {
            return Err(Error::Resource(ResourceError::Degree {
                limit: cfg.max_degree,
                reached: r.total_degree() as usize,
            }));
        }
        basis.push(r);
        let new = basis.len() - 1;
        if basis.len() > cfg.max_basis_size {
            return Err(Error::Resource(ResourceError::BasisSize {
                limit: cfg.max_basis_size,
                reached: basis.len(),
            }));
        }
        for k in 0..new {
            queue.insert((lcm_deg(&basis, k, new), k, new));
        }
    }

    // Minimalize: drop elements whose leading monomial is divisible by
    // another's.
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let (mi, _) = basis[i].leading_term(order).unwrap();
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (mj, _) = basis[j].leading_term(order).unwrap();
            if monomial_divides(&mj, &mi) && (mi != mj || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<MultiPoly<Rational>> = basis
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(g, _)| g)
        .collect();

    // Inter-reduce tails and monicize.
    let mut reduced: Vec<MultiPoly<Rational>> = vec![];
    for i in 0..minimal.len() {
        let others: Vec<MultiPoly<Rational>> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let r = reduce_full(&minimal[i], &others, order, cfg)?;
        if r.is_zero() {
            continue;
        }
        let (_, lc) = r.leading_term(order).unwrap();
        reduced.push(r.scale(&lc.recip()));
    }
    reduced.sort_by(|a, b| {
        let (ma, _) = a.leading_term(order).unwrap();
        let (mb, _) = b.leading_term(order).unwrap();
        order.cmp(&ma, &mb)
    });

    Ok(GroebnerBasis {
        basis: reduced,
        vars: ideal.vars.clone(),
        order,
    })
}

impl GroebnerBasis {
    pub fn reduce(&self, f: &MultiPoly<Rational>, cfg: &GroebnerConfig) -> Result<MultiPoly<Rational>> {
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        reduce_full(&f.with_vars(&vars), &self.basis, self.order, cfg)
    }

    pub fn is_member(&self, f: &MultiPoly<Rational>, cfg: &GroebnerConfig) -> Result<bool> {
        Ok(self.reduce(f, cfg)?.is_zero())
    }

    /// Reduced basis equal to {1}.
    pub fn is_one(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].constant_value() == Some(Rational::one())
    }

    /// Buchberger criterion: every S-polynomial of basis pairs reduces to
    /// zero. Directly testable; used by the verification suites.
    pub fn satisfies_buchberger_criterion(&self, cfg: &GroebnerConfig) -> Result<bool> {
        for i in 0..self.basis.len() {
            for j in (i + 1)..self.basis.len() {
                let s = s_poly(&self.basis[i], &self.basis[j], self.order);
                if !reduce_full(&s, &self.basis, self.order, cfg)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// True iff 1 belongs to the ideal.
pub fn is_unit_ideal(ideal: &Ideal, cfg: &GroebnerConfig) -> Result<bool> {
    Ok(buchberger(ideal, cfg)?.is_one())
}

/// Radical membership by the Rabinowitsch trick: f vanishes on every common
/// zero of the ideal iff 1 lies in I + (1 - w f) for a fresh variable w.
pub fn radical_member(
    f: &MultiPoly<Rational>,
    ideal: &Ideal,
    cfg: &GroebnerConfig,
) -> Result<bool> {
    let gb = buchberger(ideal, cfg)?;
    if gb.is_one() {
        return Ok(true);
    }
    let f_red = gb.reduce(f, cfg)?;
    if f_red.is_zero() {
        return Ok(true);
    }
    let fresh = "_w";
    assert!(
        !ideal.vars.iter().any(|v| v == fresh),
        "variable name collision with the Rabinowitsch variable"
    );
    let mut ext: Vec<&str> = ideal.vars.iter().map(|s| s.as_str()).collect();
    ext.push(fresh);
    let w = MultiPoly::var(&ext, fresh);
    let one = MultiPoly::one(&ext);
    let mut gens: Vec<MultiPoly<Rational>> = gb.basis.iter().map(|g| g.with_vars(&ext)).collect();
    gens.push(one.sub(&w.mul(&f_red.with_vars(&ext))));
    let extended = Ideal::new(gens, &ext, MonomialOrder::GrevLex);
    is_unit_ideal(&extended, cfg)
}

/// Generators of the elimination ideal retaining only `keep` variables.
/// Computed with a lexicographic basis in which the eliminated variables
/// come first.
pub fn eliminate(
    ideal: &Ideal,
    keep: &[&str],
    cfg: &GroebnerConfig,
) -> Result<Vec<MultiPoly<Rational>>> {
    let eliminated: Vec<&str> = ideal
        .vars
        .iter()
        .map(|s| s.as_str())
        .filter(|v| !keep.contains(v))
        .collect();
    let mut order_vars: Vec<&str> = eliminated.clone();
    order_vars.extend_from_slice(keep);
    let reordered = Ideal::new(ideal.generators.clone(), &order_vars, MonomialOrder::Lex);
    let gb = buchberger(&reordered, cfg)?;
    let kept: Vec<MultiPoly<Rational>> = gb
        .basis
        .iter()
        .filter(|g| eliminated.iter().all(|v| g.degree_in(v) == 0))
        .map(|g| g.with_vars(keep))
        .collect();
    Ok(kept)
}
