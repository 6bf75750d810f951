//! Buchberger's algorithm with normal pair selection, producing the reduced
//! Gröbner basis (unique for a given ideal and monomial order).

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::One;

use super::poly::{monomials_of_weight, GradedPolynomial, MonomialOrder, VarSet};
use super::PolyError;

const MAX_BASIS: usize = 512;

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm_exp(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn sub_exp(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Full multivariate division: every term of the result is reducible by no
/// element of `basis`. Deterministic (first dividing basis element wins).
pub fn normal_form(
    f: &GradedPolynomial,
    basis: &[GradedPolynomial],
    order: MonomialOrder,
) -> GradedPolynomial {
    let heads: Vec<(Vec<u32>, BigRational)> = basis
        .iter()
        .map(|g| {
            let (m, c) = g.leading_term(order).expect("nonzero basis element");
            (m.clone(), c.clone())
        })
        .collect();
    let mut remainder = GradedPolynomial::zero(f.vars());
    let mut h = f.clone();
    'outer: while let Some((lm, lc)) = h.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
        for (g, (gm, gc)) in basis.iter().zip(&heads) {
            if divides(gm, &lm) {
                let quot = g.mul_monomial(&sub_exp(&lm, gm), &(&lc / gc));
                h = &h - &quot;
                continue 'outer;
            }
        }
        // leading term is irreducible: move it over
        let mono = GradedPolynomial::monomial(f.vars().clone(), lm.clone(), lc.clone());
        remainder = &remainder + &mono;
        h = &h - &mono;
    }
    remainder
}

fn s_polynomial(
    f: &GradedPolynomial,
    g: &GradedPolynomial,
    order: MonomialOrder,
) -> GradedPolynomial {
    let (fm, fc) = f.leading_term(order).expect("nonzero");
    let (gm, gc) = g.leading_term(order).expect("nonzero");
    let lcm = lcm_exp(fm, gm);
    let a = f.mul_monomial(&sub_exp(&lcm, fm), &(BigRational::one() / fc.clone()));
    let b = g.mul_monomial(&sub_exp(&lcm, gm), &(BigRational::one() / gc.clone()));
    &a - &b
}

/// A reduced Gröbner basis: monic, interreduced, sorted by leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    vars: Arc<VarSet>,
    order: MonomialOrder,
    gens: Vec<GradedPolynomial>,
}

pub fn groebner_basis(
    vars: &Arc<VarSet>,
    gens: &[GradedPolynomial],
    order: MonomialOrder,
) -> Result<GroebnerBasis, PolyError> {
    let mut basis: Vec<GradedPolynomial> = Vec::new();
    for g in gens {
        if !g.is_zero() {
            basis.push(g.make_monic(order));
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            pairs.push((i, j));
        }
    }
    while !pairs.is_empty() {
        // normal selection: smallest lcm in the order, ties by index pair
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                let la = lcm_exp(
                    basis[a.0].leading_term(order).unwrap().0,
                    basis[a.1].leading_term(order).unwrap().0,
                );
                let lb = lcm_exp(
                    basis[b.0].leading_term(order).unwrap().0,
                    basis[b.1].leading_term(order).unwrap().0,
                );
                order.cmp(&la, &lb).then(a.cmp(b))
            })
            .map(|(idx, _)| idx)
            .unwrap();
        let (i, j) = pairs.swap_remove(best);
        let fm = basis[i].leading_term(order).unwrap().0.clone();
        let gm = basis[j].leading_term(order).unwrap().0.clone();
        // product criterion: coprime leading monomials reduce to zero
        if fm.iter().zip(&gm).all(|(a, b)| *a == 0 || *b == 0) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            let r = r.make_monic(order);
            for k in 0..basis.len() {
                pairs.push((k, basis.len()));
            }
            basis.push(r);
            if basis.len() > MAX_BASIS {
                return Err(PolyError::TooLarge(format!(
                    "Gröbner basis exceeded {MAX_BASIS} elements"
                )));
            }
        }
    }
    // minimalize: drop elements whose head is divisible by another head
    basis.sort_by(|a, b| {
        order.cmp(
            a.leading_term(order).unwrap().0,
            b.leading_term(order).unwrap().0,
        )
    });
    let mut minimal: Vec<GradedPolynomial> = Vec::new();
    for g in basis {
        let gm = g.leading_term(order).unwrap().0.clone();
        if !minimal
            .iter()
            .any(|m| divides(m.leading_term(order).unwrap().0, &gm))
        {
            minimal.push(g);
        }
    }
    // interreduce tails until stable (heads are already minimal)
    loop {
        let mut changed = false;
        for idx in 0..minimal.len() {
            let g = minimal[idx].clone();
            let others: Vec<GradedPolynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != idx)
                .map(|(_, p)| p.clone())
                .collect();
            let r = normal_form(&g, &others, order).make_monic(order);
            if r != minimal[idx] {
                minimal[idx] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Ok(GroebnerBasis {
        vars: vars.clone(),
        order,
        gens: minimal,
    })
}

impl GroebnerBasis {
    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn generators(&self) -> &[GradedPolynomial] {
        &self.gens
    }

    /// Minimal generators of the leading-term ideal.
    pub fn leading_monomials(&self) -> Vec<Vec<u32>> {
        self.gens
            .iter()
            .map(|g| g.leading_term(self.order).unwrap().0.clone())
            .collect()
    }

    pub fn normal_form(&self, f: &GradedPolynomial) -> GradedPolynomial {
        normal_form(f, &self.gens, self.order)
    }

    pub fn contains(&self, f: &GradedPolynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// The quotient is finite-dimensional over ℚ exactly when the ideal
    /// contains 1, or every variable appears as a pure power among the
    /// leading monomials.
    pub fn quotient_is_finite_dimensional(&self) -> bool {
        if self.gens.iter().any(|g| g.is_constant() && !g.is_zero()) {
            return true;
        }
        let heads = self.leading_monomials();
        (0..self.vars.len()).all(|i| {
            heads
                .iter()
                .any(|m| m[i] > 0 && m.iter().enumerate().all(|(k, &e)| k == i || e == 0))
        })
    }

    /// Monomials of the given cohomological weight outside the leading-term
    /// ideal; for a homogeneous ideal these represent a basis of that graded
    /// piece of the quotient.
    pub fn standard_monomials_of_weight(&self, weight: u32) -> Result<Vec<Vec<u32>>, PolyError> {
        if !self.is_homogeneous() {
            return Err(PolyError::NotHomogeneous);
        }
        let heads = self.leading_monomials();
        Ok(monomials_of_weight(&self.vars, weight)
            .into_iter()
            .filter(|m| !heads.iter().any(|h| divides(h, m)))
            .collect())
    }

    pub fn graded_dimension(&self, weight: u32) -> Result<usize, PolyError> {
        Ok(self.standard_monomials_of_weight(weight)?.len())
    }
}
