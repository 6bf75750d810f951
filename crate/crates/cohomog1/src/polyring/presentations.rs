//! Cohomology-ring presentations for the maximal-torus diagram family, and
//! the degree-2 square-zero element search that distinguishes ring
//! structures with identical Poincaré polynomials.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagram::{DiagramError, GroupDiagram};
use crate::lie::Family;

use super::groebner::{groebner_basis, GroebnerBasis};
use super::parse::parse_polynomial;
use super::poly::{GradedPolynomial, MonomialOrder, VarSet};
use super::PolyError;

/// A graded ring presentation `ℚ[vars]/(generators)`.
#[derive(Debug, Clone, PartialEq)]
pub struct IdealPresentation {
    vars: Arc<VarSet>,
    generators: Vec<GradedPolynomial>,
}

impl IdealPresentation {
    pub fn new(vars: Arc<VarSet>, generators: Vec<GradedPolynomial>) -> Self {
        for g in &generators {
            assert!(g.vars() == &vars, "generator lives in the wrong ring");
        }
        IdealPresentation { vars, generators }
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn generators(&self) -> &[GradedPolynomial] {
        &self.generators
    }

    pub fn groebner(&self, order: MonomialOrder) -> Result<GroebnerBasis, PolyError> {
        groebner_basis(&self.vars, &self.generators, order)
    }
}

#[derive(Serialize, Deserialize)]
struct VarEntry {
    name: String,
    degree: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationFile {
    variables: Vec<VarEntry>,
    generators: Vec<String>,
}

impl Serialize for IdealPresentation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let file = PresentationFile {
            variables: (0..self.vars.len())
                .map(|i| VarEntry {
                    name: self.vars.name(i).to_owned(),
                    degree: self.vars.degree(i),
                })
                .collect(),
            generators: self.generators.iter().map(|g| g.to_string()).collect(),
        };
        file.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IdealPresentation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let file = PresentationFile::deserialize(deserializer)?;
        let pairs: Vec<(String, u32)> = file
            .variables
            .into_iter()
            .map(|v| (v.name, v.degree))
            .collect();
        let vars = VarSet::new(&pairs).map_err(D::Error::custom)?;
        let generators = file
            .generators
            .iter()
            .map(|src| parse_polynomial(&vars, src))
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Ok(IdealPresentation { vars, generators })
    }
}

/// Equivariant and ordinary cohomology presentations of one family member.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyPresentations {
    pub equivariant: IdealPresentation,
    pub ordinary: IdealPresentation,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("{0}")]
    Diagram(#[from] DiagramError),
    #[error("diagram carries no torus family data")]
    NoFamilyData,
    #[error("ring presentations are implemented for the U(k)/SU(k) torus families only, not for G = {0}")]
    UnsupportedGroup(String),
    #[error("{0}")]
    Poly(#[from] PolyError),
}

/// Elementary symmetric polynomial `e_j` in the variables `indices`.
fn elementary_symmetric(vars: &Arc<VarSet>, indices: &[usize], j: usize) -> GradedPolynomial {
    fn rec(
        vars: &Arc<VarSet>,
        indices: &[usize],
        j: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        acc: &mut GradedPolynomial,
    ) {
        if chosen.len() == j {
            let mut exps = vec![0u32; vars.len()];
            for &i in chosen.iter() {
                exps[i] = 1;
            }
            *acc = &*acc + &GradedPolynomial::monomial(vars.clone(), exps, BigRational::one());
            return;
        }
        for k in start..indices.len() {
            chosen.push(indices[k]);
            rec(vars, indices, j, k + 1, chosen, acc);
            chosen.pop();
        }
    }
    let mut acc = GradedPolynomial::zero(vars);
    let mut chosen = Vec::new();
    rec(vars, indices, j, 0, &mut chosen, &mut acc);
    acc
}

/// Presentations of `H*_T` and `H*` for a diagram of the maximal-torus
/// family (`G = U(k)` or `SU(k)` type, `K± = T`, `H = ker α`):
///
/// - variables `x1..xk, u`, all of cohomological degree 2;
/// - equivariant ideal `(α² − u²)`, plus `e₁` for the SU type;
/// - ordinary ideal adds the elementary symmetric polynomials `e₁..e_k`.
///
/// When `α` itself lies in the span of the symmetric generators of a
/// presentation, the relation `α² − u²` collapses to `u²` and is displayed
/// that way.
pub fn build_torus_family_presentations(
    d: &GroupDiagram,
) -> Result<FamilyPresentations, FamilyError> {
    let spec = d.family.as_ref().ok_or(FamilyError::NoFamilyData)?;
    d.manifold_dimension()?;
    let k = spec.k as usize;
    let simples = d.g.simple_factors();
    let a_type = simples.len() == 1
        && simples[0].family() == Family::A
        && simples[0].rank() as usize + 1 == k;
    let full_unitary = match (a_type, d.g.torus_rank()) {
        (true, 1) => true,
        (true, 0) => false,
        _ => return Err(FamilyError::UnsupportedGroup(d.g.to_string())),
    };

    let mut pairs: Vec<(String, u32)> = (1..=k).map(|i| (format!("x{i}"), 2)).collect();
    pairs.push(("u".into(), 2));
    let vars = VarSet::new(&pairs)?;
    let x_indices: Vec<usize> = (0..k).collect();
    let alpha = GradedPolynomial::from_terms(
        &vars,
        spec.alpha.iter().enumerate().map(|(i, &c)| {
            let mut exps = vec![0u32; k + 1];
            exps[i] = 1;
            (exps, BigRational::from_integer(c.into()))
        }),
    );
    let u = GradedPolynomial::variable(&vars, k);
    let relation = &(&alpha * &alpha) - &(&u * &u);
    let e: Vec<GradedPolynomial> = (1..=k)
        .map(|j| elementary_symmetric(&vars, &x_indices, j))
        .collect();

    let build = |symmetric: &[GradedPolynomial]| -> Result<IdealPresentation, PolyError> {
        let rel = if symmetric.is_empty() {
            relation.clone()
        } else {
            let gb = groebner_basis(&vars, symmetric, MonomialOrder::GrevLex)?;
            if gb.normal_form(&alpha).is_zero() {
                &u * &u
            } else {
                relation.clone()
            }
        };
        let mut gens = vec![rel];
        gens.extend_from_slice(symmetric);
        Ok(IdealPresentation::new(vars.clone(), gens))
    };

    let equivariant_symmetric: &[GradedPolynomial] = if full_unitary { &[] } else { &e[..1] };
    Ok(FamilyPresentations {
        equivariant: build(equivariant_symmetric)?,
        ordinary: build(&e)?,
    })
}

/// Outcome of the degree-2 square-zero search in a finite-dimensional graded
/// quotient.
#[derive(Debug, Clone, PartialEq)]
pub enum SquareZeroOutcome {
    /// A nonzero degree-2 class with square zero, with an explicit witness.
    Found { witness: GradedPolynomial },
    /// No such class exists over the rationals.
    NoneExists,
}

/// Searches the degree-2 part of `ℚ[vars]/I` for a nonzero element squaring
/// to zero. Three stages: single basis monomials; triviality of the cone cut
/// out by the quadratic coefficient system (conclusive over any field of
/// characteristic zero); and a rational-point search on affine slices of
/// that cone.
pub fn square_zero_degree2(
    presentation: &IdealPresentation,
    order: MonomialOrder,
) -> Result<SquareZeroOutcome, PolyError> {
    let gb = presentation.groebner(order)?;
    if !gb.quotient_is_finite_dimensional() {
        return Err(PolyError::NotFiniteDimensional);
    }
    let basis2 = gb.standard_monomials_of_weight(2)?;
    let m = basis2.len();
    if m == 0 {
        return Ok(SquareZeroOutcome::NoneExists);
    }
    let vars = presentation.vars();
    let w: Vec<GradedPolynomial> = basis2
        .iter()
        .map(|e| GradedPolynomial::monomial(vars.clone(), e.clone(), BigRational::one()))
        .collect();
    for wi in &w {
        if gb.normal_form(&(wi * wi)).is_zero() {
            return Ok(SquareZeroOutcome::Found {
                witness: wi.clone(),
            });
        }
    }

    // coefficient system: (Σ c_i w_i)^2 = Σ_k q_k(c) b_k over the degree-4
    // standard basis b
    let basis4 = gb.standard_monomials_of_weight(4)?;
    let cpairs: Vec<(String, u32)> = (1..=m).map(|i| (format!("c{i}"), 2)).collect();
    let cvars = VarSet::new(&cpairs)?;
    let mut quadrics = vec![GradedPolynomial::zero(&cvars); basis4.len()];
    for i in 0..m {
        for j in i..m {
            let product = gb.normal_form(&(&w[i] * &w[j]));
            let factor = BigRational::from_integer(if i == j { 1.into() } else { 2.into() });
            for (k, b) in basis4.iter().enumerate() {
                let coeff = product.coeff(b);
                if !coeff.is_zero() {
                    let mut exps = vec![0u32; m];
                    exps[i] += 1;
                    exps[j] += 1;
                    quadrics[k] = &quadrics[k]
                        + &GradedPolynomial::monomial(cvars.clone(), exps, coeff * &factor);
                }
            }
        }
    }
    quadrics.retain(|q| !q.is_zero());
    if quadrics.is_empty() {
        return Ok(SquareZeroOutcome::Found {
            witness: w[0].clone(),
        });
    }

    // cone triviality: only the origin solves the system over any extension
    let cone = groebner_basis(&cvars, &quadrics, MonomialOrder::GrevLex)?;
    if cone.quotient_is_finite_dimensional() {
        return Ok(SquareZeroOutcome::NoneExists);
    }

    // rational points: every nonzero rational solution has some coordinate
    // scalable to 1, so affine slices cover the projective rational points
    let mut undecided = false;
    for pos in 0..m {
        match slice_points(&cvars, &quadrics, pos)? {
            None => undecided = true,
            Some(points) => {
                if let Some(point) = points.first() {
                    let mut witness = w[pos].clone();
                    for (i, c) in point.iter().enumerate() {
                        let idx = if i < pos { i } else { i + 1 };
                        witness = &witness + &w[idx].scale(c);
                    }
                    debug_assert!(gb.normal_form(&(&witness * &witness)).is_zero());
                    return Ok(SquareZeroOutcome::Found { witness });
                }
            }
        }
    }
    if !undecided {
        return Ok(SquareZeroOutcome::NoneExists);
    }

    // bounded fallback on a positive-dimensional slice
    if m <= 6 {
        let mut point = vec![0i64; m];
        if let Some(coords) = search_small_points(&quadrics, &mut point, 0) {
            let mut witness = GradedPolynomial::zero(vars);
            for (i, &c) in coords.iter().enumerate() {
                witness = &witness + &w[i].scale(&BigRational::from_integer(c.into()));
            }
            debug_assert!(gb.normal_form(&(&witness * &witness)).is_zero());
            return Ok(SquareZeroOutcome::Found { witness });
        }
    }
    Err(PolyError::Inconclusive(
        "the quadric cone has points over an extension field; no rational witness found in the bounded search".into(),
    ))
}

/// Substitute `c_pos = 1` and find the rational points of the resulting
/// affine system. `None` means the slice could not be decided.
fn slice_points(
    cvars: &Arc<VarSet>,
    quadrics: &[GradedPolynomial],
    pos: usize,
) -> Result<Option<Vec<Vec<BigRational>>>, PolyError> {
    let m = cvars.len();
    let sub_pairs: Vec<(String, u32)> = (0..m)
        .filter(|&i| i != pos)
        .map(|i| (cvars.name(i).to_owned(), cvars.degree(i)))
        .collect();
    let svars = VarSet::new(&sub_pairs)?;
    let images: Vec<GradedPolynomial> = (0..m)
        .map(|i| {
            if i == pos {
                GradedPolynomial::one(&svars)
            } else {
                let idx = if i < pos { i } else { i - 1 };
                GradedPolynomial::variable(&svars, idx)
            }
        })
        .collect();
    let system: Vec<GradedPolynomial> = quadrics
        .iter()
        .map(|q| q.substitute(&svars, &images))
        .collect();
    rational_points(&svars, &system)
}

/// Rational solutions of a polynomial system, by lex elimination and
/// rational-root extraction; `None` when the system is not visibly
/// zero-dimensional or the root bounds blow up.
fn rational_points(
    vars: &Arc<VarSet>,
    gens: &[GradedPolynomial],
) -> Result<Option<Vec<Vec<BigRational>>>, PolyError> {
    let nonzero: Vec<GradedPolynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let n = vars.len();
    if n == 0 {
        return Ok(Some(if nonzero.is_empty() {
            vec![vec![]]
        } else {
            vec![]
        }));
    }
    if nonzero.is_empty() {
        return Ok(None); // whole affine space: positive-dimensional
    }
    let gb = groebner_basis(vars, &nonzero, MonomialOrder::Lex)?;
    if gb
        .generators()
        .iter()
        .any(|g| g.is_constant() && !g.is_zero())
    {
        return Ok(Some(vec![]));
    }
    // elimination property: a zero-dimensional lex basis contains a
    // univariate polynomial in the last variable
    let univariate = gb
        .generators()
        .iter()
        .find(|g| g.terms().all(|(e, _)| e[..n - 1].iter().all(|&x| x == 0)));
    let Some(univariate) = univariate else {
        return Ok(None);
    };
    let degree = univariate.terms().map(|(e, _)| e[n - 1]).max().unwrap_or(0);
    let mut coeffs = vec![BigRational::zero(); degree as usize + 1];
    for (e, c) in univariate.terms() {
        coeffs[e[n - 1] as usize] = c.clone();
    }
    let Some(roots) = rational_roots(&coeffs) else {
        return Ok(None);
    };
    let mut points = Vec::new();
    let sub_pairs: Vec<(String, u32)> = (0..n - 1)
        .map(|i| (vars.name(i).to_owned(), vars.degree(i)))
        .collect();
    let svars = VarSet::new(&sub_pairs)?;
    for root in roots {
        let images: Vec<GradedPolynomial> = (0..n)
            .map(|i| {
                if i == n - 1 {
                    GradedPolynomial::constant(&svars, root.clone())
                } else {
                    GradedPolynomial::variable(&svars, i)
                }
            })
            .collect();
        let fiber: Vec<GradedPolynomial> = gb
            .generators()
            .iter()
            .map(|g| g.substitute(&svars, &images))
            .collect();
        match rational_points(&svars, &fiber)? {
            None => return Ok(None),
            Some(sub) => {
                for mut p in sub {
                    p.push(root.clone());
                    points.push(p);
                }
            }
        }
    }
    Ok(Some(points))
}

const ROOT_SEARCH_BOUND: i64 = 1_000_000_000;

/// All rational roots of a univariate polynomial given by ascending
/// coefficients; `None` if the integer bounds are too large to factor.
fn rational_roots(coeffs: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut c = coeffs.to_vec();
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    if c.is_empty() {
        return Some(vec![]);
    }
    let mut roots = Vec::new();
    let mut low = 0;
    while c[low].is_zero() {
        low += 1;
    }
    if low > 0 {
        roots.push(BigRational::zero());
    }
    let c = &c[low..];
    if c.len() <= 1 {
        roots.sort();
        return Some(roots);
    }
    // scale to a primitive integer polynomial
    let denom_lcm = c.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = c
        .iter()
        .map(|q| (q * BigRational::from_integer(denom_lcm.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    let ints: Vec<BigInt> = ints.iter().map(|v| v / &content).collect();
    let constant = ints.first().unwrap().abs();
    let leading = ints.last().unwrap().abs();
    let constant: i64 = constant
        .try_into()
        .ok()
        .filter(|&v| v <= ROOT_SEARCH_BOUND)?;
    let leading: i64 = leading
        .try_into()
        .ok()
        .filter(|&v| v <= ROOT_SEARCH_BOUND)?;
    for p in divisors(constant) {
        for q in &divisors(leading) {
            for sign in [1i64, -1] {
                let candidate = BigRational::new((sign * p).into(), (*q).into());
                let mut value = BigRational::zero();
                for coeff in ints.iter().rev() {
                    value = value * &candidate + BigRational::from_integer(coeff.clone());
                }
                if value.is_zero() && !roots.contains(&candidate) {
                    roots.push(candidate);
                }
            }
        }
    }
    roots.sort();
    Some(roots)
}

fn divisors(n: i64) -> Vec<i64> {
    let n = n.abs();
    if n == 0 {
        return vec![];
    }
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Depth-first search over small integer coordinate vectors.
fn search_small_points(
    quadrics: &[GradedPolynomial],
    point: &mut Vec<i64>,
    depth: usize,
) -> Option<Vec<i64>> {
    if depth == point.len() {
        if point.iter().all(|&c| c == 0) {
            return None;
        }
        let coords: Vec<BigRational> = point
            .iter()
            .map(|&c| BigRational::from_integer(c.into()))
            .collect();
        if quadrics.iter().all(|q| q.evaluate(&coords).is_zero()) {
            return Some(point.clone());
        }
        return None;
    }
    for c in -2..=2i64 {
        point[depth] = c;
        if let Some(found) = search_small_points(quadrics, point, depth + 1) {
            return Some(found);
        }
    }
    point[depth] = 0;
    None
}
