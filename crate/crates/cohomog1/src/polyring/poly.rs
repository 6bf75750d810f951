//! Multivariate polynomials with `BigRational` coefficients and an even
//! cohomological grading on the variables.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::PolyError;

/// Named variables with even positive cohomological degrees. Every
/// polynomial of a ring holds the same `Arc<VarSet>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSet {
    names: Vec<String>,
    degrees: Vec<u32>,
}

impl VarSet {
    pub fn new<S: AsRef<str>>(vars: &[(S, u32)]) -> Result<Arc<Self>, PolyError> {
        let mut names = Vec::with_capacity(vars.len());
        let mut degrees = Vec::with_capacity(vars.len());
        for (name, degree) in vars {
            let name = name.as_ref();
            let mut chars = name.chars();
            let head_ok = chars
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
            if !head_ok || !chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(PolyError::BadVariable(format!(
                    "`{name}` is not a valid variable name"
                )));
            }
            if names.iter().any(|n| n == name) {
                return Err(PolyError::BadVariable(format!(
                    "duplicate variable `{name}`"
                )));
            }
            if *degree == 0 || degree % 2 != 0 {
                return Err(PolyError::BadVariable(format!(
                    "variable `{name}` needs a positive even degree, got {degree}"
                )));
            }
            names.push(name.to_owned());
            degrees.push(*degree);
        }
        Ok(Arc::new(VarSet { names, degrees }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Cohomological weight of a monomial given by its exponent vector.
    pub fn weight_of(&self, exps: &[u32]) -> u32 {
        exps.iter().zip(&self.degrees).map(|(e, d)| e * d).sum()
    }
}

/// Admissible monomial orders on exponent vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic (by total exponent degree).
    GrevLex,
    /// Pure lexicographic, first variable heaviest. Slower bases, but has the
    /// elimination property used by the solvers.
    Lex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                da.cmp(&db).then_with(|| {
                    for i in (0..a.len()).rev() {
                        match a[i].cmp(&b[i]) {
                            Ordering::Equal => {}
                            // smaller last exponent wins in grevlex
                            Ordering::Less => return Ordering::Greater,
                            Ordering::Greater => return Ordering::Less,
                        }
                    }
                    Ordering::Equal
                })
            }
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonomialOrder::GrevLex => "grevlex",
            MonomialOrder::Lex => "lex",
        })
    }
}

impl FromStr for MonomialOrder {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, PolyError> {
        match s {
            "grevlex" => Ok(MonomialOrder::GrevLex),
            "lex" => Ok(MonomialOrder::Lex),
            other => Err(PolyError::Parse {
                pos: 0,
                msg: format!("unknown monomial order `{other}`"),
            }),
        }
    }
}

/// A polynomial; term map is keyed by exponent vectors and never stores zero
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPolynomial {
    vars: Arc<VarSet>,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl GradedPolynomial {
    pub fn zero(vars: &Arc<VarSet>) -> Self {
        GradedPolynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Arc<VarSet>, value: BigRational) -> Self {
        let mut p = Self::zero(vars);
        if !value.is_zero() {
            p.terms.insert(vec![0; vars.len()], value);
        }
        p
    }

    pub fn one(vars: &Arc<VarSet>) -> Self {
        Self::constant(vars, BigRational::one())
    }

    pub fn variable(vars: &Arc<VarSet>, index: usize) -> Self {
        assert!(index < vars.len(), "variable index out of range");
        let mut exps = vec![0; vars.len()];
        exps[index] = 1;
        Self::monomial(vars.clone(), exps, BigRational::one())
    }

    pub fn monomial(vars: Arc<VarSet>, exps: Vec<u32>, coeff: BigRational) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length mismatch");
        let mut p = GradedPolynomial {
            vars,
            terms: BTreeMap::new(),
        };
        if !coeff.is_zero() {
            p.terms.insert(exps, coeff);
        }
        p
    }

    pub fn from_terms<I>(vars: &Arc<VarSet>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, BigRational)>,
    {
        let mut p = Self::zero(vars);
        for (exps, coeff) in terms {
            p.add_term(&exps, &coeff);
        }
        p
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigRational {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// `Some(w)` when every term has cohomological weight `w` (zero counts
    /// as homogeneous of weight 0).
    pub fn weight(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let w = match it.next() {
            None => return Some(0),
            Some(e) => self.vars.weight_of(e),
        };
        it.all(|e| self.vars.weight_of(e) == w).then_some(w)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.weight().is_some()
    }

    pub fn max_weight(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| self.vars.weight_of(e))
            .max()
            .unwrap_or(0)
    }

    fn assert_same_ring(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars,
            "polynomial arithmetic across different variable sets"
        );
    }

    fn add_term(&mut self, exps: &[u32], coeff: &BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(exps) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(exps);
                }
            }
            None => {
                self.terms.insert(exps.to_vec(), coeff.clone());
            }
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        if factor.is_zero() {
            return Self::zero(&self.vars);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c *= factor;
        }
        out
    }

    /// Multiply by a single term `coeff · x^exps`.
    pub fn mul_monomial(&self, exps: &[u32], coeff: &BigRational) -> Self {
        if coeff.is_zero() {
            return Self::zero(&self.vars);
        }
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let shifted: Vec<u32> = e.iter().zip(exps).map(|(a, b)| a + b).collect();
            out.terms.insert(shifted, c * coeff);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(&self.vars);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Vec<u32>, &BigRational)> {
        self.terms.iter().max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    pub fn make_monic(&self, order: MonomialOrder) -> Self {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = BigRational::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    /// Image under the ring map sending variable `i` to `images[i]`; all
    /// images must live in the `target` ring.
    pub fn substitute(&self, target: &Arc<VarSet>, images: &[GradedPolynomial]) -> Self {
        assert_eq!(images.len(), self.vars.len(), "one image per variable");
        for img in images {
            assert!(
                Arc::ptr_eq(&img.vars, target) || img.vars == *target,
                "substitution image lives in the wrong ring"
            );
        }
        // cache powers of each image up to the largest exponent used
        let mut powers: Vec<Vec<GradedPolynomial>> = images
            .iter()
            .map(|f| vec![Self::one(target), f.clone()])
            .collect();
        let mut out = Self::zero(target);
        for (exps, coeff) in &self.terms {
            let mut term = Self::constant(target, coeff.clone());
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = &cache[cache.len() - 1] * &images[i];
                    cache.push(next);
                }
                term = &term * &cache[e as usize];
            }
            out = &out + &term;
        }
        out
    }

    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.vars.len(), "one coordinate per variable");
        let mut total = BigRational::zero();
        for (exps, coeff) in &self.terms {
            let mut v = coeff.clone();
            for (i, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    v *= &point[i];
                }
            }
            total += v;
        }
        total
    }
}

impl Add for &GradedPolynomial {
    type Output = GradedPolynomial;

    fn add(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        self.assert_same_ring(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &GradedPolynomial {
    type Output = GradedPolynomial;

    fn sub(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        self.assert_same_ring(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e, &-c.clone());
        }
        out
    }
}

impl Neg for &GradedPolynomial {
    type Output = GradedPolynomial;

    fn neg(self) -> GradedPolynomial {
        self.scale(&-BigRational::one())
    }
}

impl Mul for &GradedPolynomial {
    type Output = GradedPolynomial;

    // exponents add when monomials multiply
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        self.assert_same_ring(rhs);
        let mut out = GradedPolynomial::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(&e, &(ca * cb));
            }
        }
        out
    }
}

fn monomial_string(vars: &VarSet, exps: &[u32]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in exps.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars.name(i).to_owned()),
            _ => parts.push(format!("{}^{}", vars.name(i), e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for GradedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| MonomialOrder::GrevLex.cmp(b, a));
        for (pos, key) in keys.iter().enumerate() {
            let c = &self.terms[*key];
            let mag = c.abs();
            if pos == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mono = monomial_string(&self.vars, key);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// All exponent vectors of the given cohomological weight, in descending
/// lexicographic order.
pub fn monomials_of_weight(vars: &Arc<VarSet>, weight: u32) -> Vec<Vec<u32>> {
    fn rec(vars: &VarSet, i: usize, rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == vars.len() {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let d = vars.degree(i);
        for e in (0..=rem / d).rev() {
            cur[i] = e;
            rec(vars, i + 1, rem - e * d, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; vars.len()];
    rec(vars, 0, weight, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring3() -> Arc<VarSet> {
        VarSet::new(&[("x1", 2), ("x2", 2), ("x3", 2)]).unwrap()
    }

    fn var(vars: &Arc<VarSet>, i: usize) -> GradedPolynomial {
        GradedPolynomial::variable(vars, i)
    }

    #[test]
    fn varset_validation() {
        assert!(VarSet::new(&[("x", 2), ("x", 4)]).is_err());
        assert!(VarSet::new(&[("x", 3)]).is_err());
        assert!(VarSet::new(&[("x", 0)]).is_err());
        assert!(VarSet::new(&[("1x", 2)]).is_err());
        assert!(VarSet::new(&[("x y", 2)]).is_err());
        let v = VarSet::new(&[("x", 2), ("u", 4)]).unwrap();
        assert_eq!(v.index_of("u"), Some(1));
        assert_eq!(v.weight_of(&[3, 1]), 10);
    }

    #[test]
    fn order_comparisons() {
        // x1*x3 vs x2^2: same total degree
        let a = [1, 0, 1];
        let b = [0, 2, 0];
        assert_eq!(MonomialOrder::GrevLex.cmp(&a, &b), Ordering::Less);
        assert_eq!(MonomialOrder::Lex.cmp(&a, &b), Ordering::Greater);
        // degree dominates in grevlex
        assert_eq!(
            MonomialOrder::GrevLex.cmp(&[0, 0, 3], &[1, 1, 0]),
            Ordering::Greater
        );
    }

    #[test]
    fn ring_identities() {
        let vars = ring3();
        let (x, y, z) = (var(&vars, 0), var(&vars, 1), var(&vars, 2));
        let a = &(&x + &y) * &(&x - &y);
        let b = &(&x * &x) - &(&y * &y);
        assert_eq!(a, b);
        let left = &(&x + &y) * &z;
        let right = &(&x * &z) + &(&y * &z);
        assert_eq!(left, right);
        assert_eq!((&x - &x), GradedPolynomial::zero(&vars));
        assert_eq!(x.pow(3).num_terms(), 1);
        assert_eq!(
            (&x + &y).pow(2).coeff(&[1, 1, 0]),
            BigRational::from_integer(2.into())
        );
    }

    #[test]
    fn weights_and_homogeneity() {
        let vars = VarSet::new(&[("x", 2), ("y", 4)]).unwrap();
        let x = var(&vars, 0);
        let y = var(&vars, 1);
        let f = &(&x * &x) + &y;
        assert_eq!(f.weight(), Some(4));
        let g = &x + &y;
        assert_eq!(g.weight(), None);
        assert!(!g.is_homogeneous());
        assert_eq!(g.max_weight(), 4);
        assert_eq!(GradedPolynomial::zero(&vars).weight(), Some(0));
    }

    #[test]
    fn leading_terms_and_monic() {
        let vars = ring3();
        let (x, y, z) = (var(&vars, 0), var(&vars, 1), var(&vars, 2));
        // f = 2*x1*x3 + x2^2
        let f = &(&x * &z).scale(&BigRational::from_integer(2.into())) + &(&y * &y);
        let (lm, lc) = f.leading_term(MonomialOrder::GrevLex).unwrap();
        assert_eq!(lm, &vec![0, 2, 0]);
        assert!(lc.is_one());
        let (lm, lc) = f.leading_term(MonomialOrder::Lex).unwrap();
        assert_eq!(lm, &vec![1, 0, 1]);
        assert_eq!(*lc, BigRational::from_integer(2.into()));
        let monic = f.make_monic(MonomialOrder::Lex);
        assert!(monic.leading_term(MonomialOrder::Lex).unwrap().1.is_one());
    }

    #[test]
    fn substitution_and_evaluation() {
        let vars = VarSet::new(&[("x", 2), ("y", 2)]).unwrap();
        let x = var(&vars, 0);
        let y = var(&vars, 1);
        let f = (&x + &y).pow(2);
        // x -> a^2, y -> b in a different ring
        let tvars = VarSet::new(&[("a", 2), ("b", 4)]).unwrap();
        let a = var(&tvars, 0);
        let b = var(&tvars, 1);
        let img = f.substitute(&tvars, &[&a * &a, b.clone()]);
        let expect = &(&a.pow(4) + &(&(&a * &a) * &b).scale(&BigRational::from_integer(2.into())))
            + &b.pow(2);
        assert_eq!(img, expect);

        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(f.evaluate(&[q(1, 2), q(3, 2)]), q(4, 1));
    }

    #[test]
    fn display_forms() {
        let vars = VarSet::new(&[("x1", 2), ("x2", 2), ("u", 2)]).unwrap();
        let x1 = var(&vars, 0);
        let u = var(&vars, 2);
        let f = &(&x1 * &x1) - &(&u * &u);
        assert_eq!(f.to_string(), "x1^2 - u^2");
        let g = &(&x1 * &var(&vars, 1)).scale(&BigRational::new(1.into(), 2.into()))
            - &GradedPolynomial::one(&vars);
        assert_eq!(g.to_string(), "1/2*x1*x2 - 1");
        assert_eq!(GradedPolynomial::zero(&vars).to_string(), "0");
        assert_eq!((-&GradedPolynomial::one(&vars)).to_string(), "-1");
    }

    #[test]
    fn weight_enumeration() {
        let vars = VarSet::new(&[("x", 2), ("y", 2), ("z", 4)]).unwrap();
        assert_eq!(monomials_of_weight(&vars, 0), vec![vec![0, 0, 0]]);
        assert_eq!(monomials_of_weight(&vars, 8).len(), 9);
        assert!(monomials_of_weight(&vars, 5).is_empty());
        // plain polynomial count in k variables of degree d: C(d+k-1, k-1)
        let flat = ring3();
        assert_eq!(monomials_of_weight(&flat, 12).len(), 28);
    }
}
