//! Exact Poincaré series: integer-coefficient numerators over products of
//! `(1 - t^d)` factors.
//!
//! This restricted shape is closed under the arithmetic the Mayer–Vietoris
//! and classifying-space formulas need, keeps every computation exact, and
//! reads off the Krull dimension as the pole order at `t = 1`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::lie::CompactGroupType;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("division by the zero series")]
    DivisionByZero,
    #[error("quotient is not representable with a (1 - t^d)-product denominator")]
    NotRepresentable,
}

/// Dense univariate polynomial in `t` with arbitrary-precision integer
/// coefficients, ascending by degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        IntPolynomial::new(vec![BigInt::from(c)])
    }

    /// Convenience for literal coefficient lists in tests and fixtures.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `1 - t^d`.
    pub fn one_minus_t_pow(d: u32) -> Self {
        let mut coeffs = vec![BigInt::zero(); d as usize + 1];
        coeffs[0] = BigInt::one();
        coeffs[d as usize] = -BigInt::one();
        IntPolynomial::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPolynomial::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }

    pub fn scale(&self, c: i64) -> Self {
        let c = BigInt::from(c);
        IntPolynomial::new(self.coeffs.iter().map(|a| a * &c).collect())
    }

    /// Exact division; `None` if `divisor` does not divide `self` over ℤ.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPolynomial::zero());
        }
        let dd = divisor.degree().expect("nonzero");
        let nd = self.degree().expect("nonzero");
        if nd < dd {
            return None;
        }
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd];
            if c.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(c, &lead);
            if !r.is_zero() {
                return None;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let sub = &q * b;
                rem[k + j] -= sub;
            }
            quot[k] = q;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(IntPolynomial::new(quot))
        } else {
            None
        }
    }

    /// Sum of coefficients, i.e. the value at `t = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Coefficient list mirror-symmetric about the middle degree.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// All coefficients nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl fmt::Display for IntPolynomial {
    /// Renders like `1 + t^2 + 2t^4 - t^6`; the zero polynomial is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

/// An exact rational function `numerator / Π (1 - t^d)`.
///
/// The denominator is a multiset of positive integers `d`, one per factor.
/// Construction and every arithmetic operation canonicalize by greedy exact
/// division trials of the numerator by `(1 - t^d)`, largest `d` first.
///
/// Equality is exact rational-function equality (cross-multiplication):
/// different arithmetic routes to the same function may legitimately settle
/// on different canonical shapes, e.g. `(1+t^2+t^4)/(1-t^4)^2` versus
/// `(1+t^2+2t^4+t^6+t^8)/((1-t^4)(1-t^8))`.
#[derive(Debug, Clone, Eq)]
pub struct PoincareSeries {
    numerator: IntPolynomial,
    denominator: Vec<u32>,
}

impl PoincareSeries {
    pub fn new(numerator: IntPolynomial, denominator: Vec<u32>) -> Self {
        assert!(
            denominator.iter().all(|&d| d >= 1),
            "denominator exponents must be positive"
        );
        let mut s = PoincareSeries {
            numerator,
            denominator,
        };
        s.canonicalize();
        s
    }

    pub fn zero() -> Self {
        PoincareSeries::new(IntPolynomial::zero(), Vec::new())
    }

    pub fn constant(c: i64) -> Self {
        PoincareSeries::new(IntPolynomial::constant(c), Vec::new())
    }

    pub fn from_polynomial(p: IntPolynomial) -> Self {
        PoincareSeries::new(p, Vec::new())
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    /// Ascending multiset of denominator exponents `d`.
    pub fn denominator_factors(&self) -> &[u32] {
        &self.denominator
    }

    fn canonicalize(&mut self) {
        if self.numerator.is_zero() {
            self.denominator.clear();
            return;
        }
        self.denominator.sort_unstable_by(|a, b| b.cmp(a));
        let mut kept = Vec::with_capacity(self.denominator.len());
        for &d in &std::mem::take(&mut self.denominator) {
            match self.numerator.exact_div(&IntPolynomial::one_minus_t_pow(d)) {
                Some(q) => self.numerator = q,
                None => kept.push(d),
            }
        }
        kept.sort_unstable();
        self.denominator = kept;
    }

    /// `Π 1/(1 - t^{2dᵢ})` over the invariant degrees of `g`: the Poincaré
    /// series of the classifying space `BG`.
    pub fn classifying(g: &CompactGroupType) -> Self {
        PoincareSeries::new(
            IntPolynomial::one(),
            g.degrees().iter().map(|&d| 2 * d).collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let den = multiset_max(&self.denominator, &other.denominator);
        let na = self
            .numerator
            .mul(&product_poly(&multiset_sub(&den, &self.denominator)));
        let nb = other
            .numerator
            .mul(&product_poly(&multiset_sub(&den, &other.denominator)));
        PoincareSeries::new(na.add(&nb), den)
    }

    pub fn neg(&self) -> Self {
        PoincareSeries {
            numerator: self.numerator.neg(),
            denominator: self.denominator.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut den = self.denominator.clone();
        den.extend_from_slice(&other.denominator);
        PoincareSeries::new(self.numerator.mul(&other.numerator), den)
    }

    /// Exact division. Fails on a zero divisor, or when the quotient cannot
    /// be written with a `(1 - t^d)`-product denominator and integer
    /// numerator.
    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        if other.is_zero() {
            return Err(SeriesError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(PoincareSeries::zero());
        }
        let mut num = self.numerator.mul(&product_poly(&other.denominator));
        let mut den = self.denominator.clone();
        let mut h = other.numerator.clone();

        // Peel (1 - t^d) content off the divisor numerator, largest d first:
        // each factor either cancels into `num` or joins the denominator.
        let mut d = h.degree().expect("nonzero") as u32;
        while d >= 1 {
            let f = IntPolynomial::one_minus_t_pow(d);
            if let Some(q) = h.exact_div(&f) {
                match num.exact_div(&f) {
                    Some(g) => num = g,
                    None => den.push(d),
                }
                h = q;
                let hd = h.degree().expect("nonzero") as u32;
                d = d.min(hd.max(1));
                if hd == 0 {
                    break;
                }
                continue;
            }
            d -= 1;
        }

        if h.degree() == Some(0) {
            let c = h.coeff(0);
            if c.is_negative() {
                num = num.neg();
            }
            let c = c.abs();
            if !c.is_one() {
                let mut coeffs = Vec::with_capacity(num.coeffs().len());
                for a in num.coeffs() {
                    let (q, r) = num_integer::Integer::div_rem(a, &c);
                    if !r.is_zero() {
                        return Err(SeriesError::NotRepresentable);
                    }
                    coeffs.push(q);
                }
                num = IntPolynomial::new(coeffs);
            }
        } else {
            num = num.exact_div(&h).ok_or(SeriesError::NotRepresentable)?;
        }
        Ok(PoincareSeries::new(num, den))
    }

    /// The series is a polynomial exactly when canonicalization cleared the
    /// denominator.
    pub fn as_polynomial(&self) -> Option<IntPolynomial> {
        self.denominator.is_empty().then(|| self.numerator.clone())
    }

    /// Taylor coefficients `[t^0] .. [t^up_to]`, exact.
    pub fn taylor_coefficients(&self, up_to: usize) -> Vec<BigInt> {
        let mut c = vec![BigInt::zero(); up_to + 1];
        for (i, a) in self.numerator.coeffs().iter().enumerate() {
            if i > up_to {
                break;
            }
            c[i] = a.clone();
        }
        for &d in &self.denominator {
            let d = d as usize;
            for i in d..=up_to {
                let prev = c[i - d].clone();
                c[i] += prev;
            }
        }
        c
    }

    /// Order of the pole at `t = 1`: one per remaining denominator factor,
    /// minus the multiplicity of `(1 - t)` in the numerator.
    pub fn pole_order_at_one(&self) -> usize {
        let k = self.denominator.len();
        let mut m = 0;
        let one_minus_t = IntPolynomial::one_minus_t_pow(1);
        let mut n = self.numerator.clone();
        while !n.is_zero() {
            match n.exact_div(&one_minus_t) {
                Some(q) => {
                    n = q;
                    m += 1;
                }
                None => break,
            }
        }
        k.saturating_sub(m)
    }
}

impl PartialEq for PoincareSeries {
    /// Exact rational-function equality via cross-multiplication.
    fn eq(&self, other: &Self) -> bool {
        if self.denominator == other.denominator {
            return self.numerator == other.numerator;
        }
        // Cancel the shared denominator content first to keep degrees small.
        let common = multiset_min(&self.denominator, &other.denominator);
        let da = multiset_sub(&self.denominator, &common);
        let db = multiset_sub(&other.denominator, &common);
        self.numerator.mul(&product_poly(&db)) == other.numerator.mul(&product_poly(&da))
    }
}

fn product_poly(dens: &[u32]) -> IntPolynomial {
    dens.iter().fold(IntPolynomial::one(), |acc, &d| {
        acc.mul(&IntPolynomial::one_minus_t_pow(d))
    })
}

fn counts(dens: &[u32]) -> std::collections::BTreeMap<u32, usize> {
    let mut m = std::collections::BTreeMap::new();
    for &d in dens {
        *m.entry(d).or_insert(0) += 1;
    }
    m
}

fn from_counts(m: std::collections::BTreeMap<u32, usize>) -> Vec<u32> {
    let mut v = Vec::new();
    for (d, n) in m {
        v.extend(std::iter::repeat_n(d, n));
    }
    v
}

fn multiset_max(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut ca = counts(a);
    for (d, n) in counts(b) {
        let e = ca.entry(d).or_insert(0);
        *e = (*e).max(n);
    }
    from_counts(ca)
}

fn multiset_min(a: &[u32], b: &[u32]) -> Vec<u32> {
    let cb = counts(b);
    let mut out = std::collections::BTreeMap::new();
    for (d, n) in counts(a) {
        let m = n.min(cb.get(&d).copied().unwrap_or(0));
        if m > 0 {
            out.insert(d, m);
        }
    }
    from_counts(out)
}

/// `a \ b` as multisets.
fn multiset_sub(a: &[u32], b: &[u32]) -> Vec<u32> {
    let cb = counts(b);
    let mut out = std::collections::BTreeMap::new();
    for (d, n) in counts(a) {
        let m = n.saturating_sub(cb.get(&d).copied().unwrap_or(0));
        if m > 0 {
            out.insert(d, m);
        }
    }
    from_counts(out)
}

impl fmt::Display for PoincareSeries {
    /// `1 / (1-t^4)(1-t^8)`, `(1 + t^2) / (1-t^2)^3`, or a bare polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_empty() {
            return write!(f, "{}", self.numerator);
        }
        let num = self.numerator.to_string();
        if num.contains(' ') {
            write!(f, "({num}) / ")?;
        } else {
            write!(f, "{num} / ")?;
        }
        for (d, n) in counts(&self.denominator) {
            if n == 1 {
                write!(f, "(1-t^{d})")?;
            } else {
                write!(f, "(1-t^{d})^{n}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for PoincareSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("PoincareSeries", 2)?;
        let num: Vec<String> = self
            .numerator
            .coeffs()
            .iter()
            .map(|c| c.to_string())
            .collect();
        st.serialize_field("denominator", &self.denominator)?;
        st.serialize_field("numerator", &num)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for PoincareSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            numerator: Vec<String>,
            denominator: Vec<u32>,
        }
        let raw = Raw::deserialize(deserializer)?;
        if raw.denominator.contains(&0) {
            return Err(D::Error::custom("denominator exponents must be positive"));
        }
        let coeffs = raw
            .numerator
            .iter()
            .map(|s| s.parse::<BigInt>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| D::Error::custom(format!("bad numerator coefficient: {e}")))?;
        Ok(PoincareSeries::new(
            IntPolynomial::new(coeffs),
            raw.denominator,
        ))
    }
}
