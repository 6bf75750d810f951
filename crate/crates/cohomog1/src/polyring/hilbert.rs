//! Hilbert series of graded quotients, from the leading-term ideal by
//! inclusion–exclusion (the quotient by a monomial ideal has the same graded
//! dimensions as the quotient by the ideal itself).

use crate::series::{IntPolynomial, PoincareSeries};

use super::groebner::GroebnerBasis;
use super::PolyError;

const MAX_SUBSET_GENERATORS: usize = 20;

/// Hilbert series of `R/I` as a quotient of the free series
/// `1/∏(1 - t^{deg x})`, for a homogeneous ideal given by its reduced
/// Gröbner basis. Exponents of `t` are cohomological degrees.
pub fn hilbert_series_quotient(gb: &GroebnerBasis) -> Result<PoincareSeries, PolyError> {
    if !gb.is_homogeneous() {
        return Err(PolyError::NotHomogeneous);
    }
    let heads = gb.leading_monomials();
    let m = heads.len();
    if m > MAX_SUBSET_GENERATORS {
        return Err(PolyError::TooLarge(format!(
            "leading-term ideal has {m} minimal generators; inclusion-exclusion capped at {MAX_SUBSET_GENERATORS}"
        )));
    }
    let vars = gb.vars();
    let nvars = vars.len();
    let mut coeffs: Vec<i64> = vec![0];
    let mut add_term = |weight: u32, sign: i64| {
        let w = weight as usize;
        if coeffs.len() <= w {
            coeffs.resize(w + 1, 0);
        }
        coeffs[w] += sign;
    };
    for subset in 0u64..(1u64 << m) {
        let mut lcm = vec![0u32; nvars];
        let mut size = 0u32;
        for (k, head) in heads.iter().enumerate() {
            if subset >> k & 1 == 1 {
                size += 1;
                for (l, h) in lcm.iter_mut().zip(head) {
                    *l = (*l).max(*h);
                }
            }
        }
        let sign = if size.is_multiple_of(2) { 1 } else { -1 };
        add_term(vars.weight_of(&lcm), sign);
    }
    let numerator = IntPolynomial::from_coeffs(&coeffs);
    Ok(PoincareSeries::new(numerator, vars.degrees().to_vec()))
}
