//! Odd-dimensional diagrams with `rank H = rank G`: relations between
//! `dim H*(M; ℚ)`, `χ(G/H)`, and the order of the dihedral "Weyl group" `W`
//! of the action, plus the normalizer consistency test.
//!
//! The governing relation is `dim H*(M) = 2·χ(G/H)/|W|`, with
//! `χ(G/H) = |W|·(number of components of M^T)`; a rational homology sphere
//! is detected by `|W| = χ(G/H)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::diagram::{DiagramError, GroupDiagram, OrbitSpace};
use crate::invariants::{homogeneous_euler, InvariantError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OddCaseError {
    #[error("{0}")]
    Diagram(#[from] DiagramError),
    #[error("{0}")]
    Invariant(#[from] InvariantError),
    #[error("odd-case relations need an interval orbit space")]
    CircleOrbitSpace,
    #[error("odd-case relations need rank(H) = rank(G), got {rank_h} < {rank_g}")]
    RankHypothesis { rank_h: u32, rank_g: u32 },
    #[error("diagram is even-dimensional, odd-case relations do not apply")]
    EvenDimensional,
    #[error("input inconsistent with the odd-case dimension relation: {0}")]
    Inconsistent(String),
    #[error("weyl order {w} exceeds the normalizer order {nh}: W embeds in N(H)/H")]
    WeylExceedsNormalizer { w: u64, nh: u64 },
}

/// `χ(G/H)` under the odd-case hypotheses (valid interval diagram with full
/// principal rank). Always positive.
pub fn chi_principal(d: &GroupDiagram) -> Result<BigInt, OddCaseError> {
    d.manifold_dimension()?;
    if d.orbit_space() == OrbitSpace::Circle {
        return Err(OddCaseError::CircleOrbitSpace);
    }
    if d.h.rank() != d.g.rank() {
        return Err(OddCaseError::RankHypothesis {
            rank_h: d.h.rank(),
            rank_g: d.g.rank(),
        });
    }
    // rank equality forces dim G ≡ dim H (mod 2), so dim M is odd; checked
    // anyway as the promised precondition cross-check.
    if d.is_even_dimensional()? {
        return Err(OddCaseError::EvenDimensional);
    }
    Ok(homogeneous_euler(&d.g, &d.h)?)
}

/// `dim H*(M; ℚ) = 2·χ(G/H) / |W|`. The result must be a positive even
/// integer (it is twice the number of fixed-point components); anything else
/// flags the input Weyl order as inconsistent.
pub fn dim_from_weyl(d: &GroupDiagram, weyl_order: u64) -> Result<BigInt, OddCaseError> {
    let chi = chi_principal(d)?;
    if weyl_order == 0 {
        return Err(OddCaseError::Inconsistent("|W| must be positive".into()));
    }
    let (q, r) = (BigInt::from(2) * &chi).div_rem(&BigInt::from(weyl_order));
    if !r.is_zero() {
        return Err(OddCaseError::Inconsistent(format!(
            "|W| = {weyl_order} does not divide 2·chi(G/H) = {}",
            2 * chi
        )));
    }
    if (&q % 2) != BigInt::zero() {
        return Err(OddCaseError::Inconsistent(format!(
            "dim H*(M) = {q} would be odd; it equals twice the number of fixed-point components"
        )));
    }
    Ok(q)
}

/// Inverse relation: `|W| = 2·χ(G/H) / dim H*(M)`.
///
/// Note the arithmetic cannot see that a dihedral group generated by two
/// involutions has order 1 or an even order; a result like 3 still flags the
/// pair as suspect downstream.
pub fn weyl_from_dim(d: &GroupDiagram, dim_cohomology: u64) -> Result<BigInt, OddCaseError> {
    let chi = chi_principal(d)?;
    if dim_cohomology == 0 || !dim_cohomology.is_multiple_of(2) {
        return Err(OddCaseError::Inconsistent(format!(
            "dim H*(M) = {dim_cohomology} must be a positive even integer"
        )));
    }
    let (q, r) = (BigInt::from(2) * &chi).div_rem(&BigInt::from(dim_cohomology));
    if !r.is_zero() {
        return Err(OddCaseError::Inconsistent(format!(
            "dim H*(M) = {dim_cohomology} does not divide 2·chi(G/H) = {}",
            2 * chi
        )));
    }
    Ok(q)
}

/// `M` is a rational homology sphere exactly when `|W| = χ(G/H)`.
pub fn rational_sphere_predicate(d: &GroupDiagram, weyl_order: u64) -> Result<bool, OddCaseError> {
    Ok(chi_principal(d)? == BigInt::from(weyl_order))
}

/// Consistency of a claimed `|N(H)/H|` with a claimed `|W|`:
/// `W` embeds in `N(H)/H` (so `|W| > |N(H)/H|` is an error), and
/// `χ(G/H) = |W|` forces `W = N(H)/H`, so differing orders are then
/// inconsistent.
pub fn normalizer_consistency(
    d: &GroupDiagram,
    weyl_order: u64,
    normalizer_order: u64,
) -> Result<bool, OddCaseError> {
    let chi = chi_principal(d)?;
    if weyl_order > normalizer_order {
        return Err(OddCaseError::WeylExceedsNormalizer {
            w: weyl_order,
            nh: normalizer_order,
        });
    }
    if chi == BigInt::from(weyl_order) && normalizer_order != weyl_order {
        return Ok(false);
    }
    Ok(true)
}

/// Odd-case section of a report: `χ(G/H)` plus whatever the optional inputs
/// allow deriving.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCaseReport {
    pub chi_gh: BigInt,
    pub weyl_order: Option<u64>,
    pub dim_cohomology: Option<BigInt>,
    pub rational_sphere: Option<bool>,
    pub normalizer_order: Option<u64>,
    pub normalizer_consistent: Option<bool>,
    pub warnings: Vec<String>,
}

/// `Ok(None)` when the odd-case hypotheses do not hold (even-dimensional or
/// circle diagrams); errors only on invalid diagrams or inconsistent inputs.
pub fn build_report(d: &GroupDiagram) -> Result<Option<OddCaseReport>, OddCaseError> {
    d.manifold_dimension()?;
    if d.orbit_space() == OrbitSpace::Circle || d.h.rank() != d.g.rank() {
        return Ok(None);
    }
    let chi_gh = chi_principal(d)?;
    let mut report = OddCaseReport {
        chi_gh,
        weyl_order: d.weyl_order,
        dim_cohomology: None,
        rational_sphere: None,
        normalizer_order: d.normalizer_order,
        normalizer_consistent: None,
        warnings: Vec::new(),
    };
    if let Some(w) = d.weyl_order {
        report.dim_cohomology = Some(dim_from_weyl(d, w)?);
        report.rational_sphere = Some(rational_sphere_predicate(d, w)?);
        if w < 2 {
            report.warnings.push(
                "|W| = 1: both generating reflections of the action's dihedral group are trivial"
                    .into(),
            );
        }
        if let Some(nh) = d.normalizer_order {
            report.normalizer_consistent = Some(normalizer_consistency(d, w, nh)?);
        }
    }
    Ok(Some(report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::CompactGroupType;

    fn g(lit: &str) -> CompactGroupType {
        lit.parse().expect(lit)
    }

    fn n7g() -> GroupDiagram {
        GroupDiagram::interval(g("A2"), g("A1+T1"), g("A1+T1"), g("T2"))
    }

    fn n7i() -> GroupDiagram {
        GroupDiagram::interval(g("C2"), g("C1xC1"), g("C1xC1"), g("C1+T1"))
    }

    /// SU(2) on a 3-manifold: χ(G/H) = |W| = 2, a rational homology sphere.
    fn sphere_like() -> GroupDiagram {
        GroupDiagram::interval(g("A1"), g("T1"), g("T1"), g("T1"))
    }

    #[test]
    fn chi_principal_values() {
        assert_eq!(chi_principal(&n7g()).unwrap(), 6.into());
        assert_eq!(chi_principal(&n7i()).unwrap(), 4.into());
        assert_eq!(chi_principal(&sphere_like()).unwrap(), 2.into());
    }

    #[test]
    fn dimension_from_weyl_order() {
        assert_eq!(dim_from_weyl(&n7g(), 2).unwrap(), 6.into());
        assert_eq!(dim_from_weyl(&n7i(), 2).unwrap(), 4.into());
        // N7G homology has total dimension 6 (CP^2 x S^3 pattern),
        // N7I has 4 (S^3 x S^4 pattern).
    }

    #[test]
    fn weyl_from_dimension() {
        assert_eq!(weyl_from_dim(&n7g(), 6).unwrap(), 2.into());
        assert_eq!(weyl_from_dim(&n7i(), 4).unwrap(), 2.into());
        // arithmetic edge: dim 12 forces the trivial group
        assert_eq!(weyl_from_dim(&n7g(), 12).unwrap(), 1.into());
    }

    #[test]
    fn inverse_relations_roundtrip() {
        for d in [n7g(), n7i(), sphere_like()] {
            for w in [1u64, 2] {
                if let Ok(dim) = dim_from_weyl(&d, w) {
                    let dim_u: u64 = u64::try_from(&dim).unwrap();
                    assert_eq!(weyl_from_dim(&d, dim_u).unwrap(), w.into());
                }
            }
        }
    }

    #[test]
    fn divisibility_failures_are_reported() {
        assert!(matches!(
            dim_from_weyl(&n7g(), 5),
            Err(OddCaseError::Inconsistent(_))
        ));
        // 4 divides 2·6 = 12 but the quotient 3 is odd
        assert!(matches!(
            dim_from_weyl(&n7g(), 4),
            Err(OddCaseError::Inconsistent(_))
        ));
        assert!(matches!(
            weyl_from_dim(&n7g(), 5),
            Err(OddCaseError::Inconsistent(_))
        ));
        assert!(matches!(
            weyl_from_dim(&n7g(), 8),
            Err(OddCaseError::Inconsistent(_))
        ));
    }

    #[test]
    fn rational_sphere_detection() {
        assert!(rational_sphere_predicate(&sphere_like(), 2).unwrap());
        assert!(!rational_sphere_predicate(&n7i(), 2).unwrap());
        assert!(!rational_sphere_predicate(&n7g(), 2).unwrap());
    }

    #[test]
    fn normalizer_consistency_cases() {
        // N7G: chi = 6 != |W| = 2, so N(H)/H = 6 is fine
        assert!(normalizer_consistency(&n7g(), 2, 6).unwrap());
        // N7I: chi = 4, |W| = |N(H)/H| = 2
        assert!(normalizer_consistency(&n7i(), 2, 2).unwrap());
        // chi = |W| = 2 forces W = N(H)/H; a larger normalizer is inconsistent
        assert!(!normalizer_consistency(&sphere_like(), 2, 4).unwrap());
        // W embeds in N(H)/H
        assert!(matches!(
            normalizer_consistency(&n7g(), 6, 2),
            Err(OddCaseError::WeylExceedsNormalizer { .. })
        ));
    }

    #[test]
    fn rank_hypothesis_enforced() {
        let so5 = GroupDiagram::interval(g("B2"), g("D2"), g("B1+T1"), g("B1"));
        assert!(matches!(
            chi_principal(&so5),
            Err(OddCaseError::RankHypothesis { .. })
        ));
        assert_eq!(build_report(&so5).unwrap(), None);
        let circle = GroupDiagram::circle(g("A1"), g("T1"));
        assert!(matches!(
            chi_principal(&circle),
            Err(OddCaseError::CircleOrbitSpace)
        ));
        assert_eq!(build_report(&circle).unwrap(), None);
    }

    #[test]
    fn report_assembly() {
        let mut d = n7i();
        d.weyl_order = Some(2);
        d.normalizer_order = Some(2);
        let r = build_report(&d).unwrap().unwrap();
        assert_eq!(r.chi_gh, 4.into());
        assert_eq!(r.dim_cohomology, Some(4.into()));
        assert_eq!(r.rational_sphere, Some(false));
        assert_eq!(r.normalizer_consistent, Some(true));
        assert!(r.warnings.is_empty());

        // no weyl input: only chi
        let r = build_report(&n7g()).unwrap().unwrap();
        assert_eq!(r.chi_gh, 6.into());
        assert_eq!(r.dim_cohomology, None);

        // |W| = 1 warns
        let mut d = n7g();
        d.weyl_order = Some(1);
        let r = build_report(&d).unwrap().unwrap();
        assert_eq!(r.dim_cohomology, Some(12.into()));
        assert_eq!(r.warnings.len(), 1);

        // inconsistent input surfaces as an error
        let mut d = n7g();
        d.weyl_order = Some(5);
        assert!(build_report(&d).is_err());
    }
}
