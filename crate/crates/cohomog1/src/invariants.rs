//! Cohomological invariants of a valid diagram: Euler characteristics,
//! equivariant formality, Krull dimension, the equivariant Hilbert series,
//! and (in the even-dimensional formal case) the Poincaré polynomial.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

use crate::diagram::{DiagramError, GroupDiagram, Isotropy};
use crate::lie::CompactGroupType;
use crate::series::{IntPolynomial, PoincareSeries};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("{0}")]
    Diagram(#[from] DiagramError),
    #[error("rank({k}) = {rank_k} exceeds rank({g}) = {rank_g}: no such homogeneous space")]
    RankExceedsGroup {
        g: String,
        k: String,
        rank_g: u32,
        rank_k: u32,
    },
    #[error("|W({k})| = {wk} does not divide |W({g})| = {wg}: impossible equal-rank pair")]
    NonDivisibleWeyl {
        g: String,
        k: String,
        wg: BigUint,
        wk: BigUint,
    },
    #[error("isotropy ranks all equal rank-drop is absent: the Mayer–Vietoris series formula does not apply")]
    EqualIsotropyRanks,
    #[error("a circle orbit space has no singular-orbit series decomposition")]
    CircleOrbitSpace,
    #[error("the manifold is odd-dimensional: no even-degree Poincaré polynomial")]
    OddDimensional,
    #[error("the action is not equivariantly formal")]
    NotFormal,
    #[error(
        "equivariant series divided by the group series is not a polynomial: inconsistent diagram"
    )]
    NotPolynomial,
    #[error("inconsistent diagram: {0}")]
    Inconsistent(String),
}

/// `χ(G/K)` for group types with `rank K ≤ rank G`: the Weyl-order quotient
/// `|W(G)|/|W(K)|` at equal rank, `0` when the rank drops.
pub fn homogeneous_euler(
    g: &CompactGroupType,
    k: &CompactGroupType,
) -> Result<BigInt, InvariantError> {
    if k.rank() > g.rank() {
        return Err(InvariantError::RankExceedsGroup {
            g: g.to_string(),
            k: k.to_string(),
            rank_g: g.rank(),
            rank_k: k.rank(),
        });
    }
    if k.rank() < g.rank() {
        return Ok(BigInt::zero());
    }
    let (wg, wk) = (g.weyl_order(), k.weyl_order());
    let (q, r) = wg.div_rem(&wk);
    if !r.is_zero() {
        return Err(InvariantError::NonDivisibleWeyl {
            g: g.to_string(),
            k: k.to_string(),
            wg,
            wk,
        });
    }
    Ok(q.into())
}

/// `χ(M) = χ(G/K⁻) + χ(G/K⁺) − χ(G/H)` over an interval, `0` over a circle.
pub fn euler_characteristic(d: &GroupDiagram) -> Result<BigInt, InvariantError> {
    d.manifold_dimension()?;
    match &d.isotropy {
        Isotropy::Circle => Ok(BigInt::zero()),
        Isotropy::Interval { k_minus, k_plus } => {
            let cm = homogeneous_euler(&d.g, k_minus)?;
            let cp = homogeneous_euler(&d.g, k_plus)?;
            let ch = homogeneous_euler(&d.g, &d.h)?;
            Ok(cm + cp - ch)
        }
    }
}

/// Equivariant formality holds exactly when some isotropy type attains the
/// full rank of `G`.
pub fn formality_verdict(d: &GroupDiagram) -> Result<bool, InvariantError> {
    d.manifold_dimension()?;
    Ok(d.max_isotropy_rank() == d.g.rank())
}

/// Krull dimension of the equivariant cohomology ring: the maximal isotropy
/// rank.
pub fn krull_dimension(d: &GroupDiagram) -> Result<u32, InvariantError> {
    d.manifold_dimension()?;
    Ok(d.max_isotropy_rank())
}

/// Hilbert series of `H*_G(M)` from the Mayer–Vietoris decomposition:
/// `P(BK⁻) + P(BK⁺) − P(BH)`.
///
/// Applies when the principal rank sits one below the larger singular rank
/// (after normalizing so `rank K⁻ ≥ rank K⁺`); in the equal-rank case the
/// module structure is different and this formula is refused.
pub fn equivariant_hilbert_series(d: &GroupDiagram) -> Result<PoincareSeries, InvariantError> {
    d.manifold_dimension()?;
    let Isotropy::Interval { k_minus, k_plus } = &d.isotropy else {
        return Err(InvariantError::CircleOrbitSpace);
    };
    let b = k_minus.rank().max(k_plus.rank());
    if d.h.rank() == b {
        return Err(InvariantError::EqualIsotropyRanks);
    }
    debug_assert_eq!(d.h.rank() + 1, b, "validity leaves only a rank drop of one");
    let sm = PoincareSeries::classifying(k_minus);
    let sp = PoincareSeries::classifying(k_plus);
    let sh = PoincareSeries::classifying(&d.h);
    Ok(sm.add(&sp).sub(&sh))
}

/// Poincaré polynomial of `M` for even-dimensional, equivariantly formal
/// diagrams: the equivariant Hilbert series divided by `P_t(BG)`.
///
/// The quotient is checked to be a polynomial with nonnegative coefficients
/// summing to `χ(M)`; any failure marks the diagram as inconsistent.
pub fn poincare_polynomial(d: &GroupDiagram) -> Result<IntPolynomial, InvariantError> {
    if !d.is_even_dimensional()? {
        return Err(InvariantError::OddDimensional);
    }
    if !formality_verdict(d)? {
        return Err(InvariantError::NotFormal);
    }
    let series = equivariant_hilbert_series(d)?;
    let quotient = series
        .div(&PoincareSeries::classifying(&d.g))
        .map_err(|_| InvariantError::NotPolynomial)?;
    let poly = quotient
        .as_polynomial()
        .ok_or(InvariantError::NotPolynomial)?;
    if !poly.is_nonnegative() {
        return Err(InvariantError::Inconsistent(
            "Poincaré polynomial has a negative coefficient".into(),
        ));
    }
    let chi = euler_characteristic(d)?;
    if poly.eval_at_one() != chi {
        return Err(InvariantError::Inconsistent(format!(
            "coefficient sum {} differs from chi = {chi}",
            poly.eval_at_one()
        )));
    }
    Ok(poly)
}

/// Euler characteristics of the three orbit types of an interval diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChiOrbits {
    pub k_minus: BigInt,
    pub k_plus: BigInt,
    pub h: BigInt,
}

/// Everything the `report` front-end prints for the invariants section.
/// Optional fields are absent when their formula does not apply, with the
/// reason recorded in `notes`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub dim_m: u64,
    pub chi_m: BigInt,
    pub chi_orbits: Option<ChiOrbits>,
    pub formal: bool,
    pub krull_dimension: u32,
    pub equivariant_series: Option<PoincareSeries>,
    pub poincare_polynomial: Option<IntPolynomial>,
    pub notes: Vec<String>,
    pub warnings: Vec<String>,
}

/// Assembles the full invariants section for a valid diagram. Errors only on
/// invalid or arithmetically impossible diagrams; inapplicable formulas just
/// leave their field empty with a note.
pub fn build_report(d: &GroupDiagram) -> Result<InvariantReport, InvariantError> {
    let dim_m = d.manifold_dimension()?;
    let chi_m = euler_characteristic(d)?;
    let chi_orbits = match &d.isotropy {
        Isotropy::Interval { k_minus, k_plus } => Some(ChiOrbits {
            k_minus: homogeneous_euler(&d.g, k_minus)?,
            k_plus: homogeneous_euler(&d.g, k_plus)?,
            h: homogeneous_euler(&d.g, &d.h)?,
        }),
        Isotropy::Circle => None,
    };
    let mut notes = Vec::new();
    let mut warnings = Vec::new();
    if chi_orbits.is_none() {
        notes.push(
            "circle orbit space: no singular orbits, chi decomposition not applicable".into(),
        );
    }
    let formal = formality_verdict(d)?;
    let krull = krull_dimension(d)?;
    let equivariant_series = match equivariant_hilbert_series(d) {
        Ok(s) => Some(s),
        Err(InvariantError::EqualIsotropyRanks) => {
            notes.push(
                "equivariant Hilbert series omitted: isotropy ranks are all equal, the Mayer-Vietoris series formula does not apply".into(),
            );
            None
        }
        Err(InvariantError::CircleOrbitSpace) => {
            notes.push("equivariant Hilbert series omitted: circle orbit space".into());
            None
        }
        Err(e) => return Err(e),
    };
    let poincare = match poincare_polynomial(d) {
        Ok(p) => {
            if !p.is_palindromic() {
                warnings.push(format!(
                    "Poincaré polynomial {p} is not palindromic: Poincaré duality fails, the diagram is unlikely to be realizable"
                ));
            }
            Some(p)
        }
        Err(InvariantError::OddDimensional) => {
            notes.push(format!(
                "Poincaré polynomial omitted: dim M = {dim_m} is odd"
            ));
            None
        }
        Err(InvariantError::NotFormal) => {
            notes
                .push("Poincaré polynomial omitted: the action is not equivariantly formal".into());
            None
        }
        Err(InvariantError::EqualIsotropyRanks) | Err(InvariantError::CircleOrbitSpace) => {
            // note already recorded for the series
            None
        }
        Err(e) => return Err(e),
    };
    Ok(InvariantReport {
        dim_m,
        chi_m,
        chi_orbits,
        formal,
        krull_dimension: krull,
        equivariant_series,
        poincare_polynomial: poincare,
        notes,
        warnings,
    })
}
