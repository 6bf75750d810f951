//! Exact graded polynomial algebra over ℚ: arithmetic, Gröbner bases,
//! Hilbert series of quotients, a literal parser, and the cohomology-ring
//! presentations of the maximal-torus diagram family.
//!
//! Variables carry even cohomological degrees, so a polynomial degree `e`
//! contributes `e·deg(x)` to the grading. All computations are exact
//! (`BigRational` coefficients).

mod groebner;
mod hilbert;
pub mod linalg;
mod parse;
mod poly;
mod presentations;

pub use groebner::{groebner_basis, normal_form, GroebnerBasis};
pub use hilbert::hilbert_series_quotient;
pub use parse::parse_polynomial;
pub use poly::{monomials_of_weight, GradedPolynomial, MonomialOrder, VarSet};
pub use presentations::{
    build_torus_family_presentations, square_zero_degree2, FamilyError, FamilyPresentations,
    IdealPresentation, SquareZeroOutcome,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("polynomial parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("bad variable set: {0}")]
    BadVariable(String),
    #[error("ideal is not homogeneous for the cohomological grading")]
    NotHomogeneous,
    #[error("quotient ring is not finite-dimensional over the rationals")]
    NotFiniteDimensional,
    #[error("computation too large: {0}")]
    TooLarge(String),
    #[error("square-zero search inconclusive: {0}")]
    Inconclusive(String),
}
