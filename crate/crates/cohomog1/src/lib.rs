//! Exact cohomological invariants of cohomogeneity-one group diagrams.
//!
//! Given the abstract diagram `G ⊃ K⁻, K⁺ ⊃ H` of a cohomogeneity-one action
//! (compact connected group types only — no embeddings, just classical
//! invariant data), this crate computes, in exact arithmetic:
//!
//! - Euler characteristics of the singular and principal orbits and of the
//!   manifold, from Weyl-group orders;
//! - the equivariant-formality verdict and the Krull dimension of the
//!   equivariant cohomology ring;
//! - the equivariant Hilbert series and, in the even-dimensional formal case,
//!   the Poincaré polynomial of the manifold;
//! - the odd-dimensional relations tying `dim H*(M)` to the order of the
//!   dihedral Weyl group of the action;
//! - for diagrams in the maximal-torus family, explicit cohomology-ring
//!   presentations with a built-in Gröbner-basis engine, Hilbert series of
//!   quotients, and a GKM-style pair model of the equivariant cohomology.
//!
//! Start with the runnable examples (`cargo run --example catalog_tour`) or
//! the `cohomog1` binary (`cohomog1 report --catalog N7G`).

pub mod catalog;
pub mod cli;
pub mod diagram;
pub mod gkm;
pub mod invariants;
pub mod lie;
pub mod oddcase;
pub mod polyring;
pub mod report;
pub mod series;

pub use catalog::CatalogEntry;
pub use diagram::{GroupDiagram, OrbitSpace, ValidationReport};
pub use gkm::{GkmPairRing, TorusFamilySpec};
pub use invariants::InvariantReport;
pub use lie::{CompactGroupType, SimpleType};
pub use oddcase::OddCaseReport;
pub use polyring::{GradedPolynomial, GroebnerBasis, MonomialOrder, VarSet};
pub use report::DiagramReport;
pub use series::{IntPolynomial, PoincareSeries};
