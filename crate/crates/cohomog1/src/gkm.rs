//! GKM-style pair model for the equivariant cohomology of torus-family
//! diagrams (`K± = T`, `H = ker α`): pairs `(f, g)` of polynomials on the
//! torus Lie algebra with `α | f − g`.
//!
//! Graded dimensions of the pair space are computed by brute-force linear
//! algebra (rank of multiplication by `α`), deliberately not by the closed
//! series formula, so the two routes can be compared. Odd cohomological
//! degrees are zero by convention: the model only populates even degrees.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::polyring::linalg::rank_rational;
use crate::polyring::{
    monomials_of_weight, normal_form, GradedPolynomial, MonomialOrder, PolyError, VarSet,
};

/// Data of a maximal-torus family member: the torus rank `k` of `G` and the
/// integral linear form `α` (as coordinates) whose kernel is `H`.
///
/// The associated twist is the involution of the torus algebra fixing
/// `ker α` and negating a complementary direction; on linear forms it sends
/// `α ↦ −α` and fixes a complement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorusFamilySpec {
    family: FamilyTag,
    pub k: u32,
    pub alpha: Vec<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
enum FamilyTag {
    #[serde(rename = "torus")]
    Torus,
}

impl TorusFamilySpec {
    pub fn torus(k: u32, alpha: Vec<i64>) -> Self {
        TorusFamilySpec {
            family: FamilyTag::Torus,
            k,
            alpha,
        }
    }

    /// Structural consistency: `k ≥ 1`, `α` has `k` coordinates, `α ≠ 0`.
    pub fn check(&self) -> Result<(), String> {
        if self.k == 0 {
            return Err("torus family requires k >= 1".into());
        }
        if self.alpha.len() != self.k as usize {
            return Err(format!(
                "alpha has {} coordinates but k = {}",
                self.alpha.len(),
                self.k
            ));
        }
        if self.alpha.iter().all(|&c| c == 0) {
            return Err("alpha must be a nonzero linear form".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GkmError {
    #[error("bad pair-model data: {0}")]
    Spec(String),
    #[error("{0}")]
    Poly(#[from] PolyError),
    #[error("tensor map image at degree {degree} is not a pair: alpha does not divide f - g")]
    NotMember { degree: u32 },
    #[error("tensor map at degree {degree} spans {got} dimensions of the {expected}-dimensional pair space")]
    RankDeficient {
        degree: u32,
        expected: usize,
        got: usize,
    },
}

/// The pair space `{(f, g) ∈ ℚ[x₁..x_k]² : α | f − g}` with its twist
/// involution.
#[derive(Debug, Clone)]
pub struct GkmPairRing {
    vars: Arc<VarSet>,
    alpha: GradedPolynomial,
    /// index of the first nonzero coordinate of `α`
    pivot: usize,
}

impl GkmPairRing {
    pub fn new(k: u32, alpha_coords: &[i64]) -> Result<Self, GkmError> {
        let spec = TorusFamilySpec::torus(k, alpha_coords.to_vec());
        Self::from_spec(&spec)
    }

    pub fn from_spec(spec: &TorusFamilySpec) -> Result<Self, GkmError> {
        spec.check().map_err(GkmError::Spec)?;
        let pairs: Vec<(String, u32)> = (1..=spec.k).map(|i| (format!("x{i}"), 2)).collect();
        let vars = VarSet::new(&pairs)?;
        let alpha = GradedPolynomial::from_terms(
            &vars,
            spec.alpha.iter().enumerate().map(|(i, &c)| {
                let mut exps = vec![0u32; spec.k as usize];
                exps[i] = 1;
                (exps, BigRational::from_integer(c.into()))
            }),
        );
        let pivot = spec
            .alpha
            .iter()
            .position(|&c| c != 0)
            .expect("alpha is nonzero");
        Ok(GkmPairRing { vars, alpha, pivot })
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn alpha(&self) -> &GradedPolynomial {
        &self.alpha
    }

    /// Is `(f, g)` in the pair space, i.e. does `α` divide `f − g`?
    pub fn is_member(&self, f: &GradedPolynomial, g: &GradedPolynomial) -> bool {
        let divisor = [self.alpha.make_monic(MonomialOrder::GrevLex)];
        normal_form(&(f - g), &divisor, MonomialOrder::GrevLex).is_zero()
    }

    /// The twist: the ring involution induced by the reflection that fixes
    /// `ker α` pointwise and maps `α ↦ −α`. Concretely `x_j ↦ x_j − (2/α_j)α`
    /// for the pivot coordinate `j`, all other variables fixed.
    pub fn twist(&self, f: &GradedPolynomial) -> GradedPolynomial {
        let alpha_pivot = self.alpha.coeff(&{
            let mut e = vec![0u32; self.vars.len()];
            e[self.pivot] = 1;
            e
        });
        let scale = BigRational::from_integer(2.into()) / alpha_pivot;
        let images: Vec<GradedPolynomial> = (0..self.vars.len())
            .map(|i| {
                let xi = GradedPolynomial::variable(&self.vars, i);
                if i == self.pivot {
                    &xi - &self.alpha.scale(&scale)
                } else {
                    xi
                }
            })
            .collect();
        f.substitute(&self.vars, &images)
    }

    fn coords(&self, f: &GradedPolynomial, index: &BTreeMap<Vec<u32>, usize>) -> Vec<BigRational> {
        let mut row = vec![BigRational::zero(); index.len()];
        for (e, c) in f.terms() {
            let slot = index.get(e).expect("polynomial leaves its graded piece");
            row[*slot] = c.clone();
        }
        row
    }

    fn basis_index(&self, cohdeg: u32) -> (Vec<Vec<u32>>, BTreeMap<Vec<u32>, usize>) {
        let monos = monomials_of_weight(&self.vars, cohdeg);
        let index = monos
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        (monos, index)
    }

    /// Rank of multiplication by `α` from degree `cohdeg − 2` into `cohdeg`,
    /// by exact row reduction.
    fn alpha_multiplication_rank(&self, cohdeg: u32) -> usize {
        if cohdeg < 2 {
            return 0;
        }
        let (_, index) = self.basis_index(cohdeg);
        let rows: Vec<Vec<BigRational>> = monomials_of_weight(&self.vars, cohdeg - 2)
            .into_iter()
            .map(|m| {
                let mono = GradedPolynomial::monomial(self.vars.clone(), m, BigRational::one());
                self.coords(&(&mono * &self.alpha), &index)
            })
            .collect();
        rank_rational(rows)
    }

    /// Dimension of the degree-`cohdeg` piece of the pair space:
    /// `2·dim S_d − dim (S/α)_d`, each term computed by linear algebra.
    pub fn graded_dimension(&self, cohdeg: u32) -> usize {
        if !cohdeg.is_multiple_of(2) {
            return 0;
        }
        let full = monomials_of_weight(&self.vars, cohdeg).len();
        let rank = self.alpha_multiplication_rank(cohdeg);
        // 2·full − (full − rank)
        full + rank
    }

    /// Dimension of the twist-invariant polynomials in degree `cohdeg`
    /// (kernel of `τ − id`), by exact row reduction.
    pub fn twist_invariant_dimension(&self, cohdeg: u32) -> usize {
        if !cohdeg.is_multiple_of(2) {
            return 0;
        }
        let (monos, index) = self.basis_index(cohdeg);
        let rows: Vec<Vec<BigRational>> = monos
            .iter()
            .map(|m| {
                let mono =
                    GradedPolynomial::monomial(self.vars.clone(), m.clone(), BigRational::one());
                self.coords(&(&self.twist(&mono) - &mono), &index)
            })
            .collect();
        monos.len() - rank_rational(rows)
    }

    /// Verifies degree by degree that the map `m⊗1 ↦ (m, m)`,
    /// `m⊗α ↦ (mα, image(mα))` lands in the pair space and spans it. With
    /// `image = -id` this is the standard splitting
    /// `H*_T ≅ H*(BT) ⊗ (ℚ ⊕ ℚα)`; other images let tests probe maps that
    /// must fail.
    pub fn check_tensor_map<F>(&self, up_to_cohdeg: u32, image: F) -> Result<(), GkmError>
    where
        F: Fn(&GradedPolynomial) -> GradedPolynomial,
    {
        for cohdeg in (0..=up_to_cohdeg).step_by(2) {
            let (monos, index) = self.basis_index(cohdeg);
            let mut pairs: Vec<(GradedPolynomial, GradedPolynomial)> = Vec::new();
            for m in &monos {
                let mono =
                    GradedPolynomial::monomial(self.vars.clone(), m.clone(), BigRational::one());
                pairs.push((mono.clone(), mono));
            }
            if cohdeg >= 2 {
                for m in monomials_of_weight(&self.vars, cohdeg - 2) {
                    let mono = GradedPolynomial::monomial(self.vars.clone(), m, BigRational::one());
                    let f = &mono * &self.alpha;
                    let g = image(&f);
                    pairs.push((f, g));
                }
            }
            for (f, g) in &pairs {
                if !self.is_member(f, g) {
                    return Err(GkmError::NotMember { degree: cohdeg });
                }
            }
            let rows: Vec<Vec<BigRational>> = pairs
                .iter()
                .map(|(f, g)| {
                    let mut row = self.coords(f, &index);
                    row.extend(self.coords(g, &index));
                    row
                })
                .collect();
            let expected = self.graded_dimension(cohdeg);
            let got = rank_rational(rows);
            if got != expected || pairs.len() != expected {
                return Err(GkmError::RankDeficient {
                    degree: cohdeg,
                    expected,
                    got,
                });
            }
        }
        Ok(())
    }

    /// The standard tensor splitting: `m⊗α ↦ (mα, −mα)`.
    pub fn check_tensor_isomorphism(&self, up_to_cohdeg: u32) -> Result<(), GkmError> {
        self.check_tensor_map(up_to_cohdeg, |f| -f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{IntPolynomial, PoincareSeries};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn family_spec_json() {
        let spec: TorusFamilySpec =
            serde_json::from_str(r#"{"family":"torus","k":3,"alpha":[1,0,0]}"#).unwrap();
        assert_eq!(spec, TorusFamilySpec::torus(3, vec![1, 0, 0]));
        assert!(spec.check().is_ok());
        assert!(serde_json::from_str::<TorusFamilySpec>(
            r#"{"family":"elliptic","k":3,"alpha":[1,0,0]}"#
        )
        .is_err());
        assert!(TorusFamilySpec::torus(2, vec![0, 0]).check().is_err());
        assert!(TorusFamilySpec::torus(2, vec![1]).check().is_err());
    }

    fn random_poly(ring: &GkmPairRing, rng: &mut ChaCha8Rng, max_exp: u32) -> GradedPolynomial {
        let n = ring.vars().len();
        GradedPolynomial::from_terms(
            ring.vars(),
            (0..rng.gen_range(1..=4)).map(|_| {
                let exps: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
                let c = BigRational::from_integer(rng.gen_range(-3..=3i64).into());
                (exps, c)
            }),
        )
    }

    #[test]
    fn membership() {
        let ring = GkmPairRing::new(3, &[1, 0, 0]).unwrap();
        let x1 = GradedPolynomial::variable(ring.vars(), 0);
        let x2 = GradedPolynomial::variable(ring.vars(), 1);
        assert!(ring.is_member(&x1, &(-&x1)));
        assert!(!ring.is_member(&x2, &(-&x2)));
        assert!(ring.is_member(&x2, &x2));
        // (f + alpha*h, f) is always a member
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed97);
        for _ in 0..20 {
            let f = random_poly(&ring, &mut rng, 2);
            let h = random_poly(&ring, &mut rng, 2);
            assert!(ring.is_member(&(&f + &(ring.alpha() * &h)), &f));
        }
    }

    #[test]
    fn pairs_are_closed_under_products() {
        let ring = GkmPairRing::new(3, &[1, 1, 1]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed98);
        for _ in 0..15 {
            let f1 = random_poly(&ring, &mut rng, 2);
            let h1 = random_poly(&ring, &mut rng, 1);
            let f2 = random_poly(&ring, &mut rng, 2);
            let h2 = random_poly(&ring, &mut rng, 1);
            let g1 = &f1 + &(ring.alpha() * &h1);
            let g2 = &f2 + &(ring.alpha() * &h2);
            assert!(ring.is_member(&(&f1 * &f2), &(&g1 * &g2)));
            assert!(ring.is_member(&(&f1 + &f2), &(&g1 + &g2)));
        }
    }

    #[test]
    fn twist_is_a_ring_involution() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed99);
        for alpha in [vec![1i64, 0, 0], vec![1, 1, 1], vec![0, 2, -1]] {
            let ring = GkmPairRing::new(3, &alpha).unwrap();
            assert_eq!(ring.twist(ring.alpha()), -ring.alpha());
            for _ in 0..10 {
                let f = random_poly(&ring, &mut rng, 2);
                let g = random_poly(&ring, &mut rng, 2);
                assert_eq!(ring.twist(&ring.twist(&f)), f);
                assert_eq!(ring.twist(&(&f * &g)), &ring.twist(&f) * &ring.twist(&g));
                // f and its twist agree modulo alpha
                assert!(ring.is_member(&f, &ring.twist(&f)));
            }
        }
    }

    #[test]
    fn twist_fixes_the_kernel_coordinates() {
        let ring = GkmPairRing::new(3, &[1, 0, 0]).unwrap();
        let x1 = GradedPolynomial::variable(ring.vars(), 0);
        let x2 = GradedPolynomial::variable(ring.vars(), 1);
        assert_eq!(ring.twist(&x1), -&x1);
        assert_eq!(ring.twist(&x2), x2.clone());
        let sq = &(&x1 * &x1) + &x2;
        assert_eq!(ring.twist(&sq), sq);
    }

    #[test]
    fn graded_dimensions() {
        let ring = GkmPairRing::new(3, &[1, 0, 0]).unwrap();
        assert_eq!(ring.graded_dimension(0), 1);
        assert_eq!(ring.graded_dimension(2), 4);
        assert_eq!(ring.graded_dimension(4), 9);
        assert_eq!(ring.graded_dimension(3), 0);
        let small = GkmPairRing::new(2, &[1, -1]).unwrap();
        assert_eq!(small.graded_dimension(2), 3);
    }

    #[test]
    fn twist_invariants_match_the_reflection_series() {
        // invariants of a reflection: free on k-1 linear generators and one
        // quadratic, Hilbert series 1/((1-t^2)^(k-1) (1-t^4))
        for (k, alpha) in [
            (2u32, vec![1i64, -1]),
            (3, vec![1, 0, 0]),
            (3, vec![1, 1, 1]),
        ] {
            let ring = GkmPairRing::new(k, &alpha).unwrap();
            let mut degrees = vec![2u32; (k - 1) as usize];
            degrees.push(4);
            let series = PoincareSeries::new(IntPolynomial::one(), degrees);
            let taylor = series.taylor_coefficients(12);
            for cohdeg in (0..=12u32).step_by(2) {
                assert_eq!(
                    num_bigint::BigInt::from(ring.twist_invariant_dimension(cohdeg)),
                    taylor[cohdeg as usize],
                    "k = {k}, alpha = {alpha:?}, degree {cohdeg}"
                );
            }
        }
    }

    #[test]
    fn tensor_isomorphism_holds_and_corruption_fails() {
        for (k, alpha) in [(2u32, vec![1i64, 0]), (3, vec![1, 1, 1])] {
            let ring = GkmPairRing::new(k, &alpha).unwrap();
            ring.check_tensor_isomorphism(8).unwrap();
            // flipping the sign convention sends m⊗α to (mα, mα), which
            // collapses into the diagonal and loses a dimension immediately
            let err = ring.check_tensor_map(8, |f| f.clone()).unwrap_err();
            assert_eq!(
                err,
                GkmError::RankDeficient {
                    degree: 2,
                    expected: ring.graded_dimension(2),
                    got: ring.graded_dimension(2) - 1,
                }
            );
        }
    }
}
