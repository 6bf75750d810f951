//! Group diagrams `G ⊃ K⁻, K⁺ ⊃ H` of cohomogeneity-one actions, and the
//! abstract validity rules they must satisfy.
//!
//! Everything here is about group *types*, not embeddings: a diagram is
//! valid when the rank/dimension bookkeeping of the sphere fibrations
//! `K±/H = S^{ℓ±}` is consistent — `ℓ±` even forces `rank H = rank K±`,
//! `ℓ±` odd forces `rank H = rank K± − 1` — and everything fits inside `G`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::gkm::TorusFamilySpec;
use crate::lie::CompactGroupType;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitSpace {
    Interval,
    Circle,
}

impl fmt::Display for OrbitSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitSpace::Interval => write!(f, "interval"),
            OrbitSpace::Circle => write!(f, "circle"),
        }
    }
}

/// Singular isotropy data: two singular types over an interval orbit space,
/// none over a circle (all isotropy groups are then conjugates of `H`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Isotropy {
    Interval {
        k_minus: CompactGroupType,
        k_plus: CompactGroupType,
    },
    Circle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupDiagram {
    pub g: CompactGroupType,
    pub h: CompactGroupType,
    pub isotropy: Isotropy,
    pub name: Option<String>,
    /// Optional user-supplied order of the dihedral Weyl group of the action.
    pub weyl_order: Option<u64>,
    /// Optional user-supplied order of `N(H)/H`.
    pub normalizer_order: Option<u64>,
    /// Present when the diagram belongs to the maximal-torus family
    /// (`K± = T`, `H = ker α`).
    pub family: Option<TorusFamilySpec>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: &'static str,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "pass")?;
        } else {
            write!(f, "fail:")?;
            for v in &self.violations {
                write!(f, " [{}] {};", v.rule, v.message)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("invalid diagram ({0})")]
    Invalid(ValidationReport),
    #[error("diagram JSON error: {0}")]
    Json(String),
}

impl GroupDiagram {
    pub fn interval(
        g: CompactGroupType,
        k_minus: CompactGroupType,
        k_plus: CompactGroupType,
        h: CompactGroupType,
    ) -> Self {
        GroupDiagram {
            g,
            h,
            isotropy: Isotropy::Interval { k_minus, k_plus },
            name: None,
            weyl_order: None,
            normalizer_order: None,
            family: None,
        }
    }

    pub fn circle(g: CompactGroupType, h: CompactGroupType) -> Self {
        GroupDiagram {
            g,
            h,
            isotropy: Isotropy::Circle,
            name: None,
            weyl_order: None,
            normalizer_order: None,
            family: None,
        }
    }

    pub fn orbit_space(&self) -> OrbitSpace {
        match self.isotropy {
            Isotropy::Interval { .. } => OrbitSpace::Interval,
            Isotropy::Circle => OrbitSpace::Circle,
        }
    }

    pub fn k_minus(&self) -> Option<&CompactGroupType> {
        match &self.isotropy {
            Isotropy::Interval { k_minus, .. } => Some(k_minus),
            Isotropy::Circle => None,
        }
    }

    pub fn k_plus(&self) -> Option<&CompactGroupType> {
        match &self.isotropy {
            Isotropy::Interval { k_plus, .. } => Some(k_plus),
            Isotropy::Circle => None,
        }
    }

    /// Checks every abstract validity rule; rule evaluation order is fixed
    /// and the rules are independent of one another.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let (rg, dg) = (self.g.rank(), self.g.dimension());

        let check_inside_g = |name: &str, k: &CompactGroupType, report: &mut ValidationReport| {
            if k.rank() > rg {
                report.violations.push(Violation {
                    rule: "group-rank-containment",
                    message: format!("rank({name}) = {} exceeds rank(G) = {rg}", k.rank()),
                });
            }
            if k.dimension() > dg {
                report.violations.push(Violation {
                    rule: "group-dimension-containment",
                    message: format!("dim({name}) = {} exceeds dim(G) = {dg}", k.dimension()),
                });
            }
        };

        if let Isotropy::Interval { k_minus, k_plus } = &self.isotropy {
            for (name, k) in [("K-", k_minus), ("K+", k_plus)] {
                check_inside_g(name, k, &mut report);
                if self.h.rank() > k.rank() {
                    report.violations.push(Violation {
                        rule: "isotropy-rank-containment",
                        message: format!(
                            "rank(H) = {} exceeds rank({name}) = {}",
                            self.h.rank(),
                            k.rank()
                        ),
                    });
                    continue;
                }
                if self.h.dimension() > k.dimension() {
                    report.violations.push(Violation {
                        rule: "isotropy-dimension-containment",
                        message: format!(
                            "dim(H) = {} exceeds dim({name}) = {}",
                            self.h.dimension(),
                            k.dimension()
                        ),
                    });
                    continue;
                }
                let ell = k.dimension() - self.h.dimension();
                let (rh, rk) = (self.h.rank(), k.rank());
                if ell.is_multiple_of(2) {
                    if rh != rk {
                        report.violations.push(Violation {
                            rule: "sphere-rank-parity",
                            message: format!(
                                "l{} = {ell} is even, so rank(H) must equal rank({name}): {rh} != {rk}",
                                &name[1..]
                            ),
                        });
                    }
                    if ell == 0 {
                        report.warnings.push(format!(
                            "{name}/H = S^0: a connected {name} cannot realize it; accepted abstractly"
                        ));
                    }
                } else if rh + 1 != rk {
                    report.violations.push(Violation {
                        rule: "sphere-rank-parity",
                        message: format!(
                            "l{} = {ell} is odd, so rank(H) must be rank({name}) - 1: {rh} != {rk} - 1",
                            &name[1..]
                        ),
                    });
                }
            }
        }
        check_inside_g("H", &self.h, &mut report);

        if let Some(family) = &self.family {
            if let Err(msg) = family.check() {
                report.violations.push(Violation {
                    rule: "family-spec",
                    message: msg,
                });
            }
        }
        report
    }

    fn validated(&self) -> Result<(), DiagramError> {
        let report = self.validate();
        if report.passed() {
            Ok(())
        } else {
            Err(DiagramError::Invalid(report))
        }
    }

    /// `dim M = dim G − dim H + 1`.
    pub fn manifold_dimension(&self) -> Result<u64, DiagramError> {
        self.validated()?;
        Ok(self.g.dimension() - self.h.dimension() + 1)
    }

    pub fn is_even_dimensional(&self) -> Result<bool, DiagramError> {
        Ok(self.manifold_dimension()? % 2 == 0)
    }

    /// `(ℓ⁻, ℓ⁺)` for interval diagrams, `None` over a circle.
    pub fn sphere_dimensions(&self) -> Result<Option<(u64, u64)>, DiagramError> {
        self.validated()?;
        Ok(match &self.isotropy {
            Isotropy::Interval { k_minus, k_plus } => Some((
                k_minus.dimension() - self.h.dimension(),
                k_plus.dimension() - self.h.dimension(),
            )),
            Isotropy::Circle => None,
        })
    }

    /// Largest rank among the isotropy types occurring in the action:
    /// `max(rank K⁻, rank K⁺)` over an interval, `rank H` over a circle.
    pub fn max_isotropy_rank(&self) -> u32 {
        match &self.isotropy {
            Isotropy::Interval { k_minus, k_plus } => k_minus.rank().max(k_plus.rank()),
            Isotropy::Circle => self.h.rank(),
        }
    }

    /// The diagram with `K⁻` and `K⁺` exchanged (a symmetry of everything
    /// computed here).
    pub fn swapped(&self) -> Self {
        let mut d = self.clone();
        if let Isotropy::Interval { k_minus, k_plus } = &self.isotropy {
            d.isotropy = Isotropy::Interval {
                k_minus: k_plus.clone(),
                k_plus: k_minus.clone(),
            };
        }
        d
    }

    pub fn from_json_str(s: &str) -> Result<Self, DiagramError> {
        let file: DiagramFile =
            serde_json::from_str(s).map_err(|e| DiagramError::Json(e.to_string()))?;
        file.into_diagram()
    }

    /// JSON value with sorted keys; `serde_json::to_string` on it is
    /// byte-deterministic.
    pub fn to_json_value(&self) -> serde_json::Value {
        let file = DiagramFile {
            schema: Some("1".into()),
            name: self.name.clone(),
            orbit_space: self.orbit_space().to_string(),
            g: self.g.to_string(),
            k_minus: self.k_minus().map(|k| k.to_string()),
            k_plus: self.k_plus().map(|k| k.to_string()),
            h: self.h.to_string(),
            weyl_order: self.weyl_order,
            normalizer_order: self.normalizer_order,
            family: self.family.clone(),
        };
        serde_json::to_value(&file).expect("diagram serialization cannot fail")
    }
}

/// On-disk JSON shape. `schema` defaults to `"1"` when omitted; any other
/// value is rejected, as is any unknown field.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    schema: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    orbit_space: String,
    #[serde(rename = "G")]
    g: String,
    #[serde(rename = "K-", skip_serializing_if = "Option::is_none")]
    k_minus: Option<String>,
    #[serde(rename = "K+", skip_serializing_if = "Option::is_none")]
    k_plus: Option<String>,
    #[serde(rename = "H")]
    h: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    weyl_order: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    normalizer_order: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    family: Option<TorusFamilySpec>,
}

impl DiagramFile {
    fn into_diagram(self) -> Result<GroupDiagram, DiagramError> {
        if let Some(schema) = &self.schema {
            if schema != "1" {
                return Err(DiagramError::Json(format!(
                    "unsupported schema {schema:?} (expected \"1\")"
                )));
            }
        }
        let parse = |field: &str, lit: &str| -> Result<CompactGroupType, DiagramError> {
            lit.parse()
                .map_err(|e| DiagramError::Json(format!("field {field:?}: {e}")))
        };
        let g = parse("G", &self.g)?;
        let h = parse("H", &self.h)?;
        let isotropy = match self.orbit_space.as_str() {
            "interval" => {
                let (Some(km), Some(kp)) = (&self.k_minus, &self.k_plus) else {
                    return Err(DiagramError::Json(
                        "interval diagrams require both \"K-\" and \"K+\"".into(),
                    ));
                };
                Isotropy::Interval {
                    k_minus: parse("K-", km)?,
                    k_plus: parse("K+", kp)?,
                }
            }
            "circle" => {
                if self.k_minus.is_some() || self.k_plus.is_some() {
                    return Err(DiagramError::Json(
                        "circle diagrams carry no \"K-\"/\"K+\"".into(),
                    ));
                }
                Isotropy::Circle
            }
            other => {
                return Err(DiagramError::Json(format!(
                    "unknown orbit_space {other:?} (expected \"interval\" or \"circle\")"
                )));
            }
        };
        for (field, v) in [
            ("weyl_order", self.weyl_order),
            ("normalizer_order", self.normalizer_order),
        ] {
            if v == Some(0) {
                return Err(DiagramError::Json(format!("{field} must be positive")));
            }
        }
        Ok(GroupDiagram {
            g,
            h,
            isotropy,
            name: self.name,
            weyl_order: self.weyl_order,
            normalizer_order: self.normalizer_order,
            family: self.family,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(lit: &str) -> CompactGroupType {
        lit.parse().expect(lit)
    }

    fn so5_diagram() -> GroupDiagram {
        GroupDiagram::interval(g("B2"), g("D2"), g("B1+T1"), g("B1"))
    }

    #[test]
    fn so5_line5_passes() {
        let d = so5_diagram();
        let r = d.validate();
        assert!(r.passed(), "{r}");
        assert!(r.warnings.is_empty());
        assert_eq!(d.sphere_dimensions().unwrap(), Some((3, 1)));
        assert_eq!(d.manifold_dimension().unwrap(), 8);
        assert!(d.is_even_dimensional().unwrap());
    }

    #[test]
    fn parity_violation_detected() {
        // G=A2, K±=A2, H=trivial: l=8 even but rank(H)=0 != rank(K)=2
        let d = GroupDiagram::interval(g("A2"), g("A2"), g("A2"), g("T0"));
        let r = d.validate();
        assert!(!r.passed());
        assert!(r.violations.iter().any(|v| v.rule == "sphere-rank-parity"));
        assert!(d.manifold_dimension().is_err());
    }

    #[test]
    fn mutated_so5_even_sphere_with_rank_gap_fails() {
        // Replacing H by the trivial group makes l- = 6 even while the ranks
        // differ, which the parity rule rejects on both sides.
        let d = GroupDiagram::interval(g("B2"), g("D2"), g("B1+T1"), g("T0"));
        let r = d.validate();
        let parity: Vec<_> = r
            .violations
            .iter()
            .filter(|v| v.rule == "sphere-rank-parity")
            .collect();
        assert_eq!(parity.len(), 2);
        assert!(parity[0].message.contains("l-"), "{}", parity[0].message);
        // Note: H = T1 keeps both l± odd with a rank drop of exactly one, so
        // the abstract rules accept it even though no embedding exists; only
        // rank/dimension bookkeeping is modeled here.
        let d = GroupDiagram::interval(g("B2"), g("D2"), g("B1+T1"), g("T1"));
        assert!(d.validate().passed());
    }

    #[test]
    fn containment_violations() {
        let d = GroupDiagram::interval(g("A1"), g("A2"), g("A1"), g("T1"));
        let r = d.validate();
        assert!(r
            .violations
            .iter()
            .any(|v| v.rule == "group-rank-containment"));
        assert!(r
            .violations
            .iter()
            .any(|v| v.rule == "group-dimension-containment"));
        // H bigger than K+
        let d = GroupDiagram::interval(g("B2"), g("B2"), g("T1"), g("A1+T1"));
        let r = d.validate();
        assert!(r
            .violations
            .iter()
            .any(|v| v.rule == "isotropy-rank-containment"));
    }

    #[test]
    fn s0_case_warns_but_passes() {
        let d = GroupDiagram::interval(g("B2"), g("D2"), g("B1"), g("B1"));
        let r = d.validate();
        assert!(r.passed(), "{r}");
        assert_eq!(r.warnings.len(), 1);
        assert!(r.warnings[0].contains("S^0"));
    }

    #[test]
    fn circle_diagrams() {
        let d = GroupDiagram::circle(g("A1"), g("T1"));
        assert!(d.validate().passed());
        assert_eq!(d.sphere_dimensions().unwrap(), None);
        assert_eq!(d.manifold_dimension().unwrap(), 3);
        assert_eq!(d.max_isotropy_rank(), 1);
        // containment still enforced
        let d = GroupDiagram::circle(g("T1"), g("A1"));
        assert!(!d.validate().passed());
    }

    #[test]
    fn swap_is_a_symmetry() {
        let d = so5_diagram();
        let s = d.swapped();
        assert!(s.validate().passed());
        assert_eq!(s.sphere_dimensions().unwrap(), Some((1, 3)));
        assert_eq!(
            s.manifold_dimension().unwrap(),
            d.manifold_dimension().unwrap()
        );
        assert_eq!(s.max_isotropy_rank(), d.max_isotropy_rank());
        assert_eq!(s.swapped(), d);
    }

    #[test]
    fn json_parse_minimal() {
        let d = GroupDiagram::from_json_str(
            r#"{"orbit_space":"interval","G":"B2","K-":"D2","K+":"B1+T1","H":"B1"}"#,
        )
        .unwrap();
        assert_eq!(d, so5_diagram());
    }

    #[test]
    fn json_full_fields_and_roundtrip() {
        let s = r#"{
            "schema": "1",
            "name": "N7I",
            "orbit_space": "interval",
            "G": "C2", "K-": "C1xC1", "K+": "C1xC1", "H": "C1+T1",
            "weyl_order": 2,
            "normalizer_order": 2
        }"#;
        let d = GroupDiagram::from_json_str(s).unwrap();
        assert_eq!(d.name.as_deref(), Some("N7I"));
        assert_eq!(d.weyl_order, Some(2));
        assert_eq!(d.k_minus().unwrap(), &g("C1+C1"));
        let v = d.to_json_value();
        let text = serde_json::to_string(&v).unwrap();
        let back = GroupDiagram::from_json_str(&text).unwrap();
        assert_eq!(back, d);
        // key order is sorted in the emitted value
        assert!(text.find("\"G\"").unwrap() < text.find("\"H\"").unwrap());
        assert!(text.find("\"H\"").unwrap() < text.find("\"K-\"").unwrap());
    }

    #[test]
    fn json_rejections() {
        // unknown field
        assert!(GroupDiagram::from_json_str(
            r#"{"orbit_space":"interval","G":"B2","K-":"D2","K+":"B1","H":"B1","frob":1}"#
        )
        .is_err());
        // bad schema
        assert!(GroupDiagram::from_json_str(
            r#"{"schema":"2","orbit_space":"interval","G":"B2","K-":"D2","K+":"B1","H":"B1"}"#
        )
        .is_err());
        // circle with K-
        assert!(GroupDiagram::from_json_str(
            r#"{"orbit_space":"circle","G":"A1","K-":"T1","H":"T1"}"#
        )
        .is_err());
        // interval missing K+
        assert!(GroupDiagram::from_json_str(
            r#"{"orbit_space":"interval","G":"B2","K-":"D2","H":"B1"}"#
        )
        .is_err());
        // unparseable group literal
        let err = GroupDiagram::from_json_str(
            r#"{"orbit_space":"interval","G":"B2","K-":"Q9","K+":"B1","H":"B1"}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("K-"), "{err}");
        // zero weyl_order
        assert!(GroupDiagram::from_json_str(
            r#"{"orbit_space":"interval","G":"B2","K-":"D2","K+":"B1+T1","H":"B1","weyl_order":0}"#
        )
        .is_err());
    }
}
