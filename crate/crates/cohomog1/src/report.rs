//! Renders a diagram's full analysis as plain text or JSON.
//!
//! The JSON layer is versioned (`"schema": "1"`) and deterministic: maps are
//! emitted with sorted keys and every unbounded integer is carried as a
//! decimal string, so byte-identical reruns are safe to diff.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::diagram::{GroupDiagram, Isotropy, ValidationReport};
use crate::invariants::{self, InvariantError, InvariantReport};
use crate::oddcase::{self, OddCaseError, OddCaseReport};
use crate::series::IntPolynomial;

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("{0}")]
    Invariant(#[from] InvariantError),
    #[error("{0}")]
    OddCase(#[from] OddCaseError),
}

/// Everything the `report` command knows about one diagram. The invariant and
/// odd-case sections are only populated when validation passes.
#[derive(Debug, Clone)]
pub struct DiagramReport {
    pub diagram: GroupDiagram,
    pub validation: ValidationReport,
    pub invariants: Option<InvariantReport>,
    pub odd_case: Option<OddCaseReport>,
}

impl DiagramReport {
    pub fn build(diagram: &GroupDiagram) -> Result<Self, ReportError> {
        let validation = diagram.validate();
        let (invariants, odd_case) = if validation.passed() {
            (
                Some(invariants::build_report(diagram)?),
                oddcase::build_report(diagram)?,
            )
        } else {
            (None, None)
        };
        Ok(DiagramReport {
            diagram: diagram.clone(),
            validation,
            invariants,
            odd_case,
        })
    }

    pub fn is_valid(&self) -> bool {
        self.validation.passed()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let d = &self.diagram;
        if let Some(name) = &d.name {
            line(&mut out, format!("diagram: {name}"));
        }
        match &d.isotropy {
            Isotropy::Interval { k_minus, k_plus } => {
                line(&mut out, "orbit space: interval");
                line(&mut out, format!("G  = {}", d.g));
                line(&mut out, format!("K- = {k_minus}"));
                line(&mut out, format!("K+ = {k_plus}"));
                line(&mut out, format!("H  = {}", d.h));
            }
            Isotropy::Circle => {
                line(&mut out, "orbit space: circle");
                line(&mut out, format!("G = {}", d.g));
                line(&mut out, format!("H = {}", d.h));
            }
        }

        if self.validation.passed() {
            line(&mut out, "validation: ok");
        } else {
            line(&mut out, "validation: FAILED");
            for v in &self.validation.violations {
                line(&mut out, format!("  violation [{}]: {}", v.rule, v.message));
            }
        }
        for w in &self.validation.warnings {
            line(&mut out, format!("  warning: {w}"));
        }

        if let Some(inv) = &self.invariants {
            if let Ok(Some((l_minus, l_plus))) = d.sphere_dimensions() {
                line(
                    &mut out,
                    format!("normal spheres: l- = {l_minus}, l+ = {l_plus}"),
                );
            }
            let parity = if inv.dim_m % 2 == 0 { "even" } else { "odd" };
            line(&mut out, format!("dim M = {} ({parity})", inv.dim_m));
            line(&mut out, format!("chi(M) = {}", inv.chi_m));
            if let Some(chi) = &inv.chi_orbits {
                line(&mut out, format!("chi(G/K-) = {}", chi.k_minus));
                line(&mut out, format!("chi(G/K+) = {}", chi.k_plus));
                line(&mut out, format!("chi(G/H) = {}", chi.h));
            }
            line(
                &mut out,
                format!("equivariantly formal: {}", yes_no(inv.formal)),
            );
            line(
                &mut out,
                format!("Krull dimension of H*_G(M): {}", inv.krull_dimension),
            );
            if let Some(series) = &inv.equivariant_series {
                line(&mut out, format!("equivariant Hilbert series: {series}"));
            }
            if let Some(p) = &inv.poincare_polynomial {
                line(&mut out, format!("P(M) = {p}"));
            }
            for n in &inv.notes {
                line(&mut out, format!("note: {n}"));
            }
            for w in &inv.warnings {
                line(&mut out, format!("warning: {w}"));
            }
        }

        if let Some(odd) = &self.odd_case {
            line(&mut out, "odd case (rank H = rank G):");
            line(&mut out, format!("  chi(G/H) = {}", odd.chi_gh));
            if let Some(w) = odd.weyl_order {
                line(&mut out, format!("  |W| = {w}"));
            }
            if let Some(dim) = &odd.dim_cohomology {
                line(&mut out, format!("  dim H*(M) = {dim}"));
            }
            if let Some(sphere) = odd.rational_sphere {
                line(
                    &mut out,
                    format!("  rational homology sphere: {}", yes_no(sphere)),
                );
            }
            if let Some(nh) = odd.normalizer_order {
                line(&mut out, format!("  |N(H)/H| = {nh}"));
            }
            if let Some(ok) = odd.normalizer_consistent {
                line(
                    &mut out,
                    format!("  normalizer consistent with |W|: {}", yes_no(ok)),
                );
            }
            for w in &odd.warnings {
                line(&mut out, format!("  warning: {w}"));
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": "1",
            "name": self.diagram.name,
            "diagram": self.diagram.to_json_value(),
            "validation": validation_value(&self.validation),
            "invariants": self.invariants.as_ref().map(invariants_value),
            "odd_case": self.odd_case.as_ref().map(odd_case_value),
        })
    }
}

fn line(out: &mut String, text: impl AsRef<str>) {
    out.push_str(text.as_ref());
    out.push('\n');
}

pub(crate) fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Decimal-string coefficients, constant term first.
pub(crate) fn coeff_strings(p: &IntPolynomial) -> Vec<String> {
    p.coeffs().iter().map(BigInt::to_string).collect()
}

fn validation_value(v: &ValidationReport) -> Value {
    let violations: Vec<Value> = v
        .violations
        .iter()
        .map(|v| json!({"rule": v.rule, "message": v.message}))
        .collect();
    json!({
        "passed": v.passed(),
        "violations": violations,
        "warnings": v.warnings,
    })
}

fn invariants_value(inv: &InvariantReport) -> Value {
    json!({
        "dim_m": inv.dim_m,
        "chi_m": inv.chi_m.to_string(),
        "chi_orbits": inv.chi_orbits.as_ref().map(|c| json!({
            "k_minus": c.k_minus.to_string(),
            "k_plus": c.k_plus.to_string(),
            "h": c.h.to_string(),
        })),
        "formal": inv.formal,
        "krull_dimension": inv.krull_dimension,
        "equivariant_series": inv.equivariant_series,
        "poincare_polynomial": inv.poincare_polynomial.as_ref().map(coeff_strings),
        "notes": inv.notes,
        "warnings": inv.warnings,
    })
}

fn odd_case_value(odd: &OddCaseReport) -> Value {
    json!({
        "chi_gh": odd.chi_gh.to_string(),
        "weyl_order": odd.weyl_order,
        "dim_cohomology": odd.dim_cohomology.as_ref().map(BigInt::to_string),
        "rational_sphere": odd.rational_sphere,
        "normalizer_order": odd.normalizer_order,
        "normalizer_consistent": odd.normalizer_consistent,
        "warnings": odd.warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn text_report_pins_the_headline_lines() {
        let report =
            DiagramReport::build(&catalog::find("so(2n+1)-line5-n2").unwrap().diagram).unwrap();
        let text = report.to_text();
        assert!(text.contains("diagram: so(2n+1)-line5-n2"), "{text}");
        assert!(text.contains("validation: ok"), "{text}");
        assert!(text.contains("chi(M) = 6"), "{text}");
        assert!(text.contains("normal spheres: l- = 3, l+ = 1"), "{text}");
        assert!(text.contains("P(M) = 1 + t^2 + 2t^4 + t^6 + t^8"), "{text}");

        let n7i = DiagramReport::build(&catalog::find("N7I").unwrap().diagram).unwrap();
        let text = n7i.to_text();
        assert!(text.contains("dim H*(M) = 4"), "{text}");
        assert!(text.contains("|W| = 2"), "{text}");
        assert!(text.contains("rational homology sphere: no"), "{text}");
    }

    #[test]
    fn json_report_is_versioned_and_sorted() {
        let report = DiagramReport::build(&catalog::find("u3-M1").unwrap().diagram).unwrap();
        let value = report.to_json();
        assert_eq!(value["schema"], "1");
        assert_eq!(value["name"], "u3-M1");
        assert_eq!(value["invariants"]["chi_m"], "12");
        assert_eq!(value["invariants"]["krull_dimension"], 3);
        assert_eq!(value["odd_case"], Value::Null);
        let text = serde_json::to_string_pretty(&value).unwrap();
        let top_keys: Vec<&str> = value.as_object().unwrap().keys().map(|k| &**k).collect();
        let sorted = {
            let mut v = top_keys.clone();
            v.sort_unstable();
            v
        };
        assert_eq!(top_keys, sorted, "{text}");

        // a second build renders byte-identically
        let again = DiagramReport::build(&catalog::find("u3-M1").unwrap().diagram).unwrap();
        assert_eq!(
            text,
            serde_json::to_string_pretty(&again.to_json()).unwrap()
        );
    }

    #[test]
    fn invalid_diagrams_report_violations_without_invariants() {
        let mut d = catalog::find("N7G").unwrap().diagram;
        d.h = "T3".parse().unwrap();
        let report = DiagramReport::build(&d).unwrap();
        assert!(!report.is_valid());
        assert!(report.invariants.is_none());
        assert!(report.odd_case.is_none());
        let text = report.to_text();
        assert!(text.contains("validation: FAILED"), "{text}");
        assert!(text.contains("violation ["), "{text}");
        let value = report.to_json();
        assert_eq!(value["validation"]["passed"], false);
        assert_eq!(value["invariants"], Value::Null);
    }

    #[test]
    fn odd_case_errors_surface_instead_of_rendering() {
        let mut d = catalog::find("N7G").unwrap().diagram;
        d.weyl_order = Some(5);
        let err = DiagramReport::build(&d).unwrap_err();
        assert!(matches!(err, ReportError::OddCase(_)), "{err}");
    }
}
