//! Building group diagrams, validating the sphere conditions, and the JSON
//! wire format.
//!
//! Run with `cargo run --example validate_diagram`.

use cohomog1::diagram::GroupDiagram;

fn group(s: &str) -> cohomog1::lie::CompactGroupType {
    s.parse().unwrap()
}

fn main() {
    // SO(5) over an interval: both isotropy quotients are spheres, so the
    // rank/parity conditions hold and validation passes.
    let good = GroupDiagram::interval(group("B2"), group("D2"), group("B1+T1"), group("B1"));
    let report = good.validate();
    println!("SO(5) diagram valid: {}", report.passed());
    let (l_minus, l_plus) = good.sphere_dimensions().unwrap().unwrap();
    println!("  normal spheres S^{l_minus}, S^{l_plus}");
    println!("  dim M = {}", good.manifold_dimension().unwrap());

    // Breaking the parity condition: the slice K-/H here would be a
    // 4-dimensional sphere, which forces rank H = rank K-, but the ranks
    // differ by two. The plus side (an ordinary circle slice) stays fine.
    let broken = GroupDiagram::interval(group("A1+T1"), group("A1+T1"), group("T1"), group("T0"));
    let report = broken.validate();
    println!("broken diagram valid: {}", report.passed());
    for v in &report.violations {
        println!("  violation [{}]: {}", v.rule, v.message);
    }

    // Circle orbit spaces carry no singular isotropy at all.
    let mut circle = GroupDiagram::circle(group("A1+T1"), group("A1+T1"));
    circle.name = Some("free circle quotient".into());
    println!("circle diagram valid: {}", circle.validate().passed());

    // Diagrams round-trip through a strict JSON schema (unknown fields are
    // rejected on input).
    let value = good.to_json_value();
    println!("wire format: {value}");
    let back = GroupDiagram::from_json_str(&value.to_string()).unwrap();
    assert_eq!(back, good);
}
