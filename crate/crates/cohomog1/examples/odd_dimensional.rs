//! Odd-dimensional manifolds with full-rank principal isotropy: the total
//! Betti number is pinned down by chi(G/H) and the order of a dihedral
//! reflection group, and an independently known normalizer order
//! cross-checks the answer.
//!
//! Run with `cargo run --example odd_dimensional`.

use cohomog1::catalog;
use cohomog1::oddcase;

fn main() {
    for name in ["N7G", "N7I"] {
        let entry = catalog::find(name).expect("built-in diagram");
        let d = &entry.diagram;
        println!("{name}: {}", entry.description);

        let chi = oddcase::chi_principal(d).unwrap();
        println!("  chi(G/H) = {chi}");

        // dim H*(M; Q) = 2 chi(G/H) / |W|, and the quotient must be a
        // positive even integer — most candidate orders are impossible.
        for w in 1..=6u64 {
            match oddcase::dim_from_weyl(d, w) {
                Ok(dim) => println!("  |W| = {w} would give dim H*(M) = {dim}"),
                Err(_) => println!("  |W| = {w} is impossible"),
            }
        }

        // These two diagrams both carry |W| = 2, recorded with the diagram.
        let report = oddcase::build_report(d).unwrap().expect("odd case applies");
        println!(
            "  recorded |W| = {}, so dim H*(M) = {}",
            report.weyl_order.unwrap(),
            report.dim_cohomology.as_ref().unwrap()
        );
        println!(
            "  rational homology sphere: {}",
            report.rational_sphere.unwrap()
        );
        // |W| always divides |N(H)/H|; equality is forced exactly in the
        // rational-sphere case.
        println!(
            "  |N(H)/H| = {} consistent: {}",
            report.normalizer_order.unwrap(),
            report.normalizer_consistent.unwrap()
        );
        println!();
    }

    // Inverting the relation: prescribing the cohomology dimension instead
    // recovers the group order.
    let n7g = catalog::find("N7G").unwrap().diagram;
    let w = oddcase::weyl_from_dim(&n7g, 6).unwrap();
    println!("N7G with dim H*(M) = 6 forces |W| = {w}");
}
