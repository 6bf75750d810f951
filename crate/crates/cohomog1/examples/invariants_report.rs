//! The full invariant report for one diagram: Euler characteristics,
//! formality, Krull dimension, the equivariant Hilbert series, and the
//! Poincaré polynomial.
//!
//! Run with `cargo run --example invariants_report`.

use cohomog1::catalog;
use cohomog1::invariants;
use cohomog1::report::DiagramReport;

fn main() {
    let entry = catalog::find("so(2n+1)-line5-n2").expect("built-in diagram");
    println!("{}", entry.description);
    println!();

    // The rendered report is what `cohomog1 report` prints.
    let report = DiagramReport::build(&entry.diagram).unwrap();
    print!("{}", report.to_text());
    println!();

    // The raw values are available programmatically too.
    let inv = invariants::build_report(&entry.diagram).unwrap();
    println!("chi(M) = {} as an exact integer", inv.chi_m);
    let p = inv
        .poincare_polynomial
        .expect("even-dimensional and formal");
    println!("P(M) = {p}");
    println!("P(1) = {} (equals chi(M))", p.eval_at_one());
    assert_eq!(p.eval_at_one(), inv.chi_m);

    // Formality is decided by a rank comparison; the Krull dimension is the
    // largest isotropy rank, and it shows up again as the pole order of the
    // equivariant series at t = 1.
    let series = inv.equivariant_series.expect("one isotropy rank drops");
    println!(
        "Krull dimension {} == pole order {}",
        inv.krull_dimension,
        series.pole_order_at_one()
    );
}
