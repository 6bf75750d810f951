//! A tour of every built-in diagram: the same output `cohomog1 report
//! --catalog NAME` would print, for all six entries in sequence.
//!
//! Run with `cargo run --example catalog_tour`.

use cohomog1::catalog;
use cohomog1::report::DiagramReport;

fn main() {
    for entry in catalog::catalog() {
        println!("=== {} ===", entry.name);
        println!("{}", entry.description);
        println!();
        let report = DiagramReport::build(&entry.diagram).unwrap();
        print!("{}", report.to_text());
        println!();
    }
}
