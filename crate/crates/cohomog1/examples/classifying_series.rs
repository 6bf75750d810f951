//! Poincaré series arithmetic: classifying series of compact groups, exact
//! rational-function equality, and Taylor coefficients.
//!
//! Run with `cargo run --example classifying_series`.

use cohomog1::lie::CompactGroupType;
use cohomog1::series::{IntPolynomial, PoincareSeries};

fn main() {
    // H*(BG) is a polynomial ring on generators in degrees 2d_i, so its
    // Hilbert series is a product of geometric factors.
    for literal in ["T1", "A1", "B2", "A2+T1"] {
        let g: CompactGroupType = literal.parse().unwrap();
        let cls = PoincareSeries::classifying(&g);
        let taylor: Vec<String> = cls
            .taylor_coefficients(10)
            .iter()
            .map(|c| c.to_string())
            .collect();
        println!("cls({literal}) = {cls}");
        println!("  taylor: {}", taylor.join(", "));
    }

    // Canonical forms are not unique, so equality cross-multiplies:
    // (1+t^2)/(1-t^2) and (1-t^4)/(1-t^2)^2 are the same series.
    let lhs = PoincareSeries::new(IntPolynomial::from_coeffs(&[1, 0, 1]), vec![2]);
    let rhs = PoincareSeries::new(IntPolynomial::one_minus_t_pow(4), vec![2, 2]);
    assert_eq!(lhs, rhs);
    println!("(1+t^2)/(1-t^2) == (1-t^4)/(1-t^2)^2: {}", lhs == rhs);

    // The pole order at t = 1 of cls(G) is the rank of G.
    let b3 = PoincareSeries::classifying(&"B3".parse().unwrap());
    println!(
        "cls(B3) = {b3}, pole order at 1 = {}",
        b3.pole_order_at_one()
    );

    // Exact division peels denominator factors when possible.
    let sphere = PoincareSeries::from_polynomial(IntPolynomial::from_coeffs(&[1, 0, 0, 0, 1]));
    let product = sphere.mul(&PoincareSeries::classifying(&"A1".parse().unwrap()));
    println!("(1 + t^4) * cls(A1) = {product}");
}
