//! Compact group types: parsing, Chevalley degrees, dimensions, Weyl orders.
//!
//! Run with `cargo run --example group_data`.

use cohomog1::lie::CompactGroupType;

fn main() {
    for literal in ["A2", "B3", "G2", "E8", "D2", "A2+T1", "B2xD2+T2", "T0"] {
        let g: CompactGroupType = literal.parse().expect("group literal");
        println!("{g}");
        println!("  rank          {}", g.rank());
        println!("  dimension     {}", g.dimension());
        println!("  degrees       {:?}", g.degrees());
        println!("  |W|           {}", g.weyl_order());
    }

    // The Weyl order grows fast: E8 alone has 696729600 elements.
    let e8: CompactGroupType = "E8".parse().unwrap();
    assert_eq!(e8.weyl_order().to_string(), "696729600");

    // Isomorphic low-rank presentations agree where they should: B1, A1 and
    // C1 all describe the 3-dimensional group with |W| = 2.
    let b1: CompactGroupType = "B1".parse().unwrap();
    let a1: CompactGroupType = "A1".parse().unwrap();
    assert_eq!(b1.dimension(), a1.dimension());
    assert_eq!(b1.weyl_order(), a1.weyl_order());
    println!(
        "B1 and A1 share dimension {} and |W| = {}",
        b1.dimension(),
        b1.weyl_order()
    );
}
