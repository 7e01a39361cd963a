//! Connectivity upper bounds read straight off the factorization of a
//! non-cyclic abelian group, with no graph construction. The second bound
//! stays small when the cyclic part grows.
//!
//! Run: cargo run --example bounds

use epg::group::parse_group_spec;
use epg::oracle::{connectivity_bounds, kappa_upper_bound};

fn main() {
    for text in [
        "Z2xZ2xZ3xZ3",
        "Z3xZ9xZ5xZ25xZ7xZ49xZ13",
        "Z3xZ9xZ5xZ25xZ7xZ49xZ101",
        "Z2xZ2xZ3xZ3xZ5",
        "Z4xZ4xZ9xZ9xZ25",
    ] {
        let spec = parse_group_spec(text).unwrap();
        let (alpha, beta) = connectivity_bounds(&spec).unwrap();
        let certified = kappa_upper_bound(&spec).unwrap();
        println!("{text}:");
        println!("  alpha = {alpha}, beta = {beta}, certified kappa bound = {certified}");
    }
}
