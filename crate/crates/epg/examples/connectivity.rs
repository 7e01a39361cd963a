//! Vertex connectivity of enhanced power graphs via max-flow: kappa = 1
//! for non-cyclic non-quaternion p-groups, kappa = n after multiplying by
//! a coprime Z_n, and tight upper bounds elsewhere.
//!
//! Run: cargo run --example connectivity

use epg::graph::enhanced_power_graph;
use epg::group::{nilpotent_profile, parse_group_spec, Group};
use epg::metrics::vertex_connectivity;
use epg::oracle::predict_kappa;

fn main() {
    for text in [
        "Z2xZ2",
        "D8",
        "Z2xZ4xZ3",
        "Z3xZ3xZ7",
        "Z2xZ2xZ3xZ3",
        "Z2xZ2xZ3xZ3xZ5",
    ] {
        let spec = parse_group_spec(text).unwrap();
        let g = Group::from_spec(&spec).unwrap();
        let kappa = vertex_connectivity(&enhanced_power_graph(&g)).unwrap();
        let predicted = predict_kappa(&nilpotent_profile(&g), Some(&spec));
        println!("{text}: kappa = {kappa}, closed form: {predicted:?}");
    }
}
