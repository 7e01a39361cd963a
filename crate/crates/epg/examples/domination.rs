//! Exact domination numbers of proper enhanced power graphs, next to the
//! greedy upper bound and the closed form (the count of prime-order
//! subgroups, minimized across Sylow factors).
//!
//! Run: cargo run --example domination

use epg::graph::proper_enhanced_power_graph;
use epg::group::{nilpotent_profile, Group};
use epg::metrics::{domination_number_exact, greedy_domination_upper};
use epg::oracle::predict_domination_number;

fn main() {
    for text in [
        "Z2xZ4",
        "Z2xZ2xZ2",
        "Z3xZ3",
        "D16",
        "Z2xZ2xZ3xZ3",
        "Z2xZ2xZ3xZ3xZ5",
        "Z3xZ3xQ8", // no closed form for the quaternion cases
    ] {
        let g = Group::parse(text).unwrap();
        let proper = proper_enhanced_power_graph(&g);
        let exact = domination_number_exact(&proper.graph).unwrap();
        let greedy = greedy_domination_upper(&proper.graph);
        let predicted = predict_domination_number(&nilpotent_profile(&g));
        println!(
            "{text}: gamma = {exact}, greedy upper = {greedy}, closed form = {}",
            predicted.map_or("-".into(), |v| v.to_string()),
        );
        assert!(greedy >= exact);
    }
}
