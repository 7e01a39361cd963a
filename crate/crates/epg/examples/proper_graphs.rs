//! Proper enhanced power graphs: delete the dominating vertices and look
//! at what remains. Connectivity and component counts follow the group's
//! Sylow structure.
//!
//! Run: cargo run --example proper_graphs

use epg::graph::proper_enhanced_power_graph;
use epg::group::Group;
use epg::metrics::{connected_components, diameter};

fn main() {
    for text in [
        "Z6",          // cyclic: everything dominates, nothing remains
        "Z2xZ2",       // p-group: 3 isolated vertices
        "Z2xZ4",       // p-group: 3 components
        "Q8",          // quaternion: a perfect matching
        "Z2xZ2xZ3",    // p-group times coprime cyclic: still 3 components
        "Z2xZ2xZ3xZ3", // two non-cyclic Sylow subgroups: connected, diameter 3
        "Z3xZ3xQ8",    // quaternion with odd core: connected, diameter <= 4
    ] {
        let g = Group::parse(text).unwrap();
        let p = proper_enhanced_power_graph(&g);
        let comps = connected_components(&p.graph);
        println!(
            "{text}: removed {} dominating, {} vertices remain, {} components, diameter {}",
            p.dominating.len(),
            p.graph.n(),
            comps.len(),
            diameter(&p.graph),
        );
        if !comps.is_empty() && comps.len() <= 4 {
            for c in &comps {
                let labels: Vec<&str> = c.iter().map(|&v| p.graph.label(v)).collect();
                println!("  component: {labels:?}");
            }
        }
    }
}
