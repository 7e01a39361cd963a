//! The three graphs on a group and how they nest: power graph inside
//! enhanced power graph inside commuting graph.
//!
//! Run: cargo run --example graph_constructions

use epg::graph::{commuting_graph_full, enhanced_power_graph, export, power_graph};
use epg::group::Group;

fn main() {
    let q8 = Group::parse("Q8").unwrap();
    let pg = power_graph(&q8);
    let eg = enhanced_power_graph(&q8);
    let cg = commuting_graph_full(&q8);
    println!(
        "Q8: power graph {} edges <= enhanced {} edges <= commuting {} edges",
        pg.edge_count(),
        eg.edge_count(),
        cg.edge_count()
    );

    // The enhanced power graph of a cyclic group is complete; the power
    // graph of Z6 is not (2 and 3 generate incomparable subgroups).
    let z6 = Group::parse("Z6").unwrap();
    println!(
        "Z6: enhanced complete = {}, power graph has {} of 15 edges",
        enhanced_power_graph(&z6).is_complete(),
        power_graph(&z6).edge_count()
    );

    println!("\nDOT output for the enhanced power graph of Q8:\n");
    print!("{}", export::to_dot(&eg));
}
