//! Build groups from spec strings and from multiplication tables, and
//! inspect their element orders and nilpotent structure.
//!
//! Run: cargo run --example build_groups

use epg::group::{group_from_table, nilpotent_profile, CayleyTable, Group};

fn main() {
    for text in ["Z6", "Z4xZ2", "Q8", "D8", "Z3xZ9xQ16"] {
        let g = Group::parse(text).unwrap();
        let mut histogram = std::collections::BTreeMap::new();
        for x in 0..g.order() {
            *histogram.entry(g.order_of(x)).or_insert(0usize) += 1;
        }
        println!("{text}: order {}", g.order());
        println!("  element orders: {histogram:?}");
        let profile = nilpotent_profile(&g);
        println!(
            "  nilpotent: {}, case: {:?}, |G1| = {}, n = {}, quaternion = {:?}",
            profile.is_nilpotent,
            profile.case,
            profile.noncyclic_part_order,
            profile.cyclic_part_order,
            profile.quaternion_order,
        );
        for s in &profile.sylows {
            println!(
                "  Sylow {}: order {}, {:?}, {} subgroups of order {}",
                s.prime, s.order, s.kind, s.prime_order_subgroups, s.prime
            );
        }
    }

    // The same machinery accepts a raw multiplication table.
    let z2z2 = CayleyTable {
        order: 4,
        table: vec![
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ],
        names: Some(vec!["e".into(), "a".into(), "b".into(), "ab".into()]),
    };
    let g = group_from_table(&z2z2, "klein".into(), true).unwrap();
    println!(
        "table group '{}': order {}, nilpotent: {}",
        g.name(),
        g.order(),
        nilpotent_profile(&g).is_nilpotent
    );
}
