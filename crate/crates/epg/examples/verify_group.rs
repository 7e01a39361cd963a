//! Run every applicable closed form against brute force for a handful of
//! groups and print the row-by-row comparison.
//!
//! Run: cargo run --example verify_group

use epg::group::{parse_group_spec, Group};
use epg::oracle::{verify, VerifyCaps};

fn main() {
    for text in ["Z2xZ4", "Z2xZ2xZ3", "Z2xZ2xZ3xZ3", "Z3xZ3xQ8", "Q8"] {
        let spec = parse_group_spec(text).unwrap();
        let group = Group::from_spec(&spec).unwrap();
        let report = verify(&group, Some(&spec), &VerifyCaps::default());
        println!(
            "{} (order {}, case {:?}): all_match = {}",
            report.group, report.order, report.case, report.all_match
        );
        for row in &report.rows {
            println!(
                "  {:30} predicted {:>12}  computed {:>12}  [{:?}]{}",
                row.quantity,
                row.predicted,
                row.computed,
                row.status,
                row.note
                    .as_deref()
                    .map(|n| format!("  ({n})"))
                    .unwrap_or_default()
            );
        }
        println!();
    }
}
