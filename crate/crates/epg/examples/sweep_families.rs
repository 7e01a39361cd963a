//! Sweep whole families of groups through the verification harness.
//!
//! Run: cargo run --example sweep_families

use epg::group::Group;
use epg::oracle::{verify, RowStatus, VerifyCaps};

fn main() {
    let caps = VerifyCaps::default();

    // All abelian 2-groups of order up to 64, one per partition.
    let specs = epg::cli::abelian_p_groups(2, 64);
    let mut mismatches = 0;
    for spec in &specs {
        let group = Group::from_spec(spec).unwrap();
        let report = verify(&group, Some(spec), &caps);
        if !report.all_match {
            mismatches += 1;
            println!("MISMATCH in {}", report.group);
        }
    }
    println!(
        "abelian 2-groups up to order 64: {} groups, {mismatches} mismatches",
        specs.len()
    );

    // Random abelian specs, seeded for reproducibility.
    let specs = epg::cli::random_abelian_corpus(25, 1000, 7);
    let mut rows = 0;
    let mut matched = 0;
    for spec in &specs {
        let group = Group::from_spec(spec).unwrap();
        let report = verify(&group, Some(spec), &caps);
        for row in &report.rows {
            rows += 1;
            if row.status == RowStatus::Match {
                matched += 1;
            }
        }
        assert!(report.all_match, "{}", report.group);
    }
    println!("25 random abelian groups: {matched}/{rows} rows matched, rest skipped");
}
