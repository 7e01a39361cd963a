//! Laplacian spectra of enhanced power graphs: the multiplicity of the
//! largest eigenvalue equals the number of dominating vertices whenever
//! the complement core is connected, computed both by exact integer rank
//! and by the floating eigensolver.
//!
//! Run: cargo run --example spectra

use epg::graph::enhanced_power_graph;
use epg::group::Group;
use epg::metrics::dominating_vertices;
use epg::spectrum::{
    check_eta_theorem, check_join_relation, laplacian_spectrum, multiplicity_of_eigenvalue_n,
};

fn main() {
    for text in ["Z2xZ2", "Z2xZ4", "Z3xZ3xZ2", "Z2xZ2xZ3", "Q8"] {
        let g = Group::parse(text).unwrap();
        let graph = enhanced_power_graph(&g);
        let n = graph.n();
        let dom = dominating_vertices(&graph).len();
        let exact = multiplicity_of_eigenvalue_n(&graph);
        let eig = laplacian_spectrum(&graph).unwrap();
        let floating = eig.iter().filter(|&&x| (x - n as f64).abs() < 1e-6).count();
        println!("{text}: n = {n}, |Dom| = {dom}");
        println!("  multiplicity of eigenvalue n: exact rank = {exact}, floating = {floating}");
        let top: Vec<String> = eig.iter().take(6).map(|x| format!("{x:.4}")).collect();
        println!("  top eigenvalues: {top:?}");

        let check = check_eta_theorem(&graph).unwrap();
        println!(
            "  hypotheses hold = {}, eta = |Dom| is {}, consistent = {}",
            check.non_complete && check.complement_core_connected && check.has_dominating_vertex,
            check.equality,
            check.consistent
        );
        if let Some(join_ok) = check_join_relation(&graph).unwrap() {
            println!("  join relation lambda_(r+1) = lambda_1(core) + r: {join_ok}");
        }
    }
}
