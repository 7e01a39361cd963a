//! Laplacian spectra: exact multiplicity of the eigenvalue n via integer
//! rank, a floating cyclic-Jacobi eigensolver, and checks tying the
//! spectral radius multiplicity to the dominating-vertex count.

pub mod exact;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::{dominating_vertices, is_connected};
use exact::integer_rank;

/// Absolute tolerance for grouping floating eigenvalues.
pub const GROUPING_TOL: f64 = 1e-6;
/// Off-diagonal Frobenius target for the Jacobi sweep, relative to the
/// Frobenius norm of the input matrix.
pub const JACOBI_TOL: f64 = 1e-9;
/// Default vertex cap for the floating eigensolver.
pub const DEFAULT_EIGEN_BOUND: usize = 1500;

const MAX_SWEEPS: usize = 100;

/// Integer Laplacian L = D - A, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Laplacian {
    pub n: usize,
    pub entries: Vec<i64>,
}

pub fn laplacian(g: &Graph) -> Laplacian {
    let n = g.n();
    let mut entries = vec![0i64; n * n];
    for v in 0..n {
        entries[v * n + v] = g.degree(v) as i64;
        for u in g.neighbors(v) {
            entries[v * n + u] = -1;
        }
    }
    Laplacian { n, entries }
}

/// Exact algebraic multiplicity of the eigenvalue n of L, i.e.
/// n - rank(L - nI) over the rationals. Zero exactly when the complement
/// is connected.
///
/// Vertices with equal closed neighborhoods (true twins) are collapsed
/// first: each class of size m contributes the eigenvalue deg + 1 with
/// multiplicity m - 1 through difference vectors, and L acts on the
/// class-constant subspace as a small integer quotient matrix. The
/// fraction-free elimination then runs on that quotient. Output-identical
/// to eliminating the full matrix (tested against the dense route).
pub fn multiplicity_of_eigenvalue_n(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    // Group vertices by closed neighborhood, keeping class order
    // deterministic (first appearance).
    let words = n.div_ceil(64);
    let mut class_of: Vec<usize> = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut index: std::collections::HashMap<Vec<u64>, usize> = Default::default();
    for v in 0..n {
        let mut key = vec![0u64; words];
        g.union_row_into(v, &mut key);
        key[v / 64] |= 1 << (v % 64);
        let k = *index.entry(key).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        class_of[v] = k;
        classes[k].push(v);
    }
    let k = classes.len();

    // Difference vectors within a class carry eigenvalue deg + 1.
    let mut mult = 0;
    for class in &classes {
        if g.degree(class[0]) + 1 == n {
            mult += class.len() - 1;
        }
    }

    // Quotient action on class-constant vectors: for a representative u of
    // class i, (L x)_u = (deg_u - a_ii) x_i - sum_{j != i} a_ij x_j with
    // a_ij the number of neighbors of u inside class j.
    let mut quotient = vec![0i64; k * k];
    for (i, class) in classes.iter().enumerate() {
        let u = class[0];
        let mut counts = vec![0i64; k];
        for w in g.neighbors(u) {
            counts[class_of[w]] += 1;
        }
        for (j, &a) in counts.iter().enumerate() {
            if j == i {
                quotient[i * k + i] = g.degree(u) as i64 - a - n as i64;
            } else {
                quotient[i * k + j] = -a;
            }
        }
    }
    mult + k - integer_rank(k, k, &quotient)
}

/// The same quantity by eliminating the full n-by-n matrix. Slower; kept
/// as the cross-check for the twin-reduced route.
pub fn multiplicity_of_eigenvalue_n_dense(g: &Graph) -> usize {
    let lap = laplacian(g);
    let n = lap.n;
    let mut m = lap.entries;
    for v in 0..n {
        m[v * n + v] -= n as i64;
    }
    n - integer_rank(n, n, &m)
}

/// Exact multiplicity of the eigenvalue 0: the number of components.
pub fn multiplicity_of_eigenvalue_zero(g: &Graph) -> usize {
    let lap = laplacian(g);
    lap.n - integer_rank(lap.n, lap.n, &lap.entries)
}

/// All Laplacian eigenvalues, descending, by cyclic Jacobi rotations.
pub fn laplacian_spectrum(g: &Graph) -> Result<Vec<f64>> {
    laplacian_spectrum_bounded(g, DEFAULT_EIGEN_BOUND, JACOBI_TOL)
}

pub fn laplacian_spectrum_bounded(g: &Graph, max_n: usize, tol: f64) -> Result<Vec<f64>> {
    let n = g.n();
    if n > max_n {
        return Err(Error::BoundExceeded { n, bound: max_n });
    }
    let lap = laplacian(g);
    let mut a: Vec<f64> = lap.entries.iter().map(|&x| x as f64).collect();
    jacobi_eigenvalues(n, &mut a, tol)
}

fn off_diagonal_norm(n: usize, a: &[f64]) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in (p + 1)..n {
            sum += 2.0 * a[p * n + q] * a[p * n + q];
        }
    }
    sum.sqrt()
}

/// Cyclic Jacobi on a symmetric matrix; returns eigenvalues descending.
/// The rotation order is fixed, so results are deterministic. `tol` is
/// relative to the Frobenius norm of the input (an absolute off-diagonal
/// target would sit below the f64 roundoff floor once the norm grows).
fn jacobi_eigenvalues(n: usize, a: &mut [f64], tol: f64) -> Result<Vec<f64>> {
    if n <= 1 {
        return Ok(if n == 1 { vec![a[0]] } else { vec![] });
    }
    let scale = a.iter().map(|x| x * x).sum::<f64>().sqrt().max(1.0);
    let tol = tol * scale;
    for _ in 0..MAX_SWEEPS {
        let off = off_diagonal_norm(n, a);
        if off < tol {
            break;
        }
        for p in 0..(n - 1) {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let h = a[q * n + q] - a[p * n + p];
                let t = if apq.abs() * 1e15 < h.abs() {
                    apq / h
                } else {
                    let theta = 0.5 * h / apq;
                    let mut t = 1.0 / (theta.abs() + (1.0 + theta * theta).sqrt());
                    if theta < 0.0 {
                        t = -t;
                    }
                    t
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let tau = s / (1.0 + c);
                let hpq = t * apq;
                a[p * n + p] -= hpq;
                a[q * n + q] += hpq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for i in 0..n {
                    if i == p || i == q {
                        continue;
                    }
                    let aip = a[i * n + p];
                    let aiq = a[i * n + q];
                    a[i * n + p] = aip - s * (aiq + tau * aip);
                    a[i * n + q] = aiq + s * (aip - tau * aiq);
                    a[p * n + i] = a[i * n + p];
                    a[q * n + i] = a[i * n + q];
                }
            }
        }
    }
    let off = off_diagonal_norm(n, a);
    if off >= tol {
        return Err(Error::NonConvergence { off_diagonal: off });
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(|x, y| y.partial_cmp(x).expect("eigenvalues are finite"));
    Ok(eig)
}

/// Multiplicity of the Laplacian spectral radius. When the graph has a
/// dominating vertex the radius is exactly n and the integer-rank path is
/// used; otherwise the floating spectrum is grouped within tolerance.
pub fn spectral_radius_multiplicity(g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return Ok(0);
    }
    if g.n() == 1 {
        // Sole eigenvalue is 0.
        return Ok(1);
    }
    if !dominating_vertices(g).is_empty() {
        return Ok(multiplicity_of_eigenvalue_n(g));
    }
    let eig = laplacian_spectrum(g)?;
    let top = eig[0];
    Ok(eig.iter().take_while(|&&x| top - x < GROUPING_TOL).count())
}

/// Spectrum summary as exposed by the command-line report.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub mult_of_n: usize,
    pub eta_lambda1: usize,
    pub dom_count: usize,
    pub top_eigenvalues: Vec<f64>,
}

pub fn spectrum_report(g: &Graph, eigen_bound: usize) -> Result<SpectrumReport> {
    let eta = spectral_radius_multiplicity(g)?;
    let top = if g.n() <= eigen_bound {
        laplacian_spectrum_bounded(g, eigen_bound, JACOBI_TOL)?
            .into_iter()
            .take(10)
            .map(|x| (x * 1e9).round() / 1e9)
            .collect()
    } else {
        Vec::new()
    };
    Ok(SpectrumReport {
        n: g.n(),
        mult_of_n: multiplicity_of_eigenvalue_n(g),
        eta_lambda1: eta,
        dom_count: dominating_vertices(g).len(),
        top_eigenvalues: top,
    })
}

/// The three hypotheses and the conclusion of the spectral-radius
/// multiplicity criterion: for n >= 3, eta(lambda_1) = |Dom| holds exactly
/// when the graph is non-complete, has a dominating vertex, and the
/// complement (isolated vertices removed) is connected.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct EtaCheck {
    pub non_complete: bool,
    pub complement_core_connected: bool,
    pub has_dominating_vertex: bool,
    pub eta: usize,
    pub dom_count: usize,
    pub equality: bool,
    /// hypotheses <=> equality
    pub consistent: bool,
}

pub fn check_eta_theorem(g: &Graph) -> Result<EtaCheck> {
    let dom = dominating_vertices(g);
    let non_complete = !g.is_complete();
    let core = g.complement().remove_isolated();
    // The complement of a complete graph has no vertices left; treat the
    // empty core as connected (the hypothesis set already excludes it via
    // non-completeness).
    let complement_core_connected = core.n() == 0 || is_connected(&core);
    let eta = spectral_radius_multiplicity(g)?;
    let hypotheses = non_complete && complement_core_connected && !dom.is_empty();
    let equality = eta == dom.len();
    Ok(EtaCheck {
        non_complete,
        complement_core_connected,
        has_dominating_vertex: !dom.is_empty(),
        eta,
        dom_count: dom.len(),
        equality,
        consistent: hypotheses == equality,
    })
}

/// Join relation on the spectrum of a graph with r >= 1 dominating
/// vertices: lambda_1..lambda_r equal n, and lambda_{r+1} equals
/// lambda_1(core) + r where core is the induced graph on the
/// non-dominating vertices. Returns None when r = 0 or r = n.
pub fn check_join_relation(g: &Graph) -> Result<Option<bool>> {
    let n = g.n();
    let dom = dominating_vertices(g);
    let r = dom.len();
    if r == 0 || r == n {
        return Ok(None);
    }
    let rest: Vec<usize> = (0..n).filter(|v| !dom.contains(v)).collect();
    let core = g.induced_subgraph(&rest);
    let eig = laplacian_spectrum(g)?;
    let core_eig = laplacian_spectrum(&core)?;
    let top_r_are_n = eig[..r]
        .iter()
        .all(|&x| (x - n as f64).abs() < GROUPING_TOL);
    let lam_r1 = eig[r];
    let expected = core_eig.first().copied().unwrap_or(0.0) + r as f64;
    Ok(Some(
        top_r_are_n && (lam_r1 - expected).abs() < GROUPING_TOL,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph, star_graph};
    use crate::group::Group;

    fn assert_close(actual: &[f64], expected: &[f64]) {
        assert_eq!(actual.len(), expected.len());
        for (a, e) in actual.iter().zip(expected) {
            assert!((a - e).abs() < 1e-7, "{actual:?} vs {expected:?}");
        }
    }

    #[test]
    fn laplacian_entries() {
        let lap = laplacian(&complete_graph(2));
        assert_eq!(lap.entries, vec![1, -1, -1, 1]);

        let lap = laplacian(&complete_graph(3));
        for i in 0..3 {
            let row: i64 = lap.entries[i * 3..(i + 1) * 3].iter().sum();
            assert_eq!(row, 0);
        }

        let lap = laplacian(&star_graph(3));
        let diag: Vec<i64> = (0..4).map(|i| lap.entries[i * 4 + i]).collect();
        assert_eq!(diag, vec![3, 1, 1, 1]);
    }

    #[test]
    fn multiplicity_of_n_examples() {
        assert_eq!(multiplicity_of_eigenvalue_n(&complete_graph(6)), 5);
        // P3 spectrum is {0, 1, 3}; complement is disconnected.
        assert_eq!(multiplicity_of_eigenvalue_n(&path_graph(3)), 1);

        let g = Group::parse("Z2xZ2xZ3").unwrap();
        let epg = crate::graph::enhanced_power_graph(&g);
        assert_eq!(multiplicity_of_eigenvalue_n(&epg), 3);
    }

    #[test]
    fn twin_reduced_rank_matches_dense_rank() {
        let mut graphs = vec![
            complete_graph(7),
            path_graph(6),
            cycle_graph(6),
            star_graph(5),
            Graph::unlabeled(4),
        ];
        for text in [
            "Z2xZ2", "Z2xZ4", "Q8", "Z6", "Z2xZ2xZ3", "Z3xZ3xZ2", "Z12", "D8xZ3",
        ] {
            let g = Group::parse(text).unwrap();
            graphs.push(crate::graph::enhanced_power_graph(&g));
        }
        // A couple of join-like shapes with mixed twin classes.
        let mut g = star_graph(4);
        g.add_edge(1, 2);
        g.add_edge(3, 4);
        graphs.push(g);
        for g in &graphs {
            assert_eq!(
                multiplicity_of_eigenvalue_n(g),
                multiplicity_of_eigenvalue_n_dense(g)
            );
        }
    }

    #[test]
    fn known_spectra() {
        assert_close(
            &laplacian_spectrum(&complete_graph(4)).unwrap(),
            &[4.0, 4.0, 4.0, 0.0],
        );
        assert_close(
            &laplacian_spectrum(&cycle_graph(4)).unwrap(),
            &[4.0, 2.0, 2.0, 0.0],
        );
        // Characteristic polynomial of K_{1,3}: x (x-4) (x-1)^2.
        assert_close(
            &laplacian_spectrum(&star_graph(3)).unwrap(),
            &[4.0, 1.0, 1.0, 0.0],
        );
    }

    #[test]
    fn eta_examples() {
        assert_eq!(spectral_radius_multiplicity(&complete_graph(6)).unwrap(), 5);

        let g = Group::parse("Z2xZ2").unwrap();
        let epg = crate::graph::enhanced_power_graph(&g);
        assert_eq!(spectral_radius_multiplicity(&epg).unwrap(), 1);

        let g = Group::parse("Z3xZ3xZ2").unwrap();
        let epg = crate::graph::enhanced_power_graph(&g);
        assert_eq!(spectral_radius_multiplicity(&epg).unwrap(), 2);
    }

    #[test]
    fn eta_check_examples() {
        // K5: hypotheses fail (complete), and eta = 4 != 5 = |Dom|.
        let c = check_eta_theorem(&complete_graph(5)).unwrap();
        assert!(!c.non_complete);
        assert_eq!(c.eta, 4);
        assert_eq!(c.dom_count, 5);
        assert!(!c.equality);
        assert!(c.consistent);

        // Star: hypotheses hold and eta = |Dom| = 1.
        let c = check_eta_theorem(&star_graph(4)).unwrap();
        assert!(c.non_complete && c.complement_core_connected && c.has_dominating_vertex);
        assert_eq!((c.eta, c.dom_count), (1, 1));
        assert!(c.consistent);

        let g = Group::parse("Z2xZ2xZ5").unwrap();
        let epg = crate::graph::enhanced_power_graph(&g);
        let c = check_eta_theorem(&epg).unwrap();
        assert!(c.non_complete && c.complement_core_connected && c.has_dominating_vertex);
        assert_eq!(c.eta, 5);
        assert!(c.equality && c.consistent);
    }

    #[test]
    fn join_relation_examples() {
        // Star: r = 1, core is 3 isolated vertices, lambda_2 = 0 + 1.
        assert_eq!(check_join_relation(&star_graph(3)).unwrap(), Some(true));
        // Complete graph: r = n, degenerate.
        assert_eq!(check_join_relation(&complete_graph(6)).unwrap(), None);

        let g = Group::parse("Z2xZ4").unwrap();
        let epg = crate::graph::enhanced_power_graph(&g);
        assert_eq!(check_join_relation(&epg).unwrap(), Some(true));
    }

    #[test]
    fn eigenvalue_sum_is_twice_edge_count() {
        for g in [
            cycle_graph(7),
            star_graph(5),
            complete_graph(5),
            path_graph(6),
        ] {
            let eig = laplacian_spectrum(&g).unwrap();
            let sum: f64 = eig.iter().sum();
            let m = g.edge_count() as f64;
            assert!((sum - 2.0 * m).abs() < 1e-6 * (1.0 + 2.0 * m));
        }
    }

    #[test]
    fn zero_multiplicity_equals_component_count() {
        for (g, comps) in [
            (cycle_graph(5), 1),
            (Graph::unlabeled(4), 4),
            (star_graph(3), 1),
        ] {
            assert_eq!(multiplicity_of_eigenvalue_zero(&g), comps);
        }
    }

    use crate::graph::Graph;

    #[test]
    fn empty_and_single_vertex_graphs() {
        assert_eq!(
            laplacian_spectrum(&Graph::unlabeled(0)).unwrap(),
            Vec::<f64>::new()
        );
        assert_eq!(laplacian_spectrum(&Graph::unlabeled(1)).unwrap(), vec![0.0]);
        assert_eq!(
            spectral_radius_multiplicity(&Graph::unlabeled(1)).unwrap(),
            1
        );
    }
}
