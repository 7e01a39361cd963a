//! Exact graph invariants computed by brute force: dominating vertices,
//! components, diameter, domination number, vertex connectivity.

pub mod connectivity;
pub mod domination;

use serde::Serialize;

pub use connectivity::{vertex_connectivity, vertex_connectivity_bounded, DEFAULT_FLOW_BOUND};
pub use domination::{
    domination_number_exact, domination_number_exact_bounded, greedy_domination_upper,
    DEFAULT_EXACT_SEARCH_BOUND,
};

use crate::graph::Graph;

/// Vertices adjacent to every other vertex.
pub fn dominating_vertices(g: &Graph) -> Vec<usize> {
    (0..g.n()).filter(|&v| g.degree(v) == g.n() - 1).collect()
}

/// Connected components as sorted vertex lists, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let words = n.div_ceil(64);
    let mut seen = vec![0u64; words];
    let mut comps = Vec::new();
    for start in 0..n {
        if seen[start / 64] >> (start % 64) & 1 == 1 {
            continue;
        }
        let mut comp = vec![0u64; words];
        comp[start / 64] |= 1 << (start % 64);
        let mut frontier = vec![start];
        while let Some(v) = frontier.pop() {
            let mut next = vec![0u64; words];
            g.union_row_into(v, &mut next);
            for (nw, cw) in next.iter_mut().zip(&comp) {
                *nw &= !cw;
            }
            for (i, w) in next.iter().enumerate() {
                let mut w = *w;
                while w != 0 {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    let u = i * 64 + b;
                    comp[i] |= 1 << b;
                    frontier.push(u);
                }
            }
        }
        let members: Vec<usize> = (0..n)
            .filter(|&v| comp[v / 64] >> (v % 64) & 1 == 1)
            .collect();
        for &v in &members {
            seen[v / 64] |= 1 << (v % 64);
        }
        comps.push(members);
    }
    comps
}

pub fn component_count(g: &Graph) -> usize {
    connected_components(g).len()
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() <= 1 || component_count(g) == 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

impl std::fmt::Display for Diameter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => write!(f, "infinite"),
        }
    }
}

/// Eccentricity of `source`, or None if some vertex is unreachable.
fn eccentricity(g: &Graph, source: usize) -> Option<usize> {
    let n = g.n();
    let words = n.div_ceil(64);
    let mut visited = vec![0u64; words];
    visited[source / 64] |= 1 << (source % 64);
    let mut frontier = vec![source];
    let mut reached = 1usize;
    let mut depth = 0usize;
    while !frontier.is_empty() {
        let mut next_bits = vec![0u64; words];
        for &v in &frontier {
            g.union_row_into(v, &mut next_bits);
        }
        for (nw, vw) in next_bits.iter_mut().zip(&visited) {
            *nw &= !vw;
        }
        let mut next = Vec::new();
        for (i, w) in next_bits.iter().enumerate() {
            let mut w = *w;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                next.push(i * 64 + b);
            }
        }
        if next.is_empty() {
            break;
        }
        reached += next.len();
        depth += 1;
        for (vw, nw) in visited.iter_mut().zip(&next_bits) {
            *vw |= nw;
        }
        frontier = next;
    }
    if reached == n {
        Some(depth)
    } else {
        None
    }
}

/// Largest pairwise distance; `Infinite` when disconnected. Empty and
/// single-vertex graphs have diameter 0.
pub fn diameter(g: &Graph) -> Diameter {
    if g.n() <= 1 {
        return Diameter::Finite(0);
    }
    let mut max = 0;
    for v in 0..g.n() {
        match eccentricity(g, v) {
            Some(e) => max = max.max(e),
            None => return Diameter::Infinite,
        }
    }
    Diameter::Finite(max)
}

/// Combined invariant record for one graph.
#[derive(Debug, Clone, Serialize)]
pub struct MetricReport {
    pub n: usize,
    pub dom_vertices: Vec<usize>,
    pub component_count: usize,
    pub components: Vec<Vec<usize>>,
    pub diameter: Diameter,
    /// None when the graph is above the exact-search bound.
    pub domination_number: Option<usize>,
    /// None when the graph is above the flow bound.
    pub vertex_connectivity: Option<usize>,
}

pub fn metric_report(g: &Graph, gamma_bound: usize, flow_bound: usize) -> MetricReport {
    let components = connected_components(g);
    MetricReport {
        n: g.n(),
        dom_vertices: dominating_vertices(g),
        component_count: components.len(),
        components,
        diameter: diameter(g),
        domination_number: domination_number_exact_bounded(g, gamma_bound, u64::MAX).ok(),
        vertex_connectivity: vertex_connectivity_bounded(g, flow_bound).ok(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph, star_graph, Graph};
    use crate::group::Group;

    #[test]
    fn dominating_vertices_examples() {
        assert_eq!(dominating_vertices(&complete_graph(4)), vec![0, 1, 2, 3]);
        assert_eq!(dominating_vertices(&star_graph(3)), vec![0]);

        let q8 = Group::parse("Q8").unwrap();
        let epg = crate::graph::enhanced_power_graph(&q8);
        let dom = dominating_vertices(&epg);
        let invol = (0..8).find(|&x| q8.order_of(x) == 2).unwrap();
        assert_eq!(dom, vec![0, invol]);
    }

    #[test]
    fn components_and_diameter_examples() {
        let c5 = cycle_graph(5);
        assert_eq!(component_count(&c5), 1);
        assert_eq!(diameter(&c5), Diameter::Finite(2));

        let g = Group::parse("Z2xZ2").unwrap();
        let p = crate::graph::proper_enhanced_power_graph(&g);
        assert_eq!(component_count(&p.graph), 3);
        assert_eq!(diameter(&p.graph), Diameter::Infinite);

        let g = Group::parse("Z2xZ2xZ3xZ3").unwrap();
        let p = crate::graph::proper_enhanced_power_graph(&g);
        assert_eq!(component_count(&p.graph), 1);
        assert_eq!(diameter(&p.graph), Diameter::Finite(3));
    }

    #[test]
    fn degenerate_diameters() {
        assert_eq!(diameter(&Graph::unlabeled(0)), Diameter::Finite(0));
        assert_eq!(diameter(&Graph::unlabeled(1)), Diameter::Finite(0));
        assert_eq!(diameter(&Graph::unlabeled(2)), Diameter::Infinite);
        assert_eq!(diameter(&complete_graph(2)), Diameter::Finite(1));
        assert_eq!(diameter(&path_graph(4)), Diameter::Finite(3));
    }

    #[test]
    fn diameter_one_iff_complete() {
        for g in [
            complete_graph(2),
            complete_graph(5),
            cycle_graph(4),
            star_graph(3),
            path_graph(6),
        ] {
            let is_one = diameter(&g) == Diameter::Finite(1);
            assert_eq!(is_one, g.is_complete());
        }
    }

    #[test]
    fn components_invariant_under_relabeling() {
        // Rotate vertex names of a two-component graph; size multiset is
        // unchanged.
        let mut g = Graph::unlabeled(7);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(3, 4);
        g.add_edge(4, 5);
        g.add_edge(5, 6);
        let perm = |v: usize| (v + 3) % 7;
        let mut h = Graph::unlabeled(7);
        for (u, v) in g.edges() {
            h.add_edge(perm(u), perm(v));
        }
        let mut a: Vec<usize> = connected_components(&g).iter().map(|c| c.len()).collect();
        let mut b: Vec<usize> = connected_components(&h).iter().map(|c| c.len()).collect();
        a.sort_unstable();
        b.sort_unstable();
        assert_eq!(a, b);
    }
}
