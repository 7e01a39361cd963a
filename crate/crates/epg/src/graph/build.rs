//! Graph constructions on a finite group: power graph, enhanced power
//! graph, commuting graph, and the proper enhanced power graph.

use std::collections::HashSet;

use crate::graph::Graph;
use crate::group::Group;

#[derive(Debug, Clone, Copy, Default)]
pub struct EpgOptions {
    /// Insert cliques only for maximal cyclic subgroups instead of every
    /// <w>. Output-equivalent; much faster on groups with large cyclic
    /// subgroups.
    pub dedup_maximal_cyclic: bool,
}

/// Enhanced power graph: x ~ y iff some cyclic subgroup contains both.
/// Built by inserting the clique on <w> for every w.
pub fn enhanced_power_graph(g: &Group) -> Graph {
    enhanced_power_graph_with(g, EpgOptions::default())
}

pub fn enhanced_power_graph_with(g: &Group, opts: EpgOptions) -> Graph {
    let n = g.order();
    let mut graph = Graph::new(n, g.element_names());
    let words = n.div_ceil(64);

    let clique = |graph: &mut Graph, members: &[usize], mask: &[u64]| {
        for &x in members {
            graph.or_mask_into_row(x, mask);
        }
    };

    if opts.dedup_maximal_cyclic {
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let mut subgroups: Vec<(Vec<usize>, Vec<u64>)> = Vec::new();
        for w in 0..n {
            let members = g.cyclic_subgroup(w);
            let mut mask = vec![0u64; words];
            for &x in &members {
                mask[x / 64] |= 1 << (x % 64);
            }
            if seen.insert(mask.clone()) {
                subgroups.push((members, mask));
            }
        }
        // Keep only subgroups maximal under inclusion.
        subgroups.sort_by_key(|(members, _)| std::cmp::Reverse(members.len()));
        let mut kept: Vec<(Vec<usize>, Vec<u64>)> = Vec::new();
        'next: for (members, mask) in subgroups {
            for (_, big) in &kept {
                if mask.iter().zip(big).all(|(m, b)| m & !b == 0) {
                    continue 'next;
                }
            }
            kept.push((members, mask));
        }
        for (members, mask) in &kept {
            clique(&mut graph, members, mask);
        }
    } else {
        for w in 0..n {
            let members = g.cyclic_subgroup(w);
            let mut mask = vec![0u64; words];
            for &x in &members {
                mask[x / 64] |= 1 << (x % 64);
            }
            clique(&mut graph, &members, &mask);
        }
    }

    // Clear the diagonal bits introduced by clique insertion.
    graph.clear_diagonal();
    graph
}

/// Power graph: x ~ y iff x is a power of y or y is a power of x.
pub fn power_graph(g: &Group) -> Graph {
    let n = g.order();
    let mut graph = Graph::new(n, g.element_names());
    for x in 0..n {
        for y in g.cyclic_subgroup(x) {
            if x != y {
                graph.add_edge(x, y);
            }
        }
    }
    graph
}

/// Commuting graph on the full vertex set: x ~ y iff xy = yx.
pub fn commuting_graph_full(g: &Group) -> Graph {
    let n = g.order();
    let mut graph = Graph::new(n, g.element_names());
    for x in 0..n {
        for y in (x + 1)..n {
            if g.commutes(x, y) {
                graph.add_edge(x, y);
            }
        }
    }
    graph
}

/// The enhanced power graph with its dominating vertices deleted. For a
/// cyclic group every vertex is dominating and the result has no vertices.
#[derive(Debug, Clone)]
pub struct ProperGraph {
    /// Induced graph on the non-dominating vertices.
    pub graph: Graph,
    /// Group-element index of each proper-graph vertex.
    pub vertices: Vec<usize>,
    /// The removed dominating set, ascending.
    pub dominating: Vec<usize>,
}

pub fn proper_enhanced_power_graph(g: &Group) -> ProperGraph {
    proper_enhanced_power_graph_from(enhanced_power_graph_with(
        g,
        EpgOptions {
            dedup_maximal_cyclic: true,
        },
    ))
}

/// Split an already-built enhanced power graph into dominating vertices and
/// the induced graph on the rest.
pub fn proper_enhanced_power_graph_from(epg: Graph) -> ProperGraph {
    let dominating = crate::metrics::dominating_vertices(&epg);
    let dom_set: std::collections::HashSet<usize> = dominating.iter().copied().collect();
    let vertices: Vec<usize> = (0..epg.n()).filter(|v| !dom_set.contains(v)).collect();
    let graph = epg.induced_subgraph(&vertices);
    ProperGraph {
        graph,
        vertices,
        dominating,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    /// Definition-level oracle: x ~ y iff the subgroup generated by x and y
    /// is cyclic (computed by closure, independent of the clique insertion
    /// used by the builder).
    fn epg_oracle(g: &Group) -> Graph {
        let n = g.order();
        let mut graph = Graph::new(n, g.element_names());
        for x in 0..n {
            for y in (x + 1)..n {
                let mut h = vec![false; n];
                let mut stack = vec![x, y];
                let mut members = Vec::new();
                h[x] = true;
                h[y] = true;
                while let Some(a) = stack.pop() {
                    members.push(a);
                    for &b in [x, y].iter() {
                        let c = g.multiply(a, b);
                        if !h[c] {
                            h[c] = true;
                            stack.push(c);
                        }
                    }
                }
                if !h[0] {
                    members.push(0);
                    h[0] = true;
                }
                let size = members.len() as u64;
                if members.iter().any(|&a| g.order_of(a) == size) {
                    graph.add_edge(x, y);
                }
            }
        }
        graph
    }

    #[test]
    fn epg_of_cyclic_group_is_complete() {
        for n in [1usize, 2, 5, 6, 12] {
            let g = Group::parse(&format!("Z{n}")).unwrap();
            assert!(enhanced_power_graph(&g).is_complete(), "Z{n}");
        }
    }

    #[test]
    fn epg_of_klein_four_group_is_a_star() {
        let g = Group::parse("Z2xZ2").unwrap();
        let epg = enhanced_power_graph(&g);
        assert_eq!(epg.degree(0), 3);
        for v in 1..4 {
            assert_eq!(epg.degree(v), 1);
        }
    }

    #[test]
    fn epg_of_q8_structure() {
        let g = Group::parse("Q8").unwrap();
        let epg = enhanced_power_graph(&g);
        let invol = (0..8).find(|&x| g.order_of(x) == 2).unwrap();
        assert_eq!(epg.degree(0), 7);
        assert_eq!(epg.degree(invol), 7);
        // The three maximal cyclic subgroups give i~-i, j~-j, k~-k and no
        // cross edges among the order-4 classes.
        let quads: Vec<usize> = (0..8).filter(|&x| g.order_of(x) == 4).collect();
        assert_eq!(quads.len(), 6);
        for &x in &quads {
            assert_eq!(epg.degree(x), 3); // e, involution, and its negative
        }
        for &x in &quads {
            for &y in &quads {
                if x < y {
                    let same_subgroup = g.cyclic_subgroup(x).contains(&y);
                    assert_eq!(epg.has_edge(x, y), same_subgroup);
                }
            }
        }
    }

    #[test]
    fn epg_matches_generated_subgroup_oracle() {
        for text in [
            "Z6", "Z2xZ2", "Q8", "Z2xZ4", "D8", "Z3xZ3", "Z2xZ2xZ3", "Q16",
        ] {
            let g = Group::parse(text).unwrap();
            assert_eq!(enhanced_power_graph(&g), epg_oracle(&g), "{text}");
        }
    }

    #[test]
    fn dedup_option_is_output_equivalent() {
        for text in [
            "Z12", "Z2xZ2xZ3", "Q16", "D16", "Z3xZ9", "Z2xZ4xZ5", "Z3xQ8",
        ] {
            let g = Group::parse(text).unwrap();
            let plain = enhanced_power_graph(&g);
            let dedup = enhanced_power_graph_with(
                &g,
                EpgOptions {
                    dedup_maximal_cyclic: true,
                },
            );
            assert_eq!(plain, dedup, "{text}");
        }
    }

    #[test]
    fn power_graph_examples() {
        let g = Group::parse("Z5").unwrap();
        assert!(power_graph(&g).is_complete());

        let g = Group::parse("Z2xZ2").unwrap();
        let pg = power_graph(&g);
        assert_eq!(pg.degree(0), 3);
        assert_eq!(pg.edge_count(), 3);

        // Z6 by direct enumeration: 2 !~ 3 and 3 !~ 4 (neither is a power
        // of the other), everything else is adjacent.
        let g = Group::parse("Z6").unwrap();
        let pg = power_graph(&g);
        assert_eq!(pg.edge_count(), 13);
        assert!(!pg.has_edge(2, 3));
        assert!(!pg.has_edge(3, 4));
        assert!(pg.has_edge(2, 4));
        assert!(pg.has_edge(0, 3));
        assert!(pg.has_edge(1, 3));
    }

    #[test]
    fn commuting_graph_examples() {
        let g = Group::parse("Z2xZ6").unwrap();
        assert!(commuting_graph_full(&g).is_complete());

        let q8 = Group::parse("Q8").unwrap();
        let cg = commuting_graph_full(&q8);
        // a ~ a^3 (same cyclic subgroup) but a !~ b.
        assert!(cg.has_edge(1, 3));
        assert!(!cg.has_edge(1, 4));
    }

    #[test]
    fn sandwich_property_on_small_corpus() {
        for text in [
            "Z6", "Z2xZ2", "Q8", "Z2xZ4", "D8", "Z3xZ9", "Z2xZ2xZ3", "Q16xZ3",
        ] {
            let g = Group::parse(text).unwrap();
            let pg = power_graph(&g);
            let epg = enhanced_power_graph(&g);
            let cg = commuting_graph_full(&g);
            for u in 0..g.order() {
                for v in 0..g.order() {
                    if pg.has_edge(u, v) {
                        assert!(epg.has_edge(u, v), "{text}: power edge missing in epg");
                    }
                    if epg.has_edge(u, v) {
                        assert!(cg.has_edge(u, v), "{text}: epg edge missing in commuting");
                    }
                }
            }
        }
    }

    #[test]
    fn proper_graph_examples() {
        let g = Group::parse("Z2xZ2").unwrap();
        let p = proper_enhanced_power_graph(&g);
        assert_eq!(p.dominating, vec![0]);
        assert_eq!(p.graph.n(), 3);
        assert_eq!(p.graph.edge_count(), 0);

        let q8 = Group::parse("Q8").unwrap();
        let p = proper_enhanced_power_graph(&q8);
        assert_eq!(p.dominating.len(), 2);
        assert_eq!(p.graph.n(), 6);
        assert_eq!(p.graph.edge_count(), 3);
        for v in 0..6 {
            assert_eq!(p.graph.degree(v), 1); // perfect matching
        }

        // Cyclic group: every vertex dominates, nothing remains.
        let z6 = Group::parse("Z6").unwrap();
        let p = proper_enhanced_power_graph(&z6);
        assert_eq!(p.graph.n(), 0);
        assert_eq!(p.dominating.len(), 6);
    }

    #[test]
    fn epg_is_complete_and_proper_empty_for_all_cyclic_groups_up_to_100() {
        for n in 1..=100usize {
            let g = Group::parse(&format!("Z{n}")).unwrap();
            let epg = enhanced_power_graph_with(
                &g,
                EpgOptions {
                    dedup_maximal_cyclic: true,
                },
            );
            assert!(epg.is_complete(), "Z{n}");
            let p = proper_enhanced_power_graph_from(epg);
            assert_eq!(p.graph.n(), 0, "Z{n}");
        }
    }

    #[test]
    fn coprime_commuting_elements_are_adjacent_in_epg() {
        for text in ["Z2xZ2xZ3", "Z3xZ3xZ2", "D8xZ3", "Z2xZ4xZ9", "Z3xQ8"] {
            let g = Group::parse(text).unwrap();
            let epg = enhanced_power_graph(&g);
            for x in 1..g.order() {
                for y in (x + 1)..g.order() {
                    if g.commutes(x, y) && crate::num::gcd(g.order_of(x), g.order_of(y)) == 1 {
                        assert!(epg.has_edge(x, y), "{text}: ({x},{y})");
                    }
                }
            }
        }
    }

    #[test]
    fn divisor_order_adjacency_means_membership() {
        // For o(x) | o(y): x ~ y iff x is in <y>.
        for text in ["Z12", "Q8", "Z2xZ4", "Z3xZ9", "D16"] {
            let g = Group::parse(text).unwrap();
            let epg = enhanced_power_graph(&g);
            for x in 0..g.order() {
                for y in 0..g.order() {
                    if x != y && g.order_of(y) % g.order_of(x) == 0 {
                        let member = g.cyclic_subgroup(y).contains(&x);
                        assert_eq!(epg.has_edge(x, y), member, "{text}: ({x},{y})");
                    }
                }
            }
        }
    }

    #[test]
    fn same_component_prime_order_vertices_generate_the_same_subgroup() {
        // p-group proper graphs: two order-p vertices connected by a path
        // generate the same subgroup.
        for text in ["Z2xZ4", "Z2xZ8", "Z4xZ4", "D16", "Z3xZ9", "Z2xZ2xZ2"] {
            let g = Group::parse(text).unwrap();
            let p = crate::num::factorize(g.order() as u64)[0].0;
            let proper = proper_enhanced_power_graph(&g);
            let comps = crate::metrics::connected_components(&proper.graph);
            for comp in comps {
                let prime_elems: Vec<usize> = comp
                    .iter()
                    .map(|&i| proper.vertices[i])
                    .filter(|&x| g.order_of(x) == p)
                    .collect();
                for w in prime_elems.windows(2) {
                    let mut a = g.cyclic_subgroup(w[0]);
                    let mut b = g.cyclic_subgroup(w[1]);
                    a.sort_unstable();
                    b.sort_unstable();
                    assert_eq!(a, b, "{text}");
                }
            }
        }
    }

    #[test]
    fn complement_roundtrip() {
        let g = complete_graph(5);
        assert_eq!(g.complement().complement(), g);
    }
}
