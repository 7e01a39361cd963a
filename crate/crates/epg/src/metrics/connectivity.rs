//! Exact vertex connectivity via unit-capacity max-flow on the
//! vertex-split digraph.
//!
//! kappa(G) is the minimum over a standard pair cover: fix a minimum-degree
//! vertex v, then take min vertex cut over (v, u) for every non-neighbor u,
//! and over (x, y) for every non-adjacent pair of neighbors of v. Complete
//! graphs return n - 1 by convention; disconnected graphs return 0.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::is_connected;

/// Default vertex-count cap for flow-based connectivity.
pub const DEFAULT_FLOW_BOUND: usize = 300;

struct FlowNet {
    // arcs as (to, capacity); rev arc is index ^ 1
    arcs: Vec<(u32, u32)>,
    head: Vec<Vec<u32>>,
}

impl FlowNet {
    fn new(nodes: usize) -> FlowNet {
        FlowNet {
            arcs: Vec::new(),
            head: vec![Vec::new(); nodes],
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        let id = self.arcs.len() as u32;
        self.arcs.push((to as u32, cap));
        self.arcs.push((from as u32, 0));
        self.head[from].push(id);
        self.head[to].push(id + 1);
    }

    /// BFS augmenting paths; stops once `limit` units have been pushed.
    fn max_flow(&mut self, source: usize, sink: usize, limit: u32) -> u32 {
        let mut flow = 0;
        let mut parent_arc = vec![u32::MAX; self.head.len()];
        while flow < limit {
            parent_arc.fill(u32::MAX);
            parent_arc[source] = u32::MAX - 1;
            let mut queue = std::collections::VecDeque::from([source]);
            let mut reached = false;
            'bfs: while let Some(v) = queue.pop_front() {
                for &a in &self.head[v] {
                    let (to, cap) = self.arcs[a as usize];
                    if cap > 0 && parent_arc[to as usize] == u32::MAX {
                        parent_arc[to as usize] = a;
                        if to as usize == sink {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(to as usize);
                    }
                }
            }
            if !reached {
                break;
            }
            // Trace back and push one unit (all arc capacities are small).
            let mut v = sink;
            while v != source {
                let a = parent_arc[v] as usize;
                self.arcs[a].1 -= 1;
                self.arcs[a ^ 1].1 += 1;
                v = self.arcs[a ^ 1].0 as usize;
            }
            flow += 1;
        }
        flow
    }
}

/// Minimum s-t vertex cut for non-adjacent s, t, computed as max flow in
/// the split digraph (every vertex other than s, t has capacity 1).
fn min_vertex_cut(g: &Graph, s: usize, t: usize, limit: u32) -> u32 {
    let n = g.n();
    // node 2v = in(v), 2v+1 = out(v)
    let mut net = FlowNet::new(2 * n);
    let big = n as u32;
    for v in 0..n {
        let cap = if v == s || v == t { big } else { 1 };
        net.add_arc(2 * v, 2 * v + 1, cap);
    }
    for (u, v) in g.edges() {
        net.add_arc(2 * u + 1, 2 * v, big);
        net.add_arc(2 * v + 1, 2 * u, big);
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

pub fn vertex_connectivity(g: &Graph) -> Result<usize> {
    vertex_connectivity_bounded(g, DEFAULT_FLOW_BOUND)
}

pub fn vertex_connectivity_bounded(g: &Graph, max_n: usize) -> Result<usize> {
    let n = g.n();
    if n > max_n {
        return Err(Error::BoundExceeded { n, bound: max_n });
    }
    if n == 0 {
        return Ok(0);
    }
    if g.is_complete() {
        return Ok(n - 1);
    }
    if !is_connected(g) {
        return Ok(0);
    }

    let v = (0..n).min_by_key(|&v| (g.degree(v), v)).unwrap();
    let mut best = g.degree(v) as u32;

    // Non-neighbors of v.
    for u in 0..n {
        if u != v && !g.has_edge(u, v) {
            best = best.min(min_vertex_cut(g, v, u, best));
        }
    }
    // Non-adjacent pairs inside N(v): a minimum cut containing v must
    // separate two of its neighbors.
    let nb: Vec<usize> = g.neighbors(v).collect();
    for (i, &x) in nb.iter().enumerate() {
        for &y in &nb[i + 1..] {
            if !g.has_edge(x, y) {
                best = best.min(min_vertex_cut(g, x, y, best));
            }
        }
    }
    Ok(best as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph, star_graph, Graph};
    use crate::group::Group;

    /// Exhaustive oracle: smallest vertex subset whose removal leaves a
    /// disconnected graph on >= 2 vertices; n - 1 when none exists
    /// (complete graphs).
    pub(crate) fn vertex_connectivity_oracle(g: &Graph) -> usize {
        let n = g.n();
        if n == 0 {
            return 0;
        }
        assert!(n <= 16);
        let mut best = n - 1;
        for mask in 0u32..(1 << n) {
            let k = mask.count_ones() as usize;
            if k >= best {
                continue;
            }
            let keep: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 0).collect();
            if keep.len() < 2 {
                continue;
            }
            if !is_connected(&g.induced_subgraph(&keep)) {
                best = k;
            }
        }
        best
    }

    #[test]
    fn textbook_values() {
        assert_eq!(vertex_connectivity(&complete_graph(4)).unwrap(), 3);
        assert_eq!(vertex_connectivity(&cycle_graph(5)).unwrap(), 2);
        assert_eq!(vertex_connectivity(&star_graph(4)).unwrap(), 1);
        assert_eq!(vertex_connectivity(&path_graph(5)).unwrap(), 1);
        assert_eq!(vertex_connectivity(&Graph::unlabeled(4)).unwrap(), 0);
        assert_eq!(vertex_connectivity(&complete_graph(1)).unwrap(), 0);
    }

    #[test]
    fn epg_of_klein_four_group_has_connectivity_one() {
        let g = Group::parse("Z2xZ2").unwrap();
        let epg = crate::graph::enhanced_power_graph(&g);
        assert_eq!(vertex_connectivity(&epg).unwrap(), 1);
    }

    #[test]
    fn kappa_zero_iff_disconnected_and_bounded_by_min_degree() {
        let graphs = vec![
            cycle_graph(6),
            star_graph(5),
            complete_graph(5),
            Graph::unlabeled(3),
            path_graph(7),
        ];
        for g in graphs {
            let k = vertex_connectivity(&g).unwrap();
            assert_eq!(k == 0, !is_connected(&g) || g.n() <= 1);
            if g.n() >= 2 {
                let min_deg = (0..g.n()).map(|v| g.degree(v)).min().unwrap();
                assert!(k <= min_deg);
            }
        }
    }

    #[test]
    fn matches_exhaustive_oracle_on_small_structured_graphs() {
        let mut graphs = vec![
            complete_graph(6),
            cycle_graph(8),
            star_graph(7),
            path_graph(6),
        ];
        // Two cliques sharing a single cut vertex.
        let mut cut = Graph::unlabeled(9);
        for u in 0..5 {
            for v in (u + 1)..5 {
                cut.add_edge(u, v);
            }
        }
        for u in 4..9 {
            for v in (u + 1)..9 {
                cut.add_edge(u, v);
            }
        }
        graphs.push(cut);
        for g in graphs {
            assert_eq!(
                vertex_connectivity(&g).unwrap(),
                vertex_connectivity_oracle(&g)
            );
        }
    }

    #[test]
    fn bound_is_enforced() {
        let g = Graph::unlabeled(301);
        assert!(matches!(
            vertex_connectivity(&g),
            Err(Error::BoundExceeded { .. })
        ));
        assert_eq!(vertex_connectivity_bounded(&g, 301).unwrap(), 0);
    }
}
