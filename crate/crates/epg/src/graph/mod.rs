//! Simple undirected graphs on indexed vertices, stored as per-row
//! adjacency bitsets.

pub mod build;
pub mod export;

pub use build::{
    commuting_graph_full, enhanced_power_graph, enhanced_power_graph_with, power_graph,
    proper_enhanced_power_graph, proper_enhanced_power_graph_from, EpgOptions, ProperGraph,
};

/// Undirected graph without self-loops. Adjacency lives in a flat bitset,
/// `words` 64-bit words per row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    labels: Vec<String>,
}

impl Graph {
    pub fn new(n: usize, labels: Vec<String>) -> Graph {
        assert_eq!(labels.len(), n, "vertex count must equal label count");
        let words = n.div_ceil(64);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
            labels,
        }
    }

    /// Graph with labels "0", "1", ... — convenient in tests.
    pub fn unlabeled(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|v| v.to_string()).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "no self-loops");
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter::new(self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == self.n - 1)
    }

    /// OR the row of `src` into the word buffer `acc`.
    pub(crate) fn union_row_into(&self, src: usize, acc: &mut [u64]) {
        for (a, w) in acc.iter_mut().zip(self.row(src)) {
            *a |= w;
        }
    }

    /// OR a bit mask into vertex `v`'s row (clique insertion primitive).
    pub(crate) fn or_mask_into_row(&mut self, v: usize, mask: &[u64]) {
        let row = &mut self.bits[v * self.words..(v + 1) * self.words];
        for (r, m) in row.iter_mut().zip(mask) {
            *r |= m;
        }
    }

    /// Clear every self-loop bit.
    pub(crate) fn clear_diagonal(&mut self) {
        for v in 0..self.n {
            self.bits[v * self.words + v / 64] &= !(1 << (v % 64));
        }
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n, self.labels.clone());
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Induced subgraph on `verts` (order preserved, labels carried over).
    pub fn induced_subgraph(&self, verts: &[usize]) -> Graph {
        let labels = verts.iter().map(|&v| self.labels[v].clone()).collect();
        let mut g = Graph::new(verts.len(), labels);
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Drop all degree-0 vertices.
    pub fn remove_isolated(&self) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&v| self.degree(v) > 0).collect();
        self.induced_subgraph(&keep)
    }
}

/// Iterator over the set bit positions of a word slice.
pub(crate) struct BitIter<'a> {
    words: &'a [u64],
    idx: usize,
    current: u64,
}

impl<'a> BitIter<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        BitIter {
            words,
            idx: 0,
            current: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.idx * 64 + bit)
    }
}

/// Complete graph, path, cycle and star builders used all over the tests.
pub fn complete_graph(n: usize) -> Graph {
    let mut g = Graph::unlabeled(n);
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn path_graph(n: usize) -> Graph {
    let mut g = Graph::unlabeled(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

pub fn cycle_graph(n: usize) -> Graph {
    let mut g = path_graph(n);
    if n >= 3 {
        g.add_edge(n - 1, 0);
    }
    g
}

/// K_{1,n}: vertex 0 is the hub.
pub fn star_graph(leaves: usize) -> Graph {
    let mut g = Graph::unlabeled(leaves + 1);
    for v in 1..=leaves {
        g.add_edge(0, v);
    }
    g
}
