//! Exact domination number by branch and bound, plus the greedy upper
//! bound it starts from.
//!
//! The search branches on a minimum-degree uncovered vertex: one of its
//! closed neighbors must join the dominating set. Pruning uses the greedy
//! upper bound, the ceil(n / (max degree + 1)) bound, and a disjoint
//! closed-neighborhood packing. Components are solved independently since
//! domination is additive across them.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::connected_components;

/// Default vertex-count cap for the exact search.
pub const DEFAULT_EXACT_SEARCH_BOUND: usize = 400;

/// Greedy dominating set size: repeatedly take the vertex covering the most
/// uncovered vertices, ties broken by lowest index. Always >= gamma.
pub fn greedy_domination_upper(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let words = n.div_ceil(64);
    let full = full_mask(n, words);
    let mut covered = vec![0u64; words];
    let mut picked = 0;
    while !is_full(&covered, &full) {
        let mut best_v = 0;
        let mut best_gain = 0;
        for v in 0..n {
            let mut closed = closed_neighborhood(g, v, words);
            for (c, cov) in closed.iter_mut().zip(&covered) {
                *c &= !cov;
            }
            let gain: u32 = closed.iter().map(|w| w.count_ones()).sum();
            if gain as usize > best_gain {
                best_gain = gain as usize;
                best_v = v;
            }
        }
        debug_assert!(best_gain > 0);
        let closed = closed_neighborhood(g, best_v, words);
        for (cov, c) in covered.iter_mut().zip(&closed) {
            *cov |= c;
        }
        picked += 1;
    }
    picked
}

fn full_mask(n: usize, words: usize) -> Vec<u64> {
    let mut full = vec![u64::MAX; words];
    if n % 64 != 0 {
        full[words - 1] = (1u64 << (n % 64)) - 1;
    }
    if n == 0 {
        full.clear();
    }
    full
}

fn is_full(covered: &[u64], full: &[u64]) -> bool {
    covered.iter().zip(full).all(|(c, f)| c == f)
}

fn closed_neighborhood(g: &Graph, v: usize, words: usize) -> Vec<u64> {
    let mut mask = vec![0u64; words];
    g.union_row_into(v, &mut mask);
    mask[v / 64] |= 1 << (v % 64);
    mask
}

struct Search<'a> {
    g: &'a Graph,
    words: usize,
    closed: Vec<Vec<u64>>,
    degree_order: Vec<usize>,
    best: usize,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// Lower bound for the still-uncovered set: max of the degree bound and
    /// a greedy disjoint closed-neighborhood packing.
    fn lower_bound(&self, covered: &[u64], uncovered_count: usize) -> usize {
        if uncovered_count == 0 {
            return 0;
        }
        let max_closed = self
            .closed
            .iter()
            .map(|c| c.iter().map(|w| w.count_ones() as usize).sum::<usize>())
            .max()
            .unwrap_or(1);
        let degree_bound = uncovered_count.div_ceil(max_closed);

        let mut blocked = vec![0u64; self.words];
        let mut packing = 0;
        for &v in &self.degree_order {
            if covered[v / 64] >> (v % 64) & 1 == 1 {
                continue;
            }
            let cv = &self.closed[v];
            if cv.iter().zip(&blocked).all(|(c, b)| c & b == 0) {
                packing += 1;
                for (b, c) in blocked.iter_mut().zip(cv) {
                    *b |= c;
                }
            }
        }
        degree_bound.max(packing)
    }

    fn run(&mut self, covered: &mut Vec<u64>, uncovered_count: usize, chosen: usize) -> Result<()> {
        if uncovered_count == 0 {
            self.best = self.best.min(chosen);
            return Ok(());
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchBudgetExceeded {
                lower: chosen + self.lower_bound(covered, uncovered_count),
                upper: self.best,
            });
        }
        if chosen + self.lower_bound(covered, uncovered_count) >= self.best {
            return Ok(());
        }
        // Minimum-degree uncovered vertex, lowest index on ties.
        let u = self
            .degree_order
            .iter()
            .copied()
            .find(|&v| covered[v / 64] >> (v % 64) & 1 == 0)
            .expect("uncovered vertex exists");
        // Candidates: N[u], ordered by fresh coverage, descending (lowest
        // index breaks ties via the stable sort).
        let mut candidates: Vec<usize> = vec![u];
        candidates.extend(self.g.neighbors(u));
        let gain = |v: usize| -> usize {
            self.closed[v]
                .iter()
                .zip(covered.iter())
                .map(|(c, cov)| (c & !cov).count_ones() as usize)
                .sum()
        };
        let mut scored: Vec<(usize, usize)> =
            candidates.into_iter().map(|v| (gain(v), v)).collect();
        scored.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (g_gain, w) in scored {
            if g_gain == 0 {
                continue;
            }
            let saved = covered.clone();
            for (cov, c) in covered.iter_mut().zip(&self.closed[w]) {
                *cov |= c;
            }
            self.run(covered, uncovered_count - g_gain, chosen + 1)?;
            *covered = saved;
            if chosen + 1 >= self.best {
                break;
            }
        }
        Ok(())
    }
}

/// Exact domination number. Errors with `BoundExceeded` above the size cap
/// and `SearchBudgetExceeded` (carrying best-known bounds) if the node
/// budget runs out.
pub fn domination_number_exact(g: &Graph) -> Result<usize> {
    domination_number_exact_bounded(g, DEFAULT_EXACT_SEARCH_BOUND, 50_000_000)
}

pub fn domination_number_exact_bounded(g: &Graph, max_n: usize, budget: u64) -> Result<usize> {
    if g.n() > max_n {
        return Err(Error::BoundExceeded {
            n: g.n(),
            bound: max_n,
        });
    }
    if g.n() == 0 {
        return Ok(0);
    }
    // Domination is additive over components.
    let comps = connected_components(g);
    if comps.len() > 1 {
        let mut total = 0;
        for comp in comps {
            let sub = g.induced_subgraph(&comp);
            total += domination_number_exact_bounded(&sub, max_n, budget)?;
        }
        return Ok(total);
    }

    let n = g.n();
    let words = n.div_ceil(64);
    let closed: Vec<Vec<u64>> = (0..n).map(|v| closed_neighborhood(g, v, words)).collect();
    let mut degree_order: Vec<usize> = (0..n).collect();
    degree_order.sort_by_key(|&v| (g.degree(v), v));

    let upper = greedy_domination_upper(g);
    let mut search = Search {
        g,
        words,
        closed,
        degree_order,
        best: upper,
        nodes: 0,
        budget,
    };
    let lb = search.lower_bound(&vec![0u64; words], n);
    if lb >= upper {
        return Ok(upper);
    }
    let mut covered = vec![0u64; words];
    search.run(&mut covered, n, 0)?;
    Ok(search.best)
}
