//! Clique and independent-set search on small dense graphs given as local adjacency rows.
//!
//! The exact search branches on vertices in ascending order (include before exclude) and only
//! replaces the incumbent on a strict improvement, so the returned maximum clique is the
//! lexicographically smallest one. Pruning uses a greedy colouring bound that does not
//! reorder the branching.

use crate::bitset::VertexSet;

/// Local adjacency over `0..len`; rows are symmetric and loop-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalGraph {
    rows: Vec<VertexSet>,
}

impl LocalGraph {
    pub fn new(rows: Vec<VertexSet>) -> Self {
        debug_assert!(rows.iter().all(|r| r.universe() == rows.len()));
        LocalGraph { rows }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn row(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn complement(&self) -> LocalGraph {
        let n = self.len();
        LocalGraph {
            rows: (0..n)
                .map(|v| {
                    let mut r = self.rows[v].complement();
                    r.remove(v);
                    r
                })
                .collect(),
        }
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|u| set.iter().all(|v| u == v || self.has_edge(u, v)))
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|u| self.rows[u].is_disjoint(set))
    }
}

struct CliqueSearch<'a> {
    g: &'a LocalGraph,
    best: VertexSet,
    best_len: usize,
    stop_at: Option<usize>,
}

impl CliqueSearch<'_> {
    fn color_bound(&self, cand: &VertexSet) -> usize {
        let mut remaining = cand.clone();
        let mut colors = 0;
        while let Some(_) = remaining.first() {
            colors += 1;
            let mut class = remaining.clone();
            while let Some(v) = class.first() {
                remaining.remove(v);
                class.remove(v);
                class.difference_with(self.g.row(v));
            }
        }
        colors
    }

    fn done(&self) -> bool {
        self.stop_at.is_some_and(|t| self.best_len >= t)
    }

    fn expand(&mut self, cur: &mut VertexSet, cur_len: usize, mut cand: VertexSet) {
        if cur_len > self.best_len {
            self.best = cur.clone();
            self.best_len = cur_len;
        }
        if self.done() || cand.is_empty() {
            return;
        }
        if cur_len + self.color_bound(&cand) <= self.best_len {
            return;
        }
        while let Some(v) = cand.first() {
            if cur_len + cand.len() <= self.best_len || self.done() {
                return;
            }
            cand.remove(v);
            let next = cand.intersection(self.g.row(v));
            cur.insert(v);
            self.expand(cur, cur_len + 1, next);
            cur.remove(v);
        }
    }
}

/// Lexicographically smallest maximum clique.
pub fn max_clique(g: &LocalGraph) -> VertexSet {
    clique_search(g, None)
}

/// A clique of size at least `target` if one exists (the first in lexicographic search
/// order), otherwise the maximum clique.
pub fn clique_of_size(g: &LocalGraph, target: usize) -> VertexSet {
    clique_search(g, Some(target))
}

fn clique_search(g: &LocalGraph, stop_at: Option<usize>) -> VertexSet {
    let n = g.len();
    let mut s = CliqueSearch {
        g,
        best: VertexSet::new(n),
        best_len: 0,
        stop_at,
    };
    let mut cur = VertexSet::new(n);
    s.expand(&mut cur, 0, VertexSet::full(n));
    s.best
}

pub fn max_independent_set(g: &LocalGraph) -> VertexSet {
    max_clique(&g.complement())
}

pub fn independent_set_of_size(g: &LocalGraph, target: usize) -> VertexSet {
    clique_of_size(&g.complement(), target)
}

/// Greedy clique: scan vertices by decreasing degree (ties to the smallest index) and keep
/// each one adjacent to everything kept so far.
pub fn greedy_clique(g: &LocalGraph) -> VertexSet {
    let n = g.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.row(v).len()), v));
    let mut out = VertexSet::new(n);
    let mut cand = VertexSet::full(n);
    for v in order {
        if cand.contains(v) {
            out.insert(v);
            cand.intersect_with(g.row(v));
        }
    }
    out
}

/// Greedy independent set: scan vertices by increasing degree (ties to the smallest index)
/// and keep each one with no kept neighbour.
pub fn greedy_independent_set(g: &LocalGraph) -> VertexSet {
    let n = g.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (g.row(v).len(), v));
    let mut out = VertexSet::new(n);
    let mut blocked = VertexSet::new(n);
    for v in order {
        if !blocked.contains(v) {
            out.insert(v);
            blocked.insert(v);
            blocked.union_with(g.row(v));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn local(n: usize, edges: &[(usize, usize)]) -> LocalGraph {
        let mut rows = vec![VertexSet::new(n); n];
        for &(u, v) in edges {
            rows[u].insert(v);
            rows[v].insert(u);
        }
        LocalGraph::new(rows)
    }

    fn brute_max(g: &LocalGraph, clique: bool) -> (usize, Vec<usize>) {
        let n = g.len();
        let mut best: Option<(usize, Vec<usize>)> = None;
        for mask in 0u32..(1 << n) {
            let set = VertexSet::from_vertices(n, (0..n).filter(|&i| mask >> i & 1 == 1)).unwrap();
            let ok = if clique { g.is_clique(&set) } else { g.is_independent(&set) };
            if !ok {
                continue;
            }
            let cand = (set.len(), set.to_vec());
            best = match best {
                None => Some(cand),
                Some(b) if cand.0 > b.0 || (cand.0 == b.0 && cand.1 < b.1) => Some(cand),
                Some(b) => Some(b),
            };
        }
        best.unwrap()
    }

    #[test]
    fn exact_search_is_lexicographically_first_maximum() {
        let mut state = 0x2545_f491_4f6c_dd1du64;
        for trial in 0..200 {
            let n = 1 + trial % 12;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    if state % 100 < 45 {
                        edges.push((u, v));
                    }
                }
            }
            let g = local(n, &edges);
            let (size, lex) = brute_max(&g, true);
            let got = max_clique(&g);
            assert_eq!((got.len(), got.to_vec()), (size, lex), "clique, trial {trial}");
            let (size, lex) = brute_max(&g, false);
            let got = max_independent_set(&g);
            assert_eq!((got.len(), got.to_vec()), (size, lex), "independent set, trial {trial}");
        }
    }

    #[test]
    fn c5_has_no_triangle_or_independent_triple() {
        let c5 = local(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(max_clique(&c5).len(), 2);
        assert_eq!(max_independent_set(&c5).len(), 2);
        assert_eq!(clique_of_size(&c5, 3).len(), 2);
    }

    #[test]
    fn greedy_results_are_valid() {
        let p = local(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]);
        let i = greedy_independent_set(&p);
        assert!(p.is_independent(&i));
        assert_eq!(i.len(), 3);
        let c = greedy_clique(&p);
        assert!(p.is_clique(&c));
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn target_search_stops_early() {
        let empty = local(30, &[]);
        assert_eq!(independent_set_of_size(&empty, 4).len(), 4);
        assert_eq!(max_independent_set(&empty).len(), 30);
    }
}
