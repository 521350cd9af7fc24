//! Loop-free undirected graphs stored as dense word-packed adjacency rows.

use std::fmt;

use crate::bitset::{iter_bits, words_for, VertexSet, WORD_BITS};
use crate::error::{Error, Result};

/// Largest `t` accepted by [`Graph::contains_biclique`].
pub const BICLIQUE_MAX_T: usize = 4;
/// Largest vertex count accepted by [`Graph::contains_biclique`].
pub const BICLIQUE_MAX_N: usize = 1 << 12;

/// Shortest-path length, or [`Distance::Unreachable`], which orders above every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Unreachable,
}

impl Distance {
    /// `true` iff the distance is finite and at most `r`.
    pub fn within(self, r: u32) -> bool {
        matches!(self, Distance::Finite(d) if d <= r)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("inf"),
        }
    }
}

const UNREACHED: u32 = u32::MAX;

/// Single-source distances.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceVector {
    dist: Vec<u32>,
}

impl DistanceVector {
    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    pub fn get(&self, v: usize) -> Distance {
        match self.dist[v] {
            UNREACHED => Distance::Unreachable,
            d => Distance::Finite(d),
        }
    }

    pub fn to_vec(&self) -> Vec<Distance> {
        (0..self.dist.len()).map(|v| self.get(v)).collect()
    }

    /// Finite distances as `Some`, unreachable as `None`.
    pub fn to_options(&self) -> Vec<Option<u32>> {
        self.dist
            .iter()
            .map(|&d| (d != UNREACHED).then_some(d))
            .collect()
    }
}

impl fmt::Debug for DistanceVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_vec()).finish()
    }
}

/// Breadth-first search over any adjacency oracle that can write a neighbour row.
///
/// `fill_row(u, buf)` must overwrite `buf` with the neighbourhood of `u`. Vertices at depth
/// greater than `max_depth` are left unreached.
pub(crate) fn bfs_with<F>(n: usize, source: usize, max_depth: Option<u32>, mut fill_row: F) -> DistanceVector
where
    F: FnMut(usize, &mut [u64]),
{
    let wpr = words_for(n);
    let mut dist = vec![UNREACHED; n];
    let mut unvisited = VertexSet::full(n);
    let mut row = vec![0u64; wpr];
    dist[source] = 0;
    unvisited.remove(source);

    let mut frontier = vec![source];
    let mut next = Vec::new();
    let mut depth = 0u32;
    while !frontier.is_empty() {
        if max_depth.is_some_and(|d| depth >= d) {
            break;
        }
        depth += 1;
        for &u in &frontier {
            fill_row(u, &mut row);
            let uw = unvisited.words_mut();
            for (wi, (r, un)) in row.iter().zip(uw.iter_mut()).enumerate() {
                let mut fresh = r & *un;
                if fresh == 0 {
                    continue;
                }
                *un &= !fresh;
                while fresh != 0 {
                    let v = wi * WORD_BITS + fresh.trailing_zeros() as usize;
                    fresh &= fresh - 1;
                    dist[v] = depth;
                    next.push(v);
                }
            }
        }
        std::mem::swap(&mut frontier, &mut next);
        next.clear();
    }
    DistanceVector { dist }
}

/// Maps vertex indices of a graph to those of an induced subgraph after deletion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeling {
    old_to_new: Vec<Option<usize>>,
    new_to_old: Vec<usize>,
}

impl Relabeling {
    pub fn identity(n: usize) -> Self {
        Relabeling {
            old_to_new: (0..n).map(Some).collect(),
            new_to_old: (0..n).collect(),
        }
    }

    pub fn old_len(&self) -> usize {
        self.old_to_new.len()
    }

    pub fn new_len(&self) -> usize {
        self.new_to_old.len()
    }

    pub fn to_new(&self, old: usize) -> Option<usize> {
        self.old_to_new.get(old).copied().flatten()
    }

    pub fn to_old(&self, new: usize) -> usize {
        self.new_to_old[new]
    }

    /// Translates a set of old indices, dropping deleted vertices.
    pub fn map_set(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.new_len());
        for v in set.iter().filter_map(|v| self.to_new(v)) {
            out.insert(v);
        }
        out
    }

    /// Translates a set of new indices back to the old numbering.
    pub fn unmap_set(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.old_len());
        for v in set.iter() {
            out.insert(self.new_to_old[v]);
        }
        out
    }

    /// `self` followed by `next` (which must relabel `self`'s output).
    pub fn then(&self, next: &Relabeling) -> Relabeling {
        let old_to_new = self
            .old_to_new
            .iter()
            .map(|o| o.and_then(|mid| next.to_new(mid)))
            .collect();
        let new_to_old = next.new_to_old.iter().map(|&mid| self.new_to_old[mid]).collect();
        Relabeling {
            old_to_new,
            new_to_old,
        }
    }
}

/// Loop-free undirected graph on `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    wpr: usize,
    rows: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let wpr = words_for(n);
        Graph {
            n,
            wpr,
            rows: vec![0; n * wpr],
        }
    }

    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::OutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::LoopRejected(u));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn words_per_row(&self) -> usize {
        self.wpr
    }

    #[inline]
    pub(crate) fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.wpr..(u + 1) * self.wpr]
    }

    #[inline]
    pub(crate) fn row_mut(&mut self, u: usize) -> &mut [u64] {
        &mut self.rows[u * self.wpr..(u + 1) * self.wpr]
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::OutOfRange { vertex: v, n: self.n })
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() == self.n {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "vertex set over {} vertices used with a graph on {}",
                s.universe(),
                self.n
            )))
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.row(u)[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        debug_assert!(u != v);
        let (wu, bu) = (u / WORD_BITS, 1u64 << (u % WORD_BITS));
        let (wv, bv) = (v / WORD_BITS, 1u64 << (v % WORD_BITS));
        if present {
            self.row_mut(u)[wv] |= bv;
            self.row_mut(v)[wu] |= bu;
        } else {
            self.row_mut(u)[wv] &= !bv;
            self.row_mut(v)[wu] &= !bu;
        }
    }

    pub fn neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_words(self.n, self.row(v).to_vec()))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            iter_bits(self.row(u))
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn bfs_distances(&self, source: usize) -> Result<DistanceVector> {
        self.check_vertex(source)?;
        Ok(self.bfs_bounded(source, None))
    }

    pub(crate) fn bfs_bounded(&self, source: usize, max_depth: Option<u32>) -> DistanceVector {
        bfs_with(self.n, source, max_depth, |u, buf| buf.copy_from_slice(self.row(u)))
    }

    /// Induced subgraph on `V ∖ s`, with the relabeling that maps surviving vertices.
    pub fn delete_vertices(&self, s: &VertexSet) -> (Graph, Relabeling) {
        let mut old_to_new = vec![None; self.n];
        let mut new_to_old = Vec::with_capacity(self.n);
        for v in 0..self.n {
            if !s.contains(v) {
                old_to_new[v] = Some(new_to_old.len());
                new_to_old.push(v);
            }
        }
        let mut h = Graph::empty(new_to_old.len());
        for (nu, &u) in new_to_old.iter().enumerate() {
            for v in iter_bits(self.row(u)) {
                if let Some(nv) = old_to_new[v] {
                    let (w, b) = (nv / WORD_BITS, 1u64 << (nv % WORD_BITS));
                    h.row_mut(nu)[w] |= b;
                }
            }
        }
        (
            h,
            Relabeling {
                old_to_new,
                new_to_old,
            },
        )
    }

    /// Subgraph induced by `keep`, with its relabeling.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Relabeling) {
        self.delete_vertices(&keep.complement())
    }

    /// `true` iff every two distinct members of `b` are at distance greater than `r`.
    pub fn is_r_independent(&self, b: &VertexSet, r: u32) -> bool {
        debug_assert_eq!(b.universe(), self.n);
        if b.len() <= 1 {
            return true;
        }
        b.iter().all(|u| {
            let d = self.bfs_bounded(u, Some(r));
            b.iter().all(|v| v == u || !d.get(v).within(r))
        })
    }

    /// Finds a (not necessarily induced) `K_{t,t}` subgraph.
    ///
    /// Returns the lexicographically smallest side `X` together with the `t` smallest common
    /// neighbours of `X`. Exhaustive for `t <= 4` and `n <= 4096`.
    pub fn contains_biclique(&self, t: usize) -> Result<Option<(VertexSet, VertexSet)>> {
        if t == 0 {
            return Err(Error::InvalidParameter("biclique side must be at least 1".into()));
        }
        if t > BICLIQUE_MAX_T {
            return Err(Error::TooLarge {
                what: format!("biclique side t = {t}"),
                limit: format!("t <= {BICLIQUE_MAX_T}"),
            });
        }
        if self.n > BICLIQUE_MAX_N {
            return Err(Error::TooLarge {
                what: format!("graph with n = {}", self.n),
                limit: format!("n <= {BICLIQUE_MAX_N}"),
            });
        }
        let mut chosen = Vec::with_capacity(t);
        Ok(self
            .extend_biclique(t, &mut chosen, &VertexSet::full(self.n))
            .map(|(x, y)| {
                (
                    VertexSet::from_vertices(self.n, x).unwrap(),
                    y.truncated(t),
                )
            }))
    }

    fn extend_biclique(
        &self,
        t: usize,
        chosen: &mut Vec<usize>,
        common: &VertexSet,
    ) -> Option<(Vec<usize>, VertexSet)> {
        if chosen.len() == t {
            return Some((chosen.clone(), common.clone()));
        }
        let start = chosen.last().map_or(0, |&l| l + 1);
        // Any further member of X must share a neighbour with the current common set.
        let candidates = if chosen.is_empty() {
            VertexSet::full(self.n)
        } else {
            let mut c = VertexSet::new(self.n);
            for y in common.iter() {
                for (a, b) in c.words_mut().iter_mut().zip(self.row(y)) {
                    *a |= b;
                }
            }
            c
        };
        for w in candidates.iter().filter(|&w| w >= start) {
            let mut next = common.clone();
            for (a, b) in next.words_mut().iter_mut().zip(self.row(w)) {
                *a &= b;
            }
            if next.len() >= t {
                chosen.push(w);
                if let Some(found) = self.extend_biclique(t, chosen, &next) {
                    return Some(found);
                }
                chosen.pop();
            }
        }
        None
    }

    /// Checks symmetry and loop-freeness of the stored rows.
    pub fn check_invariants(&self) -> bool {
        (0..self.n).all(|u| {
            !self.has_edge(u, u) && iter_bits(self.row(u)).all(|v| v < self.n && self.has_edge(v, u))
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
