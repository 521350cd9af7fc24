//! Flippable and widenable instances: verification, closeness graphs, the close/far
//! dichotomy, and witness searches.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::families::ramsey::ramsey_upper;
use crate::flip::{apply_flips, normalize, FlipSet, FlippedView};
use crate::graph::{bfs_with, Graph};
use crate::search::{self, LocalGraph};

/// Thresholds separating exhaustive from heuristic search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest candidate pool searched exactly for cliques and independent sets.
    pub exact_pool: usize,
    /// Largest graph accepted by [`search_deletion_witness`].
    pub witness_max_n: usize,
    /// Largest deletion budget accepted by [`search_deletion_witness`].
    pub witness_max_budget: usize,
}

pub const DEFAULT_EXACT_POOL: usize = 40;
pub const DEFAULT_WITNESS_MAX_N: usize = 24;
pub const DEFAULT_WITNESS_MAX_BUDGET: usize = 3;

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            exact_pool: DEFAULT_EXACT_POOL,
            witness_max_n: DEFAULT_WITNESS_MAX_N,
            witness_max_budget: DEFAULT_WITNESS_MAX_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(String),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

/// `(A, 𝓕)` with radius, target size and an optional witness `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlippableInstance {
    pub a_set: VertexSet,
    pub flips: FlipSet,
    pub r: u32,
    pub m: usize,
    pub witness: Option<VertexSet>,
}

/// `(A, S)` with radius, target size and an optional witness `B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WidenableInstance {
    pub a_set: VertexSet,
    pub s_set: VertexSet,
    pub r: u32,
    pub m: usize,
    pub witness: Option<VertexSet>,
}

/// Checks `B ⊆ A`, `|B| >= m`, and that `B` is `r`-independent in the materialised `G ⊕ 𝓕`.
pub fn verify_flippable(g: &Graph, inst: &FlippableInstance) -> Result<Verdict> {
    let b = inst.witness.as_ref().ok_or(Error::MissingWitness)?;
    g.check_set(&inst.a_set)?;
    g.check_set(b)?;
    if !b.is_subset(&inst.a_set) {
        return Ok(Verdict::Invalid("witness is not contained in A".into()));
    }
    if b.len() < inst.m {
        return Ok(Verdict::Invalid(format!(
            "witness has {} vertices, fewer than m = {}",
            b.len(),
            inst.m
        )));
    }
    let flipped = apply_flips(g, &inst.flips)?;
    Ok(match close_pair(&flipped, b, inst.r) {
        None => Verdict::Valid,
        Some((u, v)) => Verdict::Invalid(format!(
            "vertices {u} and {v} are within distance {} after the flips",
            inst.r
        )),
    })
}

/// Checks `B ⊆ A ∖ S`, `|B| >= m`, and that `B` is `r`-independent in `G ∖ S`.
pub fn verify_widenable(g: &Graph, inst: &WidenableInstance) -> Result<Verdict> {
    let b = inst.witness.as_ref().ok_or(Error::MissingWitness)?;
    g.check_set(&inst.a_set)?;
    g.check_set(&inst.s_set)?;
    g.check_set(b)?;
    if !b.is_subset(&inst.a_set) {
        return Ok(Verdict::Invalid("witness is not contained in A".into()));
    }
    if !b.is_disjoint(&inst.s_set) {
        return Ok(Verdict::Invalid("witness meets the deletion set".into()));
    }
    if b.len() < inst.m {
        return Ok(Verdict::Invalid(format!(
            "witness has {} vertices, fewer than m = {}",
            b.len(),
            inst.m
        )));
    }
    let (h, map) = g.delete_vertices(&inst.s_set);
    Ok(match close_pair(&h, &map.map_set(b), inst.r) {
        None => Verdict::Valid,
        Some((u, v)) => Verdict::Invalid(format!(
            "vertices {} and {} are within distance {} after deleting S",
            map.to_old(u),
            map.to_old(v),
            inst.r
        )),
    })
}

fn close_pair(g: &Graph, b: &VertexSet, r: u32) -> Option<(usize, usize)> {
    b.iter().find_map(|u| {
        let d = g.bfs_bounded(u, Some(r));
        b.iter().find(|&v| v != u && d.get(v).within(r)).map(|v| (u, v))
    })
}

/// Auxiliary graph on a candidate pool: two members are adjacent iff their distance is at
/// most `r`. Its independent sets are exactly the `r`-independent subsets of the pool.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosenessGraph {
    n: usize,
    pool: Vec<usize>,
    local: LocalGraph,
}

impl ClosenessGraph {
    /// Pool members in ascending order; local index `i` is `pool()[i]`.
    pub fn pool(&self) -> &[usize] {
        &self.pool
    }

    pub fn len(&self) -> usize {
        self.pool.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pool.is_empty()
    }

    pub fn local(&self) -> &LocalGraph {
        &self.local
    }

    /// Whether pool members `u` and `v` (global indices) are close.
    pub fn is_close(&self, u: usize, v: usize) -> bool {
        match (self.pool.binary_search(&u), self.pool.binary_search(&v)) {
            (Ok(i), Ok(j)) => self.local.has_edge(i, j),
            _ => false,
        }
    }

    pub fn to_global(&self, local: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n);
        for i in local.iter() {
            out.insert(self.pool[i]);
        }
        out
    }

    pub fn to_local(&self, global: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.pool.len());
        for v in global.iter() {
            if let Ok(i) = self.pool.binary_search(&v) {
                out.insert(i);
            }
        }
        out
    }

    /// Builds the closeness graph from one bounded BFS per pool member.
    pub fn build<F>(n: usize, pool: &VertexSet, r: u32, fill_row: F) -> Self
    where
        F: Fn(usize, &mut [u64]) + Sync,
    {
        let members = pool.to_vec();
        let rows: Vec<VertexSet> = members
            .par_iter()
            .map(|&u| {
                let d = bfs_with(n, u, Some(r), &fill_row);
                let mut row = VertexSet::new(members.len());
                for (j, &v) in members.iter().enumerate() {
                    if v != u && d.get(v).within(r) {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        ClosenessGraph {
            n,
            pool: members,
            local: LocalGraph::new(rows),
        }
    }
}

/// Closeness graph in a (possibly flipped) graph.
pub fn closeness_graph(view: &FlippedView<'_>, pool: &VertexSet, r: u32) -> ClosenessGraph {
    ClosenessGraph::build(view.n(), pool, r, |u, buf| view.fill_row(u, buf))
}

/// Closeness graph in `g ∖ deleted` without building the induced subgraph.
pub fn closeness_graph_avoiding(g: &Graph, deleted: &VertexSet, pool: &VertexSet, r: u32) -> ClosenessGraph {
    let pool = pool.difference(deleted);
    ClosenessGraph::build(g.n(), &pool, r, |u, buf| {
        for ((o, x), d) in buf.iter_mut().zip(g.row(u)).zip(deleted.words()) {
            *o = x & !d;
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Dichotomy {
    /// Pairwise far members (independent in the closeness graph).
    Far(VertexSet),
    /// Pairwise close members (a clique in the closeness graph).
    Close(VertexSet),
    /// Neither target met; carries the largest sets found.
    Neither { far: VertexSet, close: VertexSet },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CloseOrFar {
    pub outcome: Dichotomy,
    /// Whether both searches were exhaustive.
    pub exact: bool,
}

/// Finds `m` pairwise far or `q` pairwise close pool members, preferring far.
///
/// Exact for pools up to `limits.exact_pool`; greedy beyond. In exact mode `Neither` never
/// occurs once the pool reaches `C(m + q − 2, m − 1)`.
pub fn close_or_far(cg: &ClosenessGraph, m: usize, q: usize, limits: &SearchLimits) -> CloseOrFar {
    let exact = cg.len() <= limits.exact_pool;
    let (far, close) = if exact {
        (
            search::max_independent_set(cg.local()),
            search::max_clique(cg.local()),
        )
    } else {
        (
            search::greedy_independent_set(cg.local()),
            search::greedy_clique(cg.local()),
        )
    };
    debug_assert!(cg.local().is_independent(&far) && cg.local().is_clique(&close));
    let outcome = if far.len() >= m {
        Dichotomy::Far(cg.to_global(&far))
    } else if close.len() >= q {
        Dichotomy::Close(cg.to_global(&close))
    } else {
        if exact && m >= 1 && q >= 1 {
            if let Ok(bound) = ramsey_upper(m as u64, q as u64) {
                assert!(
                    BigUint::from(cg.len()) < bound,
                    "exact search missed a Ramsey-forced set"
                );
            }
        }
        Dichotomy::Neither {
            far: cg.to_global(&far),
            close: cg.to_global(&close),
        }
    };
    CloseOrFar { outcome, exact }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatSearch {
    pub witness: Option<VertexSet>,
    pub exact: bool,
}

/// A subset of `A` of size at least `m` that is `r`-independent in `G ⊕ 𝓕`, via a maximum
/// independent set of the flipped closeness graph.
pub fn find_flat_subset(
    g: &Graph,
    flips: &FlipSet,
    a_set: &VertexSet,
    r: u32,
    m: usize,
    limits: &SearchLimits,
) -> Result<FlatSearch> {
    g.check_set(a_set)?;
    let nf = normalize(flips, g.n())?;
    let view = FlippedView::new(g, &nf)?;
    let cg = closeness_graph(&view, a_set, r);
    let exact = cg.len() <= limits.exact_pool;
    let local = if exact {
        search::max_independent_set(cg.local())
    } else {
        search::greedy_independent_set(cg.local())
    };
    if local.len() < m {
        return Ok(FlatSearch { witness: None, exact });
    }
    let b = cg.to_global(&local);
    let verdict = verify_flippable(
        g,
        &FlippableInstance {
            a_set: a_set.clone(),
            flips: flips.clone(),
            r,
            m,
            witness: Some(b.clone()),
        },
    )?;
    assert!(verdict.is_valid(), "flat subset failed verification: {verdict:?}");
    Ok(FlatSearch {
        witness: Some(b),
        exact,
    })
}

/// Deletion set and witness found by [`search_deletion_witness`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeletionWitness {
    pub s_set: VertexSet,
    pub b_set: VertexSet,
}

/// Exhaustive search over deletion sets `S` with `|S| <= budget`, by increasing size and then
/// lexicographically; the witness is the lexicographically first maximum `r`-independent
/// subset of `A ∖ S` in `G ∖ S`.
pub fn search_deletion_witness(
    g: &Graph,
    a_set: &VertexSet,
    r: u32,
    m: usize,
    budget: usize,
    limits: &SearchLimits,
) -> Result<Option<DeletionWitness>> {
    g.check_set(a_set)?;
    if g.n() > limits.witness_max_n {
        return Err(Error::TooLarge {
            what: format!("graph with n = {}", g.n()),
            limit: format!("n <= {}", limits.witness_max_n),
        });
    }
    if budget > limits.witness_max_budget {
        return Err(Error::TooLarge {
            what: format!("deletion budget {budget}"),
            limit: format!("budget <= {}", limits.witness_max_budget),
        });
    }
    for size in 0..=budget.min(g.n()) {
        if let Some(w) = deletion_witness_of_size(g, a_set, r, m, size, limits.exact_pool.max(g.n())) {
            let verdict = verify_widenable(
                g,
                &WidenableInstance {
                    a_set: a_set.clone(),
                    s_set: w.s_set.clone(),
                    r,
                    m,
                    witness: Some(w.b_set.clone()),
                },
            )?;
            assert!(verdict.is_valid(), "deletion witness failed verification: {verdict:?}");
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// First deletion set of exactly `size` vertices (lexicographic order) admitting `m` members
/// of `A ∖ S` pairwise at distance greater than `r` in `G ∖ S`.
///
/// The decision is always exhaustive. The reported witness is the lexicographically first
/// maximum independent set when the residual pool has at most `exact_pool` members, and the
/// first `m`-set found otherwise.
pub(crate) fn deletion_witness_of_size(
    g: &Graph,
    a_set: &VertexSet,
    r: u32,
    m: usize,
    size: usize,
    exact_pool: usize,
) -> Option<DeletionWitness> {
    let n = g.n();
    let attempt = |s: &[usize]| -> Option<DeletionWitness> {
        let deleted = VertexSet::from_vertices(n, s.iter().copied()).ok()?;
        let cg = closeness_graph_avoiding(g, &deleted, a_set, r);
        if cg.len() < m {
            return None;
        }
        let hit = search::independent_set_of_size(cg.local(), m);
        if hit.len() < m {
            return None;
        }
        let best = if cg.len() <= exact_pool {
            search::max_independent_set(cg.local())
        } else {
            hit
        };
        Some(DeletionWitness {
            s_set: deleted,
            b_set: cg.to_global(&best),
        })
    };
    if size == 0 {
        return attempt(&[]);
    }
    if size > n {
        return None;
    }
    (0..=n - size).into_par_iter().find_map_first(|first| {
        let mut combo: Vec<usize> = (first..first + size).collect();
        loop {
            if let Some(w) = attempt(&combo) {
                return Some(w);
            }
            // Advance positions 1.. lexicographically with the first element fixed.
            let mut i = size;
            loop {
                if i <= 1 {
                    return None;
                }
                i -= 1;
                if combo[i] < n - (size - i) {
                    break;
                }
            }
            combo[i] += 1;
            for j in i + 1..size {
                combo[j] = combo[j - 1] + 1;
            }
        }
    })
}
