//! Turning a flip-flatness witness into a deletion witness.
//!
//! A set `B` that is `r`-independent in `G ⊕ F₁ ⊕ … ⊕ F_k` is converted into a deletion set
//! `S` and a subset `B' ⊆ B ∖ S` that is `r`-independent in `G ∖ S`. The flips are first
//! normalised so that no vertex pair is toggled twice; each step then extracts a chain of
//! pairwise-close subsets (or a pairwise-far shortcut) through the prefixes of the flip
//! sequence, deletes the smaller side of the last flip, and continues on `G ∖ S` with one
//! flip fewer. When `G` excludes `K_{t₀,t₀}` and the size preconditions hold, each deletion
//! has at most `t₀² + t₀ − 2` vertices.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::families::ramsey::{iterated_ramsey_upper_with_ceiling, DEFAULT_CEILING_BITS};
use crate::flip::{apply_flip, apply_flip_in_place, apply_flips, normalize, Flip, FlipSet};
use crate::graph::{Graph, Relabeling};
use crate::witness::{close_or_far, closeness_graph, Dichotomy, SearchLimits, WidenableInstance};
use crate::FlippedView;

/// Smallest `t₀` for which both standing assumptions `t₀² + t₀ − 2 >= 8t₀` and
/// `t₀² + t₀ − 2 >= 4t₀ + 2` hold.
pub const MIN_EFFECTIVE_T0: usize = 8;

/// Biclique-exclusion parameter raised to [`MIN_EFFECTIVE_T0`], with the per-flip deletion
/// bound `t₀² + t₀ − 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EffectiveSparsity {
    pub t0_input: usize,
    pub t0_eff: usize,
    pub bound: usize,
}

impl EffectiveSparsity {
    pub fn new(t0: usize) -> Self {
        let t0_eff = t0.max(MIN_EFFECTIVE_T0);
        EffectiveSparsity {
            t0_input: t0,
            t0_eff,
            bound: t0_eff * t0_eff + t0_eff - 2,
        }
    }

    /// `t₀² + t₀ + m − 2`, the size a pairwise-close set needs before one flip is removed.
    pub fn lemma_pool(&self, m: usize) -> usize {
        self.bound + m
    }
}

/// `R^k(m, t₀² + t₀ + m − 2)` with the binomial Ramsey bound.
pub fn required_chain_size(k: u32, sparsity: &EffectiveSparsity, m: usize) -> Result<BigUint> {
    required_chain_size_with_ceiling(k, sparsity, m, DEFAULT_CEILING_BITS)
}

pub fn required_chain_size_with_ceiling(
    k: u32,
    sparsity: &EffectiveSparsity,
    m: usize,
    ceiling_bits: u64,
) -> Result<BigUint> {
    iterated_ramsey_upper_with_ceiling(k, m as u64, sparsity.lemma_pool(m) as u64, ceiling_bits)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    First,
    Second,
}

/// Result of deleting one side of a single flip.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaOutcome {
    pub s_set: VertexSet,
    pub b_prime: VertexSet,
    pub deleted_side: Side,
    pub bound: usize,
    pub within_bound: bool,
}

/// Deletes the smaller side of `flip` (the second on ties) and keeps the rest of `b`.
///
/// `b` must be `r`-independent in `gp ⊕ flip`. Then `b ∖ S` is `r`-independent in `gp ∖ S`
/// for either side `S`: a short path avoiding `S` uses no toggled pair and would survive the
/// flip. In strict mode, `|S| <= t₀² + t₀ − 2` and `|b ∖ S| >= m` are enforced.
pub fn single_flip_to_deletion(
    gp: &Graph,
    flip: &Flip,
    b: &VertexSet,
    r: u32,
    sparsity: &EffectiveSparsity,
    m: usize,
    strict: bool,
) -> Result<LemmaOutcome> {
    gp.check_set(b)?;
    let flipped = apply_flip(gp, flip)?;
    if !flipped.is_r_independent(b, r) {
        return Err(Error::PreconditionFailed(format!(
            "witness is not {r}-independent after the flip"
        )));
    }
    let (s_set, deleted_side) = if flip.a.len() < flip.b.len() {
        (flip.a.clone(), Side::First)
    } else {
        (flip.b.clone(), Side::Second)
    };
    let b_prime = b.difference(&s_set);
    let (rest, map) = gp.delete_vertices(&s_set);
    assert!(
        rest.is_r_independent(&map.map_set(&b_prime), r),
        "side deletion left a short path between witness vertices"
    );
    let within_bound = s_set.len() <= sparsity.bound;
    if strict {
        if !within_bound {
            return Err(Error::BoundViolated {
                bound: sparsity.bound,
                first: flip.a.len(),
                second: flip.b.len(),
                diagnostic: lemma_diagnostic(gp, flip, b, r, sparsity, m),
            });
        }
        if b_prime.len() < m {
            return Err(Error::PreconditionFailed(format!(
                "only {} witness vertices remain after deletion, need {m}",
                b_prime.len()
            )));
        }
    }
    Ok(LemmaOutcome {
        s_set,
        b_prime,
        deleted_side,
        bound: sparsity.bound,
        within_bound,
    })
}

/// Names the first failing hypothesis when both flip sides exceed the bound.
fn lemma_diagnostic(gp: &Graph, flip: &Flip, b: &VertexSet, r: u32, sparsity: &EffectiveSparsity, m: usize) -> String {
    for u in b.iter() {
        let d = gp.bfs_bounded(u, Some(r));
        if let Some(v) = b.iter().find(|&v| v != u && !d.get(v).within(r)) {
            return format!("witness vertices {u} and {v} are not within distance {r} before the flip");
        }
    }
    if b.len() < sparsity.lemma_pool(m) {
        return format!(
            "witness has {} vertices, fewer than t0^2 + t0 + m - 2 = {}",
            b.len(),
            sparsity.lemma_pool(m)
        );
    }
    match cross_biclique(gp, &flip.a, &flip.b, sparsity.t0_eff, 1_000_000) {
        Some((x, y)) => format!("K_{{t0,t0}} across the flip: {:?} x {:?}", x, y),
        None => "no violated hypothesis found within the search budget".into(),
    }
}

/// A `K_{t,t}` with one side in `p1` and the other in `p2`, searched with a node budget.
pub fn cross_biclique(
    g: &Graph,
    p1: &VertexSet,
    p2: &VertexSet,
    t: usize,
    node_budget: usize,
) -> Option<(Vec<usize>, Vec<usize>)> {
    fn extend(
        g: &Graph,
        p1: &[usize],
        t: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        common: &VertexSet,
        budget: &mut usize,
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        if chosen.len() == t {
            let ys: Vec<usize> = common.iter().filter(|y| !chosen.contains(y)).take(t).collect();
            return (ys.len() == t).then(|| (chosen.clone(), ys));
        }
        for i in start..p1.len() {
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            let x = p1[i];
            let mut next = common.clone();
            next.intersect_with(&g.neighborhood(x).ok()?);
            if next.iter().filter(|y| !chosen.contains(y) && *y != x).count() < t {
                continue;
            }
            chosen.push(x);
            if let Some(found) = extend(g, p1, t, i + 1, chosen, &next, budget) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }
    let p1v = p1.to_vec();
    let mut budget = node_budget;
    extend(g, &p1v, t, 0, &mut Vec::with_capacity(t), p2, &mut budget)
}

/// Prefix and suffix of a path up to its first and from its last vertex in `P₁ ∪ P₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Segments {
    Broken { first: Vec<usize>, last: Vec<usize> },
    NotBroken,
}

/// Splits a `gp`-path that uses a pair toggled by `flip` into its two elementary segments.
pub fn elementary_segments(gp: &Graph, flip: &Flip, path: &[usize]) -> Result<Segments> {
    if path.is_empty() {
        return Err(Error::InvalidPath("empty path".into()));
    }
    for &v in path {
        if v >= gp.n() {
            return Err(Error::InvalidPath(format!("vertex {v} out of range")));
        }
    }
    for w in path.windows(2) {
        if !gp.has_edge(w[0], w[1]) {
            return Err(Error::InvalidPath(format!("{} and {} are not adjacent", w[0], w[1])));
        }
    }
    if !path.windows(2).any(|w| flip.toggles(w[0], w[1])) {
        return Ok(Segments::NotBroken);
    }
    let in_sides = |v: &usize| flip.a.contains(*v) || flip.b.contains(*v);
    let i = path.iter().position(in_sides).expect("toggled pair lies in the flip sides");
    let j = path.iter().rposition(in_sides).expect("toggled pair lies in the flip sides");
    Ok(Segments::Broken {
        first: path[..=i].to_vec(),
        last: path[j..].to_vec(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Enforce the size preconditions that guarantee the deletion bound.
    Guaranteed,
    /// Run the same recursion without size preconditions and verify the output.
    BestEffort,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConversionConfig {
    pub r: u32,
    pub m: usize,
    pub sparsity: EffectiveSparsity,
    pub mode: Mode,
    pub limits: SearchLimits,
    pub ceiling_bits: u64,
}

impl ConversionConfig {
    pub fn new(r: u32, m: usize, t0: usize, mode: Mode) -> Self {
        ConversionConfig {
            r,
            m,
            sparsity: EffectiveSparsity::new(t0),
            mode,
            limits: SearchLimits::default(),
            ceiling_bits: DEFAULT_CEILING_BITS,
        }
    }
}

/// One event of the conversion. `round` counts lemma applications so far.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "snake_case")]
pub enum TraceStep {
    CloseExtraction {
        round: usize,
        level: usize,
        pool: usize,
        size: usize,
        /// Required close-set size, in decimal, or `"overflow"`.
        target: String,
        met: bool,
        exact: bool,
    },
    FarShortcut {
        round: usize,
        level: usize,
        size: usize,
        exact: bool,
    },
    LemmaStep {
        round: usize,
        flip_index: usize,
        deleted_side: Side,
        deleted: Vec<usize>,
        s_total: usize,
    },
    Recursion {
        remaining_flips: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConversionTrace {
    pub mode: Mode,
    pub t0_eff: usize,
    pub per_flip_bound: usize,
    pub source_flips: usize,
    pub normalized_flips: usize,
    /// The normalised flips in processing order, as original vertex lists.
    pub flip_order: Vec<(Vec<usize>, Vec<usize>)>,
    pub steps: Vec<TraceStep>,
    pub s_total: Vec<usize>,
    pub b_final: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConversionOutcome {
    Success {
        s_set: VertexSet,
        b_final: VertexSet,
        trace: ConversionTrace,
    },
    Failure {
        level: Option<usize>,
        reason: String,
        trace: ConversionTrace,
    },
}

impl ConversionOutcome {
    pub fn trace(&self) -> &ConversionTrace {
        match self {
            ConversionOutcome::Success { trace, .. } | ConversionOutcome::Failure { trace, .. } => trace,
        }
    }

    pub fn is_success(&self) -> bool {
        matches!(self, ConversionOutcome::Success { .. })
    }
}

fn saturating_target(k: u32, cfg: &ConversionConfig) -> (usize, String) {
    match required_chain_size_with_ceiling(k, &cfg.sparsity, cfg.m, cfg.ceiling_bits) {
        Ok(v) => (v.to_usize().unwrap_or(usize::MAX), v.to_string()),
        Err(_) => (usize::MAX, "overflow".into()),
    }
}

/// Converts a flip-flatness witness `b` for `flips` into a deletion witness in `g`.
pub fn flips_to_deletions(g: &Graph, flips: &FlipSet, b: &VertexSet, cfg: &ConversionConfig) -> Result<ConversionOutcome> {
    g.check_set(b)?;
    let r = cfg.r;
    let m = cfg.m;
    if !apply_flips(g, flips)?.is_r_independent(b, r) {
        return Err(Error::PreconditionFailed(format!(
            "witness is not {r}-independent after the flips"
        )));
    }
    let nf = normalize(flips, g.n())?;
    let mut pending: Vec<Flip> = nf.to_flipset().0;
    let k_norm = pending.len();

    if cfg.mode == Mode::Guaranteed && m > 0 {
        let k = u32::try_from(k_norm).unwrap_or(u32::MAX);
        match required_chain_size_with_ceiling(k, &cfg.sparsity, m, cfg.ceiling_bits) {
            Ok(need) if BigUint::from(b.len()) >= need => {}
            Ok(need) => {
                return Err(Error::SizeRequirementUnmet {
                    have: b.len(),
                    need: need.to_string(),
                })
            }
            Err(_) => {
                return Err(Error::SizeRequirementUnmet {
                    have: b.len(),
                    need: format!("more than 2^{}", cfg.ceiling_bits),
                })
            }
        }
    }

    let mut trace = ConversionTrace {
        mode: cfg.mode,
        t0_eff: cfg.sparsity.t0_eff,
        per_flip_bound: cfg.sparsity.bound,
        source_flips: flips.len(),
        normalized_flips: k_norm,
        flip_order: pending.iter().map(|f| (f.a.to_vec(), f.b.to_vec())).collect(),
        steps: Vec::new(),
        s_total: Vec::new(),
        b_final: Vec::new(),
    };
    let guaranteed = cfg.mode == Mode::Guaranteed;

    let mut cur = g.clone();
    let mut to_cur = Relabeling::identity(g.n());
    let mut cand = b.clone();
    let mut s_total = VertexSet::new(g.n());
    let mut round = 0;
    let mut first_shortfall: Option<usize> = None;

    let fail = |trace: ConversionTrace, level: Option<usize>, reason: String| ConversionOutcome::Failure { level, reason, trace };

    while !pending.is_empty() {
        let k = pending.len();
        let mut gp = cur.clone();
        let mut chain = cand.clone();
        let mut shortcut: Option<(usize, VertexSet)> = None;
        for level in 0..k {
            if level > 0 {
                apply_flip_in_place(&mut gp, &pending[level - 1]);
            }
            let cg = closeness_graph(&FlippedView::identity(&gp), &chain, r);
            let (q, target) = saturating_target((k - 1 - level) as u32, cfg);
            let res = close_or_far(&cg, m, q, &cfg.limits);
            match res.outcome {
                Dichotomy::Far(set) => {
                    trace.steps.push(TraceStep::FarShortcut {
                        round,
                        level,
                        size: set.len(),
                        exact: res.exact,
                    });
                    if guaranteed && level > 0 {
                        let (need, need_text) = saturating_target(level as u32, cfg);
                        if set.len() < need {
                            return Ok(fail(
                                trace,
                                Some(level),
                                format!("far set of {} vertices is below the required {need_text}", set.len()),
                            ));
                        }
                    }
                    shortcut = Some((level, set));
                    break;
                }
                Dichotomy::Close(set) => {
                    trace.steps.push(TraceStep::CloseExtraction {
                        round,
                        level,
                        pool: cg.len(),
                        size: set.len(),
                        target,
                        met: true,
                        exact: res.exact,
                    });
                    chain = set;
                }
                Dichotomy::Neither { close, .. } => {
                    trace.steps.push(TraceStep::CloseExtraction {
                        round,
                        level,
                        pool: cg.len(),
                        size: close.len(),
                        target,
                        met: false,
                        exact: res.exact,
                    });
                    if guaranteed {
                        return Ok(fail(
                            trace,
                            Some(level),
                            format!("neither {m} far nor enough close vertices at level {level}"),
                        ));
                    }
                    first_shortfall.get_or_insert(level);
                }
            }
        }

        if let Some((level, far)) = shortcut {
            pending.truncate(level);
            cand = far;
            trace.steps.push(TraceStep::Recursion {
                remaining_flips: pending.len(),
            });
            continue;
        }

        let last = pending.pop().expect("loop runs with at least one flip");
        let outcome = match single_flip_to_deletion(&gp, &last, &chain, r, &cfg.sparsity, m, guaranteed) {
            Ok(o) => o,
            Err(e) if guaranteed => return Ok(fail(trace, Some(k - 1), e.to_string())),
            Err(e) => return Err(e),
        };
        s_total.union_with(&to_cur.unmap_set(&outcome.s_set));
        trace.steps.push(TraceStep::LemmaStep {
            round,
            flip_index: k - 1,
            deleted_side: outcome.deleted_side,
            deleted: to_cur.unmap_set(&outcome.s_set).to_vec(),
            s_total: s_total.len(),
        });

        let (next, map) = cur.delete_vertices(&outcome.s_set);
        pending = pending
            .iter()
            .map(|f| f.restrict(&map))
            .filter(|f| !f.a.is_empty() && !f.b.is_empty())
            .collect();
        cand = map.map_set(&outcome.b_prime);
        to_cur = to_cur.then(&map);
        cur = next;
        round += 1;
        trace.steps.push(TraceStep::Recursion {
            remaining_flips: pending.len(),
        });
    }

    let b_final = to_cur.unmap_set(&cand);
    trace.s_total = s_total.to_vec();
    trace.b_final = b_final.to_vec();

    if b_final.len() < m {
        return Ok(fail(
            trace,
            first_shortfall,
            format!("final witness has {} vertices, fewer than m = {m}", b_final.len()),
        ));
    }
    let verdict = crate::witness::verify_widenable(
        g,
        &WidenableInstance {
            a_set: b.clone(),
            s_set: s_total.clone(),
            r,
            m,
            witness: Some(b_final.clone()),
        },
    )?;
    assert!(verdict.is_valid(), "conversion produced an invalid witness: {verdict:?}");
    if guaranteed {
        assert!(s_total.len() <= k_norm * cfg.sparsity.bound);
    }
    Ok(ConversionOutcome::Success {
        s_set: s_total,
        b_final,
        trace,
    })
}
