//! Flips, flip sets and their normalisation over atom partitions.
//!
//! A flip `(A, B)` complements the adjacency of every unordered pair `{u, v}` with `u != v`,
//! `u ∈ A`, `v ∈ B` (or the other way round). A pair matching in both orientations is still
//! toggled once. Normalisation rewrites a flip set as a symmetric toggle relation on the
//! classes of vertices with identical membership in every flip side, so that each vertex pair
//! is toggled at most once.

use std::collections::{BTreeSet, HashMap};

use crate::bitset::{VertexSet, WORD_BITS};
use crate::error::{Error, Result};
use crate::graph::{bfs_with, DistanceVector, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Flip {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl Flip {
    pub fn new(a: VertexSet, b: VertexSet) -> Result<Self> {
        if a.universe() != b.universe() {
            return Err(Error::InvalidParameter(format!(
                "flip sides over different ground sets ({} and {})",
                a.universe(),
                b.universe()
            )));
        }
        Ok(Flip { a, b })
    }

    pub fn from_vertices(n: usize, a: &[usize], b: &[usize]) -> Result<Self> {
        Ok(Flip {
            a: VertexSet::from_vertices(n, a.iter().copied())?,
            b: VertexSet::from_vertices(n, b.iter().copied())?,
        })
    }

    pub fn universe(&self) -> usize {
        self.a.universe()
    }

    fn check(&self, n: usize) -> Result<()> {
        if self.a.universe() == n && self.b.universe() == n {
            return Ok(());
        }
        match self.a.iter().chain(self.b.iter()).find(|&v| v >= n) {
            Some(v) => Err(Error::OutOfRange { vertex: v, n }),
            None => Err(Error::InvalidParameter(format!(
                "flip over {} vertices used with a graph on {n}",
                self.universe()
            ))),
        }
    }

    /// Whether the flip toggles the pair `{u, v}`.
    pub fn toggles(&self, u: usize, v: usize) -> bool {
        u != v
            && ((self.a.contains(u) && self.b.contains(v)) || (self.b.contains(u) && self.a.contains(v)))
    }

    /// Restricts both sides through a deletion relabeling (`F ∖ P`).
    pub fn restrict(&self, map: &crate::graph::Relabeling) -> Flip {
        Flip {
            a: map.map_set(&self.a),
            b: map.map_set(&self.b),
        }
    }
}

/// An ordered sequence of flips.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FlipSet(pub Vec<Flip>);

impl FlipSet {
    pub fn new(flips: Vec<Flip>) -> Self {
        FlipSet(flips)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Flip> {
        self.0.iter()
    }
}

impl FromIterator<Flip> for FlipSet {
    fn from_iter<T: IntoIterator<Item = Flip>>(iter: T) -> Self {
        FlipSet(iter.into_iter().collect())
    }
}

/// `G ⊕ F`.
pub fn apply_flip(g: &Graph, flip: &Flip) -> Result<Graph> {
    flip.check(g.n())?;
    let mut h = g.clone();
    apply_flip_in_place(&mut h, flip);
    Ok(h)
}

pub(crate) fn apply_flip_in_place(g: &mut Graph, flip: &Flip) {
    let wpr = g.words_per_row();
    let mut mask = vec![0u64; wpr];
    for u in 0..g.n() {
        let (in_a, in_b) = (flip.a.contains(u), flip.b.contains(u));
        if !in_a && !in_b {
            continue;
        }
        for (i, m) in mask.iter_mut().enumerate() {
            let mut w = 0;
            if in_a {
                w |= flip.b.words()[i];
            }
            if in_b {
                w |= flip.a.words()[i];
            }
            *m = w;
        }
        mask[u / WORD_BITS] &= !(1u64 << (u % WORD_BITS));
        for (r, m) in g.row_mut(u).iter_mut().zip(&mask) {
            *r ^= m;
        }
    }
}

/// `G ⊕ F₁ ⊕ … ⊕ F_k`, applied in list order.
pub fn apply_flips(g: &Graph, flips: &FlipSet) -> Result<Graph> {
    for f in flips.iter() {
        f.check(g.n())?;
    }
    let mut h = g.clone();
    for f in flips.iter() {
        apply_flip_in_place(&mut h, f);
    }
    Ok(h)
}

/// Partition of `0..n` into classes of equal membership across all flip sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomPartition {
    atoms: Vec<VertexSet>,
    atom_of: Vec<usize>,
}

impl AtomPartition {
    pub fn atoms(&self) -> &[VertexSet] {
        &self.atoms
    }

    pub fn atom(&self, index: usize) -> &VertexSet {
        &self.atoms[index]
    }

    pub fn atom_of(&self, v: usize) -> usize {
        self.atom_of[v]
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn universe(&self) -> usize {
        self.atom_of.len()
    }

    /// Disjoint, covering, and every flip side is a union of atoms.
    pub fn is_valid_for(&self, flips: &FlipSet) -> bool {
        let n = self.universe();
        let mut seen = VertexSet::new(n);
        for (i, q) in self.atoms.iter().enumerate() {
            if q.is_empty() || !q.is_disjoint(&seen) || q.iter().any(|v| self.atom_of[v] != i) {
                return false;
            }
            seen.union_with(q);
        }
        seen.len() == n
            && flips.iter().all(|f| {
                self.atoms.iter().all(|q| {
                    [&f.a, &f.b]
                        .into_iter()
                        .all(|p| q.is_subset(p) || q.is_disjoint(p))
                })
            })
    }
}

/// Atoms are the nonempty membership-signature classes over the `2k` flip sides; the
/// all-zero signature is the class of vertices outside every side. Atoms are ordered by
/// their smallest member.
pub fn atom_partition(flips: &FlipSet, n: usize) -> Result<AtomPartition> {
    for f in flips.iter() {
        f.check(n)?;
    }
    let sides = 2 * flips.len();
    let sig_words = sides.div_ceil(WORD_BITS).max(1);
    let mut index: HashMap<Vec<u64>, usize> = HashMap::new();
    let mut atoms: Vec<VertexSet> = Vec::new();
    let mut atom_of = Vec::with_capacity(n);
    let mut sig = vec![0u64; sig_words];
    for v in 0..n {
        sig.iter_mut().for_each(|w| *w = 0);
        for (i, f) in flips.iter().enumerate() {
            for (j, side) in [&f.a, &f.b].into_iter().enumerate() {
                if side.contains(v) {
                    let bit = 2 * i + j;
                    sig[bit / WORD_BITS] |= 1u64 << (bit % WORD_BITS);
                }
            }
        }
        let next = atoms.len();
        let id = *index.entry(sig.clone()).or_insert(next);
        if id == next {
            atoms.push(VertexSet::new(n));
        }
        atoms[id].insert(v);
        atom_of.push(id);
    }
    Ok(AtomPartition { atoms, atom_of })
}

/// Atom partition plus a symmetric toggle relation on atoms. `(a, a)` complements the
/// adjacency inside atom `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedFlipSet {
    partition: AtomPartition,
    toggles: Vec<(usize, usize)>,
    source_len: usize,
}

/// `C(2^{2k}+1, 2)`, or `None` when it does not fit in `u128`.
pub fn normalized_toggle_bound(k: usize) -> Option<u128> {
    let parts = 1u128.checked_shl(u32::try_from(2 * k).ok()?)?.checked_add(1)?;
    parts.checked_mul(parts - 1).map(|x| x / 2)
}

/// The bound above plus `2^{2k}+1` reflexive toggles.
pub fn normalized_toggle_bound_with_reflexive(k: usize) -> Option<u128> {
    let parts = 1u128.checked_shl(u32::try_from(2 * k).ok()?)?.checked_add(1)?;
    normalized_toggle_bound(k)?.checked_add(parts)
}

impl NormalizedFlipSet {
    pub fn partition(&self) -> &AtomPartition {
        &self.partition
    }

    /// Toggled atom pairs `(a, b)` with `a <= b`, sorted.
    pub fn toggles(&self) -> &[(usize, usize)] {
        &self.toggles
    }

    pub fn len(&self) -> usize {
        self.toggles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.toggles.is_empty()
    }

    /// Number of flips in the flip set this was normalised from.
    pub fn source_len(&self) -> usize {
        self.source_len
    }

    pub fn universe(&self) -> usize {
        self.partition.universe()
    }

    pub fn has_reflexive(&self) -> bool {
        self.toggles.iter().any(|&(a, b)| a == b)
    }

    pub fn toggles_pair(&self, u: usize, v: usize) -> bool {
        if u == v {
            return false;
        }
        let (a, b) = (self.partition.atom_of(u), self.partition.atom_of(v));
        self.toggles.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    /// Number of toggle entries whose atom pair covers `{u, v}`.
    pub fn coverage(&self, u: usize, v: usize) -> usize {
        let (au, av) = (self.partition.atom_of(u), self.partition.atom_of(v));
        self.toggles
            .iter()
            .filter(|&&(a, b)| (a == au && b == av) || (a == av && b == au))
            .count()
    }

    /// Whether the toggle count respects `C(2^{2k}+1, 2)`, with the reflexive allowance
    /// when some toggle is reflexive.
    pub fn within_bound(&self) -> bool {
        let bound = if self.has_reflexive() {
            normalized_toggle_bound_with_reflexive(self.source_len)
        } else {
            normalized_toggle_bound(self.source_len)
        };
        bound.is_none_or(|b| (self.toggles.len() as u128) <= b)
    }

    /// One flip `(atom_a, atom_b)` per toggle, in toggle order.
    pub fn to_flipset(&self) -> FlipSet {
        self.toggles
            .iter()
            .map(|&(a, b)| Flip {
                a: self.partition.atom(a).clone(),
                b: self.partition.atom(b).clone(),
            })
            .collect()
    }

    /// Per atom, the union of atoms it is toggled against.
    pub(crate) fn toggle_masks(&self) -> Vec<VertexSet> {
        let n = self.universe();
        let mut masks = vec![VertexSet::new(n); self.partition.len()];
        for &(a, b) in &self.toggles {
            let qb = self.partition.atom(b).clone();
            masks[a].union_with(&qb);
            if a != b {
                let qa = self.partition.atom(a).clone();
                masks[b].union_with(&qa);
            }
        }
        masks
    }

    pub fn materialize(&self, g: &Graph) -> Result<Graph> {
        Ok(FlippedView::new(g, self)?.materialize())
    }
}

/// A pair of atoms is toggled iff an odd number of flips `(A_i, B_i)` satisfy
/// `(Qa ⊆ A_i ∧ Qb ⊆ B_i) ∨ (Qa ⊆ B_i ∧ Qb ⊆ A_i)`.
pub fn normalize(flips: &FlipSet, n: usize) -> Result<NormalizedFlipSet> {
    let partition = atom_partition(flips, n)?;
    let mut parity: BTreeSet<(usize, usize)> = BTreeSet::new();
    for f in flips.iter() {
        let atoms_in = |side: &VertexSet| -> Vec<usize> {
            let mut ids: Vec<usize> = side.iter().map(|v| partition.atom_of(v)).collect();
            ids.sort_unstable();
            ids.dedup();
            ids
        };
        let (sa, sb) = (atoms_in(&f.a), atoms_in(&f.b));
        let mut pairs = BTreeSet::new();
        for &a in &sa {
            for &b in &sb {
                // A reflexive pair on a singleton atom toggles nothing.
                if a == b && partition.atom(a).len() < 2 {
                    continue;
                }
                pairs.insert((a.min(b), a.max(b)));
            }
        }
        for p in pairs {
            if !parity.remove(&p) {
                parity.insert(p);
            }
        }
    }
    Ok(NormalizedFlipSet {
        partition,
        toggles: parity.into_iter().collect(),
        source_len: flips.len(),
    })
}

/// Lazy view of `base ⊕ nf`; adjacency rows are computed on demand.
#[derive(Debug, Clone)]
pub struct FlippedView<'g> {
    base: &'g Graph,
    atom_of: Vec<usize>,
    masks: Vec<VertexSet>,
}

impl<'g> FlippedView<'g> {
    pub fn new(base: &'g Graph, nf: &NormalizedFlipSet) -> Result<Self> {
        if nf.universe() != base.n() {
            return Err(Error::InvalidParameter(format!(
                "normalized flip set over {} vertices used with a graph on {}",
                nf.universe(),
                base.n()
            )));
        }
        Ok(FlippedView {
            base,
            atom_of: nf.partition.atom_of.clone(),
            masks: nf.toggle_masks(),
        })
    }

    /// The view with no toggles.
    pub fn identity(base: &'g Graph) -> Self {
        FlippedView {
            base,
            atom_of: vec![0; base.n()],
            masks: vec![VertexSet::new(base.n())],
        }
    }

    pub fn base(&self) -> &Graph {
        self.base
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn adjacency(&self, u: usize, v: usize) -> Result<bool> {
        self.base.check_vertex(u)?;
        self.base.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopQuery(u));
        }
        Ok(self.base.has_edge(u, v) ^ self.masks[self.atom_of[u]].contains(v))
    }

    #[inline]
    pub(crate) fn fill_row(&self, u: usize, buf: &mut [u64]) {
        let mask = self.masks[self.atom_of[u]].words();
        for ((o, r), m) in buf.iter_mut().zip(self.base.row(u)).zip(mask) {
            *o = r ^ m;
        }
        buf[u / WORD_BITS] &= !(1u64 << (u % WORD_BITS));
    }

    pub fn neighborhood(&self, u: usize) -> Result<VertexSet> {
        self.base.check_vertex(u)?;
        let mut buf = vec![0u64; self.base.words_per_row()];
        self.fill_row(u, &mut buf);
        Ok(VertexSet::from_words(self.n(), buf))
    }

    /// Distances in the flipped graph, without materialising it.
    pub fn bfs(&self, source: usize) -> Result<DistanceVector> {
        self.base.check_vertex(source)?;
        Ok(self.bfs_bounded(source, None))
    }

    pub(crate) fn bfs_bounded(&self, source: usize, max_depth: Option<u32>) -> DistanceVector {
        bfs_with(self.n(), source, max_depth, |u, buf| self.fill_row(u, buf))
    }

    pub fn is_r_independent(&self, b: &VertexSet, r: u32) -> bool {
        if b.len() <= 1 {
            return true;
        }
        b.iter().all(|u| {
            let d = self.bfs_bounded(u, Some(r));
            b.iter().all(|v| v == u || !d.get(v).within(r))
        })
    }

    pub fn materialize(&self) -> Graph {
        let mut g = Graph::empty(self.n());
        let mut buf = vec![0u64; self.base.words_per_row()];
        for u in 0..self.n() {
            self.fill_row(u, &mut buf);
            g.row_mut(u).copy_from_slice(&buf);
        }
        g
    }
}

/// `G ⋆_F G`: two disjoint copies of `G` (vertices `0..n` and `n..2n`), then for each
/// `(A, B)` a flip between `A` in the first copy and `B` in the second.
pub fn star_product(g: &Graph, flips: &FlipSet) -> Result<Graph> {
    let n = g.n();
    for f in flips.iter() {
        f.check(n)?;
    }
    let mut h = Graph::empty(2 * n);
    for (u, v) in g.edges() {
        h.set_edge(u, v, true);
        h.set_edge(n + u, n + v, true);
    }
    for f in flips.iter() {
        let mut a = VertexSet::new(2 * n);
        let mut b = VertexSet::new(2 * n);
        f.a.iter().for_each(|v| a.insert(v));
        f.b.iter().for_each(|v| b.insert(n + v));
        apply_flip_in_place(&mut h, &Flip { a, b });
    }
    Ok(h)
}

/// `[({v₁}, N₁), …, ({v_k}, N_k)]`, where `N_i` is the neighbourhood of `v_i` after the first
/// `i − 1` flips. Applying the result isolates every listed vertex and leaves the rest of the
/// graph unchanged.
pub fn isolating_flips(g: &Graph, vertices: &[usize]) -> Result<FlipSet> {
    let n = g.n();
    let mut seen = VertexSet::new(n);
    for &v in vertices {
        g.check_vertex(v)?;
        if seen.contains(v) {
            return Err(Error::DuplicateVertex(v));
        }
        seen.insert(v);
    }
    let mut cur = g.clone();
    let mut out = Vec::with_capacity(vertices.len());
    for &v in vertices {
        let nb = VertexSet::from_words(n, cur.row(v).to_vec());
        let f = Flip {
            a: VertexSet::from_vertices(n, [v])?,
            b: nb,
        };
        apply_flip_in_place(&mut cur, &f);
        out.push(f);
    }
    Ok(FlipSet(out))
}

/// Vertex pairs toggled by `flips` taken together (odd multiplicity), by brute force.
pub fn toggled_pairs(flips: &FlipSet, n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if flips.iter().filter(|f| f.toggles(u, v)).count() % 2 == 1 {
                out.push((u, v));
            }
        }
    }
    out
}
