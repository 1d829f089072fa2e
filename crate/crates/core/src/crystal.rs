//! Abstract crystal interface and generic constructions.
//!
//! A crystal here is a set with Kashiwara operators `e_i`, `f_i`, string
//! statistics `eps_i`, `phi_i`, and a weight map, for `i ∈ {0, 1}`.  On top
//! of the bare interface this module provides:
//!
//! * tensor products of strings of elements, with two independent
//!   implementations of the action position (left-associated two-factor
//!   rule, and the signature/bracketing rule) that are cross-checked in the
//!   test suite;
//! * affinization `b ↦ b(m)`;
//! * semi-infinite strings with a repeated left tail (the engine behind both
//!   path spaces and Young walls);
//! * component graphs with DOT/JSON export, rooted graph comparison, and an
//!   exhaustive axiom checker.

use crate::weight::{Weight, ALPHA_0, ALPHA_1};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;
use std::hash::Hash;
use thiserror::Error;

/// The two Dynkin indices of `A2(2)`.
pub const INDICES: [usize; 2] = [0, 1];

/// A (normal) crystal for `A2(2)`.
///
/// `eps` and `phi` are always finite for the types implementing this trait;
/// the one object with `−∞` statistics, the auxiliary crystal `T_λ`, is kept
/// out of the trait on purpose (see [`TLambda`]).
pub trait Crystal {
    type Elem: Clone + Eq + Hash;

    fn wt(&self, b: &Self::Elem) -> Weight;
    fn e(&self, i: usize, b: &Self::Elem) -> Option<Self::Elem>;
    fn f(&self, i: usize, b: &Self::Elem) -> Option<Self::Elem>;
    fn eps(&self, i: usize, b: &Self::Elem) -> i64;
    fn phi(&self, i: usize, b: &Self::Elem) -> i64;

    /// Stable textual key for graph nodes and diagnostics.  Distinct
    /// elements must encode differently.
    fn encode(&self, b: &Self::Elem) -> String;

    fn alpha(&self, i: usize) -> Weight {
        match i {
            0 => ALPHA_0,
            1 => ALPHA_1,
            _ => panic!("index {i} out of range"),
        }
    }
}

/// The one-element crystal `T_λ = {t_λ}` with `wt(t_λ) = λ`, all operators
/// null, and `eps_i = phi_i = −∞`.
///
/// It exists only to state the coherent-family property of the limit
/// crystal, so it is a standalone type rather than a [`Crystal`]: the
/// `None` statistics stand for `−∞` and never mix with the finite statistics
/// of the trait.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TLambda {
    pub lambda: Weight,
}

impl TLambda {
    pub fn new(lambda: Weight) -> Self {
        TLambda { lambda }
    }

    pub fn wt(&self) -> Weight {
        self.lambda
    }

    /// `eps_i(t_λ) = −∞`, encoded as `None`.
    pub fn eps(&self, _i: usize) -> Option<i64> {
        None
    }

    /// `phi_i(t_λ) = −∞`, encoded as `None`.
    pub fn phi(&self, _i: usize) -> Option<i64> {
        None
    }
}

// ---------------------------------------------------------------------------
// Tensor strings
// ---------------------------------------------------------------------------

/// Which tensor factor an operator acts on, plus aggregate statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StringStats {
    pub eps: i64,
    pub phi: i64,
}

/// Aggregate `eps`/`phi` of `b_0 ⊗ … ⊗ b_{n−1}` (leftmost factor first) by
/// left-associated folding of the two-factor rule
/// `eps(b⊗b') = max(eps(b), eps(b') − ⟨h_i, wt b⟩)`,
/// `phi(b⊗b') = max(phi(b'), phi(b) + ⟨h_i, wt b'⟩)`.
pub fn tensor_stats<C: Crystal>(c: &C, i: usize, s: &[C::Elem]) -> StringStats {
    assert!(!s.is_empty(), "tensor_stats on an empty string");
    let mut eps = c.eps(i, &s[0]);
    let mut phi = c.phi(i, &s[0]);
    let mut wt_left = c.wt(&s[0]).pair(i); // ⟨h_i, wt⟩ of the folded prefix
    for b in &s[1..] {
        let (eb, pb) = (c.eps(i, b), c.phi(i, b));
        let wb = c.wt(b).pair(i);
        eps = eps.max(eb - wt_left);
        phi = pb.max(phi + wb);
        wt_left += wb;
    }
    StringStats { eps, phi }
}

/// Factor index `f_i` acts on in a string, by recursive use of the
/// two-factor rule (`f` acts on the left part iff `phi(left) > eps(right)`);
/// `None` if `f_i` annihilates the string.
pub fn tensor_f_position<C: Crystal>(c: &C, i: usize, s: &[C::Elem]) -> Option<usize> {
    if tensor_stats(c, i, s).phi == 0 {
        return None;
    }
    let mut lo = 0;
    let mut hi = s.len();
    // Repeatedly split off the rightmost factor of the current range.
    while hi - lo > 1 {
        let left = tensor_stats(c, i, &s[lo..hi - 1]);
        let right_eps = c.eps(i, &s[hi - 1]);
        if left.phi > right_eps {
            hi -= 1;
        } else {
            lo = hi - 1;
        }
    }
    Some(lo)
}

/// Factor index `e_i` acts on; `None` if `e_i` annihilates the string.
pub fn tensor_e_position<C: Crystal>(c: &C, i: usize, s: &[C::Elem]) -> Option<usize> {
    if tensor_stats(c, i, s).eps == 0 {
        return None;
    }
    let mut lo = 0;
    let mut hi = s.len();
    // `e` acts on the left part iff `phi(left) >= eps(right)`.
    while hi - lo > 1 {
        let left = tensor_stats(c, i, &s[lo..hi - 1]);
        let right_eps = c.eps(i, &s[hi - 1]);
        if left.phi >= right_eps {
            hi -= 1;
        } else {
            lo = hi - 1;
        }
    }
    Some(lo)
}

pub fn tensor_f<C: Crystal>(c: &C, i: usize, s: &[C::Elem]) -> Option<Vec<C::Elem>> {
    let pos = tensor_f_position(c, i, s)?;
    let mut out = s.to_vec();
    out[pos] = c.f(i, &s[pos])?;
    Some(out)
}

pub fn tensor_e<C: Crystal>(c: &C, i: usize, s: &[C::Elem]) -> Option<Vec<C::Elem>> {
    let pos = tensor_e_position(c, i, s)?;
    let mut out = s.to_vec();
    out[pos] = c.e(i, &s[pos])?;
    Some(out)
}

/// Signature of a string after bracket cancellation.
///
/// Each factor contributes `"−"^eps "+"^phi` (left to right); every `+`
/// immediately left of a `−` cancels, recursively.  What survives is
/// `"−"^eps(string) "+"^phi(string)`; `minus_positions`/`plus_positions`
/// record the factor index of each surviving sign in order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Signature {
    pub minus_positions: Vec<usize>,
    pub plus_positions: Vec<usize>,
}

impl Signature {
    /// Cancel from per-factor counts `(eps, phi)`, leftmost factor first.
    pub fn from_counts(counts: &[(i64, i64)]) -> Signature {
        let mut minus = Vec::new();
        let mut plus: Vec<usize> = Vec::new();
        for (idx, &(eps, phi)) in counts.iter().enumerate() {
            for _ in 0..eps {
                if plus.pop().is_none() {
                    minus.push(idx);
                }
            }
            for _ in 0..phi {
                plus.push(idx);
            }
        }
        Signature {
            minus_positions: minus,
            plus_positions: plus,
        }
    }

    /// Factor holding the leftmost surviving `+` (where `f_i` acts).
    pub fn f_position(&self) -> Option<usize> {
        self.plus_positions.first().copied()
    }

    /// Factor holding the rightmost surviving `−` (where `e_i` acts).
    pub fn e_position(&self) -> Option<usize> {
        self.minus_positions.last().copied()
    }
}

/// Per-factor `(eps, phi)` counts of a string for colour `i`.
pub fn factor_counts<C: Crystal>(c: &C, i: usize, s: &[C::Elem]) -> Vec<(i64, i64)> {
    s.iter().map(|b| (c.eps(i, b), c.phi(i, b))).collect()
}

/// Signature-rule implementation of the tensor action, used to cross-check
/// the folded two-factor rule.
pub fn signature_stats<C: Crystal>(c: &C, i: usize, s: &[C::Elem]) -> StringStats {
    let sig = Signature::from_counts(&factor_counts(c, i, s));
    StringStats {
        eps: sig.minus_positions.len() as i64,
        phi: sig.plus_positions.len() as i64,
    }
}

pub fn signature_f_position<C: Crystal>(c: &C, i: usize, s: &[C::Elem]) -> Option<usize> {
    Signature::from_counts(&factor_counts(c, i, s)).f_position()
}

pub fn signature_e_position<C: Crystal>(c: &C, i: usize, s: &[C::Elem]) -> Option<usize> {
    Signature::from_counts(&factor_counts(c, i, s)).e_position()
}

/// The `n`-fold tensor power of a crystal, with strings as elements
/// (leftmost factor first).  Mostly used to feed [`axiom_check`].
pub struct TensorPower<'a, C: Crystal> {
    pub base: &'a C,
}

impl<'a, C: Crystal> Crystal for TensorPower<'a, C> {
    type Elem = Vec<C::Elem>;

    fn wt(&self, b: &Self::Elem) -> Weight {
        b.iter()
            .map(|x| self.base.wt(x))
            .fold(Weight::ZERO, |acc, w| acc + w)
    }

    fn e(&self, i: usize, b: &Self::Elem) -> Option<Self::Elem> {
        tensor_e(self.base, i, b)
    }

    fn f(&self, i: usize, b: &Self::Elem) -> Option<Self::Elem> {
        tensor_f(self.base, i, b)
    }

    fn eps(&self, i: usize, b: &Self::Elem) -> i64 {
        tensor_stats(self.base, i, b).eps
    }

    fn phi(&self, i: usize, b: &Self::Elem) -> i64 {
        tensor_stats(self.base, i, b).phi
    }

    fn encode(&self, b: &Self::Elem) -> String {
        let parts: Vec<String> = b.iter().map(|x| self.base.encode(x)).collect();
        parts.join("(x)")
    }

    fn alpha(&self, i: usize) -> Weight {
        self.base.alpha(i)
    }
}

// ---------------------------------------------------------------------------
// Affinization
// ---------------------------------------------------------------------------

/// An element `b(m)` of the affinization of a classical crystal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graded<T> {
    pub b: T,
    /// The affine grade; it contributes `m · (δ/2)` to the weight, matching
    /// the normalisation in which `α_0` itself carries one `δ/2`.
    pub m: i64,
}

impl<T> Graded<T> {
    pub fn new(b: T, m: i64) -> Self {
        Graded { b, m }
    }
}

/// Affinization of a classical crystal: `e_0` raises the grade, `f_0` lowers
/// it, the index-1 operators preserve it, and the string statistics are
/// those of the underlying element.
pub struct Affinized<C> {
    pub base: C,
}

impl<C: Crystal> Crystal for Affinized<C> {
    type Elem = Graded<C::Elem>;

    fn wt(&self, b: &Self::Elem) -> Weight {
        // One application of `f_0` lowers the weight by `α_0` (which carries
        // a single `δ/2`) and the grade by one, so the grade couples to δ/2.
        self.base.wt(&b.b) + Weight::new(0, 0, b.m)
    }

    fn e(&self, i: usize, b: &Self::Elem) -> Option<Self::Elem> {
        let inner = self.base.e(i, &b.b)?;
        let m = if i == 0 { b.m + 1 } else { b.m };
        Some(Graded::new(inner, m))
    }

    fn f(&self, i: usize, b: &Self::Elem) -> Option<Self::Elem> {
        let inner = self.base.f(i, &b.b)?;
        let m = if i == 0 { b.m - 1 } else { b.m };
        Some(Graded::new(inner, m))
    }

    fn eps(&self, i: usize, b: &Self::Elem) -> i64 {
        self.base.eps(i, &b.b)
    }

    fn phi(&self, i: usize, b: &Self::Elem) -> i64 {
        self.base.phi(i, &b.b)
    }

    fn encode(&self, b: &Self::Elem) -> String {
        format!("{}({})", self.base.encode(&b.b), b.m)
    }
}

// ---------------------------------------------------------------------------
// Semi-infinite strings with a constant left tail
// ---------------------------------------------------------------------------

/// A string `… ⊗ t ⊗ t ⊗ p_{N−1} ⊗ … ⊗ p_0` that agrees with a fixed tail
/// element `t` far to the left.  `prefix[0]` is the *rightmost* (shallowest)
/// entry; the implicit tail extends to the left of `prefix[N−1]`.
///
/// The tail element must satisfy `eps_i(t) = phi_i(t)` for both colours
/// (true for the ground-state elements used by paths and walls): then all
/// the tail contributions to the signature cancel against a virtual highest
/// weight factor of weight `eps(t)` at infinity, and the Kashiwara operators
/// act at a finite position.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TailString<E> {
    pub tail: E,
    pub prefix: Vec<E>,
}

/// Where an operator acts on a [`TailString`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TailPosition {
    /// Inside the stored prefix, at this index (0 = rightmost).
    Prefix(usize),
    /// On the tail copy adjacent to the prefix: the prefix grows by one.
    Tail,
}

impl<E: Clone + Eq> TailString<E> {
    pub fn new(tail: E, prefix: Vec<E>) -> Self {
        let mut s = TailString { tail, prefix };
        s.trim();
        s
    }

    /// Drop stored entries that merely repeat the tail (deep end first).
    pub fn trim(&mut self) {
        while self.prefix.last() == Some(&self.tail) {
            self.prefix.pop();
        }
    }
}

/// Per-factor `(eps_i, phi_i)` statistics of the layout
/// `[virtual head] [tail × margin] [prefix deep → shallow]`, together with
/// the role of every slot.
///
/// The virtual head stands for the whole semi-infinite all-tail part beyond
/// the materialised copies: its statistics are `(0, eps_i(t))`, the values of
/// the ground state the string stabilises to (`eps = 0`, `phi = ⟨h_i, λ⟩`).
fn tail_counts<C: Crystal>(
    c: &C,
    i: usize,
    s: &TailString<C::Elem>,
    margin: usize,
) -> (Vec<(i64, i64)>, Vec<TailPosition>) {
    let te = c.eps(i, &s.tail);
    let tp = c.phi(i, &s.tail);
    debug_assert_eq!(te, tp, "tail element must have eps = phi");
    let mut counts: Vec<(i64, i64)> = Vec::with_capacity(margin + s.prefix.len() + 1);
    let mut roles: Vec<TailPosition> = Vec::with_capacity(margin + s.prefix.len() + 1);
    counts.push((0, te));
    roles.push(TailPosition::Tail); // placeholder; the head is never selected
    for _ in 0..margin {
        counts.push((te, tp));
        roles.push(TailPosition::Tail);
    }
    for p in s.prefix.iter().rev() {
        counts.push((c.eps(i, p), c.phi(i, p)));
    }
    for idx in (0..s.prefix.len()).rev() {
        roles.push(TailPosition::Prefix(idx));
    }
    (counts, roles)
}

/// `eps`/`phi` of a product computed from per-factor statistics alone, using
/// `⟨h_i, wt(b)⟩ = phi_i(b) − eps_i(b)`.  Unlike the bracketing rule this is
/// valid even when individual statistics are negative, as happens in the
/// level-`∞` crystal.
pub fn fold_stats(counts: &[(i64, i64)]) -> StringStats {
    assert!(!counts.is_empty(), "fold_stats on an empty string");
    let (mut eps, mut phi) = counts[0];
    let mut wt_left = phi - eps;
    for &(eb, pb) in &counts[1..] {
        let wb = pb - eb;
        eps = eps.max(eb - wt_left);
        phi = pb.max(phi + wb);
        wt_left += wb;
    }
    StringStats { eps, phi }
}

/// Suffix statistics: entry `k` holds `eps` of the product of factors
/// `k..n`; entry `n` is absent (handled as `−∞` by the callers).
fn suffix_eps(counts: &[(i64, i64)]) -> Vec<i64> {
    let mut out = vec![0; counts.len()];
    let mut eps = i64::MIN;
    for (k, &(eb, pb)) in counts.iter().enumerate().rev() {
        let wb = pb - eb;
        eps = if eps == i64::MIN {
            eb
        } else {
            eb.max(eps - wb)
        };
        out[k] = eps;
    }
    out
}

/// Slot `f_i` acts on: the first factor whose `phi` exceeds the `eps` of
/// everything to its right (two-factor rule, split head-first).  Falls back
/// to the last factor, which is where a total lowering operator lands when
/// no factor claims the action.
fn fold_f_slot(counts: &[(i64, i64)]) -> usize {
    let suffix = suffix_eps(counts);
    for k in 0..counts.len() - 1 {
        if counts[k].1 > suffix[k + 1] {
            return k;
        }
    }
    counts.len() - 1
}

/// Slot `e_i` acts on: as [`fold_f_slot`] with `≥` in place of `>`.
fn fold_e_slot(counts: &[(i64, i64)]) -> usize {
    let suffix = suffix_eps(counts);
    for k in 0..counts.len() - 1 {
        if counts[k].1 >= suffix[k + 1] {
            return k;
        }
    }
    counts.len() - 1
}

/// `eps_i` of the semi-infinite string (always ≥ 0: the head contributes a
/// floor of zero, exactly as the ground state it stands for).
pub fn tail_eps<C: Crystal>(c: &C, i: usize, s: &TailString<C::Elem>) -> i64 {
    fold_stats(&tail_counts(c, i, s, 2).0).eps
}

/// `phi_i` of the semi-infinite string.  May be negative in the level-`∞`
/// model, where it equals `eps_i + ⟨h_i, wt⟩` by the folding identities.
pub fn tail_phi<C: Crystal>(c: &C, i: usize, s: &TailString<C::Elem>) -> i64 {
    fold_stats(&tail_counts(c, i, s, 2).0).phi
}

/// Apply `f_i`, growing the prefix by one tail copy when the action lands on
/// the tail.  `margin` extra tail copies are materialised while locating the
/// action; the result is margin-independent (a tested invariant).
///
/// With `total = false` (highest-weight model) the operator is null when the
/// string has no raising capacity.  With `total = true` (level-`∞` model,
/// where `f_i` never annihilates) the action falls through to the rightmost
/// factor when no factor claims it.
pub fn tail_f<C: Crystal>(
    c: &C,
    i: usize,
    s: &TailString<C::Elem>,
    margin: usize,
    total: bool,
) -> Option<TailString<C::Elem>> {
    assert!(margin >= 1, "need at least one materialised tail copy");
    let (counts, roles) = tail_counts(c, i, s, margin);
    if !total && fold_stats(&counts).phi <= 0 {
        return None;
    }
    let slot = fold_f_slot(&counts);
    let mut out = s.clone();
    match roles[slot] {
        TailPosition::Tail => {
            assert!(
                slot == margin,
                "f action must land on the tail copy adjacent to the prefix"
            );
            let grown = c.f(i, &s.tail).expect("tail element must admit f here");
            out.prefix.push(grown);
        }
        TailPosition::Prefix(idx) => {
            out.prefix[idx] = c
                .f(i, &s.prefix[idx])
                .expect("selected factor must admit f");
        }
    }
    out.trim();
    Some(out)
}

/// Apply `e_i`; null when the string has no lowering capacity (in both the
/// highest-weight and the level-`∞` model, `e_i` is null iff `eps_i = 0`).
/// A positive `eps` forces the action into the prefix: the head absorbs any
/// action that would otherwise drift into the tail.
pub fn tail_e<C: Crystal>(
    c: &C,
    i: usize,
    s: &TailString<C::Elem>,
    margin: usize,
) -> Option<TailString<C::Elem>> {
    let (counts, roles) = tail_counts(c, i, s, margin);
    if fold_stats(&counts).eps <= 0 {
        return None;
    }
    let slot = fold_e_slot(&counts);
    let mut out = s.clone();
    match roles[slot] {
        TailPosition::Tail => unreachable!("a positive eps pins the action inside the prefix"),
        TailPosition::Prefix(idx) => {
            out.prefix[idx] = c
                .e(i, &s.prefix[idx])
                .expect("selected factor must admit e");
        }
    }
    out.trim();
    Some(out)
}

/// Weight of the semi-infinite string relative to its all-tail ground state:
/// `base + Σ_k (wt(p_k) − wt(t))`.
pub fn tail_wt<C: Crystal>(c: &C, base: Weight, s: &TailString<C::Elem>) -> Weight {
    let tw = c.wt(&s.tail);
    s.prefix.iter().fold(base, |acc, p| acc + c.wt(p) - tw)
}

// ---------------------------------------------------------------------------
// Component graphs
// ---------------------------------------------------------------------------

/// Default node budget for component exploration.
pub const DEFAULT_NODE_CAP: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Follow `f_i` only.
    Down,
    /// Follow `e_i` only.
    Up,
    /// Follow both.
    Both,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("component exploration exceeded the node cap of {cap}")]
    NodeCapExceeded { cap: usize },
}

/// A finite piece of a crystal graph.  Edges are stored `f`-oriented:
/// `(src, i, dst)` means `f_i(src) = dst`.
#[derive(Clone, Debug, Serialize)]
pub struct CrystalGraph {
    pub nodes: Vec<GraphNode>,
    pub edges: BTreeSet<(usize, u8, usize)>,
    pub root: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphNode {
    pub key: String,
    pub weight: Weight,
    /// Distance from the root in the exploration direction.
    pub depth: usize,
}

/// Breadth-first exploration of the component of `seed`.
///
/// The traversal is deterministic and order-independent: each BFS layer is
/// sorted by encoding before ids are assigned, and the edge set is
/// recomputed from the final node set.
pub fn component<C: Crystal>(
    c: &C,
    seed: &C::Elem,
    depth: Option<usize>,
    dir: Direction,
    cap: usize,
) -> Result<CrystalGraph, GraphError> {
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut nodes: Vec<GraphNode> = Vec::new();
    let mut elems: Vec<C::Elem> = Vec::new();
    let mut queue: VecDeque<usize> = VecDeque::new();

    let root_key = c.encode(seed);
    index.insert(root_key.clone(), 0);
    nodes.push(GraphNode {
        key: root_key,
        weight: c.wt(seed),
        depth: 0,
    });
    elems.push(seed.clone());
    queue.push_back(0);

    while let Some(id) = queue.pop_front() {
        let d = nodes[id].depth;
        if depth.is_some_and(|limit| d >= limit) {
            continue;
        }
        let here = elems[id].clone();
        let mut found: Vec<C::Elem> = Vec::new();
        for i in INDICES {
            if matches!(dir, Direction::Down | Direction::Both) {
                if let Some(next) = c.f(i, &here) {
                    found.push(next);
                }
            }
            if matches!(dir, Direction::Up | Direction::Both) {
                if let Some(next) = c.e(i, &here) {
                    found.push(next);
                }
            }
        }
        let mut keyed: Vec<(String, C::Elem)> =
            found.into_iter().map(|b| (c.encode(&b), b)).collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        keyed.dedup_by(|a, b| a.0 == b.0);
        for (key, elem) in keyed {
            if index.contains_key(&key) {
                continue;
            }
            if nodes.len() >= cap {
                return Err(GraphError::NodeCapExceeded { cap });
            }
            let id_new = nodes.len();
            index.insert(key.clone(), id_new);
            nodes.push(GraphNode {
                key,
                weight: c.wt(&elem),
                depth: d + 1,
            });
            elems.push(elem);
            queue.push_back(id_new);
        }
    }

    // Edge set over the discovered nodes, independent of discovery order.
    let mut edges = BTreeSet::new();
    for (id, elem) in elems.iter().enumerate() {
        for i in INDICES {
            if let Some(next) = c.f(i, elem) {
                if let Some(&dst) = index.get(&c.encode(&next)) {
                    edges.insert((id, i as u8, dst));
                }
            }
        }
    }

    Ok(CrystalGraph {
        nodes,
        edges,
        root: 0,
    })
}

impl CrystalGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Number of nodes per weight.
    pub fn weight_multiplicities(&self) -> BTreeMap<Weight, usize> {
        let mut table = BTreeMap::new();
        for n in &self.nodes {
            *table.entry(n.weight).or_insert(0) += 1;
        }
        table
    }

    /// Graphviz DOT rendering (deterministic).
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n  rankdir=TB;\n");
        for (id, n) in self.nodes.iter().enumerate() {
            let shape = if id == self.root {
                "doublecircle"
            } else {
                "ellipse"
            };
            let _ = writeln!(
                out,
                "  n{id} [label=\"{}\\n{}\", shape={shape}];",
                n.key.replace('"', "'"),
                n.weight
            );
        }
        for &(src, i, dst) in &self.edges {
            let _ = writeln!(
                out,
                "  n{src} -> n{dst} [label=\"{i}\", color={}];",
                edge_color(i)
            );
        }
        out.push_str("}\n");
        out
    }

    /// JSON rendering: `{"nodes": …, "edges": [[src, i, dst], …], "root": id}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "nodes": self.nodes.iter().enumerate().map(|(id, n)| serde_json::json!({
                "id": id,
                "key": n.key,
                "weight": n.weight,
                "depth": n.depth,
            })).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|&(s, i, d)| serde_json::json!([s, i, d])).collect::<Vec<_>>(),
            "root": self.root,
        })
    }
}

fn edge_color(i: u8) -> &'static str {
    match i {
        0 => "red",
        _ => "blue",
    }
}

/// Rooted comparison of two component graphs as coloured graphs with
/// weighted nodes (node keys are ignored: the two sides may use different
/// encodings).  Returns `Ok(())` or a description of the first mismatch.
pub fn graph_equal(a: &CrystalGraph, b: &CrystalGraph) -> Result<(), String> {
    let out_a = out_map(a);
    let out_b = out_map(b);
    let in_a = in_map(a);
    let in_b = in_map(b);

    let mut pair_of: HashMap<usize, usize> = HashMap::new();
    let mut rev: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    pair_of.insert(a.root, b.root);
    rev.insert(b.root, a.root);
    queue.push_back((a.root, b.root));

    while let Some((u, v)) = queue.pop_front() {
        if a.nodes[u].weight != b.nodes[v].weight {
            return Err(format!(
                "weight mismatch at '{}' vs '{}': {} vs {}",
                a.nodes[u].key, b.nodes[v].key, a.nodes[u].weight, b.nodes[v].weight
            ));
        }
        for i in INDICES.map(|i| i as u8) {
            let mut follow =
                |ua: Option<&usize>, vb: Option<&usize>, kind: &str| -> Result<(), String> {
                    match (ua, vb) {
                        (None, None) => Ok(()),
                        (Some(&nu), Some(&nv)) => match (pair_of.get(&nu), rev.get(&nv)) {
                            (None, None) => {
                                pair_of.insert(nu, nv);
                                rev.insert(nv, nu);
                                queue.push_back((nu, nv));
                                Ok(())
                            }
                            (Some(&mapped), _) if mapped == nv => Ok(()),
                            _ => Err(format!(
                                "inconsistent matching along {kind} {i} at '{}' vs '{}'",
                                a.nodes[u].key, b.nodes[v].key
                            )),
                        },
                        _ => Err(format!(
                            "edge presence mismatch: {kind} {i} at '{}' vs '{}'",
                            a.nodes[u].key, b.nodes[v].key
                        )),
                    }
                };
            follow(out_a.get(&(u, i)), out_b.get(&(v, i)), "f")?;
            follow(in_a.get(&(u, i)), in_b.get(&(v, i)), "e")?;
        }
    }

    if pair_of.len() != a.node_count() || pair_of.len() != b.node_count() {
        return Err(format!(
            "node count mismatch: {} vs {} (matched {})",
            a.node_count(),
            b.node_count(),
            pair_of.len()
        ));
    }
    Ok(())
}

fn out_map(g: &CrystalGraph) -> HashMap<(usize, u8), usize> {
    g.edges.iter().map(|&(s, i, d)| ((s, i), d)).collect()
}

fn in_map(g: &CrystalGraph) -> HashMap<(usize, u8), usize> {
    g.edges.iter().map(|&(s, i, d)| ((d, i), s)).collect()
}

// ---------------------------------------------------------------------------
// Axiom checking
// ---------------------------------------------------------------------------

/// Result of checking the crystal axioms over a finite element set.
#[derive(Clone, Debug, Default)]
pub struct AxiomReport {
    pub checked: usize,
    pub violations: Vec<String>,
    pub notes: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check the crystal axioms on every element of `elems`:
///
/// 1. `phi_i(b) = eps_i(b) + ⟨h_i, wt b⟩`;
/// 2. `wt(e_i b) = wt b + α_i` and 3. `wt(f_i b) = wt b − α_i`;
/// 4. `eps_i(e_i b) = eps_i(b) − 1`, `phi_i(e_i b) = phi_i(b) + 1`;
/// 5. `eps_i(f_i b) = eps_i(b) + 1`, `phi_i(f_i b) = phi_i(b) − 1`;
/// 6. `f_i b = b'` iff `e_i b' = b`;
/// 7. the `−∞` clause is vacuous here (statistics are finite by
///    construction), which is recorded as a note.
pub fn axiom_check<C: Crystal>(c: &C, elems: &[C::Elem]) -> AxiomReport {
    let mut report = AxiomReport::default();
    report
        .notes
        .push("condition (7): eps/phi are finite for every element of this crystal family; the -inf clause is vacuous".into());
    for b in elems {
        report.checked += 1;
        let key = c.encode(b);
        for i in INDICES {
            let (eps, phi, wt) = (c.eps(i, b), c.phi(i, b), c.wt(b));
            if phi != eps + wt.pair(i) {
                report.violations.push(format!(
                    "(1) phi_{i}({key}) = {phi} != eps + <h,wt> = {}",
                    eps + wt.pair(i)
                ));
            }
            if let Some(up) = c.e(i, b) {
                if c.wt(&up) != wt + c.alpha(i) {
                    report
                        .violations
                        .push(format!("(2) wt(e_{i} {key}) != wt + alpha_{i}"));
                }
                if c.eps(i, &up) != eps - 1 || c.phi(i, &up) != phi + 1 {
                    report
                        .violations
                        .push(format!("(4) string statistics of e_{i} {key}"));
                }
                if c.f(i, &up).as_ref() != Some(b) {
                    report
                        .violations
                        .push(format!("(6) f_{i} e_{i} {key} != {key}"));
                }
            } else if eps > 0 {
                report
                    .violations
                    .push(format!("(4) e_{i}({key}) is null although eps = {eps} > 0"));
            }
            if let Some(down) = c.f(i, b) {
                if c.wt(&down) != wt - c.alpha(i) {
                    report
                        .violations
                        .push(format!("(3) wt(f_{i} {key}) != wt - alpha_{i}"));
                }
                if c.eps(i, &down) != eps + 1 || c.phi(i, &down) != phi - 1 {
                    report
                        .violations
                        .push(format!("(5) string statistics of f_{i} {key}"));
                }
                if c.e(i, &down).as_ref() != Some(b) {
                    report
                        .violations
                        .push(format!("(6) e_{i} f_{i} {key} != {key}"));
                }
            } else if phi > 0 {
                report
                    .violations
                    .push(format!("(5) f_{i}({key}) is null although phi = {phi} > 0"));
            }
        }
    }
    report
}
