//! The five extension operations and the family of triples they generate
//! from `(K1, ∅, ∅)` and `(K1, V, V)`.
//!
//! | op | anchor | new vertices | `X⁺` variants | `Y⁺` |
//! |----|--------|--------------|---------------|------|
//! | 1  | `u ∉ Y` | leaf at `u` | `X` | `Y` |
//! | 2  | `u ∉ Y` | `v` on `u`, leaves `w1 w2` on `v` | `X ∪ {u,w1,w2}`, `X ∪ {u,v,w1,w2}` | `Y ∪ {u,v,w1,w2}` |
//! | 3  | `u ∉ X` | `v` on `u`, leaves `w1 w2 w3` on `v` | `X ∪ W`, `X ∪ W ∪ {u}`, `X ∪ W ∪ {v}`, `X ∪ W ∪ {u,v}` | `Y ∪ {u,v} ∪ W` |
//! | 4  | locus center `v` | leaf `v*` at `v` | `X`, `X ∪ {v*}` | `Y ∪ {v*}` |
//! | 5  | locus branch root `w_i` | leaf at `w_i` | `X` | `Y` |
//!
//! Operation 2 asks for `u ∉ Y` rather than only `u ∉ X`: the shrunken
//! triple of a type-(a) configuration never keeps `u` in its `Y`, and
//! growing at some `u ∈ Y \ X` yields triples whose minimum weak Roman
//! dominating functions are not all Roman dominating.
//!
//! Operations 4 and 5 need a configuration (see [`crate::recognizer`]) whose
//! local pattern holds; it is found by scanning every adjacent pair.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Tree, Vertex};
use crate::recognizer::{local_case, locus_at, Case, ReductionLocus, Triple};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OpError {
    #[error("unknown operation {0}")]
    UnknownOp(u8),
    #[error("operation {op} has no variant {variant}")]
    BadVariant { op: u8, variant: u8 },
    #[error("anchor {anchor} is not a vertex of a tree of order {order}")]
    AnchorOutOfRange { anchor: Vertex, order: usize },
    #[error("operation {op} needs u not in Y, but {anchor} is in Y")]
    AnchorInY { op: u8, anchor: Vertex },
    #[error("operation {op} needs u not in X, but {anchor} is in X")]
    AnchorInX { op: u8, anchor: Vertex },
    #[error("operation 4 needs a configuration centered at {0}")]
    NoCenterConfiguration(Vertex),
    #[error("operation 5 needs a configuration with branch root {0}")]
    NoBranchConfiguration(Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("requested order {requested} exceeds the enumeration cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("no member of order {order} reached after {attempts} attempts")]
    RetriesExhausted { order: usize, attempts: usize },
    #[error(transparent)]
    Op(#[from] OpError),
}

/// One application of an extension operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct OpStep {
    pub op: u8,
    pub anchor: Vertex,
    pub variant: u8,
}

impl OpStep {
    pub fn new(op: u8, anchor: Vertex, variant: u8) -> Self {
        OpStep { op, anchor, variant }
    }

    /// Number of `X⁺` variants of an operation.
    pub fn variants(op: u8) -> Option<u8> {
        match op {
            1 | 5 => Some(1),
            2 | 4 => Some(2),
            3 => Some(4),
            _ => None,
        }
    }

    /// Vertices the operation adds.
    pub fn growth(op: u8) -> usize {
        match op {
            2 => 3,
            3 => 4,
            _ => 1,
        }
    }
}

/// The two starting triples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Base {
    /// `(K1, ∅, ∅)`.
    Empty,
    /// `(K1, V, V)`.
    Full,
}

impl Base {
    pub fn triple(self) -> Triple {
        match self {
            Base::Empty => Triple::base_empty(),
            Base::Full => Triple::base_full(),
        }
    }
}

/// Configurations of `tr` whose local pattern holds (case a or b).
pub fn configurations(tr: &Triple) -> Vec<(ReductionLocus, Case)> {
    let t = tr.tree();
    let mut out = Vec::new();
    for v in t.vertices() {
        for &u in t.neighbors(v) {
            if let Ok(loc) = locus_at(tr, v, u) {
                if let Ok(case) = local_case(tr, &loc) {
                    out.push((loc, case));
                }
            }
        }
    }
    out
}

fn attach(tr: &Triple, parent: Vertex, leaves: usize) -> (Tree, Vec<Vertex>) {
    let mut tree = tr.tree().clone();
    let mut added = Vec::with_capacity(leaves);
    for _ in 0..leaves {
        let (grown, leaf) = tree.with_leaf(parent).expect("parent exists");
        tree = grown;
        added.push(leaf);
    }
    (tree, added)
}

/// Attaches `v` to `u` and `leaves` new leaves to `v`.
fn attach_spider(tr: &Triple, u: Vertex, leaves: usize) -> (Tree, Vertex, Vec<Vertex>) {
    let (tree, v) = tr.tree().with_leaf(u).expect("anchor exists");
    let mut tree = tree;
    let mut ws = Vec::with_capacity(leaves);
    for _ in 0..leaves {
        let (grown, w) = tree.with_leaf(v).expect("v exists");
        tree = grown;
        ws.push(w);
    }
    (tree, v, ws)
}

fn build(tree: Tree, tr: &Triple, add_x: &[Vertex], add_y: &[Vertex]) -> Triple {
    let n = tree.order();
    let mut x = tr.x().grown(n);
    let mut y = tr.y().grown(n);
    for &z in add_x {
        x.insert(z);
    }
    for &z in add_y.iter().chain(add_x) {
        y.insert(z);
    }
    Triple::new(tree, x, y).expect("operations keep X inside Y")
}

/// Applies one operation, checking its applicability condition.
pub fn apply_op(tr: &Triple, step: OpStep) -> Result<Triple, OpError> {
    let count = OpStep::variants(step.op).ok_or(OpError::UnknownOp(step.op))?;
    if step.variant >= count {
        return Err(OpError::BadVariant {
            op: step.op,
            variant: step.variant,
        });
    }
    let (u, order) = (step.anchor, tr.order());
    if u >= order {
        return Err(OpError::AnchorOutOfRange { anchor: u, order });
    }
    match step.op {
        1 => {
            if tr.y().contains(u) {
                return Err(OpError::AnchorInY { op: 1, anchor: u });
            }
            let (tree, _) = attach(tr, u, 1);
            Ok(build(tree, tr, &[], &[]))
        }
        2 | 3 => {
            if step.op == 2 && tr.y().contains(u) {
                return Err(OpError::AnchorInY { op: 2, anchor: u });
            }
            if tr.x().contains(u) {
                return Err(OpError::AnchorInX { op: step.op, anchor: u });
            }
            let leaves = if step.op == 2 { 2 } else { 3 };
            let (tree, v, ws) = attach_spider(tr, u, leaves);
            // Op 2 variants: {u} or {u, v}; Op 3: {}, {u}, {v}, {u, v}.
            let (with_u, with_v) = match (step.op, step.variant) {
                (2, k) => (true, k == 1),
                (_, k) => (k & 1 == 1, k & 2 == 2),
            };
            let mut add_x = ws.clone();
            if with_u {
                add_x.push(u);
            }
            if with_v {
                add_x.push(v);
            }
            Ok(build(tree, tr, &add_x, &[u, v]))
        }
        4 => {
            if !configurations(tr).iter().any(|(loc, _)| loc.v == u) {
                return Err(OpError::NoCenterConfiguration(u));
            }
            let (tree, added) = attach(tr, u, 1);
            let add_x: &[Vertex] = if step.variant == 1 { &added } else { &[] };
            Ok(build(tree, tr, add_x, &added))
        }
        5 => {
            if !configurations(tr).iter().any(|(loc, _)| loc.w.contains(&u)) {
                return Err(OpError::NoBranchConfiguration(u));
            }
            let (tree, _) = attach(tr, u, 1);
            Ok(build(tree, tr, &[], &[]))
        }
        _ => unreachable!("op validated above"),
    }
}

/// Every step that [`apply_op`] accepts on `tr`, in ascending order.
pub fn applicable_steps(tr: &Triple) -> Vec<OpStep> {
    let mut steps = BTreeSet::new();
    for u in tr.tree().vertices() {
        if !tr.y().contains(u) {
            steps.insert(OpStep::new(1, u, 0));
        }
        if !tr.y().contains(u) {
            for k in 0..2 {
                steps.insert(OpStep::new(2, u, k));
            }
        }
        if !tr.x().contains(u) {
            for k in 0..4 {
                steps.insert(OpStep::new(3, u, k));
            }
        }
    }
    for (loc, _) in configurations(tr) {
        steps.insert(OpStep::new(4, loc.v, 0));
        steps.insert(OpStep::new(4, loc.v, 1));
        for &w in &loc.w {
            steps.insert(OpStep::new(5, w, 0));
        }
    }
    steps.into_iter().collect()
}

/// Replays a step list from a base triple.
pub fn replay(base: Base, steps: &[OpStep]) -> Result<Triple, OpError> {
    steps.iter().try_fold(base.triple(), |tr, &s| apply_op(&tr, s))
}

/// Generated triples up to some order, one representative per canonical
/// form.
#[derive(Debug, Clone, Default)]
pub struct Family {
    members: BTreeMap<String, Triple>,
}

impl Family {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, tr: &Triple) -> bool {
        self.members.contains_key(&tr.canonical())
    }

    pub fn contains_canonical(&self, key: &str) -> bool {
        self.members.contains_key(key)
    }

    /// Members in canonical-string order.
    pub fn iter(&self) -> impl Iterator<Item = (&String, &Triple)> {
        self.members.iter()
    }
}

pub const DEFAULT_ENUMERATION_CAP: usize = 10;

/// Closure of both base triples under every applicable step, restricted to
/// trees of order at most `max_order`.
pub fn enumerate_family(max_order: usize, cap: usize) -> Result<Family, GeneratorError> {
    if max_order > cap {
        return Err(GeneratorError::CapExceeded {
            requested: max_order,
            cap,
        });
    }
    let mut family = Family::default();
    if max_order == 0 {
        return Ok(family);
    }
    let mut queue = VecDeque::new();
    for base in [Triple::base_empty(), Triple::base_full()] {
        family.members.insert(base.canonical(), base.clone());
        queue.push_back(base);
    }
    while let Some(tr) = queue.pop_front() {
        for step in applicable_steps(&tr) {
            if tr.order() + OpStep::growth(step.op) > max_order {
                continue;
            }
            let next = apply_op(&tr, step).expect("step is applicable");
            let key = next.canonical();
            if let Entry::Vacant(slot) = family.members.entry(key) {
                slot.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(family)
}

/// A generated triple together with the steps that build it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sample {
    pub base: Base,
    pub steps: Vec<OpStep>,
    pub triple: Triple,
}

pub const SAMPLE_ATTEMPTS: usize = 64;

/// Random growth from a random base: each round picks uniformly among the
/// applicable steps that keep the order at most `order`. Deterministic for a
/// fixed seed.
pub fn random_member(order: usize, seed: u64) -> Result<Sample, GeneratorError> {
    if order == 0 {
        return Err(GeneratorError::ZeroOrder);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..SAMPLE_ATTEMPTS {
        let base = *[Base::Empty, Base::Full].choose(&mut rng).expect("nonempty");
        let mut triple = base.triple();
        let mut steps = Vec::new();
        while triple.order() < order {
            let options: Vec<OpStep> = applicable_steps(&triple)
                .into_iter()
                .filter(|s| triple.order() + OpStep::growth(s.op) <= order)
                .collect();
            let Some(&step) = options.choose(&mut rng) else {
                break;
            };
            triple = apply_op(&triple, step)?;
            steps.push(step);
        }
        if triple.order() == order {
            return Ok(Sample {
                base,
                steps,
                triple,
            });
        }
    }
    Err(GeneratorError::RetriesExhausted {
        order,
        attempts: SAMPLE_ATTEMPTS,
    })
}
