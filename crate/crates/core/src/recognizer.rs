//! Membership of `(T, X, Y)` in the class of strongly equal triples, decided
//! by repeatedly cutting off the far end of a longest path between two
//! vertices of `X`.
//!
//! Each step looks at `v`, the second vertex of such a path, together with
//! its neighbor `u` further along the path and its remaining neighbors
//! `w_1..w_k`. Every component `W_i` of `T - v` other than the one holding
//! `u` meets `X` in at most its root `w_i`; `ell` counts the components that
//! do. The triple is a member iff the local pattern at `v` holds and the
//! smaller triple on the component `T'` holding `u` is a member:
//!
//! * `ell = 1`: never a member.
//! * `ell = 2` (case a): `u ∈ X`, `u, v ∈ Y` and `W_i ∩ Y = {w_i}` for all
//!   `i`; the child keeps `Y ∩ V(T')` without `u`.
//! * `ell ≥ 3` (case b): `u, v ∈ Y` and `W_i ∩ Y = {w_i}`; the child's `Y`
//!   is `Y ∩ V(T')` with or without `u`, and at most one of the two can be a
//!   member.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{canonical_form, longest_x_path, split_at, Tree, Vertex, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TripleError {
    #[error("vertex set universe {found} does not match tree order {order}")]
    UniverseMismatch { order: usize, found: usize },
    #[error("vertex {0} lies in X but not in Y")]
    XNotInY(Vertex),
}

/// A tree with a constraint set `X` and a candidate rescue set `Y`, `X ⊆ Y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triple {
    tree: Tree,
    x: VertexSet,
    y: VertexSet,
}

impl Triple {
    pub fn new(tree: Tree, x: VertexSet, y: VertexSet) -> Result<Self, TripleError> {
        for s in [&x, &y] {
            if s.universe() != tree.order() {
                return Err(TripleError::UniverseMismatch {
                    order: tree.order(),
                    found: s.universe(),
                });
            }
        }
        if let Some(v) = x.iter().find(|&v| !y.contains(v)) {
            return Err(TripleError::XNotInY(v));
        }
        Ok(Triple { tree, x, y })
    }

    /// `(T, V(T), V(T))`, the triple behind the strong equality question.
    pub fn whole(tree: Tree) -> Self {
        let n = tree.order();
        Triple {
            tree,
            x: VertexSet::full(n),
            y: VertexSet::full(n),
        }
    }

    /// `(K1, ∅, ∅)`.
    pub fn base_empty() -> Self {
        Triple {
            tree: Tree::singleton(),
            x: VertexSet::empty(1),
            y: VertexSet::empty(1),
        }
    }

    /// `(K1, V, V)`.
    pub fn base_full() -> Self {
        Triple::whole(Tree::singleton())
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn x(&self) -> &VertexSet {
        &self.x
    }

    pub fn y(&self) -> &VertexSet {
        &self.y
    }

    pub fn order(&self) -> usize {
        self.tree.order()
    }

    /// 0: outside `Y`; 1: in `Y` only; 2: in `X` (hence in `Y`).
    pub fn colors(&self) -> Vec<u8> {
        self.tree
            .vertices()
            .map(|v| match (self.x.contains(v), self.y.contains(v)) {
                (false, false) => 0,
                (false, true) => 1,
                _ => 2,
            })
            .collect()
    }

    /// Canonical string, equal for triples related by a tree isomorphism
    /// that maps `X` onto `X` and `Y` onto `Y`.
    pub fn canonical(&self) -> String {
        canonical_form(&self.tree, &self.colors())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Case {
    #[serde(rename = "a")]
    A,
    #[serde(rename = "b")]
    B,
}

/// The local configuration around `v` (see the module docs).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionLocus {
    pub u: Vertex,
    pub v: Vertex,
    /// Branch roots, those meeting `X` first, each group ascending.
    pub w: Vec<Vertex>,
    /// Branch vertex sets, parallel to `w`.
    pub branches: Vec<Vec<Vertex>>,
    pub ell: usize,
    /// Vertices of `T'`, ascending.
    pub prime: Vec<Vertex>,
}

/// Why a triple is not a member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rejection {
    /// `X = ∅` forces `Y = ∅`.
    NonemptyYWithEmptyX,
    /// `|X| = 1` only for `(K1, V, V)`.
    SingletonXNotBase,
    /// `|X| = 2` never occurs.
    PairX,
    /// Only one branch at `v` meets `X`.
    SingleXBranch,
    UNotInX,
    UNotInY,
    VNotInY,
    /// Some `W_i ∩ Y` differs from `{w_i}`.
    BranchYMismatch,
    /// A branch meets `X` outside its root; impossible at a longest-path
    /// locus.
    BranchXPattern,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BaseCase {
    /// `X = Y = ∅` on any tree.
    EmptyX,
    /// `(K1, V, V)`.
    SingleVertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Terminal {
    Base(BaseCase),
    Reject(Rejection),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub u: Vertex,
    pub v: Vertex,
    pub w: Vec<Vertex>,
    pub ell: usize,
    pub case: Case,
    #[serde(rename = "yPrimeHasU")]
    pub y_prime_has_u: bool,
    #[serde(rename = "childCanonical")]
    pub child_canonical: String,
}

/// Chain of reduction steps; vertex ids in step `i` refer to the triple
/// produced by step `i - 1` (the input triple for the first step).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub steps: Vec<TraceStep>,
    pub terminal: Terminal,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognizerError {
    #[error("need |X| >= 3 for a reduction locus, got {0}")]
    TooFewX(usize),
    #[error("locus does not describe the triple: {0}")]
    LocusMismatch(String),
    #[error("branch rooted at {root} meets X outside its root")]
    BranchXPattern { root: Vertex },
}

/// One candidate smaller triple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Child {
    pub y_prime_has_u: bool,
    pub triple: Triple,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReduceOutcome {
    Rejected(Rejection),
    Reduced { case: Case, children: Vec<Child> },
}

/// The configuration at `v` with distinguished neighbor `u`, provided every
/// branch meets `X` in at most its root.
pub fn locus_at(tr: &Triple, v: Vertex, u: Vertex) -> Result<ReductionLocus, RecognizerError> {
    let split = split_at(&tr.tree, v, u)
        .map_err(|e| RecognizerError::LocusMismatch(e.to_string()))?;
    let mut meeting = Vec::new();
    let mut missing = Vec::new();
    for b in split.branches {
        let hits: Vec<Vertex> = b.vertices.iter().copied().filter(|&z| tr.x.contains(z)).collect();
        match hits.as_slice() {
            [] => missing.push(b),
            [only] if *only == b.root => meeting.push(b),
            _ => return Err(RecognizerError::BranchXPattern { root: b.root }),
        }
    }
    let ell = meeting.len();
    let (w, branches) = meeting
        .into_iter()
        .chain(missing)
        .map(|b| (b.root, b.vertices))
        .unzip();
    Ok(ReductionLocus {
        u,
        v,
        w,
        branches,
        ell,
        prime: split.prime,
    })
}

/// Locus at the end of the lexicographically first longest path whose
/// endpoints lie in `X`.
pub fn find_locus(tr: &Triple) -> Result<ReductionLocus, RecognizerError> {
    if tr.x.len() < 3 {
        return Err(RecognizerError::TooFewX(tr.x.len()));
    }
    let path = longest_x_path(&tr.tree, &tr.x).expect("|X| >= 2");
    debug_assert!(path.len() >= 3);
    let loc = locus_at(tr, path[1], path[2])?;
    if !loc.w[..loc.ell].contains(&path[0]) {
        return Err(RecognizerError::LocusMismatch(
            "path start is not an X-branch root".into(),
        ));
    }
    Ok(loc)
}

/// Which case of the local pattern holds, or the first clause that fails.
pub fn local_case(tr: &Triple, loc: &ReductionLocus) -> Result<Case, Rejection> {
    if loc.ell <= 1 {
        return Err(Rejection::SingleXBranch);
    }
    let case = if loc.ell == 2 { Case::A } else { Case::B };
    if case == Case::A && !tr.x.contains(loc.u) {
        return Err(Rejection::UNotInX);
    }
    if !tr.y.contains(loc.u) {
        return Err(Rejection::UNotInY);
    }
    if !tr.y.contains(loc.v) {
        return Err(Rejection::VNotInY);
    }
    let branch_ok = loc.w.iter().zip(&loc.branches).all(|(&root, vertices)| {
        vertices.iter().all(|&z| tr.y.contains(z) == (z == root))
    });
    if !branch_ok {
        return Err(Rejection::BranchYMismatch);
    }
    Ok(case)
}

fn check_locus(tr: &Triple, loc: &ReductionLocus) -> Result<(), RecognizerError> {
    let fresh = locus_at(tr, loc.v, loc.u)?;
    if fresh != *loc {
        return Err(RecognizerError::LocusMismatch(format!(
            "recomputed configuration at v={} u={} differs",
            loc.v, loc.u
        )));
    }
    Ok(())
}

fn child(tr: &Triple, loc: &ReductionLocus, y_prime_has_u: bool) -> Triple {
    let (tree, old_ids) = tr
        .tree
        .induced_subtree(&loc.prime)
        .expect("a component of a tree is a tree");
    let mut x = tr.x.restricted(&old_ids);
    let mut y = tr.y.restricted(&old_ids);
    let u = old_ids.binary_search(&loc.u).expect("u lies in T'");
    x.remove(u);
    y.remove(u);
    if y_prime_has_u {
        y.insert(u);
    }
    Triple { tree, x, y }
}

/// Candidate smaller triples for a configuration: none if the local pattern
/// fails, one in case (a), two in case (b).
pub fn reduce(tr: &Triple, loc: &ReductionLocus) -> Result<ReduceOutcome, RecognizerError> {
    check_locus(tr, loc)?;
    Ok(match local_case(tr, loc) {
        Err(r) => ReduceOutcome::Rejected(r),
        Ok(case) => {
            let flags: &[bool] = match case {
                Case::A => &[false],
                Case::B => &[false, true],
            };
            ReduceOutcome::Reduced {
                case,
                children: flags
                    .iter()
                    .map(|&has_u| Child {
                        y_prime_has_u: has_u,
                        triple: child(tr, loc, has_u),
                    })
                    .collect(),
            }
        }
    })
}

/// Verdict for `|X| <= 2`, where no reduction applies.
pub fn base_verdict(tr: &Triple) -> Option<Result<BaseCase, Rejection>> {
    match tr.x.len() {
        0 if tr.y.is_empty() => Some(Ok(BaseCase::EmptyX)),
        0 => Some(Err(Rejection::NonemptyYWithEmptyX)),
        1 if tr.order() == 1 && tr.y.is_full() => Some(Ok(BaseCase::SingleVertex)),
        1 => Some(Err(Rejection::SingletonXNotBase)),
        2 => Some(Err(Rejection::PairX)),
        _ => None,
    }
}

/// Memoized membership decision; keys are canonical forms.
#[derive(Default)]
pub struct Recognizer {
    memo: HashMap<String, bool>,
}

impl Recognizer {
    pub fn new() -> Self {
        Recognizer::default()
    }

    pub fn accepts(&mut self, tr: &Triple) -> bool {
        if let Some(verdict) = base_verdict(tr) {
            return verdict.is_ok();
        }
        let key = tr.canonical();
        if let Some(&known) = self.memo.get(&key) {
            return known;
        }
        let verdict = match find_locus(tr).and_then(|loc| reduce(tr, &loc)) {
            Err(_) | Ok(ReduceOutcome::Rejected(_)) => false,
            Ok(ReduceOutcome::Reduced { children, .. }) => {
                let accepted = children.iter().filter(|c| self.accepts(&c.triple)).count();
                assert!(
                    accepted <= 1,
                    "both rescue-set candidates accepted for {key}"
                );
                accepted == 1
            }
        };
        self.memo.insert(key, verdict);
        verdict
    }

    /// Decision plus a trace: the accepted derivation, or the path through
    /// preferred candidates down to the first failing check.
    pub fn decide(&mut self, tr: &Triple) -> (bool, ReductionTrace) {
        let verdict = self.accepts(tr);
        let mut steps = Vec::new();
        let mut cur = tr.clone();
        let terminal = loop {
            if let Some(b) = base_verdict(&cur) {
                break match b {
                    Ok(base) => Terminal::Base(base),
                    Err(r) => Terminal::Reject(r),
                };
            }
            let loc = match find_locus(&cur) {
                Ok(loc) => loc,
                Err(_) => break Terminal::Reject(Rejection::BranchXPattern),
            };
            match reduce(&cur, &loc).expect("locus computed from this triple") {
                ReduceOutcome::Rejected(r) => break Terminal::Reject(r),
                ReduceOutcome::Reduced { case, mut children } => {
                    let pick = children
                        .iter()
                        .position(|c| self.accepts(&c.triple))
                        .unwrap_or(0);
                    let next = children.swap_remove(pick);
                    steps.push(TraceStep {
                        u: loc.u,
                        v: loc.v,
                        w: loc.w,
                        ell: loc.ell,
                        case,
                        y_prime_has_u: next.y_prime_has_u,
                        child_canonical: next.triple.canonical(),
                    });
                    cur = next.triple;
                }
            }
        };
        debug_assert_eq!(verdict, matches!(terminal, Terminal::Base(_)));
        (verdict, ReductionTrace { steps, terminal })
    }
}

/// One-shot decision with a fresh memo table.
pub fn decide_membership(tr: &Triple) -> (bool, ReductionTrace) {
    Recognizer::new().decide(tr)
}

/// Re-checks every step of a trace against `tr` without any search. True iff
/// the trace is a valid derivation ending in a base case.
pub fn verify_trace(tr: &Triple, trace: &ReductionTrace) -> bool {
    let mut cur = tr.clone();
    for step in &trace.steps {
        if step.u >= cur.order() || step.v >= cur.order() {
            return false;
        }
        let Ok(loc) = locus_at(&cur, step.v, step.u) else {
            return false;
        };
        if loc.w != step.w || loc.ell != step.ell {
            return false;
        }
        match local_case(&cur, &loc) {
            Ok(case) if case == step.case => {}
            _ => return false,
        }
        if step.case == Case::A && step.y_prime_has_u {
            return false;
        }
        let next = child(&cur, &loc, step.y_prime_has_u);
        if next.canonical() != step.child_canonical {
            return false;
        }
        cur = next;
    }
    match trace.terminal {
        Terminal::Base(b) => base_verdict(&cur) == Some(Ok(b)),
        Terminal::Reject(_) => false,
    }
}

/// Checks a recorded decision. A positive one must carry a valid
/// derivation; a negative one cannot be certified by a single chain, so the
/// decision is recomputed and its trace compared.
pub fn check_decision(tr: &Triple, accepted: bool, trace: &ReductionTrace) -> bool {
    if accepted {
        verify_trace(tr, trace)
    } else {
        decide_membership(tr) == (false, trace.clone())
    }
}
