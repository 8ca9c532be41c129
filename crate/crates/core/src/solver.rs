//! Exhaustive oracles for Roman and weak Roman domination.
//!
//! Assignments are searched depth-first over vertices in identifier order,
//! trying values 0, 1, 2. Budgets grow one unit at a time and a branch is cut
//! as soon as its partial weight exceeds the budget (or can no longer reach
//! it), so the first budget with a valid leaf is the optimum. Validity is only
//! checked at leaves: weak Roman feasibility is not monotone in partial
//! assignments.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Tree, VertexSet};
use crate::roman::{Assignment, RomanError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("order {order} exceeds the exhaustive search cap {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("vertex set universe {found} does not match graph order {order}")]
    UniverseMismatch { order: usize, found: usize },
    #[error(transparent)]
    Roman(#[from] RomanError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Largest order accepted by the optimum-value queries.
    pub value_cap: usize,
    /// Largest order accepted by queries that list every minimum function.
    pub enumeration_cap: usize,
    /// Worker threads; 1 runs the search inline.
    pub threads: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            value_cap: 18,
            enumeration_cap: 14,
            threads: 1,
        }
    }
}

/// Everything the oracle knows about `(G, X)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveReport {
    pub gamma_r: u32,
    #[serde(rename = "gamma_R")]
    pub gamma_rr: u32,
    pub min_wrdf_count: usize,
    #[serde(rename = "strong")]
    pub all_min_wrdfs_are_rdf: bool,
    #[serde(rename = "Y")]
    pub y: VertexSet,
}

/// Which functions a search accepts.
#[derive(Clone, Copy)]
enum Kind {
    Roman { x: u64 },
    WeakRoman { x0: u64, x1: u64 },
}

/// Assignment as two masks: value ≥ 1 and value = 2.
type Packed = (u64, u64);

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            i
        })
    })
}

struct Masks {
    n: usize,
    adj: Vec<u64>,
}

impl Masks {
    fn neighborhood(&self, d: u64) -> u64 {
        bits(d).fold(d, |acc, v| acc | self.adj[v])
    }

    fn dominates(&self, d: u64, x: u64) -> bool {
        x & !self.neighborhood(d) == 0
    }

    fn rescuable(&self, x: u64, (pos, two): Packed, u: usize) -> bool {
        bits(self.adj[u] & pos).any(|v| {
            let mut after = pos | 1 << u;
            if two >> v & 1 == 0 {
                after &= !(1 << v);
            }
            self.dominates(after, x)
        })
    }

    fn accepts(&self, kind: Kind, (pos, two): Packed) -> bool {
        match kind {
            Kind::Roman { x } => {
                let covered = bits(two).fold(0, |acc, v| acc | self.adj[v]);
                x & !pos & !covered == 0
            }
            Kind::WeakRoman { x0, x1 } => {
                bits((x0 | x1) & !pos).all(|u| self.rescuable(x0, (pos, two), u))
            }
        }
    }

    fn unpack(&self, (pos, two): Packed) -> Assignment {
        Assignment::new(
            (0..self.n)
                .map(|i| (pos >> i & 1) as u8 + (two >> i & 1) as u8)
                .collect(),
        )
        .expect("packed values are in range")
    }
}

/// Depth-first walk over all assignments of total weight exactly `budget`
/// extending a fixed prefix; `visit` returns false to stop early.
fn walk(
    m: &Masks,
    i: usize,
    weight: u32,
    state: Packed,
    budget: u32,
    visit: &mut dyn FnMut(Packed) -> bool,
) -> bool {
    if weight > budget || weight + 2 * ((m.n - i) as u32) < budget {
        return true;
    }
    if i == m.n {
        return visit(state);
    }
    let (pos, two) = state;
    walk(m, i + 1, weight, state, budget, visit)
        && walk(m, i + 1, weight + 1, (pos | 1 << i, two), budget, visit)
        && walk(m, i + 1, weight + 2, (pos | 1 << i, two | 1 << i), budget, visit)
}

/// Every prefix of the first `depth` vertices, in search order.
fn prefixes(depth: usize) -> Vec<(u32, Packed)> {
    let mut out = vec![(0u32, (0u64, 0u64))];
    for i in 0..depth {
        out = out
            .into_iter()
            .flat_map(|(w, (pos, two))| {
                [
                    (w, (pos, two)),
                    (w + 1, (pos | 1 << i, two)),
                    (w + 2, (pos | 1 << i, two | 1 << i)),
                ]
            })
            .collect();
    }
    out
}

pub struct Solver {
    config: SolverConfig,
    pool: Option<rayon::ThreadPool>,
}

impl Default for Solver {
    fn default() -> Self {
        Solver::new(SolverConfig::default())
    }
}

impl Solver {
    pub fn new(config: SolverConfig) -> Self {
        let pool = (config.threads > 1).then(|| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(config.threads)
                .build()
                .expect("thread pool")
        });
        Solver { config, pool }
    }

    pub fn config(&self) -> &SolverConfig {
        &self.config
    }

    fn masks(&self, g: &Graph, cap: usize) -> Result<Masks, SolverError> {
        if g.order() > cap.min(64) {
            return Err(SolverError::TooLarge {
                order: g.order(),
                cap,
            });
        }
        Ok(Masks {
            n: g.order(),
            adj: g.adjacency_masks().expect("order checked"),
        })
    }

    fn mask_of(g: &Graph, s: &VertexSet) -> Result<u64, SolverError> {
        if s.universe() != g.order() {
            return Err(SolverError::UniverseMismatch {
                order: g.order(),
                found: s.universe(),
            });
        }
        Ok(s.to_mask().expect("order checked"))
    }

    /// All accepted assignments of weight exactly `budget`, in search order.
    fn collect(&self, m: &Masks, kind: Kind, budget: u32) -> Vec<Packed> {
        let run = |(w, state): (u32, Packed), depth: usize| {
            let mut found = Vec::new();
            walk(m, depth, w, state, budget, &mut |p| {
                if m.accepts(kind, p) {
                    found.push(p);
                }
                true
            });
            found
        };
        match &self.pool {
            None => run((0, (0, 0)), 0),
            Some(pool) => {
                let depth = m.n.min(4);
                pool.install(|| {
                    prefixes(depth)
                        .into_par_iter()
                        .map(|p| run(p, depth))
                        .collect::<Vec<_>>()
                        .concat()
                })
            }
        }
    }

    fn exists(&self, m: &Masks, kind: Kind, budget: u32) -> bool {
        let run = |(w, state): (u32, Packed), depth: usize| {
            let mut hit = false;
            walk(m, depth, w, state, budget, &mut |p| {
                hit = m.accepts(kind, p);
                !hit
            });
            hit
        };
        match &self.pool {
            None => run((0, (0, 0)), 0),
            Some(pool) => {
                let depth = m.n.min(4);
                pool.install(|| prefixes(depth).into_par_iter().any(|p| run(p, depth)))
            }
        }
    }

    fn optimum(&self, m: &Masks, kind: Kind, constrained: u64) -> u32 {
        // Value 1 on every constrained vertex is always feasible.
        let upper = constrained.count_ones();
        (0..=upper)
            .find(|&w| self.exists(m, kind, w))
            .unwrap_or(upper)
    }

    /// Minimum weight of a Roman dominating function for `(g, x)`.
    pub fn roman_domination_number(&self, g: &Graph, x: &VertexSet) -> Result<u32, SolverError> {
        let m = self.masks(g, self.config.value_cap)?;
        let x = Self::mask_of(g, x)?;
        Ok(self.optimum(&m, Kind::Roman { x }, x))
    }

    /// Minimum weight of a weak Roman dominating function for `(g, x0, x1)`.
    pub fn weak_roman_domination_number(
        &self,
        g: &Graph,
        x0: &VertexSet,
        x1: &VertexSet,
    ) -> Result<u32, SolverError> {
        let m = self.masks(g, self.config.value_cap)?;
        let (x0, x1) = (Self::mask_of(g, x0)?, Self::mask_of(g, x1)?);
        if x0 & x1 != 0 {
            return Err(RomanError::OverlappingSets.into());
        }
        Ok(self.optimum(&m, Kind::WeakRoman { x0, x1 }, x0 | x1))
    }

    fn minimum_packed(&self, g: &Graph, x: &VertexSet) -> Result<(Masks, u64, Vec<Packed>), SolverError> {
        let m = self.masks(g, self.config.enumeration_cap)?;
        let x = Self::mask_of(g, x)?;
        let kind = Kind::WeakRoman { x0: x, x1: 0 };
        let gamma = self.optimum(&m, kind, x);
        let all = self.collect(&m, kind, gamma);
        Ok((m, x, all))
    }

    /// Every minimum weak Roman dominating function for `(g, x)`, ordered by
    /// digit string.
    pub fn minimum_wrdfs(&self, g: &Graph, x: &VertexSet) -> Result<Vec<Assignment>, SolverError> {
        let (m, _, all) = self.minimum_packed(g, x)?;
        Ok(all.into_iter().map(|p| m.unpack(p)).collect())
    }

    /// Vertices that some minimum weak Roman dominating function either
    /// occupies or can reach with a legal move.
    pub fn rescue_set(&self, g: &Graph, x: &VertexSet) -> Result<VertexSet, SolverError> {
        let (m, x, all) = self.minimum_packed(g, x)?;
        Ok(VertexSet::from_mask(m.n, Self::rescue_mask(&m, x, &all)))
    }

    fn rescue_mask(m: &Masks, x: u64, minima: &[Packed]) -> u64 {
        minima.iter().fold(0, |acc, &(pos, two)| {
            let reached = bits(!pos & ((1u64 << m.n) - 1) & !acc)
                .filter(|&u| m.rescuable(x, (pos, two), u))
                .fold(0, |r, u| r | 1 << u);
            acc | pos | reached
        })
    }

    /// `Some(Y)` iff every minimum weak Roman dominating function of `(t, x)`
    /// is Roman dominating; `Y` is then the rescue set.
    pub fn membership_oracle(&self, t: &Tree, x: &VertexSet) -> Result<Option<VertexSet>, SolverError> {
        let (m, xm, all) = self.minimum_packed(t, x)?;
        let strong = all.iter().all(|&p| m.accepts(Kind::Roman { x: xm }, p));
        Ok(strong.then(|| VertexSet::from_mask(m.n, Self::rescue_mask(&m, xm, &all))))
    }

    /// Every minimum weak Roman dominating function of `t` is Roman dominating.
    pub fn strongly_equal(&self, t: &Tree) -> Result<bool, SolverError> {
        Ok(self
            .membership_oracle(t, &VertexSet::full(t.order()))?
            .is_some())
    }

    pub fn report(&self, g: &Graph, x: &VertexSet) -> Result<SolveReport, SolverError> {
        let (m, xm, all) = self.minimum_packed(g, x)?;
        let gamma_r = all.first().map_or(0, |&(pos, two)| pos.count_ones() + two.count_ones());
        let strong = all.iter().all(|&p| m.accepts(Kind::Roman { x: xm }, p));
        let gamma_rr = if strong {
            gamma_r
        } else {
            self.optimum(&m, Kind::Roman { x: xm }, xm)
        };
        Ok(SolveReport {
            gamma_r,
            gamma_rr,
            min_wrdf_count: all.len(),
            all_min_wrdfs_are_rdf: strong,
            y: VertexSet::from_mask(m.n, Self::rescue_mask(&m, xm, &all)),
        })
    }
}
