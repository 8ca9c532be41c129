//! Reduction from CNF satisfiability to the question `γ_r(G) = γ_R(G)`.
//!
//! Every variable gets a copy of `K4 - e` whose two degree-3 vertices stand
//! for the literals `x_i` and `¬x_i`; every clause gets one vertex joined to
//! the literal vertices it contains. Gadget `i` occupies vertices
//! `4i..4i+3` (`x_i = 4i`, `¬x_i = 4i+1`, then the two non-adjacent fillers)
//! and clause vertices follow all gadgets.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::roman::{is_wrdf_for, Assignment};
use crate::solver::{Solver, SolverError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnfError {
    #[error("line {line}: {message}")]
    Dimacs { line: usize, message: String },
    #[error("clause {clause} is empty")]
    EmptyClause { clause: usize },
    #[error("clause {clause} has {len} literals; at most 3 are allowed")]
    WideClause { clause: usize, len: usize },
    #[error("clause {clause} mentions variable {var} twice")]
    RepeatedVariable { clause: usize, var: usize },
    #[error("clause {clause} uses variable {var} but only {n_vars} exist")]
    UnknownVariable {
        clause: usize,
        var: usize,
        n_vars: usize,
    },
    #[error("{n_vars} variables exceed the brute-force cap {cap}")]
    TooManyVariables { n_vars: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error(transparent)]
    Cnf(#[from] CnfError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("unit clauses on variable {var} with both polarities; the weight claims do not hold for such formulas")]
    ComplementaryUnits { var: usize },
    #[error("consistency check failed: {0:?}")]
    CheckFailed(GadgetReport),
}

/// A literal over 0-based variable `var`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Literal { var, positive: true }
    }

    pub fn neg(var: usize) -> Self {
        Literal {
            var,
            positive: false,
        }
    }

    fn holds(self, assignment: u32) -> bool {
        (assignment >> self.var & 1 == 1) == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.positive { "" } else { "-" };
        write!(f, "{sign}{}", self.var + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    n_vars: usize,
    clauses: Vec<Vec<Literal>>,
}

impl CnfFormula {
    pub fn new(n_vars: usize, clauses: Vec<Vec<Literal>>) -> Result<Self, CnfError> {
        for (clause, lits) in clauses.iter().enumerate() {
            if lits.is_empty() {
                return Err(CnfError::EmptyClause { clause });
            }
            if lits.len() > 3 {
                return Err(CnfError::WideClause {
                    clause,
                    len: lits.len(),
                });
            }
            for (i, lit) in lits.iter().enumerate() {
                if lit.var >= n_vars {
                    return Err(CnfError::UnknownVariable {
                        clause,
                        var: lit.var + 1,
                        n_vars,
                    });
                }
                if lits[..i].iter().any(|l| l.var == lit.var) {
                    return Err(CnfError::RepeatedVariable {
                        clause,
                        var: lit.var + 1,
                    });
                }
            }
        }
        Ok(CnfFormula { n_vars, clauses })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.n_vars, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                out.push_str(&format!("{l} "));
            }
            out.push_str("0\n");
        }
        out
    }
}

/// Parses DIMACS CNF: comment lines `c ...`, a `p cnf <vars> <clauses>`
/// header, then zero-terminated clauses (which may span lines).
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, CnfError> {
    let err = |line: usize, message: &str| CnfError::Dimacs {
        line,
        message: message.to_string(),
    };
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') || trimmed.starts_with('%') {
            continue;
        }
        if trimmed.starts_with('p') {
            if header.is_some() {
                return Err(err(line, "second problem line"));
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            match fields.as_slice() {
                ["p", "cnf", v, c] => {
                    let v = v.parse().map_err(|_| err(line, "bad variable count"))?;
                    let c = c.parse().map_err(|_| err(line, "bad clause count"))?;
                    header = Some((v, c));
                }
                _ => return Err(err(line, "expected `p cnf <vars> <clauses>`")),
            }
            continue;
        }
        let Some((n_vars, _)) = header else {
            return Err(err(line, "clause before problem line"));
        };
        for token in trimmed.split_whitespace() {
            let value: i64 = token
                .parse()
                .map_err(|_| err(line, &format!("bad literal `{token}`")))?;
            if value == 0 {
                clauses.push(std::mem::take(&mut current));
                continue;
            }
            let var = value.unsigned_abs() as usize;
            if var > n_vars {
                return Err(err(line, &format!("variable {var} exceeds header count {n_vars}")));
            }
            current.push(Literal {
                var: var - 1,
                positive: value > 0,
            });
        }
    }
    let (n_vars, n_clauses) = header.ok_or_else(|| err(0, "missing problem line"))?;
    if !current.is_empty() {
        clauses.push(current);
    }
    if clauses.len() != n_clauses {
        return Err(err(
            0,
            &format!("header announces {n_clauses} clauses, found {}", clauses.len()),
        ));
    }
    CnfFormula::new(n_vars, clauses)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "role", rename_all = "lowercase")]
pub enum VertexRole {
    Positive { var: usize },
    Negative { var: usize },
    Filler { var: usize, index: usize },
    Clause { clause: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetGraph {
    pub graph: Graph,
    pub roles: Vec<VertexRole>,
    pub n_vars: usize,
    pub n_clauses: usize,
}

impl GadgetGraph {
    pub fn positive(var: usize) -> Vertex {
        4 * var
    }

    pub fn negative(var: usize) -> Vertex {
        4 * var + 1
    }

    pub fn clause_vertex(&self, clause: usize) -> Vertex {
        4 * self.n_vars + clause
    }

    /// The four vertices of variable `var`'s gadget.
    pub fn gadget_vertices(var: usize) -> VertexSet {
        let mut s = VertexSet::empty(4 * var + 4);
        (4 * var..4 * var + 4).for_each(|v| s.insert(v));
        s
    }

    /// Value 1 on every literal vertex, 0 elsewhere.
    pub fn literal_assignment(&self) -> Assignment {
        Assignment::new(
            (0..self.graph.order())
                .map(|v| (v < 4 * self.n_vars && v % 4 < 2) as u8)
                .collect(),
        )
        .expect("values are 0 or 1")
    }
}

fn literal_vertex(l: Literal) -> Vertex {
    if l.positive {
        GadgetGraph::positive(l.var)
    } else {
        GadgetGraph::negative(l.var)
    }
}

pub fn build_gadget(f: &CnfFormula) -> GadgetGraph {
    let n = 4 * f.n_vars + f.clauses.len();
    let mut graph = Graph::empty(n);
    let mut roles = Vec::with_capacity(n);
    for var in 0..f.n_vars {
        let (x, nx, a, b) = (4 * var, 4 * var + 1, 4 * var + 2, 4 * var + 3);
        for (p, q) in [(x, nx), (x, a), (x, b), (nx, a), (nx, b)] {
            graph.add_edge(p, q).expect("gadget edges are fresh");
        }
        roles.extend([
            VertexRole::Positive { var },
            VertexRole::Negative { var },
            VertexRole::Filler { var, index: 0 },
            VertexRole::Filler { var, index: 1 },
        ]);
    }
    for (j, clause) in f.clauses.iter().enumerate() {
        let c = 4 * f.n_vars + j;
        for &l in clause {
            graph
                .add_edge(literal_vertex(l), c)
                .expect("clause variables are distinct");
        }
        roles.push(VertexRole::Clause { clause: j });
    }
    let labels = roles
        .iter()
        .map(|r| match *r {
            VertexRole::Positive { var } => format!("x{}", var + 1),
            VertexRole::Negative { var } => format!("~x{}", var + 1),
            VertexRole::Filler { var, index } => format!("g{}{}", var + 1, ["a", "b"][index]),
            VertexRole::Clause { clause } => format!("c{}", clause + 1),
        })
        .collect();
    GadgetGraph {
        graph: graph.with_labels(labels).expect("one label per vertex"),
        roles,
        n_vars: f.n_vars,
        n_clauses: f.clauses.len(),
    }
}

pub const SAT_VARIABLE_CAP: usize = 20;

pub fn sat_brute_force(f: &CnfFormula) -> Result<bool, CnfError> {
    if f.n_vars > SAT_VARIABLE_CAP {
        return Err(CnfError::TooManyVariables {
            n_vars: f.n_vars,
            cap: SAT_VARIABLE_CAP,
        });
    }
    Ok((0..1u32 << f.n_vars)
        .any(|a| f.clauses.iter().all(|c| c.iter().any(|l| l.holds(a)))))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GadgetReport {
    pub n: usize,
    pub m: usize,
    pub gamma_r: u32,
    #[serde(rename = "gamma_R")]
    pub gamma_rr: u32,
    pub satisfiable: bool,
    pub iff_holds: bool,
}

/// A variable that occurs both as the unit clause `(x)` and as `(¬x)`.
/// Gadgets of such formulas have `γ_r > 2n`, so [`verify_gadget`] refuses
/// them.
pub fn complementary_units(f: &CnfFormula) -> Option<usize> {
    let units: Vec<Literal> = f
        .clauses
        .iter()
        .filter(|c| c.len() == 1)
        .map(|c| c[0])
        .collect();
    units
        .iter()
        .find(|a| units.iter().any(|b| b.var == a.var && b.positive != a.positive))
        .map(|l| l.var)
}

/// Builds the gadget, computes both domination numbers exhaustively and
/// checks `γ_r = 2n` and `(γ_r = γ_R) ⇔ satisfiable`. A failed check is an
/// error carrying the report.
pub fn verify_gadget(f: &CnfFormula, solver: &Solver) -> Result<GadgetReport, GadgetError> {
    if let Some(var) = complementary_units(f) {
        return Err(GadgetError::ComplementaryUnits { var: var + 1 });
    }
    let gadget = build_gadget(f);
    let g = &gadget.graph;
    let all = VertexSet::full(g.order());
    let gamma_r = solver.weak_roman_domination_number(g, &all, &VertexSet::empty(g.order()))?;
    let gamma_rr = solver.roman_domination_number(g, &all)?;
    let satisfiable = sat_brute_force(f)?;
    let report = GadgetReport {
        n: f.n_vars,
        m: f.clauses.len(),
        gamma_r,
        gamma_rr,
        satisfiable,
        iff_holds: (gamma_r == gamma_rr) == satisfiable,
    };
    if gamma_r as usize != 2 * f.n_vars || !report.iff_holds {
        return Err(GadgetError::CheckFailed(report));
    }
    Ok(report)
}

/// True iff the literal assignment is a weak Roman dominating function.
pub fn literal_assignment_is_wrdf(gadget: &GadgetGraph) -> bool {
    is_wrdf_for(
        &gadget.graph,
        &VertexSet::full(gadget.graph.order()),
        &gadget.literal_assignment(),
    )
}
