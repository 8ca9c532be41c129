//! Roman and weak Roman domination on graphs, with an exact characterization
//! of the trees on which the two numbers coincide in the strong sense.

pub mod dp;
mod error;
pub mod gadget;
pub mod generator;
pub mod graph;
pub mod recognizer;
pub mod roman;
pub mod solver;

pub use error::{GraphError, ParseError};
pub use gadget::{build_gadget, parse_dimacs, CnfFormula, GadgetGraph, GadgetReport, Literal};
pub use generator::{apply_op, enumerate_family, random_member, replay, Base, Family, OpStep};
pub use graph::{parse_edge_list, Graph, Tree, Vertex, VertexSet};
pub use recognizer::{check_decision, decide_membership, verify_trace, ReductionTrace, Triple};
pub use roman::{is_rdf, is_wrdf, Assignment};
pub use solver::{SolveReport, Solver, SolverConfig};
