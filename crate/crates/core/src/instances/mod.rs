//! Instance types shared by every reduction and oracle.
//!
//! Vertices and variables are 0-indexed in memory and 1-indexed in the
//! DIMACS-style text formats. All types are immutable once built.

mod cnf;
mod dimacs;
mod graph;
mod lin3;
mod partition;
mod setcover;

pub use cnf::{Assignment, CnfFormula, Constraints, Lit};
pub use dimacs::{emit_cnf, emit_graph, parse_cnf, parse_graph};
pub use graph::Graph;
pub use lin3::{emit_lin3, parse_lin3, LinEquation, LinSystem};
pub use partition::CliquePartitionedGraph;
pub use setcover::SetCoverInstance;

use thiserror::Error;

/// Structural violations caught when constructing an instance.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum InstanceError {
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("variable {var} out of range for {var_count} variables")]
    VariableOutOfRange { var: usize, var_count: usize },
    #[error("clause {0} is empty")]
    EmptyClause(usize),
    #[error("variable {var} repeated in constraint {index}")]
    RepeatedVariable { index: usize, var: usize },
    #[error("assignment has length {found}, instance has {expected} variables")]
    AssignmentLength { expected: usize, found: usize },
    #[error("element {element} out of range for ground set of size {ground_size}")]
    ElementOutOfRange { element: usize, ground_size: usize },
    #[error("a clique partition needs at least one block")]
    NoBlocks,
    #[error("vertex {0} appears in more than one block")]
    BlockOverlap(usize),
    #[error("vertex {0} is not covered by any block")]
    Uncovered(usize),
    #[error("block {block} is not a clique: {u} and {v} are not adjacent")]
    NonAdjacentInBlock { block: usize, u: usize, v: usize },
}

/// Errors from the text formats.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing `p {0}` header")]
    MissingHeader(&'static str),
    #[error("line {line}: malformed header: {msg}")]
    MalformedHeader { line: usize, msg: String },
    #[error("line {line}: malformed line: {msg}")]
    MalformedLine { line: usize, msg: String },
    #[error("line {line}: index {index} out of range 1..={max}")]
    IndexOutOfRange { line: usize, index: i64, max: usize },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: variable {var} repeated")]
    RepeatedVariable { line: usize, var: usize },
    #[error("line {line}: empty clause")]
    EmptyClause { line: usize },
    #[error("header declares {declared} {what}, found {found}")]
    CountMismatch { what: &'static str, declared: usize, found: usize },
    #[error("invalid JSON instance: {0}")]
    Json(String),
}
