//! Expander-based gap amplification for clique and independent-set
//! instances, the gadget reductions that carry those gaps to dominating
//! set, set cover, maximum induced bipartite subgraph, vertex cover and
//! MinSAT, and exact desk-scale oracles to check every identity.
//!
//! Module map:
//!
//! - [`instances`]: graphs, clique partitions, CNF formulas, GF(2) linear
//!   systems and set-cover instances with canonical text formats.
//! - [`spectral`]: second-largest eigenvalue magnitude of regular multigraphs.
//! - [`expander`]: rotation maps, Gabber–Galil and complete-graph families,
//!   graph powering.
//! - [`product`]: the derandomized walk product and the amplification pipeline.
//! - [`reductions`]: clause grouping, the dominating-set gadget and the
//!   remaining transformations.
//! - [`oracles`]: exact solvers used as ground truth.

pub mod bitset;
pub mod expander;
pub mod instances;
pub mod oracles;
pub mod product;
pub mod rational;
pub mod reductions;
pub mod spectral;

pub use bitset::Bitset;
pub use expander::{AlphaBound, ExpanderSpec, Family, RotationGraph};
pub use instances::{
    Assignment, CliquePartitionedGraph, CnfFormula, Constraints, Graph, LinEquation, LinSystem,
    Lit, SetCoverInstance,
};
pub use rational::Rational;
