//! Vertex-degree-based topological indices of simple connected graphs and an
//! exhaustive checker for the family of inequalities relating them.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: bitset graphs, graph6 and edge-list I/O, named families,
//!   structural predicates and exact chromatic number.
//! * [`index`]: the seven per-edge indices (R, H, ABC, X, GA, AZI, M2*).
//! * [`enumerate`]: isomorphism-reduced streams of connected graphs.
//! * [`bounds`]: the inequality catalog, per-graph evaluation and
//!   population-wide sharpness audits.
//! * [`proof`]: extrema and monotonicity of per-edge index ratios over
//!   integer degree grids.
//! * [`cli`]: the `degbound` command-line front end.

pub mod graph;
pub mod enumerate;
pub mod index;
pub mod bounds;
pub mod proof;
pub mod cli;

pub use graph::{DegreePair, EdgeDegreePartition, FamilyId, Graph, GraphError};
pub use index::{IndexId, IndexTable, IndexValue};
