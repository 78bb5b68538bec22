//! Eccentricity-based topological indices for small graphs.
//!
//! The crate computes the total eccentricity `tau`, the average eccentricity
//! and the eccentric connectivity of simple graphs, constructs the named
//! extremal families, runs the three tree-rewriting procedures that move a
//! tree monotonically towards a path, a star or the conjugated minimum, and
//! verifies the extremal results exhaustively over every small tree,
//! unicyclic, bicyclic and conjugated tree.

pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod matching;
pub mod metrics;
pub mod oracle;
pub mod rewrite;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
