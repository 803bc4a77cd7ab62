//! Directed multigraphs with a bounded number of arcs per vertex pair, and
//! the combinatorics of their vertex imbalances (outdegree minus indegree):
//! exact feasibility checks for imbalance sequences, minimum-arc
//! realizations, imbalance-preserving transformation moves, prescribed
//! imbalance-set constructions, and an exhaustive small-instance oracle to
//! cross-check all of it.
//!
//! All values are plain data; operations either mutate through `&mut self` or
//! return fresh values, are deterministic, and share nothing mutable, so
//! everything here is safe to use from multiple threads.

pub mod checks;
pub mod error;
pub mod fileio;
pub mod graph;
pub mod imbalance_set;
pub mod moves;
pub mod oracle;
pub mod realize;

pub use error::{Error, Result};
pub use graph::{ImbalanceSequence, RGraph, SortOrder, TripleClass, TripleKind, Vertex};
