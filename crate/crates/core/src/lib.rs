//! Depth-first search on a digraph `G` given only a partially complemented
//! representation of it.
//!
//! A partially complemented digraph stores, for every vertex, a sorted list
//! together with a complement bit. An uncomplemented vertex lists its
//! out-neighbors in `G`; a complemented vertex lists its out-*non*-neighbors.
//! [`pc_dfs_forest`] traverses `G` in `O(n + m̃)` time, where `m̃` is the
//! number of stored list entries, so dense graphs with sparse complements
//! never have to be materialized.
//!
//! The [`oracle`] module carries a textbook DFS over the materialized graph
//! and seeded instance generators; [`pcdg`] reads and writes the text format
//! used by the command-line tool.

mod cells;
pub mod dfs;
mod graph;
pub mod oracle;
pub mod pcdg;
mod undiscovered;
mod vertex;

pub use cells::{CellId, PcLists};
pub use dfs::{
    pc_dfs_forest, restart_cursor, undirected_components, DfsForest, DfsFrame, DfsOptions,
    InvariantViolation, NoTally, OpCounters, RestartStrategy, Tally,
};
pub use graph::{
    build_pc_lists, build_pc_lists_counted, complement_vertex, materialize, ArcList, BuildError,
    PcDigraph,
};
pub use undiscovered::UndiscoveredList;
pub use vertex::VertexId;
