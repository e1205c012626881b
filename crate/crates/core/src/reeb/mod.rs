//! Piecewise-linear functions on surfaces: merge trees of sublevel sets,
//! sublevel homeomorphism types, the weak element space of the sublevel
//! semi-decomposition and the Reeb graph.

pub mod fixtures;
pub mod mesh;
pub mod merge_tree;
pub mod sublevel;
pub mod reeb_graph;
pub mod weak;
