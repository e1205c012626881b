//! Semi-decompositions of finite topological spaces, their abstract (weak)
//! element spaces and Morse hyper-graphs, with adapters for simplicial
//! complexes, directed graphs and PL functions on surfaces.

pub mod abstract_elements;
pub mod adapters;
pub mod dot;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod iso;
pub mod morse;
pub mod multigraph;
pub mod pointset;
pub mod reeb;
pub mod relation;
pub mod report;
pub mod semidecomp;
pub mod space;
pub mod suite;

pub use abstract_elements::{AbstractKind, AbstractPartition, ElementTypes};
pub use error::{Error, Result};
pub use pointset::PointSet;
pub use relation::Relation;
pub use semidecomp::{Classification, InvarianceReport, PointCase, SemiDecomposition};
pub use space::{FiniteSpace, QuotientMap};
