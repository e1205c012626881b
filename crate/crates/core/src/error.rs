use thiserror::Error;

/// Everything that can go wrong while building or analysing an instance.
///
/// Point-level variants name the offending points by identifier so the
/// messages can be surfaced to users verbatim.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("duplicate point identifier `{0}`")]
    DuplicatePoint(String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("partition does not cover point `{0}`")]
    PartitionNotCovering(String),
    #[error("point `{0}` belongs to more than one partition class")]
    PartitionOverlap(String),
    #[error("partition is over {found} points but the space has {expected}")]
    PartitionSize { expected: usize, found: usize },
    #[error("relation is not transitive: {x} <= {y} and {y} <= {z} but not {x} <= {z}")]
    NotTransitive { x: String, y: String, z: String },
    #[error("no element given for point `{0}`")]
    MissingElement(String),
    #[error("axiom 1 violated: `{0}` is not in its own element")]
    Axiom1Violation(String),
    #[error("axiom 2 violated: `{x}` lies in F(`{y}`) but F(`{x}`) is not contained in F(`{y}`)")]
    Axiom2Violation { x: String, y: String },
    #[error("set is not invariant under the semi-decomposition")]
    NotInvariant,
    #[error("family member {index} overlaps an earlier member")]
    FamilyNotDisjoint { index: usize },
    #[error("derived set of `{point}` is not covered by the family; uncovered: {residue:?}")]
    NotCovered { point: String, derived: Vec<String>, residue: Vec<String> },
    #[error("point `{0}` lies outside the family but has an empty derived set")]
    EmptyHyperEdge(String),
    #[error("supplied set does not contain the quasi-recurrent set; missing: {0:?}")]
    SupersetViolation(Vec<String>),
    #[error("simplex {simplex:?} is missing its face {face:?}")]
    FaceClosure { simplex: Vec<u32>, face: Vec<u32> },
    #[error("duplicate simplex {0:?}")]
    DuplicateSimplex(Vec<u32>),
    #[error("empty simplex")]
    EmptySimplex,
    #[error("edge references unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("mesh is not a closed surface: {0}")]
    NotClosedSurface(String),
    #[error("mesh is not orientable")]
    NotOrientable,
    #[error("mesh is not connected")]
    Disconnected,
    #[error("function values are not pairwise distinct (vertices {0} and {1})")]
    NonGeneric(u32, u32),
    #[error("vertex {vertex} is not in the sublevel set at {level}")]
    ComponentNotAlive { vertex: u32, level: f64 },
    #[error("inconsistent sublevel topology: {0}")]
    Topology(String),
    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
