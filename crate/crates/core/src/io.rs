//! JSON input and output formats.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::abstract_elements::AbstractPartition;
use crate::adapters::digraph::Digraph;
use crate::adapters::simplicial::SimplicialComplex;
use crate::error::{Error, Result};
use crate::reeb::mesh::TriSurfaceFn;
use crate::relation::Relation;
use crate::semidecomp::SemiDecomposition;
use crate::space::{FiniteSpace, QuotientMap};

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))
}

/// `{"points": [...], "le": [[x, y], ...]}`; `le` pairs generate the order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceJson {
    pub points: Vec<String>,
    #[serde(default)]
    pub le: Vec<(String, String)>,
}

impl SpaceJson {
    pub fn build(&self) -> Result<FiniteSpace> {
        FiniteSpace::build(&self.points, &self.le)
    }

    /// Strict order pairs of `space`.
    pub fn from_space(space: &FiniteSpace) -> Self {
        let le = space
            .order()
            .pairs()
            .filter(|&(x, y)| x != y)
            .map(|(x, y)| (space.id(x).to_string(), space.id(y).to_string()))
            .collect();
        SpaceJson { points: space.ids().to_vec(), le }
    }
}

/// Where a persisted instance came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Provenance {
    pub property: String,
    pub seed: u64,
    pub index: u64,
}

/// A semi-decomposition given either by its elements or by a pre-order
/// whose down-sets are the elements. Pre-order pairs `[x, y]` mean
/// `x ∈ F(y)` and are closed reflexively and transitively.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemiDecompositionJson {
    pub space: SpaceJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<BTreeMap<String, Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preorder: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Provenance>,
}

impl SemiDecompositionJson {
    pub fn parse(text: &str) -> Result<Self> {
        parse(text)
    }

    pub fn build(&self) -> Result<SemiDecomposition> {
        let space = self.space.build()?;
        match (&self.elements, &self.preorder) {
            (Some(elements), None) => {
                let named: Vec<(&str, Vec<&str>)> =
                    elements.iter().map(|(k, v)| (k.as_str(), v.iter().map(String::as_str).collect())).collect();
                SemiDecomposition::from_named(space, &named)
            }
            (None, Some(pairs)) => {
                let mut rel = Relation::identity(space.len());
                for (x, y) in pairs {
                    rel.insert(space.index_of(x)?, space.index_of(y)?);
                }
                let order = rel.reflexive_transitive_closure();
                SemiDecomposition::from_preorder(space, &order)
            }
            (Some(_), Some(_)) => Err(Error::Input("`elements` and `preorder` are mutually exclusive".into())),
            (None, None) => Err(Error::Input("one of `elements` or `preorder` is required".into())),
        }
    }

    pub fn from_semidecomposition(f: &SemiDecomposition) -> Self {
        let space = f.space();
        let elements = (0..f.len()).map(|x| (space.id(x).to_string(), space.names(f.element(x)))).collect();
        SemiDecompositionJson {
            space: SpaceJson::from_space(space),
            elements: Some(elements),
            preorder: None,
            counterexample: None,
        }
    }
}

/// `{"kind": "weak_element", "classes": [["c"], ["p"]], "raw_relation_transitive": true}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionJson {
    pub kind: String,
    pub classes: Vec<Vec<String>>,
    pub raw_relation_transitive: bool,
}

impl PartitionJson {
    pub fn new(space: &FiniteSpace, p: &AbstractPartition) -> Self {
        let kind = serde_json::to_value(p.kind).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
        PartitionJson {
            kind,
            classes: p.classes.iter().map(|c| space.names(c)).collect(),
            raw_relation_transitive: p.raw_relation_transitive,
        }
    }
}

/// A quotient space: classes of source points and the strict order between
/// class indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientJson {
    pub classes: Vec<Vec<String>>,
    pub order: Vec<(usize, usize)>,
}

impl QuotientJson {
    pub fn new(q: &QuotientMap) -> Self {
        QuotientJson {
            classes: q.classes.iter().map(|c| q.source.names(c)).collect(),
            order: q.target.order().pairs().filter(|&(a, b)| a != b).collect(),
        }
    }
}

/// `{"simplices": [[0, 1, 2], ...]}`: maximal faces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimplicialJson {
    pub simplices: Vec<Vec<u32>>,
}

impl SimplicialJson {
    pub fn parse(text: &str) -> Result<Self> {
        parse(text)
    }

    pub fn build(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::from_facets(&self.simplices)
    }
}

/// `{"vertices": ["a", "b"], "edges": [["a", "b"], ...]}`; list position is
/// edge identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DigraphJson {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<(String, String)>,
}

impl DigraphJson {
    pub fn parse(text: &str) -> Result<Self> {
        parse(text)
    }

    pub fn build(&self) -> Result<Digraph> {
        Digraph::new(&self.vertices, &self.edges)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeshVertex {
    pub id: u32,
    pub f: f64,
}

/// `{"vertices": [{"id": 0, "f": 0.12}], "triangles": [[0, 1, 2]]}`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeshJson {
    pub vertices: Vec<MeshVertex>,
    pub triangles: Vec<[u32; 3]>,
}

impl MeshJson {
    pub fn parse(text: &str) -> Result<Self> {
        parse(text)
    }

    pub fn build(&self) -> Result<TriSurfaceFn> {
        let verts: Vec<(u32, f64)> = self.vertices.iter().map(|v| (v.id, v.f)).collect();
        TriSurfaceFn::new(&verts, &self.triangles)
    }

    pub fn from_surface(s: &TriSurfaceFn) -> Self {
        MeshJson {
            vertices: (0..s.vertex_count()).map(|v| MeshVertex { id: s.id(v), f: s.value(v) }).collect(),
            triangles: s.triangles().iter().map(|t| t.map(|v| s.id(v))).collect(),
        }
    }
}
