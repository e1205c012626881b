//! Serializable reports for each front-end command.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::abstract_elements::{self, AbstractPartition, ElementTypes};
use crate::adapters::digraph::{self, ClassKind, Digraph};
use crate::adapters::simplicial::{self, SimplicialComplex};
use crate::error::Result;
use crate::io::{PartitionJson, Provenance, QuotientJson};
use crate::morse::{self, MorseAssignment};
use crate::pointset::PointSet;
use crate::reeb::mesh::TriSurfaceFn;
use crate::reeb::weak::{self, ReebComparison};
use crate::semidecomp::{InvarianceReport, SemiDecomposition};
use crate::space::FiniteSpace;
use crate::suite;

fn named_map(space: &FiniteSpace, sets: impl Iterator<Item = PointSet>) -> BTreeMap<String, Vec<String>> {
    sets.enumerate().map(|(x, s)| (space.id(x).to_string(), space.names(&s))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationJson {
    pub closed: Vec<String>,
    pub proper: Vec<String>,
    pub residual: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementSpaceJson {
    pub partition: PartitionJson,
    pub space: QuotientJson,
}

impl ElementSpaceJson {
    fn new(space: &FiniteSpace, p: &AbstractPartition) -> Self {
        ElementSpaceJson { partition: PartitionJson::new(space, p), space: QuotientJson::new(&p.space) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperEdgeJson {
    /// Indices into `vertices`.
    pub members: Vec<usize>,
    pub points: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MorseJson {
    Ok { vertices: Vec<Vec<String>>, edges: Vec<HyperEdgeJson> },
    Error(String),
}

impl MorseJson {
    pub fn new(space: &FiniteSpace, m: &Result<MorseAssignment>) -> Self {
        match m {
            Ok(m) => MorseJson::Ok {
                vertices: m.graph.vertices.iter().map(|v| space.names(v)).collect(),
                edges: m
                    .graph
                    .edges
                    .iter()
                    .zip(&m.edge_sets)
                    .map(|(members, points)| HyperEdgeJson { members: members.clone(), points: space.names(points) })
                    .collect(),
            },
            Err(e) => MorseJson::Error(e.to_string()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReplayJson {
    pub property: String,
    pub reproduced: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalyzeReport {
    pub points: Vec<String>,
    pub classification: ClassificationJson,
    pub element_class: BTreeMap<String, Vec<String>>,
    pub class_element: BTreeMap<String, Vec<String>>,
    pub decomposition: bool,
    pub invariance: InvarianceReport,
    pub decomposition_space: QuotientJson,
    pub abstract_elements: ElementSpaceJson,
    pub abstract_weak_elements: ElementSpaceJson,
    pub maximal_points: Vec<String>,
    pub quasi_recurrent: Vec<String>,
    pub morse: MorseJson,
    /// `None` when there is no Morse hyper-graph.
    pub quotient_relation: Option<bool>,
    pub asserted_failures: Vec<&'static str>,
    pub reported_failures: Vec<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub replay: Option<ReplayJson>,
}

impl AnalyzeReport {
    pub fn new(f: &SemiDecomposition, counterexample: Option<&Provenance>) -> Self {
        let space = f.space();
        let cls = f.classify();
        let elements = abstract_elements::abstract_elements_with(f, &cls);
        let types = ElementTypes::homeomorphism(f);
        let weak = abstract_elements::abstract_weak_elements_with(f, &cls, &types);
        let morse = morse::morse_hypergraph_with(f, &elements);
        let quotient_relation = morse.as_ref().ok().map(|m| morse::quotient_relation_witness(&elements, m).is_none());
        let class_order = f.class_order();
        let outcome = suite::check_instance(f);
        let replay = counterexample.map(|p| ReplayJson {
            property: p.property.clone(),
            reproduced: outcome.verdicts.get(p.property.as_str()) == Some(&Some(false)),
        });
        AnalyzeReport {
            points: space.ids().to_vec(),
            classification: ClassificationJson {
                closed: space.names(&cls.closed),
                proper: space.names(&cls.proper),
                residual: space.names(&cls.residual),
            },
            element_class: named_map(space, (0..f.len()).map(|x| f.element_class(x))),
            class_element: named_map(space, (0..f.len()).map(|x| class_order.predecessors(x))),
            decomposition: f.is_decomposition(),
            invariance: f.check_invariance(),
            decomposition_space: QuotientJson::new(&f.decomposition_space()),
            abstract_elements: ElementSpaceJson::new(space, &elements),
            abstract_weak_elements: ElementSpaceJson::new(space, &weak),
            maximal_points: space.names(&abstract_elements::maximal_points(f)),
            quasi_recurrent: space.names(&abstract_elements::quasi_recurrent_with(f, &cls, &elements)),
            morse: MorseJson::new(space, &morse),
            quotient_relation,
            asserted_failures: outcome.asserted_failures(),
            reported_failures: outcome.reported_failures(),
            replay,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialReport {
    pub simplex_count: usize,
    pub holds: bool,
    pub class_count: usize,
    pub classes_are_strata: bool,
    /// Weak class (as stratum names) -> simplex name.
    pub isomorphism: Option<Vec<(Vec<String>, String)>>,
    pub weak_elements: ElementSpaceJson,
}

impl SimplicialReport {
    pub fn new(k: &SimplicialComplex) -> Self {
        let inst = simplicial::to_instance(k);
        let weak = inst.weak_elements();
        let check = simplicial::check_face_poset(k);
        let space = inst.semidec.space();
        let isomorphism = check
            .isomorphism
            .as_ref()
            .map(|map| map.iter().enumerate().map(|(c, &s)| (space.names(&weak.classes[c]), k.name(s))).collect());
        SimplicialReport {
            simplex_count: k.len(),
            holds: check.holds,
            class_count: check.class_count,
            classes_are_strata: check.classes_are_strata,
            isomorphism,
            weak_elements: ElementSpaceJson::new(space, &weak),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitClassJson {
    pub kind: ClassKind,
    pub strata: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CollapsedJson {
    pub vertex_classes: Vec<Vec<String>>,
    /// (edge stratum, source class, target class).
    pub edges: Vec<(String, usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DigraphReport {
    pub acyclic: bool,
    pub stratum_count: usize,
    pub orbit_space: Vec<OrbitClassJson>,
    pub orbit_order: Vec<(usize, usize)>,
    pub matches_graph_cells: bool,
    pub collapse_oracle: CollapsedJson,
    /// Orbit space and collapse oracle partition the strata differently.
    pub discrepancy: bool,
    pub condensation_agrees: bool,
}

impl DigraphReport {
    pub fn new(g: &Digraph) -> Self {
        let orbit = digraph::orbit_space(g);
        let collapsed = digraph::collapse_oracle(g);
        let names = |c: &[usize]| c.iter().map(|&s| g.stratum_name(s)).collect();
        DigraphReport {
            acyclic: g.is_acyclic(),
            stratum_count: g.stratum_count(),
            orbit_space: orbit
                .partition
                .classes
                .iter()
                .zip(&orbit.kinds)
                .map(|(c, &kind)| OrbitClassJson { kind, strata: names(&c.to_vec()) })
                .collect(),
            orbit_order: QuotientJson::new(&orbit.partition.space).order,
            matches_graph_cells: digraph::matches_graph_cells(g, &orbit),
            collapse_oracle: CollapsedJson {
                vertex_classes: collapsed.vertex_classes.iter().map(|c| names(c)).collect(),
                edges: collapsed.edges.iter().map(|&(e, s, t)| (g.stratum_name(g.edge_stratum(e)), s, t)).collect(),
            },
            discrepancy: digraph::collapse_discrepancy(g),
            condensation_agrees: digraph::condensation_agrees(g),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumJson {
    pub name: String,
    #[serde(rename = "type")]
    pub kind: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReebReport {
    pub genus: usize,
    pub critical_points: usize,
    pub strata: Vec<StratumJson>,
    pub weak_classes: Vec<Vec<String>>,
    pub type_components: Vec<Vec<String>>,
    pub comparison: ReebComparison,
}

impl ReebReport {
    pub fn new(s: &TriSurfaceFn) -> Result<Self> {
        let w = weak::weak_element_space(s)?;
        let comparison = weak::compare_reeb(s)?;
        let space = w.model.instance.semidec.space();
        Ok(ReebReport {
            genus: s.genus(),
            critical_points: comparison.reeb.nodes.len(),
            strata: w
                .model
                .strata
                .iter()
                .zip(&w.model.types)
                .map(|(st, t)| StratumJson { name: st.name(), kind: t.to_string() })
                .collect(),
            weak_classes: w.partition.classes.iter().map(|c| space.names(c)).collect(),
            type_components: w.type_components.iter().map(|c| space.names(c)).collect(),
            comparison,
        })
    }
}
