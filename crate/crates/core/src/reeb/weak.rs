//! The sublevel semi-decomposition on merge-tree strata, its abstract weak
//! element space and the comparison with the Reeb graph.

use serde::Serialize;

use crate::abstract_elements::{AbstractPartition, ElementTypes};
use crate::adapters::StratifiedInstance;
use crate::error::Result;
use crate::multigraph::MultiGraph;
use crate::pointset::PointSet;
use crate::semidecomp::Classification;

use super::merge_tree::{MergeTree, Stratum};
use super::mesh::TriSurfaceFn;
use super::reeb_graph::{reeb_graph, ReebGraph};
use super::sublevel::{component_type, SublevelType};

/// `F(x)` is the component of `f⁻¹(-∞, f(x)]` containing `x`, pushed to the
/// merge tree. Sublevel sets are closed, so every point is classified closed.
pub struct SublevelModel {
    pub tree: MergeTree,
    pub strata: Vec<Stratum>,
    pub types: Vec<SublevelType>,
    pub instance: StratifiedInstance,
}

impl SublevelModel {
    pub fn new(s: &TriSurfaceFn) -> Result<Self> {
        let tree = MergeTree::new(s);
        let strata = tree.strata();
        let types = strata
            .iter()
            .map(|st| component_type(s, &tree, st.level(), st.component(), !st.is_interval()))
            .collect::<Result<Vec<_>>>()?;
        let semidec = tree.semidecomposition(&strata);
        let provenance = strata.iter().zip(&types).map(|(st, t)| format!("{}: {t}", st.name())).collect();
        let instance = StratifiedInstance {
            classification: Some(Classification::all_closed(strata.len())),
            types: ElementTypes::from_labels(&types),
            provenance,
            semidec,
        };
        Ok(SublevelModel { tree, strata, types, instance })
    }

    /// Connected components of the strata sets of constant type.
    pub fn type_components(&self) -> Vec<PointSet> {
        let space = self.instance.semidec.space();
        let n = self.strata.len();
        let mut out = Vec::new();
        let mut seen = PointSet::empty(n);
        for i in 0..n {
            if seen.contains(i) {
                continue;
            }
            let same = PointSet::from_indices(n, (0..n).filter(|&j| self.types[j] == self.types[i]));
            for c in space.connected_components(&same) {
                seen.union_with(&c);
                out.push(c);
            }
        }
        out.sort_by_key(|c| c.first());
        out
    }
}

pub struct WeakElementSpace {
    pub model: SublevelModel,
    pub partition: AbstractPartition,
    /// Components of constant-type strata, for comparison.
    pub type_components: Vec<PointSet>,
}

impl WeakElementSpace {
    pub fn class_count(&self) -> usize {
        self.partition.classes.len()
    }

    pub fn agrees_with_type_components(&self) -> bool {
        self.partition.classes == self.type_components
    }

    /// Classes containing interval strata become edges, the rest vertices;
    /// incidence comes from adjacency in the merge tree. `None` when some
    /// band class does not meet one or two point classes.
    pub fn as_multigraph(&self) -> Option<MultiGraph> {
        let classes = &self.partition.classes;
        let strata = &self.model.strata;
        let is_edge: Vec<bool> = classes.iter().map(|c| c.iter().any(|i| strata[i].is_interval())).collect();
        let mut vertex_index = vec![usize::MAX; classes.len()];
        let mut g = MultiGraph::new(0);
        for (c, &edge) in is_edge.iter().enumerate() {
            if !edge {
                vertex_index[c] = g.add_vertex();
            }
        }
        let space = self.model.instance.semidec.space();
        for (c, class) in classes.iter().enumerate() {
            if !is_edge[c] {
                continue;
            }
            let mut ends: Vec<usize> = Vec::new();
            for i in class.iter() {
                for j in space.down(i).union(space.up(i)).iter() {
                    let d = self.partition.class_of[j];
                    if d != c {
                        if is_edge[d] {
                            return None;
                        }
                        ends.push(vertex_index[d]);
                    }
                }
            }
            ends.sort_unstable();
            ends.dedup();
            match ends[..] {
                [a] => g.add_edge(a, a),
                [a, b] => g.add_edge(a, b),
                _ => return None,
            }
        }
        Some(g)
    }
}

pub fn weak_element_space(s: &TriSurfaceFn) -> Result<WeakElementSpace> {
    let model = SublevelModel::new(s)?;
    let partition = model.instance.weak_elements();
    let type_components = model.type_components();
    Ok(WeakElementSpace { model, partition, type_components })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReebComparison {
    pub weak_cells: usize,
    pub reeb_cells: usize,
    pub isomorphic_as_multigraphs: bool,
    pub weak_graph: Option<MultiGraph>,
    pub reeb: ReebGraph,
    pub type_component_cells: usize,
    pub raw_relation_transitive: bool,
}

/// Reads the weak element space as a multigraph and compares it with the
/// Reeb graph. Nothing is asserted.
pub fn compare_reeb(s: &TriSurfaceFn) -> Result<ReebComparison> {
    let weak = weak_element_space(s)?;
    let reeb = reeb_graph(s);
    let weak_graph = weak.as_multigraph();
    let isomorphic = weak_graph.as_ref().is_some_and(|g| g.is_isomorphic(&reeb.graph));
    Ok(ReebComparison {
        weak_cells: weak.class_count(),
        reeb_cells: reeb.graph.vertex_count + reeb.graph.edge_count(),
        isomorphic_as_multigraphs: isomorphic,
        weak_graph,
        type_component_cells: weak.type_components.len(),
        raw_relation_transitive: weak.partition.raw_relation_transitive,
        reeb,
    })
}
