//! Finite directed graphs as flows: every point moves along edge direction,
//! so the positive orbit of a point is everything reachable from it.
//!
//! Strata are the vertices and the open edges. An edge's `target` is where
//! the flow goes.

use std::collections::{BTreeMap, HashMap};

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use serde::Serialize;

use crate::abstract_elements::{AbstractPartition, ElementTypes};
use crate::error::{Error, Result};
use crate::multigraph::{MultiGraph, TopologicalForm};
use crate::pointset::PointSet;
use crate::relation::Relation;
use crate::semidecomp::{Classification, SemiDecomposition};
use crate::space::FiniteSpace;

use super::StratifiedInstance;

/// Edges keep their list position as identity; loops and parallel edges are
/// allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    pub vertices: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.as_ref().to_string(), i).is_some() {
                return Err(Error::DuplicatePoint(v.as_ref().to_string()));
            }
        }
        let lookup = |v: &S| index.get(v.as_ref()).copied().ok_or_else(|| Error::UnknownVertex(v.as_ref().to_string()));
        let edges = edges.iter().map(|(a, b)| Ok((lookup(a)?, lookup(b)?))).collect::<Result<_>>()?;
        Ok(Digraph { vertices: vertices.iter().map(|v| v.as_ref().to_string()).collect(), edges })
    }

    /// The directed cycle `v0 -> v1 -> ... -> v{n-1} -> v0`.
    pub fn cycle(n: usize) -> Self {
        Digraph { vertices: (0..n).map(|i| format!("v{i}")).collect(), edges: (0..n).map(|i| (i, (i + 1) % n)).collect() }
    }

    /// The directed path `v0 -> ... -> v{n-1}`.
    pub fn path(n: usize) -> Self {
        Digraph { vertices: (0..n).map(|i| format!("v{i}")).collect(), edges: (1..n).map(|i| (i - 1, i)).collect() }
    }

    /// Two directed loops through a single vertex, each subdivided once.
    pub fn figure_eight() -> Self {
        let vertices = ["o", "a", "b"].map(String::from).to_vec();
        Digraph { vertices, edges: vec![(0, 1), (1, 0), (0, 2), (2, 0)] }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn stratum_count(&self) -> usize {
        self.vertices.len() + self.edges.len()
    }

    /// Stratum index of edge `e`.
    pub fn edge_stratum(&self, e: usize) -> usize {
        self.vertices.len() + e
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.0 == v).count()
    }

    pub fn is_acyclic(&self) -> bool {
        self.sccs().iter().all(|c| c.len() == 1 && !self.edges.contains(&(c[0], c[0])))
    }

    pub fn stratum_name(&self, s: usize) -> String {
        if s < self.vertices.len() {
            self.vertices[s].clone()
        } else {
            let e = s - self.vertices.len();
            let (a, b) = self.edges[e];
            format!("{}->{}#{}", self.vertices[a], self.vertices[b], e)
        }
    }

    fn reachable(&self, v: usize) -> PointSet {
        let mut seen = PointSet::singleton(self.vertices.len(), v);
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            for &(a, b) in &self.edges {
                if a == u && seen.insert(b) {
                    stack.push(b);
                }
            }
        }
        seen
    }

    /// Strongly connected components in a deterministic order.
    fn sccs(&self) -> Vec<Vec<usize>> {
        let mut g = DiGraph::<(), ()>::new();
        let nodes: Vec<_> = (0..self.vertices.len()).map(|_| g.add_node(())).collect();
        for &(a, b) in &self.edges {
            g.add_edge(nodes[a], nodes[b], ());
        }
        let mut comps: Vec<Vec<usize>> = tarjan_scc(&g)
            .into_iter()
            .map(|c| {
                let mut c: Vec<usize> = c.into_iter().map(|n| n.index()).collect();
                c.sort_unstable();
                c
            })
            .collect();
        comps.sort();
        comps
    }
}

/// The positive orbit as a topological graph, plus an optional pendant arc
/// at `pendant`.
fn orbit_graph(g: &Digraph, reach: &PointSet, pendant: Option<usize>) -> MultiGraph {
    let verts: Vec<usize> = reach.iter().collect();
    let local: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut m = MultiGraph::new(verts.len());
    for &(a, b) in &g.edges {
        if reach.contains(a) {
            m.add_edge(local[&a], local[&b]);
        }
    }
    if let Some(t) = pendant {
        let p = m.add_vertex();
        m.add_edge(local[&t], p);
    }
    m
}

/// Homeomorphism type of the positive orbit of each stratum.
pub fn orbit_forms(g: &Digraph) -> Vec<TopologicalForm> {
    let reach: Vec<PointSet> = (0..g.vertex_count()).map(|v| g.reachable(v)).collect();
    let mut cache: HashMap<(PointSet, Option<usize>), TopologicalForm> = HashMap::new();
    let mut form = |r: &PointSet, pendant: Option<usize>| {
        cache.entry((r.clone(), pendant)).or_insert_with(|| orbit_graph(g, r, pendant).topological_form()).clone()
    };
    let mut out: Vec<TopologicalForm> = (0..g.vertex_count()).map(|v| form(&reach[v], None)).collect();
    for &(s, t) in &g.edges {
        // An edge already inside orbit(t) adds nothing to it.
        let pendant = if reach[t].contains(s) { None } else { Some(t) };
        out.push(form(&reach[t], pendant));
    }
    out
}

/// Footprint of the positive orbit of each stratum.
fn footprints(g: &Digraph) -> Vec<PointSet> {
    let n = g.stratum_count();
    let vertex_fp: Vec<PointSet> = (0..g.vertex_count())
        .map(|v| {
            let r = g.reachable(v);
            let mut fp = PointSet::from_indices(n, r.iter());
            for (e, &(a, _)) in g.edges.iter().enumerate() {
                if r.contains(a) {
                    fp.insert(g.edge_stratum(e));
                }
            }
            fp
        })
        .collect();
    let mut out = vertex_fp.clone();
    for (e, &(_, t)) in g.edges.iter().enumerate() {
        let mut fp = vertex_fp[t].clone();
        fp.insert(g.edge_stratum(e));
        out.push(fp);
    }
    out
}

/// The strata space: a vertex lies in the closure of each incident edge.
pub fn strata_space(g: &Digraph) -> FiniteSpace {
    let n = g.stratum_count();
    let mut rel = Relation::identity(n);
    for (e, &(a, b)) in g.edges.iter().enumerate() {
        rel.insert(a, g.edge_stratum(e));
        rel.insert(b, g.edge_stratum(e));
    }
    let ids = (0..n).map(|s| g.stratum_name(s)).collect();
    FiniteSpace::with_order(ids, rel).expect("incidence order has height one")
}

/// The semi-decomposition of positive orbits over strata. Positive orbits of
/// a finite graph flow are closed, so every stratum is classified closed.
pub fn to_instance(g: &Digraph) -> StratifiedInstance {
    let space = strata_space(g);
    let semidec = SemiDecomposition::new(space, footprints(g)).expect("positive orbits form a semi-decomposition");
    let forms = orbit_forms(g);
    StratifiedInstance {
        classification: Some(Classification::all_closed(g.stratum_count())),
        types: ElementTypes::from_labels(&forms),
        provenance: (0..g.stratum_count())
            .map(|s| {
                let kind = if s < g.vertex_count() { "vertex" } else { "open edge" };
                format!("{kind} {}: orbit {}", g.stratum_name(s), forms[s])
            })
            .collect(),
        semidec,
    }
}

/// Whether the footprint of every vertex orbit is a closed set of strata.
pub fn orbits_closed(g: &Digraph, inst: &StratifiedInstance) -> bool {
    (0..g.vertex_count()).all(|v| inst.semidec.space().is_closed(inst.semidec.element(v)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassKind {
    Vertex,
    Edge,
}

#[derive(Clone, Debug)]
pub struct OrbitSpace {
    pub partition: AbstractPartition,
    pub kinds: Vec<ClassKind>,
}

impl OrbitSpace {
    pub fn class_count(&self) -> usize {
        self.partition.classes.len()
    }
}

/// The abstract weak element space of the orbit semi-decomposition.
pub fn orbit_space(g: &Digraph) -> OrbitSpace {
    let partition = to_instance(g).weak_elements();
    let kinds = partition
        .classes
        .iter()
        .map(|c| if c.iter().any(|s| s < g.vertex_count()) { ClassKind::Vertex } else { ClassKind::Edge })
        .collect();
    OrbitSpace { partition, kinds }
}

/// Whether the orbit space is the cell structure of `g` itself: every class
/// is one stratum (incidences are then those of `g`).
pub fn matches_graph_cells(g: &Digraph, orbit: &OrbitSpace) -> bool {
    orbit.class_count() == g.stratum_count() && orbit.partition.classes.iter().all(|c| c.len() == 1)
}

/// Result of collapsing cycles and out-degree-one vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Collapsed {
    /// Strata absorbed into each surviving vertex.
    pub vertex_classes: Vec<Vec<usize>>,
    /// Surviving edges as (edge id, source class, target class).
    pub edges: Vec<(usize, usize, usize)>,
}

impl Collapsed {
    /// The induced partition of strata, vertex classes first.
    pub fn strata_partition(&self, g: &Digraph) -> Vec<PointSet> {
        let n = g.stratum_count();
        let mut out: Vec<PointSet> =
            self.vertex_classes.iter().map(|c| PointSet::from_indices(n, c.iter().copied())).collect();
        out.extend(self.edges.iter().map(|&(e, _, _)| PointSet::singleton(n, g.edge_stratum(e))));
        out
    }
}

/// Collapses each strongly connected component containing an edge to a
/// vertex, then repeatedly absorbs a vertex of out-degree one together with
/// its outgoing edge into the edge's target.
pub fn collapse_oracle(g: &Digraph) -> Collapsed {
    let (mut classes, mut edges) = condense(g);
    loop {
        let mut outs: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, &(_, s, _)) in edges.iter().enumerate() {
            outs.entry(s).or_default().push(i);
        }
        let Some((&u, list)) = outs.iter().find(|(_, l)| l.len() == 1) else {
            break;
        };
        let (e, _, w) = edges.remove(list[0]);
        let absorbed = std::mem::take(&mut classes[u]);
        classes[w].extend(absorbed);
        classes[w].push(g.edge_stratum(e));
        for edge in &mut edges {
            if edge.1 == u {
                edge.1 = w;
            }
            if edge.2 == u {
                edge.2 = w;
            }
        }
    }
    finish(classes, edges)
}

type EdgeList = Vec<(usize, usize, usize)>;

/// Condensation over strata: vertex classes with their internal edges, and
/// the surviving edges between classes.
fn condense(g: &Digraph) -> (Vec<Vec<usize>>, EdgeList) {
    let comps = g.sccs();
    let mut comp_of = vec![0; g.vertex_count()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    let mut classes: Vec<Vec<usize>> = comps.clone();
    let mut edges = Vec::new();
    for (e, &(a, b)) in g.edges.iter().enumerate() {
        if comp_of[a] == comp_of[b] {
            classes[comp_of[a]].push(g.edge_stratum(e));
        } else {
            edges.push((e, comp_of[a], comp_of[b]));
        }
    }
    (classes, edges)
}

fn finish(classes: Vec<Vec<usize>>, edges: EdgeList) -> Collapsed {
    let mut renumber = vec![usize::MAX; classes.len()];
    let mut vertex_classes = Vec::new();
    for (i, mut c) in classes.into_iter().enumerate() {
        if !c.is_empty() {
            c.sort_unstable();
            renumber[i] = vertex_classes.len();
            vertex_classes.push(c);
        }
    }
    let edges = edges.into_iter().map(|(e, s, t)| (e, renumber[s], renumber[t])).collect();
    Collapsed { vertex_classes, edges }
}

/// The condensation as a digraph, with the class of each original vertex.
pub fn condensation(g: &Digraph) -> (Digraph, Vec<usize>) {
    let comps = g.sccs();
    let mut comp_of = vec![0; g.vertex_count()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    let vertices = comps.iter().map(|c| c.iter().map(|&v| g.vertices[v].as_str()).collect::<Vec<_>>().join("+")).collect();
    let edges = g
        .edges
        .iter()
        .filter(|&&(a, b)| comp_of[a] != comp_of[b])
        .map(|&(a, b)| (comp_of[a], comp_of[b]))
        .collect();
    (Digraph { vertices, edges }, comp_of)
}

/// Whether the orbit space of `g` equals that of its condensation pulled
/// back to the strata of `g` (internal edges follow their component).
pub fn condensation_agrees(g: &Digraph) -> bool {
    let (c, comp_of) = condensation(g);
    let coarse = orbit_space(&c).partition;
    let mut labels = Vec::with_capacity(g.stratum_count());
    for v in 0..g.vertex_count() {
        labels.push(coarse.class_of[comp_of[v]]);
    }
    let mut next_edge = 0;
    for &(a, b) in &g.edges {
        if comp_of[a] == comp_of[b] {
            labels.push(coarse.class_of[comp_of[a]]);
        } else {
            labels.push(coarse.class_of[c.edge_stratum(next_edge)]);
            next_edge += 1;
        }
    }
    let pulled = strata_space(g).quotient_by_labels(&labels);
    pulled.classes == orbit_space(g).partition.classes
}

/// Whether the orbit space and the collapse oracle partition the strata the
/// same way.
pub fn collapse_discrepancy(g: &Digraph) -> bool {
    let mut a = orbit_space(g).partition.classes;
    let mut b = collapse_oracle(g).strata_partition(g);
    a.sort();
    b.sort();
    a != b
}
