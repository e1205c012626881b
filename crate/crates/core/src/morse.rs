//! Morse hyper-graphs: a family of disjoint vertex sets `X_λ` and, for each
//! point outside them, the hyper-edge `H_I` indexed by the members its
//! derived set meets.

use std::collections::BTreeMap;

use crate::abstract_elements::{self, AbstractPartition};
use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::semidecomp::SemiDecomposition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperGraph {
    pub vertices: Vec<PointSet>,
    /// Each edge is a sorted, non-empty list of vertex indices.
    pub edges: Vec<Vec<usize>>,
}

/// Where a point outside the vertex sets went, and the pieces
/// `C_i = (cl F(x) - F(x)) ∩ X_i` that put it there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeAssignment {
    pub point: usize,
    pub edge: usize,
    pub pieces: Vec<PointSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorseAssignment {
    pub graph: HyperGraph,
    pub assignments: Vec<EdgeAssignment>,
    /// `H_I` for each edge, as a point set.
    pub edge_sets: Vec<PointSet>,
}

impl MorseAssignment {
    pub fn vertex_of(&self, x: usize) -> Option<usize> {
        self.graph.vertices.iter().position(|v| v.contains(x))
    }

    pub fn edge_of(&self, x: usize) -> Option<usize> {
        self.edge_sets.iter().position(|h| h.contains(x))
    }

    /// Vertex sets followed by hyper-edge sets.
    pub fn classes(&self) -> Vec<PointSet> {
        self.graph.vertices.iter().chain(&self.edge_sets).cloned().collect()
    }

    /// Whether vertex sets and hyper-edge sets partition the space and every
    /// declared hyper-edge is non-empty.
    pub fn is_exact_partition(&self, n: usize) -> bool {
        let mut seen = PointSet::empty(n);
        for c in self.classes() {
            if c.is_empty() && self.edge_sets.contains(&c) {
                return false;
            }
            if seen.intersects(&c) {
                return false;
            }
            seen.union_with(&c);
        }
        seen.len() == n
    }
}

/// Assigns every point outside `family` to its hyper-edge.
pub fn hyper_edges(f: &SemiDecomposition, family: &[PointSet]) -> Result<MorseAssignment> {
    let n = f.len();
    let mut union = PointSet::empty(n);
    for (i, member) in family.iter().enumerate() {
        if union.intersects(member) {
            return Err(Error::FamilyNotDisjoint { index: i });
        }
        union.union_with(member);
    }
    let space = f.space();
    let mut edge_index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut edges = Vec::new();
    let mut edge_sets: Vec<PointSet> = Vec::new();
    let mut assignments = Vec::new();
    for x in union.complement().iter() {
        let derived = f.derived_set(x);
        let residue = derived.difference(&union);
        if !residue.is_empty() {
            return Err(Error::NotCovered {
                point: space.id(x).to_string(),
                derived: space.names(&derived),
                residue: space.names(&residue),
            });
        }
        let touched: Vec<usize> = (0..family.len()).filter(|&i| family[i].intersects(&derived)).collect();
        if touched.is_empty() {
            return Err(Error::EmptyHyperEdge(space.id(x).to_string()));
        }
        let pieces = touched.iter().map(|&i| family[i].intersection(&derived)).collect();
        let edge = *edge_index.entry(touched.clone()).or_insert_with(|| {
            edges.push(touched);
            edge_sets.push(PointSet::empty(n));
            edges.len() - 1
        });
        edge_sets[edge].insert(x);
        assignments.push(EdgeAssignment { point: x, edge, pieces });
    }
    Ok(MorseAssignment { graph: HyperGraph { vertices: family.to_vec(), edges }, assignments, edge_sets })
}

/// The canonical Morse hyper-graph: vertices are preimages under `q⟨⟩` of the
/// connected components of `q⟨⟩(Q(F))`.
pub fn morse_hypergraph(f: &SemiDecomposition) -> Result<MorseAssignment> {
    morse_hypergraph_with(f, &abstract_elements::abstract_elements(f))
}

/// As [`morse_hypergraph`], with the abstract element partition supplied.
pub fn morse_hypergraph_with(f: &SemiDecomposition, partition: &AbstractPartition) -> Result<MorseAssignment> {
    let q = abstract_elements::quasi_recurrent_with(f, &f.classify(), partition);
    let quotient = &partition.space;
    let family = sorted(
        quotient
            .target
            .connected_components(&quotient.image(&q))
            .iter()
            .map(|c| quotient.preimage(c))
            .collect(),
    );
    hyper_edges(f, &family)
}

/// Morse hyper-graph from a superset `q_prime` of `Q(F)`, with vertices the
/// preimages of the components of its image in `X/F`.
pub fn morse_hypergraph_for(f: &SemiDecomposition, q_prime: &PointSet) -> Result<MorseAssignment> {
    let q = abstract_elements::quasi_recurrent(f);
    let missing = q.difference(q_prime);
    if !missing.is_empty() {
        return Err(Error::SupersetViolation(f.space().names(&missing)));
    }
    let dec = f.decomposition_space();
    let family = sorted(
        dec.target.connected_components(&dec.image(q_prime)).iter().map(|c| dec.preimage(c)).collect(),
    );
    hyper_edges(f, &family)
}

fn sorted(mut family: Vec<PointSet>) -> Vec<PointSet> {
    family.sort_by_key(|s| s.first());
    family
}

/// Whether every witness piece `C_i` is an invariant set.
pub fn pieces_invariant(f: &SemiDecomposition, assignment: &MorseAssignment) -> bool {
    assignment.assignments.iter().all(|a| a.pieces.iter().all(|c| f.is_invariant_set(c)))
}

/// An abstract element that straddles two classes of the assignment, if any.
pub fn quotient_relation_witness(partition: &AbstractPartition, assignment: &MorseAssignment) -> Option<PointSet> {
    let classes = assignment.classes();
    partition.classes.iter().find(|c| !classes.iter().any(|k| c.is_subset(k))).cloned()
}

/// Whether `{X_λ} ∪ {H_I}` is coarser than the abstract element partition.
pub fn verify_quotient_relation(f: &SemiDecomposition, assignment: &MorseAssignment) -> bool {
    quotient_relation_witness(&abstract_elements::abstract_elements(f), assignment).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::space::FiniteSpace;

    fn names(f: &SemiDecomposition, sets: &[PointSet]) -> Vec<Vec<String>> {
        sets.iter().map(|s| f.space().names(s)).collect()
    }

    #[test]
    fn arc_hyper_edges() {
        let f = fixtures::arc();
        let fam = vec![f.space().point_set(&["s"]).unwrap(), f.space().point_set(&["t"]).unwrap()];
        let m = hyper_edges(&f, &fam).unwrap();
        assert_eq!(m.graph.edges, vec![vec![0, 1]]);
        assert_eq!(names(&f, &m.edge_sets), vec![vec!["o"]]);
        assert_eq!(names(&f, &m.assignments[0].pieces), vec![vec!["s"], vec!["t"]]);
    }

    #[test]
    fn semiarc_single_member_edge() {
        let f = fixtures::semiarc().unwrap();
        let fam = vec![f.space().point_set(&["s"]).unwrap(), f.space().point_set(&["t"]).unwrap()];
        let m = hyper_edges(&f, &fam).unwrap();
        assert_eq!(m.graph.edges, vec![vec![0]]);
        assert_eq!(names(&f, &m.edge_sets), vec![vec!["o"]]);
    }

    #[test]
    fn whole_space_family_has_no_edges() {
        let f = fixtures::arc();
        let m = hyper_edges(&f, &[f.space().all_points()]).unwrap();
        assert!(m.graph.edges.is_empty() && m.assignments.is_empty());
    }

    #[test]
    fn uncovered_and_overlapping_families() {
        let f = fixtures::arc();
        let s = f.space().point_set(&["s"]).unwrap();
        assert_eq!(hyper_edges(&f, &[s.clone()]), Err(Error::EmptyHyperEdge("t".into())));
        let chain = fixtures::chain().unwrap();
        let c = chain.space().point_set(&["c"]).unwrap();
        match hyper_edges(&chain, &[c]) {
            Err(Error::NotCovered { point, residue, .. }) => {
                assert_eq!(point, "r");
                assert_eq!(residue, vec!["p"]);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(hyper_edges(&f, &[s.clone(), s]), Err(Error::FamilyNotDisjoint { index: 1 }));
    }

    #[test]
    fn canonical_goldens() {
        let arc = fixtures::arc();
        let m = morse_hypergraph(&arc).unwrap();
        assert_eq!(names(&arc, &m.graph.vertices), vec![vec!["s"], vec!["t"]]);
        assert_eq!(m.graph.edges, vec![vec![0, 1]]);
        assert!(verify_quotient_relation(&arc, &m));

        let semi = fixtures::semiarc().unwrap();
        let m = morse_hypergraph(&semi).unwrap();
        assert_eq!(names(&semi, &m.graph.vertices), vec![vec!["s"], vec!["t"]]);
        assert_eq!(m.graph.edges, vec![vec![0]]);
        assert!(verify_quotient_relation(&semi, &m));

        let chain = fixtures::chain().unwrap();
        let m = morse_hypergraph(&chain).unwrap();
        assert_eq!(names(&chain, &m.graph.vertices), vec![vec!["c", "p", "r"]]);
        assert!(m.graph.edges.is_empty());

        let point = SemiDecomposition::singletons(FiniteSpace::discrete(&["x"]).unwrap());
        let m = morse_hypergraph(&point).unwrap();
        assert!(verify_quotient_relation(&point, &m));
        assert!(m.is_exact_partition(1));
    }

    #[test]
    fn superset_variants() {
        let arc = fixtures::arc();
        let q = abstract_elements::quasi_recurrent(&arc);
        assert_eq!(morse_hypergraph_for(&arc, &q).unwrap(), morse_hypergraph(&arc).unwrap());
        let whole = morse_hypergraph_for(&arc, &arc.space().all_points()).unwrap();
        assert_eq!(whole.graph.vertices.len(), 1);
        assert!(whole.graph.edges.is_empty());
        let s = arc.space().point_set(&["s"]).unwrap();
        assert_eq!(morse_hypergraph_for(&arc, &s), Err(Error::SupersetViolation(vec!["t".into()])));

        let semi = fixtures::semiarc().unwrap();
        let st = semi.space().point_set(&["s", "t"]).unwrap();
        assert_eq!(morse_hypergraph_for(&semi, &st).unwrap(), morse_hypergraph(&semi).unwrap());
    }
}
