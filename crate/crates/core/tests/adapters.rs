use std::collections::BTreeSet;

use proptest::prelude::*;
use semideco::adapters::digraph::{self, ClassKind, Digraph};
use semideco::adapters::simplicial::{self, SimplicialComplex};
use semideco::iso;
use semideco::multigraph::MultiGraph;

/// All non-empty faces of the given facets, ordered by inclusion.
fn brute_face_poset(facets: &[Vec<u32>]) -> (Vec<BTreeSet<u32>>, Vec<Vec<bool>>) {
    let mut faces: BTreeSet<BTreeSet<u32>> = BTreeSet::new();
    for f in facets {
        for mask in 1u32..(1 << f.len()) {
            faces.insert(f.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &v)| v).collect());
        }
    }
    let faces: Vec<BTreeSet<u32>> = faces.into_iter().collect();
    let le = faces.iter().map(|a| faces.iter().map(|b| a.is_subset(b)).collect()).collect();
    (faces, le)
}

fn facets_strategy() -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::btree_set(prop::collection::btree_set(0u32..6, 1..=3), 1..6)
        .prop_map(|sets| sets.into_iter().map(|s| s.into_iter().collect()).collect())
}

fn digraph_strategy(max_vertices: usize, max_edges: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_vertices).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n), 0..=max_edges).prop_map(move |pairs| {
            let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            let edges: Vec<(String, String)> = pairs.iter().map(|&(a, b)| (vertices[a].clone(), vertices[b].clone())).collect();
            Digraph::new(&vertices, &edges).unwrap()
        })
    })
}

fn subdivide(g: &Digraph, e: usize) -> Digraph {
    let mut vertices = g.vertices.clone();
    vertices.push("mid".to_string());
    let m = vertices.len() - 1;
    let mut edges = g.edges.clone();
    let (a, b) = edges[e];
    edges[e] = (m, b);
    edges.push((a, m));
    let named: Vec<(String, String)> = edges.iter().map(|&(x, y)| (vertices[x].clone(), vertices[y].clone())).collect();
    Digraph::new(&vertices, &named).unwrap()
}

fn multigraph_strategy() -> impl Strategy<Value = MultiGraph> {
    (1usize..6).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..8).prop_map(move |edges| {
            let mut g = MultiGraph::new(n);
            for (a, b) in edges {
                g.add_edge(a, b);
            }
            g
        })
    })
}

#[test]
fn corpus_face_posets() {
    let corpus = [
        SimplicialComplex::standard(1),
        SimplicialComplex::standard(2),
        SimplicialComplex::standard(3),
        SimplicialComplex::boundary(3),
        SimplicialComplex::torus7(),
    ];
    for k in corpus {
        let check = simplicial::check_face_poset(&k);
        assert!(check.holds && check.classes_are_strata);
        assert_eq!(check.class_count, k.len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn random_complexes_match_brute_face_poset(facets in facets_strategy()) {
        let k = SimplicialComplex::from_facets(&facets).unwrap();
        let (faces, le) = brute_face_poset(&facets);
        prop_assert_eq!(k.len(), faces.len());
        let listed: BTreeSet<BTreeSet<u32>> = k.simplices().iter().map(|s| s.iter().copied().collect()).collect();
        prop_assert_eq!(listed, faces.iter().cloned().collect::<BTreeSet<_>>());
        let inst = simplicial::to_instance(&k);
        let weak = inst.weak_elements();
        prop_assert!(weak.classes.iter().all(|c| c.len() == 1));
        let target = &weak.space.target;
        let index: Vec<usize> = k
            .simplices()
            .iter()
            .map(|s| faces.iter().position(|f| f.iter().copied().eq(s.iter().copied())).unwrap())
            .collect();
        // Stratum i of the complex is the singleton class `class_of[i]`; its
        // order must be face inclusion.
        for i in 0..k.len() {
            for j in 0..k.len() {
                let (ci, cj) = (weak.class_of[i], weak.class_of[j]);
                prop_assert_eq!(target.le(ci, cj), le[index[i]][index[j]]);
            }
        }
        let check = simplicial::check_face_poset(&k);
        prop_assert!(check.holds);
        let map = check.isomorphism.unwrap();
        prop_assert!(iso::is_isomorphism(target, &simplicial::face_poset(&k), &map));
    }
}

proptest! {
    #[test]
    fn orbits_are_closed_and_sinks_stay_apart(g in digraph_strategy(7, 10)) {
        let inst = digraph::to_instance(&g);
        prop_assert!(digraph::orbits_closed(&g, &inst));
        prop_assert!(inst.classification().closed.len() == g.stratum_count());
        let orbit = digraph::orbit_space(&g);
        let sinks: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.out_degree(v) == 0).collect();
        for (i, &a) in sinks.iter().enumerate() {
            for &b in &sinks[i + 1..] {
                prop_assert_ne!(orbit.partition.class_of[a], orbit.partition.class_of[b]);
            }
        }
        for (c, kind) in orbit.kinds.iter().enumerate() {
            let has_vertex = orbit.partition.classes[c].iter().any(|s| s < g.vertex_count());
            prop_assert_eq!(*kind == ClassKind::Vertex, has_vertex);
        }
    }

    #[test]
    fn orbit_forms_survive_edge_subdivision(g in digraph_strategy(6, 8), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.edge_count() > 0);
        let e = pick.index(g.edge_count());
        let h = subdivide(&g, e);
        let (before, after) = (digraph::orbit_forms(&g), digraph::orbit_forms(&h));
        for v in 0..g.vertex_count() {
            prop_assert_eq!(&before[v], &after[v]);
        }
        for d in 0..g.edge_count() {
            prop_assert_eq!(&before[g.edge_stratum(d)], &after[h.edge_stratum(d)]);
        }
    }

    #[test]
    fn topological_form_survives_subdivision(g in multigraph_strategy(), pick in any::<prop::sample::Index>()) {
        prop_assume!(g.edge_count() > 0);
        let mut h = g.clone();
        h.subdivide_edge(pick.index(g.edge_count()));
        prop_assert_eq!(g.topological_form(), h.topological_form());
        prop_assert!(!g.is_isomorphic(&h));
    }

    #[test]
    fn canonical_code_ignores_labelling(g in multigraph_strategy(), seed in any::<u64>()) {
        let n = g.vertex_count;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let mut h = MultiGraph::new(n);
        for &(a, b) in g.edges.iter().rev() {
            h.add_edge(perm[a], perm[b]);
        }
        prop_assert!(g.is_isomorphic(&h));
        prop_assert_eq!(g.topological_form(), h.topological_form());
    }

    #[test]
    fn cycles_collapse_to_one_class(n in 1usize..8) {
        let g = Digraph::cycle(n);
        prop_assert_eq!(digraph::orbit_space(&g).class_count(), 1);
        prop_assert!(digraph::condensation_agrees(&g));
    }
}
