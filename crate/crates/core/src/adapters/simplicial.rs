//! Simplicial complexes: strata are open simplices and the element of a
//! point is the closed simplex carrying it.

use std::collections::BTreeSet;

use crate::abstract_elements::ElementTypes;
use crate::error::{Error, Result};
use crate::iso;
use crate::pointset::PointSet;
use crate::relation::Relation;
use crate::semidecomp::SemiDecomposition;
use crate::space::FiniteSpace;

use super::StratifiedInstance;

/// A finite abstract simplicial complex. Simplices are sorted vertex lists,
/// stored by dimension and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    simplices: Vec<Vec<u32>>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `facets`.
    pub fn from_facets(facets: &[Vec<u32>]) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut all = BTreeSet::new();
        for facet in facets {
            let s = normalize(facet)?;
            if !seen.insert(s.clone()) {
                return Err(Error::DuplicateSimplex(s));
            }
            for mask in 1u64..(1 << s.len()) {
                all.insert(s.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect());
            }
        }
        Ok(Self::sorted(all.into_iter().collect()))
    }

    /// Takes the full list of simplices, which must be closed under faces.
    pub fn new(simplices: &[Vec<u32>]) -> Result<Self> {
        let mut set = BTreeSet::new();
        for s in simplices {
            let s = normalize(s)?;
            if !set.insert(s.clone()) {
                return Err(Error::DuplicateSimplex(s));
            }
        }
        for s in &set {
            if s.len() > 1 {
                for skip in 0..s.len() {
                    let face: Vec<u32> = s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                    if !set.contains(&face) {
                        return Err(Error::FaceClosure { simplex: s.clone(), face });
                    }
                }
            }
        }
        Ok(Self::sorted(set.into_iter().collect()))
    }

    fn sorted(mut simplices: Vec<Vec<u32>>) -> Self {
        simplices.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        SimplicialComplex { simplices }
    }

    /// The full `n`-simplex on vertices `0..=n`.
    pub fn standard(n: u32) -> Self {
        Self::from_facets(&[(0..=n).collect()]).expect("valid simplex")
    }

    /// The boundary of the `n`-simplex.
    pub fn boundary(n: u32) -> Self {
        let facets: Vec<Vec<u32>> = (0..=n).map(|skip| (0..=n).filter(|&v| v != skip).collect()).collect();
        Self::from_facets(&facets).expect("valid boundary")
    }

    /// The 7-vertex torus: triangles `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
    pub fn torus7() -> Self {
        let facets: Vec<Vec<u32>> = (0..7)
            .flat_map(|i| [vec![i, (i + 1) % 7, (i + 3) % 7], vec![i, (i + 2) % 7, (i + 3) % 7]])
            .collect();
        Self::from_facets(&facets).expect("valid torus")
    }

    pub fn simplices(&self) -> &[Vec<u32>] {
        &self.simplices
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn dimension_of(&self, i: usize) -> usize {
        self.simplices[i].len() - 1
    }

    pub fn vertices(&self) -> Vec<u32> {
        self.simplices.iter().filter(|s| s.len() == 1).map(|s| s[0]).collect()
    }

    pub fn name(&self, i: usize) -> String {
        let parts: Vec<String> = self.simplices[i].iter().map(u32::to_string).collect();
        format!("{{{}}}", parts.join(","))
    }
}

fn normalize(s: &[u32]) -> Result<Vec<u32>> {
    if s.is_empty() {
        return Err(Error::EmptySimplex);
    }
    let mut v = s.to_vec();
    v.sort_unstable();
    v.dedup();
    if v.len() > 63 {
        return Err(Error::Input("simplex with more than 63 vertices".into()));
    }
    Ok(v)
}

fn is_face(a: &[u32], b: &[u32]) -> bool {
    a.iter().all(|v| b.binary_search(v).is_ok())
}

/// Simplices ordered by inclusion.
pub fn face_poset(k: &SimplicialComplex) -> FiniteSpace {
    let n = k.len();
    let ids = (0..n).map(|i| k.name(i)).collect();
    let rel = Relation::from_pairs(
        n,
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| is_face(&k.simplices[i], &k.simplices[j])),
    );
    FiniteSpace::with_order(ids, rel).expect("inclusion is a partial order")
}

/// Strata are open simplices; `F(σ)` is the closed simplex `σ` and its
/// homeomorphism type is its dimension.
pub fn to_instance(k: &SimplicialComplex) -> StratifiedInstance {
    let space = face_poset(k);
    let elements: Vec<PointSet> = (0..k.len()).map(|i| space.down(i).clone()).collect();
    let semidec = SemiDecomposition::new(space, elements).expect("closed simplices form a semi-decomposition");
    let dims: Vec<usize> = (0..k.len()).map(|i| k.dimension_of(i)).collect();
    StratifiedInstance {
        semidec,
        types: ElementTypes::from_labels(&dims),
        classification: None,
        provenance: (0..k.len()).map(|i| format!("open {}-simplex {}", dims[i], k.name(i))).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacePosetCheck {
    pub holds: bool,
    pub class_count: usize,
    /// Weak class index -> simplex index.
    pub isomorphism: Option<Vec<usize>>,
    /// Whether every weak class is exactly one open simplex.
    pub classes_are_strata: bool,
}

/// Compares the abstract weak element space with the face poset.
pub fn check_face_poset(k: &SimplicialComplex) -> FacePosetCheck {
    let inst = to_instance(k);
    let weak = inst.weak_elements();
    let poset = face_poset(k);
    let isomorphism = iso::homeomorphism(&weak.space.target, &poset);
    let classes_are_strata = weak.classes.iter().all(|c| c.len() == 1);
    FacePosetCheck {
        holds: isomorphism.is_some() && classes_are_strata,
        class_count: weak.classes.len(),
        isomorphism,
        classes_are_strata,
    }
}
