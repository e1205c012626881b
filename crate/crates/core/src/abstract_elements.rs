//! Abstract elements `⟨x⟩` and abstract weak elements `[x]`, the spaces they
//! generate, maximal points and the quasi-recurrent set.
//!
//! Both relations only ever compare points of the same case (closed, proper,
//! residual). For a pair `x, y` of one case the relevant set
//!
//! * closed: `S = Cl(F)`,
//! * proper: `S = {z ∈ P : cl F(z) - F(z) = cl F(x) - F(x)}`,
//! * residual: `S = {z ∈ R : cl F(z) = cl F(x)}`,
//!
//! is further cut down to points whose elements are homeomorphic to `F(x)`
//! for the weak relation. Then `x ~ y` when some `x' ∈ F(x)` and `y' ∈ F(y)`
//! project into one connected component of `p(S) ⊆ X/F`. The relation is not
//! obviously transitive, so classes are taken from its equivalence closure
//! and [`AbstractPartition::raw_relation_transitive`] records whether that
//! closure changed anything.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::iso;
use crate::pointset::PointSet;
use crate::semidecomp::{Classification, PointCase, SemiDecomposition};
use crate::space::{FiniteSpace, QuotientMap};

/// Labels points so that equal labels mean homeomorphic elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementTypes {
    labels: Vec<usize>,
    names: Vec<String>,
}

impl ElementTypes {
    /// Groups points by labels supplied by the caller (e.g. a geometric
    /// homeomorphism invariant).
    pub fn from_labels<L: Eq + std::hash::Hash + ToString>(labels: &[L]) -> Self {
        let mut dict: HashMap<&L, usize> = HashMap::new();
        let mut names = Vec::new();
        let labels = labels
            .iter()
            .map(|l| {
                let next = dict.len();
                *dict.entry(l).or_insert_with(|| {
                    names.push(l.to_string());
                    next
                })
            })
            .collect();
        ElementTypes { labels, names }
    }

    /// The default typing: elements compared as finite subspaces up to
    /// homeomorphism.
    pub fn homeomorphism(f: &SemiDecomposition) -> Self {
        let mut reps: Vec<FiniteSpace> = Vec::new();
        let mut by_element: HashMap<&PointSet, usize> = HashMap::new();
        let mut labels = Vec::with_capacity(f.len());
        for x in 0..f.len() {
            if let Some(&l) = by_element.get(f.element(x)) {
                labels.push(l);
                continue;
            }
            let sub = f.element_subspace(x);
            let l = match reps.iter().position(|r| iso::is_homeomorphic(r, &sub)) {
                Some(l) => l,
                None => {
                    reps.push(sub);
                    reps.len() - 1
                }
            };
            by_element.insert(f.element(x), l);
            labels.push(l);
        }
        let names = (0..reps.len()).map(|l| format!("type{l}")).collect();
        ElementTypes { labels, names }
    }

    pub fn label(&self, x: usize) -> usize {
        self.labels[x]
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[self.labels[x]]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AbstractKind {
    Element,
    WeakElement,
}

/// The partition into abstract (weak) elements and its quotient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbstractPartition {
    pub kind: AbstractKind,
    pub classes: Vec<PointSet>,
    pub class_of: Vec<usize>,
    pub space: QuotientMap,
    /// Whether the raw witness relation was already an equivalence relation.
    pub raw_relation_transitive: bool,
}

impl AbstractPartition {
    fn from_labels(kind: AbstractKind, space: &FiniteSpace, labels: &[usize], raw_transitive: bool) -> Self {
        let quotient = space.quotient_by_labels(labels);
        AbstractPartition {
            kind,
            classes: quotient.classes.clone(),
            class_of: quotient.class_of.clone(),
            space: quotient,
            raw_relation_transitive: raw_transitive,
        }
    }

    pub fn class_of_point(&self, x: usize) -> &PointSet {
        &self.classes[self.class_of[x]]
    }

    /// Whether every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &AbstractPartition) -> bool {
        coarser.space.is_coarsening_of(&self.space)
    }
}

/// The set `S` shared by every pair compared inside one group.
#[derive(PartialEq, Eq, Hash)]
struct GroupKey {
    case: PointCase,
    set: Option<PointSet>,
    label: Option<usize>,
}

fn group_key(f: &SemiDecomposition, cls: &Classification, types: Option<&ElementTypes>, x: usize) -> GroupKey {
    let case = cls.case_of(x);
    let set = match case {
        PointCase::Closed => None,
        PointCase::Proper => Some(f.derived_set(x)),
        PointCase::Residual => Some(f.element_closure(x).clone()),
    };
    GroupKey { case, set, label: types.map(|t| t.label(x)) }
}

/// The raw witness relation, as adjacency sets.
pub fn raw_relation(f: &SemiDecomposition, cls: &Classification, types: Option<&ElementTypes>) -> Vec<PointSet> {
    let n = f.len();
    let dec = f.decomposition_space();
    let mut groups: HashMap<GroupKey, Vec<usize>> = HashMap::new();
    for x in 0..n {
        groups.entry(group_key(f, cls, types, x)).or_default().push(x);
    }
    let mut related = vec![PointSet::empty(n); n];
    for members in groups.values() {
        let group = PointSet::from_indices(n, members.iter().copied());
        let image = dec.image(&group);
        let comps = dec.target.connected_components(&image);
        let mut comp_of = vec![usize::MAX; dec.target.len()];
        for (i, c) in comps.iter().enumerate() {
            for k in c.iter() {
                comp_of[k] = i;
            }
        }
        // Components reachable from x through some x' ∈ F(x).
        let hits: Vec<PointSet> = members
            .iter()
            .map(|&x| {
                PointSet::from_indices(
                    comps.len(),
                    f.element(x).iter().map(|x1| comp_of[dec.project(x1)]).filter(|&c| c != usize::MAX),
                )
            })
            .collect();
        for (i, &x) in members.iter().enumerate() {
            for (j, &y) in members.iter().enumerate() {
                if hits[i].intersects(&hits[j]) {
                    related[x].insert(y);
                }
            }
        }
    }
    related
}

fn partition_from_relation(kind: AbstractKind, space: &FiniteSpace, related: &[PointSet]) -> AbstractPartition {
    let n = space.len();
    let mut labels: Vec<usize> = (0..n).collect();
    fn find(labels: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while labels[r] != r {
            r = labels[r];
        }
        let mut c = x;
        while labels[c] != r {
            let next = labels[c];
            labels[c] = r;
            c = next;
        }
        r
    }
    for x in 0..n {
        for y in related[x].iter() {
            let (a, b) = (find(&mut labels, x), find(&mut labels, y));
            if a != b {
                labels[a.max(b)] = a.min(b);
            }
        }
    }
    let roots: Vec<usize> = (0..n).map(|x| find(&mut labels, x)).collect();
    let transitive = (0..n).all(|x| (0..n).all(|y| roots[x] != roots[y] || related[x].contains(y)));
    AbstractPartition::from_labels(kind, space, &roots, transitive)
}

/// Abstract elements, with the classification computed from `f`.
pub fn abstract_elements(f: &SemiDecomposition) -> AbstractPartition {
    abstract_elements_with(f, &f.classify())
}

/// Abstract elements under a supplied classification.
pub fn abstract_elements_with(f: &SemiDecomposition, cls: &Classification) -> AbstractPartition {
    partition_from_relation(AbstractKind::Element, f.space(), &raw_relation(f, cls, None))
}

/// Abstract weak elements, with the classification computed from `f`.
pub fn abstract_weak_elements(f: &SemiDecomposition, types: &ElementTypes) -> AbstractPartition {
    abstract_weak_elements_with(f, &f.classify(), types)
}

/// Abstract weak elements under a supplied classification.
pub fn abstract_weak_elements_with(f: &SemiDecomposition, cls: &Classification, types: &ElementTypes) -> AbstractPartition {
    partition_from_relation(AbstractKind::WeakElement, f.space(), &raw_relation(f, cls, Some(types)))
}

/// The abstract element space `X/⟨F⟩`.
pub fn abstract_element_space(f: &SemiDecomposition) -> QuotientMap {
    abstract_elements(f).space
}

/// The abstract weak element space `X/[F]`.
pub fn abstract_weak_element_space(f: &SemiDecomposition, types: &ElementTypes) -> QuotientMap {
    abstract_weak_elements(f, types).space
}

/// Abstract elements of a decomposition computed the way decompositions
/// define them: `⟨x⟩` is the preimage under `p: X -> X/F` of the connected
/// component of `p(S)` containing `p(x)`.
pub fn decomposition_abstract_elements(f: &SemiDecomposition) -> Result<AbstractPartition> {
    if !f.is_decomposition() {
        return Err(Error::Input("not a decomposition".into()));
    }
    let cls = f.classify();
    let n = f.len();
    let dec = f.decomposition_space();
    let mut labels = vec![usize::MAX; n];
    let mut next = 0;
    let mut groups: HashMap<GroupKey, Vec<usize>> = HashMap::new();
    for x in 0..n {
        groups.entry(group_key(f, &cls, None, x)).or_default().push(x);
    }
    let mut keys: Vec<&Vec<usize>> = groups.values().collect();
    keys.sort();
    for members in keys {
        let group = PointSet::from_indices(n, members.iter().copied());
        for comp in dec.target.connected_components(&dec.image(&group)) {
            for x in dec.preimage(&comp).iter() {
                labels[x] = next;
            }
            next += 1;
        }
    }
    Ok(AbstractPartition::from_labels(AbstractKind::Element, f.space(), &labels, true))
}

/// For a decomposition with connected elements: `⟨x⟩` as the connected
/// component of `S` (in `X` itself) containing `F(x)`. Returns `None` if
/// some element is split across components of its `S`.
pub fn component_formula_elements(f: &SemiDecomposition) -> Option<Vec<PointSet>> {
    let cls = f.classify();
    let n = f.len();
    let mut out = Vec::with_capacity(n);
    for x in 0..n {
        let s = PointSet::from_indices(
            n,
            (0..n).filter(|&z| group_key(f, &cls, None, z) == group_key(f, &cls, None, x)),
        );
        let comp = f.space().connected_components(&s).into_iter().find(|c| c.contains(x))?;
        if !f.element(x).is_subset(&comp) {
            return None;
        }
        out.push(comp);
    }
    Some(out)
}

/// Points whose element closure is not strictly contained in another.
pub fn maximal_points(f: &SemiDecomposition) -> PointSet {
    let n = f.len();
    PointSet::from_indices(
        n,
        (0..n).filter(|&x| {
            let cx = f.element_closure(x);
            !(0..n).any(|y| {
                let cy = f.element_closure(y);
                cx.is_subset(cy) && cx != cy
            })
        }),
    )
}

/// `Q(F)`: union of abstract elements of recurrent or non-maximal points.
pub fn quasi_recurrent(f: &SemiDecomposition) -> PointSet {
    quasi_recurrent_with(f, &f.classify(), &abstract_elements(f))
}

pub fn quasi_recurrent_with(f: &SemiDecomposition, cls: &Classification, partition: &AbstractPartition) -> PointSet {
    let max = maximal_points(f);
    let seeds = cls.recurrent.union(&max.complement());
    let mut q = f.space().empty_set();
    for x in seeds.iter() {
        q.union_with(partition.class_of_point(x));
    }
    q
}
