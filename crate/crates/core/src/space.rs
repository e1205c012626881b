//! Finite topological spaces encoded by their specialization pre-order.
//!
//! A finite space is determined by the pre-order `x <= y  iff  x ∈ cl{y}`:
//! closed sets are exactly the down-sets and open sets the up-sets. Open and
//! closed sets are never materialized; every operation works on the order.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::relation::Relation;

/// A finite topological space given by its specialization pre-order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSpace {
    ids: Vec<String>,
    index: HashMap<String, usize>,
    /// `le.contains(x, y)` iff `x <= y`.
    le: Relation,
    /// Transpose of `le`: row `y` is the down-set of `y`.
    ge: Relation,
}

impl FiniteSpace {
    /// Builds a space from point identifiers and generator pairs `(x, y)`
    /// meaning `x <= y`. The order is the reflexive-transitive closure.
    pub fn build<S: AsRef<str>>(points: &[S], generators: &[(S, S)]) -> Result<Self> {
        let ids: Vec<String> = points.iter().map(|p| p.as_ref().to_string()).collect();
        let index = index_ids(&ids)?;
        let lookup = |name: &str| index.get(name).copied().ok_or_else(|| Error::UnknownPoint(name.to_string()));
        let mut gens = Relation::empty(ids.len());
        for (x, y) in generators {
            gens.insert(lookup(x.as_ref())?, lookup(y.as_ref())?);
        }
        Ok(Self::from_parts(ids, index, gens.reflexive_transitive_closure()))
    }

    /// Builds a space from an order that must already be transitive.
    /// Missing reflexive pairs are added.
    pub fn with_order(ids: Vec<String>, order: Relation) -> Result<Self> {
        let index = index_ids(&ids)?;
        if order.size() != ids.len() {
            return Err(Error::PartitionSize { expected: ids.len(), found: order.size() });
        }
        let mut le = order;
        for x in 0..ids.len() {
            le.insert(x, x);
        }
        if let Some((x, y, z)) = le.transitivity_witness() {
            return Err(Error::NotTransitive { x: ids[x].clone(), y: ids[y].clone(), z: ids[z].clone() });
        }
        Ok(Self::from_parts(ids, index, le))
    }

    /// The discrete space on the given points.
    pub fn discrete<S: AsRef<str>>(points: &[S]) -> Result<Self> {
        Self::build(points, &[])
    }

    pub(crate) fn from_parts(ids: Vec<String>, index: HashMap<String, usize>, le: Relation) -> Self {
        debug_assert!(le.is_preorder());
        let ge = le.transpose();
        FiniteSpace { ids, index, le, ge }
    }

    /// Builds a space from trusted parts; identifiers must be unique.
    pub(crate) fn from_trusted(ids: Vec<String>, le: Relation) -> Self {
        let index = ids.iter().enumerate().map(|(i, id)| (id.clone(), i)).collect();
        Self::from_parts(ids, index, le)
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn id(&self, point: usize) -> &str {
        &self.ids[point]
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.index.get(id).copied().ok_or_else(|| Error::UnknownPoint(id.to_string()))
    }

    pub fn point_set<S: AsRef<str>>(&self, ids: &[S]) -> Result<PointSet> {
        let mut set = self.empty_set();
        for id in ids {
            set.insert(self.index_of(id.as_ref())?);
        }
        Ok(set)
    }

    pub fn names(&self, set: &PointSet) -> Vec<String> {
        set.iter().map(|p| self.ids[p].clone()).collect()
    }

    pub fn empty_set(&self) -> PointSet {
        PointSet::empty(self.len())
    }

    pub fn all_points(&self) -> PointSet {
        PointSet::full(self.len())
    }

    /// The specialization pre-order as a relation (`x R y` iff `x <= y`).
    pub fn order(&self) -> &Relation {
        &self.le
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.le.contains(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.le(x, y) || self.le(y, x)
    }

    /// Down-set of `y`, i.e. the closure of `{y}`.
    pub fn down(&self, y: usize) -> &PointSet {
        self.ge.successors(y)
    }

    /// Up-set of `x`, i.e. the smallest open set containing `x`.
    pub fn up(&self, x: usize) -> &PointSet {
        self.le.successors(x)
    }

    /// Closure of `set`: its down-closure.
    pub fn closure(&self, set: &PointSet) -> PointSet {
        let mut out = self.empty_set();
        for a in set.iter() {
            out.union_with(self.down(a));
        }
        out
    }

    /// Smallest open set containing `set`: its up-closure.
    pub fn open_hull(&self, set: &PointSet) -> PointSet {
        let mut out = self.empty_set();
        for a in set.iter() {
            out.union_with(self.up(a));
        }
        out
    }

    pub fn is_closed(&self, set: &PointSet) -> bool {
        set.iter().all(|a| self.down(a).is_subset(set))
    }

    pub fn is_open(&self, set: &PointSet) -> bool {
        set.iter().all(|a| self.up(a).is_subset(set))
    }

    /// Connected components of the subspace `set`, ordered by smallest member.
    ///
    /// Components are computed on the comparability graph restricted to
    /// `set`, which for Alexandroff spaces agrees with topological
    /// connectedness of the subspace.
    pub fn connected_components(&self, set: &PointSet) -> Vec<PointSet> {
        let mut seen = self.empty_set();
        let mut out = Vec::new();
        for start in set.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = self.empty_set();
            let mut stack = vec![start];
            seen.insert(start);
            while let Some(p) = stack.pop() {
                comp.insert(p);
                let mut nbrs = self.down(p).union(self.up(p));
                nbrs.intersect_with(set);
                nbrs.difference_with(&seen);
                for q in nbrs.iter() {
                    seen.insert(q);
                    stack.push(q);
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self, set: &PointSet) -> bool {
        self.connected_components(set).len() <= 1
    }

    /// The subspace on `set`, with the map from subspace index to point.
    pub fn subspace(&self, set: &PointSet) -> (FiniteSpace, Vec<usize>) {
        let members = set.to_vec();
        let ids = members.iter().map(|&p| self.ids[p].clone()).collect();
        let mut le = Relation::empty(members.len());
        for (i, &p) in members.iter().enumerate() {
            for (j, &q) in members.iter().enumerate() {
                if self.le(p, q) {
                    le.insert(i, j);
                }
            }
        }
        (FiniteSpace::from_trusted(ids, le), members)
    }

    /// Quotient by a partition of the points.
    ///
    /// The target pre-order is the reflexive-transitive closure of
    /// `[x] R [y]  iff  x' <= y'` for some `x' ∈ [x]`, `y' ∈ [y]`, which is
    /// the specialization order of the quotient topology. Classes are
    /// reordered by smallest member.
    pub fn quotient(&self, partition: &[PointSet]) -> Result<QuotientMap> {
        let n = self.len();
        let mut class_of = vec![usize::MAX; n];
        for (c, class) in partition.iter().enumerate() {
            if class.universe() != n {
                return Err(Error::PartitionSize { expected: n, found: class.universe() });
            }
            for p in class.iter() {
                if class_of[p] != usize::MAX {
                    return Err(Error::PartitionOverlap(self.ids[p].clone()));
                }
                class_of[p] = c;
            }
        }
        if let Some(p) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::PartitionNotCovering(self.ids[p].clone()));
        }
        Ok(self.quotient_by_labels(&class_of))
    }

    /// Quotient identifying points with equal labels.
    pub fn quotient_by_labels<L: Eq + std::hash::Hash>(&self, labels: &[L]) -> QuotientMap {
        assert_eq!(labels.len(), self.len(), "one label per point");
        let mut canon: HashMap<&L, usize> = HashMap::new();
        let mut class_of = Vec::with_capacity(self.len());
        for l in labels {
            let next = canon.len();
            class_of.push(*canon.entry(l).or_insert(next));
        }
        let k = canon.len();
        let mut classes = vec![self.empty_set(); k];
        for (p, &c) in class_of.iter().enumerate() {
            classes[c].insert(p);
        }
        let mut induced = Relation::empty(k);
        for (x, y) in self.le.pairs() {
            induced.insert(class_of[x], class_of[y]);
        }
        let target_ids = classes.iter().map(|c| class_name(self, c)).collect();
        let target = FiniteSpace::from_trusted(target_ids, induced.reflexive_transitive_closure());
        QuotientMap { source: self.clone(), classes, class_of, target }
    }

    /// The identity-like quotient in which every class is a single point.
    pub fn identity_quotient(&self) -> QuotientMap {
        let labels: Vec<usize> = (0..self.len()).collect();
        self.quotient_by_labels(&labels)
    }
}

fn index_ids(ids: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(ids.len());
    for (i, id) in ids.iter().enumerate() {
        if index.insert(id.clone(), i).is_some() {
            return Err(Error::DuplicatePoint(id.clone()));
        }
    }
    Ok(index)
}

fn class_name(space: &FiniteSpace, class: &PointSet) -> String {
    format!("[{}]", space.names(class).join(","))
}

/// A quotient `source -> target` together with its projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMap {
    pub source: FiniteSpace,
    pub classes: Vec<PointSet>,
    pub class_of: Vec<usize>,
    pub target: FiniteSpace,
}

impl QuotientMap {
    pub fn project(&self, point: usize) -> usize {
        self.class_of[point]
    }

    /// Image of a set of source points, as a set of target points.
    pub fn image(&self, set: &PointSet) -> PointSet {
        PointSet::from_indices(self.target.len(), set.iter().map(|p| self.class_of[p]))
    }

    /// Preimage of a set of target points.
    pub fn preimage(&self, set: &PointSet) -> PointSet {
        let mut out = self.source.empty_set();
        for c in set.iter() {
            out.union_with(&self.classes[c]);
        }
        out
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Whether every class of `finer` lies in a single class of `self`.
    pub fn is_coarsening_of(&self, finer: &QuotientMap) -> bool {
        finer.classes.iter().all(|c| {
            let mut it = c.iter().map(|p| self.class_of[p]);
            match it.next() {
                Some(first) => it.all(|k| k == first),
                None => true,
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc() -> FiniteSpace {
        FiniteSpace::build(&["s", "t", "o"], &[("s", "o"), ("t", "o")]).unwrap()
    }

    #[test]
    fn build_closes_generators() {
        let one = FiniteSpace::build(&["a"], &[]).unwrap();
        assert!(one.le(0, 0));
        assert_eq!(one.order().pair_count(), 1);

        let chain = FiniteSpace::build(&["c", "p", "r"], &[("c", "p"), ("p", "r")]).unwrap();
        assert!(chain.le(0, 2));
        assert!(!chain.le(2, 0));

        let arc = arc();
        assert!(arc.le(0, 2) && arc.le(1, 2));
        assert!(!arc.comparable(0, 1));
        assert_eq!(arc.order().pair_count(), 5);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(FiniteSpace::build(&["a", "a"], &[]), Err(Error::DuplicatePoint("a".into())));
        assert_eq!(FiniteSpace::build(&["a"], &[("a", "b")]), Err(Error::UnknownPoint("b".into())));
        let bad = Relation::from_pairs(3, [(0, 1), (1, 2)]);
        assert!(matches!(
            FiniteSpace::with_order(vec!["a".into(), "b".into(), "c".into()], bad),
            Err(Error::NotTransitive { .. })
        ));
    }

    #[test]
    fn closure_examples() {
        let arc = arc();
        let o = arc.point_set(&["o"]).unwrap();
        assert_eq!(arc.names(&arc.closure(&o)), vec!["s", "t", "o"]);
        let s = arc.point_set(&["s"]).unwrap();
        assert_eq!(arc.closure(&s), s);
        let chain = FiniteSpace::build(&["c", "p", "r"], &[("c", "p"), ("p", "r")]).unwrap();
        let p = chain.point_set(&["p"]).unwrap();
        assert_eq!(chain.names(&chain.closure(&p)), vec!["c", "p"]);
    }

    #[test]
    fn component_examples() {
        let arc = arc();
        let st = arc.point_set(&["s", "t"]).unwrap();
        assert_eq!(arc.connected_components(&st).len(), 2);
        assert_eq!(arc.connected_components(&arc.all_points()).len(), 1);
        assert!(arc.connected_components(&arc.empty_set()).is_empty());
    }

    #[test]
    fn quotient_examples() {
        let e = FiniteSpace::build(&["c", "p"], &[("c", "p")]).unwrap();
        let q = e.quotient(&[e.all_points()]).unwrap();
        assert_eq!(q.target.len(), 1);

        let circle = FiniteSpace::build(
            &["u", "v", "e1", "e2"],
            &[("u", "e1"), ("v", "e1"), ("u", "e2"), ("v", "e2")],
        )
        .unwrap();
        let q = circle
            .quotient(&[circle.point_set(&["u", "v"]).unwrap(), circle.point_set(&["e1", "e2"]).unwrap()])
            .unwrap();
        assert_eq!(q.target.len(), 2);
        assert!(q.target.le(0, 1) && !q.target.le(1, 0));
        assert_eq!(q.target.id(0), "[u,v]");
    }

    #[test]
    fn quotient_rejects_bad_partitions() {
        let arc = arc();
        let s = arc.point_set(&["s"]).unwrap();
        assert_eq!(arc.quotient(&[s.clone()]), Err(Error::PartitionNotCovering("t".into())));
        assert_eq!(arc.quotient(&[s.clone(), s, arc.all_points()]), Err(Error::PartitionOverlap("s".into())));
    }

    #[test]
    fn quotient_can_merge_cyclically() {
        // a <= b, c <= d; identifying {a, d} and {b, c} makes the two classes equivalent.
        let sp = FiniteSpace::build(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]).unwrap();
        let q = sp.quotient_by_labels(&[0, 1, 1, 0]);
        assert!(q.target.le(0, 1) && q.target.le(1, 0));
    }

    #[test]
    fn open_and_closed_sets() {
        let arc = arc();
        let o = arc.point_set(&["o"]).unwrap();
        assert!(arc.is_open(&o));
        assert!(!arc.is_closed(&o));
        assert_eq!(arc.open_hull(&arc.point_set(&["s"]).unwrap()), arc.point_set(&["s", "o"]).unwrap());
    }
}
