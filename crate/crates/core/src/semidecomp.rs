//! Semi-decompositions of finite spaces and the invariants read off them:
//! saturation, invariance, the decomposition space, class (semi-)
//! decompositions and the closed / proper / residual point classification.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::relation::Relation;
use crate::space::{FiniteSpace, QuotientMap};

/// A map `x -> F(x)` on a finite space with
/// 1. `x ∈ F(x)`, and
/// 2. `x ∈ F(y)` implies `F(x) ⊆ F(y)`.
///
/// The topology and `F` are independent inputs: nothing forces an element
/// to be closed, open or connected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiDecomposition {
    space: FiniteSpace,
    elements: Vec<PointSet>,
    closures: Vec<PointSet>,
}

/// Which of the three disjoint point classes a point falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PointCase {
    /// `cl F(x) = F(x)`.
    Closed,
    /// Not closed, derived set `cl F(x) - F(x)` closed.
    Proper,
    /// Neither closed nor proper.
    Residual,
}

/// The partition `X = Cl ⊔ P ⊔ R`, with `recurrent = Cl ⊔ R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub closed: PointSet,
    pub proper: PointSet,
    pub residual: PointSet,
    pub recurrent: PointSet,
}

impl Classification {
    /// Every point closed. Used by adapters whose geometric elements are
    /// closed even though their finite footprints are not.
    pub fn all_closed(n: usize) -> Self {
        Classification {
            closed: PointSet::full(n),
            proper: PointSet::empty(n),
            residual: PointSet::empty(n),
            recurrent: PointSet::full(n),
        }
    }

    pub fn case_of(&self, x: usize) -> PointCase {
        if self.closed.contains(x) {
            PointCase::Closed
        } else if self.proper.contains(x) {
            PointCase::Proper
        } else {
            PointCase::Residual
        }
    }

    /// Whether the three parts are disjoint, cover `0..n` and `recurrent = Cl ⊔ R`.
    pub fn is_partition(&self, n: usize) -> bool {
        let all = PointSet::full(n);
        self.closed.is_disjoint(&self.proper)
            && self.closed.is_disjoint(&self.residual)
            && self.proper.is_disjoint(&self.residual)
            && self.closed.union(&self.proper).union(&self.residual) == all
            && self.recurrent == self.closed.union(&self.residual)
    }
}

/// Outcome of the three invariance conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InvarianceReport {
    /// Closure of every invariant subset is invariant.
    pub cond1: bool,
    /// `Cl`, `P` and `R` are invariant.
    pub cond2: bool,
    /// Derived sets of proper points are invariant.
    pub cond3: bool,
    pub overall: bool,
}

impl SemiDecomposition {
    /// Validates both axioms and returns the semi-decomposition.
    pub fn new(space: FiniteSpace, elements: Vec<PointSet>) -> Result<Self> {
        validate(&space, &elements)?;
        let closures = elements.iter().map(|e| space.closure(e)).collect();
        Ok(SemiDecomposition { space, elements, closures })
    }

    /// Builds from a map point identifier -> member identifiers.
    pub fn from_named<S: AsRef<str>>(space: FiniteSpace, elements: &[(S, Vec<S>)]) -> Result<Self> {
        let mut sets: Vec<Option<PointSet>> = vec![None; space.len()];
        for (x, members) in elements {
            let x = space.index_of(x.as_ref())?;
            sets[x] = Some(space.point_set(members)?);
        }
        let sets = sets
            .into_iter()
            .enumerate()
            .map(|(p, s)| s.ok_or_else(|| Error::MissingElement(space.id(p).to_string())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(space, sets)
    }

    /// `F(x) = {x}` for every point.
    pub fn singletons(space: FiniteSpace) -> Self {
        let n = space.len();
        let elements = (0..n).map(|x| PointSet::singleton(n, x)).collect();
        Self::new(space, elements).expect("singletons satisfy both axioms")
    }

    /// The semi-decomposition of down-sets of a pre-order: `F(y) = {x : x ⊑ y}`.
    /// Missing reflexive pairs are added; a non-transitive order is rejected.
    pub fn from_preorder(space: FiniteSpace, order: &Relation) -> Result<Self> {
        let n = space.len();
        if order.size() != n {
            return Err(Error::PartitionSize { expected: n, found: order.size() });
        }
        let mut order = order.clone();
        for x in 0..n {
            order.insert(x, x);
        }
        if let Some((x, y, z)) = order.transitivity_witness() {
            return Err(Error::NotTransitive {
                x: space.id(x).to_string(),
                y: space.id(y).to_string(),
                z: space.id(z).to_string(),
            });
        }
        let elements = (0..n).map(|y| order.predecessors(y)).collect();
        Self::new(space, elements)
    }

    /// The induced pre-order `x ⊑ y iff x ∈ F(y)`.
    pub fn to_preorder(&self) -> Relation {
        Relation::from_pairs(
            self.len(),
            (0..self.len()).flat_map(|y| self.elements[y].iter().map(move |x| (x, y))),
        )
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn len(&self) -> usize {
        self.space.len()
    }

    pub fn is_empty(&self) -> bool {
        self.space.is_empty()
    }

    pub fn element(&self, x: usize) -> &PointSet {
        &self.elements[x]
    }

    pub fn elements(&self) -> &[PointSet] {
        &self.elements
    }

    /// `cl F(x)`.
    pub fn element_closure(&self, x: usize) -> &PointSet {
        &self.closures[x]
    }

    /// `cl F(x) - F(x)`.
    pub fn derived_set(&self, x: usize) -> PointSet {
        self.closures[x].difference(&self.elements[x])
    }

    /// `F(A) = ⋃_{x ∈ A} F(x)`.
    pub fn saturation(&self, set: &PointSet) -> PointSet {
        let mut out = self.space.empty_set();
        for x in set.iter() {
            out.union_with(&self.elements[x]);
        }
        out
    }

    pub fn is_invariant_set(&self, set: &PointSet) -> bool {
        set.iter().all(|x| self.elements[x].is_subset(set))
    }

    /// An invariant set is minimal when `cl F(x) = A` for every `x ∈ A`.
    pub fn is_minimal_set(&self, set: &PointSet) -> Result<bool> {
        if !self.is_invariant_set(set) {
            return Err(Error::NotInvariant);
        }
        Ok(set.iter().all(|x| &self.closures[x] == set))
    }

    /// Whether the elements are pairwise equal or disjoint.
    pub fn is_decomposition(&self) -> bool {
        (0..self.len()).all(|x| self.elements[x].iter().all(|y| self.elements[y] == self.elements[x]))
    }

    /// The decomposition space `X/F`: points with equal elements identified.
    pub fn decomposition_space(&self) -> QuotientMap {
        self.space.quotient_by_labels(&self.elements)
    }

    /// `F̂(x) = {y : cl F(y) = cl F(x)}`.
    pub fn element_class(&self, x: usize) -> PointSet {
        PointSet::from_indices(self.len(), (0..self.len()).filter(|&y| self.closures[y] == self.closures[x]))
    }

    /// The class decomposition: distinct element classes, by smallest member.
    pub fn class_decomposition(&self) -> Vec<PointSet> {
        let mut seen: HashMap<&PointSet, usize> = HashMap::new();
        let mut classes: Vec<PointSet> = Vec::new();
        for x in 0..self.len() {
            let next = classes.len();
            let c = *seen.entry(&self.closures[x]).or_insert(next);
            if c == next {
                classes.push(self.space.empty_set());
            }
            classes[c].insert(x);
        }
        classes
    }

    /// The pre-order `≤_F̃`: transitive closure of
    /// `x'' ≤₀ x iff cl F(x'') = cl F(x')` for some `x' ∈ F(x)`.
    pub fn class_order(&self) -> Relation {
        let n = self.len();
        let mut base = Relation::empty(n);
        for x in 0..n {
            for x1 in self.elements[x].iter() {
                for x2 in 0..n {
                    if self.closures[x2] == self.closures[x1] {
                        base.insert(x2, x);
                    }
                }
            }
        }
        base.transitive_closure()
    }

    /// The class semi-decomposition `F̃(x) = {y : y ≤_F̃ x}`.
    pub fn class_semidecomposition(&self) -> SemiDecomposition {
        let order = self.class_order();
        let elements = (0..self.len()).map(|x| order.predecessors(x)).collect();
        Self::new(self.space.clone(), elements).expect("class semi-decompositions satisfy both axioms")
    }

    /// Splits the points into closed, proper and residual ones.
    pub fn classify(&self) -> Classification {
        let n = self.len();
        let mut c = Classification {
            closed: PointSet::empty(n),
            proper: PointSet::empty(n),
            residual: PointSet::empty(n),
            recurrent: PointSet::empty(n),
        };
        for x in 0..n {
            if self.closures[x] == self.elements[x] {
                c.closed.insert(x);
                c.recurrent.insert(x);
            } else if self.space.is_closed(&self.derived_set(x)) {
                c.proper.insert(x);
            } else {
                c.residual.insert(x);
                c.recurrent.insert(x);
            }
        }
        c
    }

    /// Evaluates the three invariance conditions.
    ///
    /// Condition 1 quantifies over all invariant subsets; it is checked on
    /// the closures of single elements, which suffices because every
    /// invariant set is a union of elements, closure distributes over finite
    /// unions and unions of invariant sets are invariant.
    pub fn check_invariance(&self) -> InvarianceReport {
        let cond1 = (0..self.len()).all(|x| self.is_invariant_set(&self.closures[x]));
        let cls = self.classify();
        let cond2 = [&cls.closed, &cls.proper, &cls.residual].iter().all(|s| self.is_invariant_set(s));
        let cond3 = cls.proper.iter().all(|x| self.is_invariant_set(&self.derived_set(x)));
        InvarianceReport { cond1, cond2, cond3, overall: cond1 && cond2 && cond3 }
    }

    /// Condition 1 by brute force over every subset. Exponential; only
    /// meant to cross-check the per-element reduction on tiny spaces.
    pub fn cond1_exhaustive(&self) -> bool {
        let n = self.len();
        assert!(n <= 16, "exhaustive invariance check is exponential");
        (0u32..(1u32 << n)).all(|mask| {
            let set = PointSet::from_indices(n, (0..n).filter(|&i| mask & (1 << i) != 0));
            !self.is_invariant_set(&set) || self.is_invariant_set(&self.space.closure(&set))
        })
    }

    /// `F(x)` as a subspace, for homeomorphism typing.
    pub fn element_subspace(&self, x: usize) -> FiniteSpace {
        self.space.subspace(&self.elements[x]).0
    }
}

fn validate(space: &FiniteSpace, elements: &[PointSet]) -> Result<()> {
    let n = space.len();
    if elements.len() != n {
        return Err(Error::PartitionSize { expected: n, found: elements.len() });
    }
    for e in elements {
        if e.universe() != n {
            return Err(Error::PartitionSize { expected: n, found: e.universe() });
        }
    }
    if let Some(x) = (0..n).find(|&x| !elements[x].contains(x)) {
        return Err(Error::Axiom1Violation(space.id(x).to_string()));
    }
    for y in 0..n {
        for x in elements[y].iter() {
            if !elements[x].is_subset(&elements[y]) {
                return Err(Error::Axiom2Violation { x: space.id(x).to_string(), y: space.id(y).to_string() });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn names(f: &SemiDecomposition, s: &PointSet) -> Vec<String> {
        f.space().names(s)
    }

    #[test]
    fn validate_examples() {
        let arc = fixtures::arc_space();
        assert!(SemiDecomposition::from_named(arc.clone(), &[("s", vec!["s"]), ("t", vec!["t"]), ("o", vec!["o"])]).is_ok());
        assert!(fixtures::semiarc().is_ok());
        let bad = SemiDecomposition::from_named(
            arc.clone(),
            &[("s", vec!["s"]), ("t", vec!["t", "s"]), ("o", vec!["o", "t"])],
        );
        assert_eq!(bad, Err(Error::Axiom2Violation { x: "t".into(), y: "o".into() }));
        let bad = SemiDecomposition::from_named(arc.clone(), &[("s", vec!["t"]), ("t", vec!["t"]), ("o", vec!["o"])]);
        assert_eq!(bad, Err(Error::Axiom1Violation("s".into())));
        let missing = SemiDecomposition::from_named(arc, &[("s", vec!["s"]), ("t", vec!["t"])]);
        assert_eq!(missing, Err(Error::MissingElement("o".into())));
    }

    #[test]
    fn preorder_correspondence() {
        let chain = fixtures::chain_space();
        let order = chain.order().clone();
        let f = SemiDecomposition::from_preorder(chain.clone(), &order).unwrap();
        assert_eq!(names(&f, f.element(2)), vec!["c", "p", "r"]);
        assert_eq!(names(&f, f.element(1)), vec!["c", "p"]);
        assert_eq!(names(&f, f.element(0)), vec!["c"]);
        assert_eq!(f.to_preorder(), order);

        let discrete = SemiDecomposition::from_preorder(chain.clone(), &Relation::identity(3)).unwrap();
        assert_eq!(discrete, SemiDecomposition::singletons(chain.clone()));

        let bad = Relation::from_pairs(3, [(0, 1), (1, 2)]);
        assert!(matches!(SemiDecomposition::from_preorder(chain, &bad), Err(Error::NotTransitive { .. })));
    }

    #[test]
    fn saturation_and_invariance() {
        let f = fixtures::semiarc().unwrap();
        let sp = f.space();
        let o = sp.point_set(&["o"]).unwrap();
        assert_eq!(names(&f, &f.saturation(&o)), vec!["t", "o"]);
        assert!(f.saturation(&sp.empty_set()).is_empty());
        assert!(f.is_invariant_set(&sp.point_set(&["o", "t"]).unwrap()));
        assert!(!f.is_invariant_set(&o));
        assert!(f.is_invariant_set(&sp.all_points()));
        assert!(f.is_invariant_set(&sp.empty_set()));

        let single = SemiDecomposition::singletons(fixtures::arc_space());
        let a = single.space().point_set(&["s", "o"]).unwrap();
        assert_eq!(single.saturation(&a), a);
    }

    #[test]
    fn minimal_sets() {
        let discrete = SemiDecomposition::singletons(FiniteSpace::discrete(&["a", "b"]).unwrap());
        assert_eq!(discrete.is_minimal_set(&PointSet::singleton(2, 0)), Ok(true));

        let f = fixtures::semiarc().unwrap();
        let sp = f.space();
        assert_eq!(f.is_minimal_set(&sp.point_set(&["t"]).unwrap()), Ok(true));
        assert_eq!(f.is_minimal_set(&sp.point_set(&["o", "t"]).unwrap()), Ok(false));
        assert_eq!(f.is_minimal_set(&sp.point_set(&["o"]).unwrap()), Err(Error::NotInvariant));
    }

    #[test]
    fn decomposition_space_examples() {
        let single = SemiDecomposition::singletons(fixtures::arc_space());
        assert_eq!(single.decomposition_space().class_count(), 3);

        let f = fixtures::semiarc().unwrap();
        let q = f.decomposition_space();
        assert_eq!(q.class_count(), 3);
        let (s, t, o) = (q.project(0), q.project(1), q.project(2));
        assert!(q.target.le(s, o) && q.target.le(t, o) && !q.target.comparable(s, t));

        let point = SemiDecomposition::singletons(FiniteSpace::discrete(&["x"]).unwrap());
        assert_eq!(point.decomposition_space().class_count(), 1);
    }

    #[test]
    fn element_classes() {
        let e = fixtures::fixture_e().unwrap();
        assert_eq!(e.element_class(1).to_vec(), vec![1]);
        assert_eq!(e.element_class(0).to_vec(), vec![0]);

        let discrete = SemiDecomposition::singletons(FiniteSpace::discrete(&["a", "b", "c"]).unwrap());
        assert_eq!(discrete.class_decomposition().len(), 3);
        let arc = SemiDecomposition::singletons(fixtures::arc_space());
        assert_eq!(arc.class_decomposition().len(), 3);
    }

    #[test]
    fn class_semidecomposition_examples() {
        let arc = SemiDecomposition::singletons(fixtures::arc_space());
        let tilde = arc.class_semidecomposition();
        for x in 0..3 {
            assert_eq!(tilde.element(x), &arc.element_class(x));
            assert_eq!(tilde.element(x).len(), 1);
        }

        let e = fixtures::fixture_e().unwrap();
        let tilde = e.class_semidecomposition();
        assert_eq!(names(&e, tilde.element(1)), vec!["c", "p"]);
        assert_eq!(names(&e, &e.element_class(1)), vec!["p"]);

        let one = SemiDecomposition::singletons(FiniteSpace::discrete(&["x"]).unwrap());
        assert_eq!(one.class_semidecomposition(), one);
    }

    #[test]
    fn classification_examples() {
        let arc = SemiDecomposition::singletons(fixtures::arc_space());
        let c = arc.classify();
        assert_eq!(arc.space().names(&c.closed), vec!["s", "t"]);
        assert_eq!(arc.space().names(&c.proper), vec!["o"]);
        assert!(c.residual.is_empty());

        let chain = fixtures::chain().unwrap();
        let c = chain.classify();
        assert_eq!(chain.space().names(&c.closed), vec!["c"]);
        assert_eq!(chain.space().names(&c.proper), vec!["p"]);
        assert_eq!(chain.space().names(&c.residual), vec!["r"]);
        assert_eq!(chain.space().names(&c.recurrent), vec!["c", "r"]);
        assert!(c.is_partition(3));

        let discrete = SemiDecomposition::singletons(FiniteSpace::discrete(&["a", "b"]).unwrap());
        assert_eq!(discrete.classify().closed.len(), 2);
    }

    #[test]
    fn invariance_examples() {
        let arc = SemiDecomposition::singletons(fixtures::arc_space());
        assert!(arc.check_invariance().overall);

        let semi = fixtures::semiarc().unwrap();
        let r = semi.check_invariance();
        assert!(!r.cond2);
        assert!(!r.overall);

        let one = SemiDecomposition::singletons(FiniteSpace::discrete(&["x"]).unwrap());
        assert!(one.check_invariance().overall);
    }

    #[test]
    fn cond1_reduction_matches_exhaustive_on_fixtures() {
        for f in [fixtures::semiarc().unwrap(), fixtures::chain().unwrap(), fixtures::fixture_e().unwrap()] {
            assert_eq!(f.check_invariance().cond1, f.cond1_exhaustive());
        }
    }
}
