//! Dense subsets of a finite carrier, indexed by point position.

use std::fmt;

use fixedbitset::FixedBitSet;

/// A subset of the points `0..universe` of some finite carrier.
///
/// Two sets compare equal only when both membership and universe size agree,
/// so sets drawn from different carriers never alias.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PointSet {
    bits: FixedBitSet,
}

impl PointSet {
    pub fn empty(universe: usize) -> Self {
        PointSet { bits: FixedBitSet::with_capacity(universe) }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        PointSet { bits }
    }

    pub fn singleton(universe: usize, point: usize) -> Self {
        let mut set = Self::empty(universe);
        set.insert(point);
        set
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, points: I) -> Self {
        let mut set = Self::empty(universe);
        for p in points {
            set.insert(p);
        }
        set
    }

    /// Size of the carrier the set lives in.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, point: usize) -> bool {
        self.bits.contains(point)
    }

    /// Inserts `point`; returns `true` when it was not yet a member.
    pub fn insert(&mut self, point: usize) -> bool {
        !self.bits.put(point)
    }

    pub fn remove(&mut self, point: usize) {
        self.bits.remove(point);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn first(&self) -> Option<usize> {
        self.bits.minimum()
    }

    pub fn union_with(&mut self, other: &PointSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &PointSet) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &PointSet) {
        self.bits.difference_with(&other.bits);
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &PointSet) -> PointSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &PointSet) -> PointSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    pub fn complement(&self) -> PointSet {
        let mut out = PointSet::full(self.universe());
        out.difference_with(self);
        out
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &PointSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn intersects(&self, other: &PointSet) -> bool {
        !self.is_disjoint(other)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Extend<usize> for PointSet {
    fn extend<T: IntoIterator<Item = usize>>(&mut self, iter: T) {
        for p in iter {
            self.insert(p);
        }
    }
}
