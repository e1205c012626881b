//! Binary relations on `0..n` stored as bit rows.

use crate::pointset::PointSet;

/// A binary relation on `0..n`; `rows[x]` holds every `y` with `x R y`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Relation {
    rows: Vec<PointSet>,
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        Relation { rows: vec![PointSet::empty(n); n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut r = Self::empty(n);
        for x in 0..n {
            r.insert(x, x);
        }
        r
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(n: usize, pairs: I) -> Self {
        let mut r = Self::empty(n);
        for (x, y) in pairs {
            r.insert(x, y);
        }
        r
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn insert(&mut self, x: usize, y: usize) -> bool {
        self.rows[x].insert(y)
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    /// `{y : x R y}`.
    pub fn successors(&self, x: usize) -> &PointSet {
        &self.rows[x]
    }

    /// `{x : x R y}`.
    pub fn predecessors(&self, y: usize) -> PointSet {
        PointSet::from_indices(self.size(), (0..self.size()).filter(|&x| self.contains(x, y)))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(x, row)| row.iter().map(move |y| (x, y)))
    }

    pub fn pair_count(&self) -> usize {
        self.rows.iter().map(PointSet::len).sum()
    }

    pub fn transpose(&self) -> Relation {
        Relation::from_pairs(self.size(), self.pairs().map(|(x, y)| (y, x)))
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.size()).all(|x| self.contains(x, x))
    }

    /// Returns a violating triple `(x, y, z)` with `x R y`, `y R z` but not `x R z`.
    pub fn transitivity_witness(&self) -> Option<(usize, usize, usize)> {
        for x in 0..self.size() {
            for y in self.rows[x].iter() {
                if let Some(z) = self.rows[y].difference(&self.rows[x]).first() {
                    return Some((x, y, z));
                }
            }
        }
        None
    }

    pub fn is_transitive(&self) -> bool {
        self.transitivity_witness().is_none()
    }

    pub fn is_preorder(&self) -> bool {
        self.is_reflexive() && self.is_transitive()
    }

    /// Transitive closure (Warshall over bit rows).
    pub fn transitive_closure(&self) -> Relation {
        let mut rows = self.rows.clone();
        for k in 0..rows.len() {
            let row_k = rows[k].clone();
            for row in rows.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        Relation { rows }
    }

    pub fn reflexive_transitive_closure(&self) -> Relation {
        let mut r = self.clone();
        for x in 0..r.size() {
            r.insert(x, x);
        }
        r.transitive_closure()
    }
}
