//! Merge tree of the sublevel filtration, and its subdivision into strata.
//!
//! `L_k` is the full subcomplex on the `k + 1` lowest vertices. For `c` in
//! `[f_k, f_{k+1})` the sublevel set `f⁻¹(-∞, c]` deformation-retracts onto
//! `L_k`, so its components are those of `L_k`.

use crate::pointset::PointSet;
use crate::relation::Relation;
use crate::semidecomp::SemiDecomposition;
use crate::space::FiniteSpace;

use super::mesh::TriSurfaceFn;

#[derive(Clone, Debug)]
pub struct MergeTree {
    /// `components[k]`: vertex lists of the components of `L_k`, ordered by
    /// their lowest vertex.
    pub components: Vec<Vec<Vec<usize>>>,
    /// `comp_of[k][v]`: component of `v` in `L_k`, if `v` is alive.
    comp_of: Vec<Vec<Option<usize>>>,
    /// Levels at which a component is born (local minima).
    pub births: Vec<usize>,
    /// Levels at which components merge, with the number merged.
    pub joins: Vec<(usize, usize)>,
}

/// A point of the merge tree grouped with others of the same kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Stratum {
    /// Component `component` of `L_level` at the exact value `f_level`.
    Node { level: usize, component: usize },
    /// The same component over the open interval `(f_level, f_{level+1})`.
    Interval { level: usize, component: usize },
}

impl Stratum {
    pub fn level(&self) -> usize {
        match *self {
            Stratum::Node { level, .. } | Stratum::Interval { level, .. } => level,
        }
    }

    pub fn component(&self) -> usize {
        match *self {
            Stratum::Node { component, .. } | Stratum::Interval { component, .. } => component,
        }
    }

    pub fn is_interval(&self) -> bool {
        matches!(self, Stratum::Interval { .. })
    }

    pub fn name(&self) -> String {
        match *self {
            Stratum::Node { level, component } => format!("N{level}.{component}"),
            Stratum::Interval { level, component } => format!("I{level}.{component}"),
        }
    }
}

impl MergeTree {
    pub fn new(s: &TriSurfaceFn) -> Self {
        let n = s.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut c = x;
            while p[c] != r {
                let next = p[c];
                p[c] = r;
                c = next;
            }
            r
        }
        let mut components = Vec::with_capacity(n);
        let mut comp_of = Vec::with_capacity(n);
        let mut births = Vec::new();
        let mut joins = Vec::new();
        for (k, &v) in s.order().iter().enumerate() {
            let mut roots: Vec<usize> =
                s.neighbors(v).iter().filter(|&&u| s.rank(u) < k).map(|&u| find(&mut parent, u)).collect();
            roots.sort_unstable();
            roots.dedup();
            match roots.len() {
                0 => births.push(k),
                1 => {}
                m => joins.push((k, m)),
            }
            for r in roots {
                parent[r] = v;
            }
            let mut by_root: Vec<(usize, Vec<usize>)> = Vec::new();
            for &u in &s.order()[..=k] {
                let r = find(&mut parent, u);
                match by_root.iter_mut().find(|(root, _)| *root == r) {
                    Some((_, list)) => list.push(u),
                    None => by_root.push((r, vec![u])),
                }
            }
            let mut of = vec![None; n];
            for (c, (_, list)) in by_root.iter().enumerate() {
                for &u in list {
                    of[u] = Some(c);
                }
            }
            components.push(by_root.into_iter().map(|(_, mut l)| {
                l.sort_unstable();
                l
            }).collect::<Vec<_>>());
            comp_of.push(of);
        }
        MergeTree { components, comp_of, births, joins }
    }

    pub fn levels(&self) -> usize {
        self.components.len()
    }

    pub fn component_of(&self, level: usize, v: usize) -> Option<usize> {
        self.comp_of[level][v]
    }

    /// Component at `level + 1` containing component `c` of `level`.
    pub fn parent(&self, level: usize, c: usize) -> usize {
        self.comp_of[level + 1][self.components[level][c][0]].expect("components persist")
    }

    /// Whether component `d` of `lower` lies inside component `c` of `upper`.
    pub fn contained(&self, lower: usize, d: usize, upper: usize, c: usize) -> bool {
        lower <= upper && self.comp_of[upper][self.components[lower][d][0]] == Some(c)
    }

    /// Nodes and intervals, level by level.
    pub fn strata(&self) -> Vec<Stratum> {
        let mut out = Vec::new();
        for k in 0..self.levels() {
            out.extend((0..self.components[k].len()).map(|c| Stratum::Node { level: k, component: c }));
            if k + 1 < self.levels() {
                out.extend((0..self.components[k].len()).map(|c| Stratum::Interval { level: k, component: c }));
            }
        }
        out
    }

    /// Strata as a finite space: an interval has its two end nodes in its
    /// closure.
    pub fn strata_space(&self, strata: &[Stratum]) -> FiniteSpace {
        let n = strata.len();
        let index = |s: Stratum| strata.iter().position(|&t| t == s).expect("stratum listed");
        let mut rel = Relation::identity(n);
        for (i, s) in strata.iter().enumerate() {
            if let Stratum::Interval { level, component } = *s {
                rel.insert(index(Stratum::Node { level, component }), i);
                rel.insert(index(Stratum::Node { level: level + 1, component: self.parent(level, component) }), i);
            }
        }
        let ids = strata.iter().map(Stratum::name).collect();
        FiniteSpace::with_order(ids, rel).expect("subdivided tree has height one")
    }

    /// The sublevel semi-decomposition over strata: everything of the tree
    /// at or below a point, within its component.
    pub fn semidecomposition(&self, strata: &[Stratum]) -> SemiDecomposition {
        let n = strata.len();
        let below = |level: usize, c: usize| {
            PointSet::from_indices(
                n,
                (0..n).filter(|&j| {
                    let t = strata[j];
                    match t {
                        Stratum::Node { level: l, component: d } => self.contained(l, d, level, c),
                        Stratum::Interval { level: l, component: d } => l < level && self.contained(l, d, level, c),
                    }
                }),
            )
        };
        let elements = strata
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let mut e = below(s.level(), s.component());
                e.insert(i);
                e
            })
            .collect();
        SemiDecomposition::new(self.strata_space(strata), elements).expect("sublevel components nest")
    }
}
