//! Brute-force oracles over plain boolean matrices, sharing no code with the
//! library beyond its public constructors.

#![allow(dead_code)]

use proptest::prelude::*;
use semideco::{FiniteSpace, PointSet, Relation, SemiDecomposition};

pub type Matrix = Vec<Vec<bool>>;

/// Reflexive-transitive closure by Warshall.
pub fn warshall(mut m: Matrix) -> Matrix {
    let n = m.len();
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if m[i][k] {
                for j in 0..n {
                    if m[k][j] {
                        m[i][j] = true;
                    }
                }
            }
        }
    }
    m
}

pub fn matrix_from_bits(n: usize, bits: &[bool]) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| bits[i * n + j]).collect()).collect()
}

pub fn to_relation(m: &Matrix) -> Relation {
    let n = m.len();
    Relation::from_pairs(n, (0..n).flat_map(|i| (0..n).filter(move |&j| m[i][j]).map(move |j| (i, j))))
}

pub fn ids(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("x{i}")).collect()
}

pub fn space_of(order: &Matrix) -> FiniteSpace {
    FiniteSpace::with_order(ids(order.len()), to_relation(order)).unwrap()
}

/// Semi-decomposition whose elements are the down-sets of `f_order`.
pub fn semidec_of(order: &Matrix, f_order: &Matrix) -> SemiDecomposition {
    SemiDecomposition::from_preorder(space_of(order), &to_relation(f_order)).unwrap()
}

pub type Set = Vec<bool>;

pub fn set_of(s: &PointSet) -> Set {
    (0..s.universe()).map(|i| s.contains(i)).collect()
}

pub fn subset(a: &Set, b: &Set) -> bool {
    a.iter().zip(b).all(|(&x, &y)| !x || y)
}

pub fn union(a: &Set, b: &Set) -> Set {
    a.iter().zip(b).map(|(&x, &y)| x || y).collect()
}

pub fn minus(a: &Set, b: &Set) -> Set {
    a.iter().zip(b).map(|(&x, &y)| x && !y).collect()
}

pub fn closure(order: &Matrix, a: &Set) -> Set {
    let n = order.len();
    (0..n).map(|x| (0..n).any(|y| a[y] && order[x][y])).collect()
}

pub fn is_closed(order: &Matrix, a: &Set) -> bool {
    &closure(order, a) == a
}

/// Every set `A` with `A ⊆ X`, as bit masks.
pub fn all_subsets(n: usize) -> impl Iterator<Item = Set> {
    (0u32..1 << n).map(move |m| (0..n).map(|i| m & (1 << i) != 0).collect())
}

/// Connectedness from the definition: no split into two disjoint non-empty
/// relatively open pieces. Open sets are the up-sets.
pub fn connected_by_open_sets(order: &Matrix, a: &Set) -> bool {
    let n = order.len();
    let members: Vec<usize> = (0..n).filter(|&i| a[i]).collect();
    if members.is_empty() {
        return true;
    }
    let up_closed = |u: &Set| (0..n).all(|x| !u[x] || (0..n).all(|y| !order[x][y] || u[y]));
    for u in all_subsets(n).filter(|u| up_closed(u)) {
        for v in all_subsets(n).filter(|v| up_closed(v)) {
            let pu: Vec<usize> = members.iter().copied().filter(|&i| u[i]).collect();
            let pv: Vec<usize> = members.iter().copied().filter(|&i| v[i]).collect();
            let disjoint = pu.iter().all(|i| !pv.contains(i));
            if !pu.is_empty() && !pv.is_empty() && disjoint && pu.len() + pv.len() == members.len() {
                return false;
            }
        }
    }
    true
}

/// Components of `a` by breadth-first search on comparability.
pub fn components(order: &Matrix, a: &Set) -> Vec<Set> {
    let n = order.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if !a[s] || seen[s] {
            continue;
        }
        let mut comp = vec![false; n];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(x) = stack.pop() {
            comp[x] = true;
            for y in 0..n {
                if a[y] && !seen[y] && (order[x][y] || order[y][x]) {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Quotient order on class labels: transitive closure of the induced relation.
pub fn quotient_order(order: &Matrix, labels: &[usize], classes: usize) -> Matrix {
    let mut m = vec![vec![false; classes]; classes];
    for (x, row) in order.iter().enumerate() {
        for (y, &le) in row.iter().enumerate() {
            if le {
                m[labels[x]][labels[y]] = true;
            }
        }
    }
    warshall(m)
}

/// Labels `0..k` by first occurrence of equal keys.
pub fn label_by<K: PartialEq>(keys: &[K]) -> (Vec<usize>, usize) {
    let mut reps: Vec<&K> = Vec::new();
    let labels = keys
        .iter()
        .map(|k| match reps.iter().position(|r| *r == k) {
            Some(i) => i,
            None => {
                reps.push(k);
                reps.len() - 1
            }
        })
        .collect();
    (labels, reps.len())
}

/// The partition into classes as sorted index lists, sorted.
pub fn canonical_partition(labels: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    let k = labels.iter().copied().max().map_or(0, |m| m + 1);
    for c in 0..k {
        let members: Vec<usize> = (0..labels.len()).filter(|&x| labels[x] == c).collect();
        if !members.is_empty() {
            out.push(members);
        }
    }
    out.sort();
    out
}

pub fn partition_of(classes: &[PointSet]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = classes.iter().map(|c| c.to_vec()).collect();
    out.sort();
    out
}

/// A random pre-order on `n` points with edge density controlled by `bits`.
pub fn preorder(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max).prop_flat_map(|n| {
        (Just(n), prop::collection::vec(prop::bool::weighted(0.2), n * n))
            .prop_map(|(n, bits)| warshall(matrix_from_bits(n, &bits)))
    })
}

/// A topology and an independent pre-order defining `F`, on the same points.
pub fn instance(max: usize) -> impl Strategy<Value = (Matrix, Matrix)> {
    (1..=max).prop_flat_map(|n| {
        (
            prop::collection::vec(prop::bool::weighted(0.25), n * n),
            prop::collection::vec(prop::bool::weighted(0.2), n * n),
            prop::collection::vec(0..n, n),
            any::<bool>(),
        )
            .prop_map(move |(t, f, blocks, decomposition)| {
                let topology = warshall(matrix_from_bits(n, &t));
                let f_order = if decomposition {
                    (0..n).map(|i| (0..n).map(|j| blocks[i] == blocks[j]).collect()).collect()
                } else {
                    warshall(matrix_from_bits(n, &f))
                };
                (topology, f_order)
            })
    })
}
