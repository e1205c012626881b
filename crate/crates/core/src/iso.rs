//! Homeomorphism of finite spaces, i.e. isomorphism of their pre-orders.

use std::collections::HashMap;

use crate::space::FiniteSpace;

/// Returns a bijection `map` with `x <= y` iff `map[x] <= map[y]`, if any.
///
/// A colour-refinement pass (down/up-set sizes, equivalence-class sizes and
/// the colours of strict predecessors and successors) screens out most
/// non-isomorphic pairs and restricts candidates; backtracking does the rest.
/// Equivalent points of non-T0 spaces share a colour and are interchangeable.
pub fn homeomorphism(a: &FiniteSpace, b: &FiniteSpace) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() || a.order().pair_count() != b.order().pair_count() {
        return None;
    }
    let (colors_a, colors_b) = refine_colors(a, b);
    let mut hist_a = colors_a.clone();
    let mut hist_b = colors_b.clone();
    hist_a.sort_unstable();
    hist_b.sort_unstable();
    if hist_a != hist_b {
        return None;
    }

    let order = search_order(a, &colors_a);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(a, b, &colors_a, &colors_b, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

pub fn is_homeomorphic(a: &FiniteSpace, b: &FiniteSpace) -> bool {
    homeomorphism(a, b).is_some()
}

/// Checks that `map` is an order isomorphism from `a` onto `b`.
pub fn is_isomorphism(a: &FiniteSpace, b: &FiniteSpace, map: &[usize]) -> bool {
    if a.len() != b.len() || map.len() != a.len() {
        return false;
    }
    let mut hit = vec![false; b.len()];
    for &m in map {
        if m >= b.len() || std::mem::replace(&mut hit[m], true) {
            return false;
        }
    }
    (0..a.len()).all(|x| (0..a.len()).all(|y| a.le(x, y) == b.le(map[x], map[y])))
}

type Signature = (usize, Vec<usize>, Vec<usize>);

fn refine_colors(a: &FiniteSpace, b: &FiniteSpace) -> (Vec<usize>, Vec<usize>) {
    let initial = |s: &FiniteSpace| -> Vec<(usize, usize, usize)> {
        (0..s.len())
            .map(|x| {
                let equiv = s.down(x).intersection(s.up(x)).len();
                (s.down(x).len(), s.up(x).len(), equiv)
            })
            .collect()
    };
    let mut dict: HashMap<(usize, usize, usize), usize> = HashMap::new();
    let mut ca: Vec<usize> = initial(a).into_iter().map(|k| intern(&mut dict, k)).collect();
    let mut cb: Vec<usize> = initial(b).into_iter().map(|k| intern(&mut dict, k)).collect();
    let mut classes = dict.len();
    loop {
        let mut dict: HashMap<Signature, usize> = HashMap::new();
        let step = |s: &FiniteSpace, c: &[usize], dict: &mut HashMap<Signature, usize>| -> Vec<usize> {
            (0..s.len())
                .map(|x| {
                    let mut below: Vec<usize> = s.down(x).iter().filter(|&y| y != x).map(|y| c[y]).collect();
                    let mut above: Vec<usize> = s.up(x).iter().filter(|&y| y != x).map(|y| c[y]).collect();
                    below.sort_unstable();
                    above.sort_unstable();
                    intern(dict, (c[x], below, above))
                })
                .collect()
        };
        let na = step(a, &ca, &mut dict);
        let nb = step(b, &cb, &mut dict);
        ca = na;
        cb = nb;
        if dict.len() == classes {
            return (ca, cb);
        }
        classes = dict.len();
    }
}

fn intern<K: Eq + std::hash::Hash>(dict: &mut HashMap<K, usize>, key: K) -> usize {
    let next = dict.len();
    *dict.entry(key).or_insert(next)
}

/// Visits points so that each one (after the first of its component) is
/// comparable to an earlier one, starting from the rarest colours.
fn search_order(a: &FiniteSpace, colors: &[usize]) -> Vec<usize> {
    let n = a.len();
    let mut freq: HashMap<usize, usize> = HashMap::new();
    for &c in colors {
        *freq.entry(c).or_default() += 1;
    }
    let mut seeds: Vec<usize> = (0..n).collect();
    seeds.sort_by_key(|&x| (freq[&colors[x]], x));
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for seed in seeds {
        if placed[seed] {
            continue;
        }
        placed[seed] = true;
        let mut head = order.len();
        order.push(seed);
        while head < order.len() {
            let p = order[head];
            head += 1;
            let mut nbrs: Vec<usize> =
                a.down(p).union(a.up(p)).iter().filter(|&q| !placed[q]).collect();
            nbrs.sort_by_key(|&q| (freq[&colors[q]], q));
            for q in nbrs {
                placed[q] = true;
                order.push(q);
            }
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &FiniteSpace,
    b: &FiniteSpace,
    ca: &[usize],
    cb: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&p) = order.get(depth) else {
        return true;
    };
    for q in 0..b.len() {
        if used[q] || cb[q] != ca[p] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&p2| {
            let q2 = map[p2];
            a.le(p, p2) == b.le(q, q2) && a.le(p2, p) == b.le(q2, q)
        });
        if !consistent {
            continue;
        }
        map[p] = q;
        used[q] = true;
        if extend(a, b, ca, cb, order, depth + 1, map, used) {
            return true;
        }
        used[q] = false;
        map[p] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relation::Relation;

    fn space(n: usize, pairs: &[(usize, usize)]) -> FiniteSpace {
        let ids = (0..n).map(|i| format!("p{i}")).collect();
        let rel = Relation::from_pairs(n, pairs.iter().copied()).reflexive_transitive_closure();
        FiniteSpace::with_order(ids, rel).unwrap()
    }

    #[test]
    fn chain_vs_antichain() {
        assert!(!is_homeomorphic(&space(2, &[(0, 1)]), &space(2, &[])));
    }

    #[test]
    fn self_isomorphism_is_found() {
        let s = space(4, &[(0, 2), (1, 2), (1, 3)]);
        let w = homeomorphism(&s, &s).unwrap();
        assert!(is_isomorphism(&s, &s, &w));
    }

    #[test]
    fn relabelled_copy() {
        let s = space(4, &[(0, 1), (1, 2), (3, 2)]);
        let t = space(4, &[(3, 0), (0, 1), (2, 1)]);
        let w = homeomorphism(&s, &t).unwrap();
        assert!(is_isomorphism(&s, &t, &w));
    }

    #[test]
    fn non_t0_multiplicities_matter() {
        // {0,1} equivalent below 2  vs  0 below equivalent {1,2}
        let s = space(3, &[(0, 1), (1, 0), (1, 2)]);
        let t = space(3, &[(0, 1), (1, 2), (2, 1)]);
        assert!(!is_homeomorphic(&s, &t));
        let u = space(3, &[(2, 0), (0, 2), (2, 1)]);
        assert!(is_homeomorphic(&s, &u));
    }
}
