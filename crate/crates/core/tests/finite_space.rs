mod common;

use common::*;
use proptest::prelude::*;
use semideco::iso;
use semideco::PointSet;

fn point_set(a: &Set) -> PointSet {
    PointSet::from_indices(a.len(), (0..a.len()).filter(|&i| a[i]))
}

/// Exhaustive bijection search for an order isomorphism.
fn brute_isomorphic(a: &Matrix, b: &Matrix) -> bool {
    fn extend(a: &Matrix, b: &Matrix, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let k = map.len();
        if k == a.len() {
            return true;
        }
        for t in 0..b.len() {
            if used[t] {
                continue;
            }
            if (0..k).all(|i| a[i][k] == b[map[i]][t] && a[k][i] == b[t][map[i]]) && a[k][k] == b[t][t] {
                map.push(t);
                used[t] = true;
                if extend(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[t] = false;
            }
        }
        false
    }
    a.len() == b.len() && extend(a, b, &mut Vec::new(), &mut vec![false; b.len()])
}

proptest! {
    #[test]
    fn closure_is_idempotent_and_additive(order in preorder(7), seed_a in any::<u32>(), seed_b in any::<u32>()) {
        let n = order.len();
        let space = space_of(&order);
        let a: Set = (0..n).map(|i| seed_a & (1 << i) != 0).collect();
        let b: Set = (0..n).map(|i| seed_b & (1 << i) != 0).collect();
        let (pa, pb) = (point_set(&a), point_set(&b));
        let ca = space.closure(&pa);
        prop_assert_eq!(set_of(&ca), closure(&order, &a));
        prop_assert_eq!(space.closure(&ca), ca.clone());
        prop_assert_eq!(space.closure(&pa.union(&pb)), ca.union(&space.closure(&pb)));
    }

    #[test]
    fn components_partition_and_separate(order in preorder(7), seed in any::<u32>()) {
        let n = order.len();
        let space = space_of(&order);
        let a: Set = (0..n).map(|i| seed & (1 << i) != 0).collect();
        let comps = space.connected_components(&point_set(&a));
        let mut expected: Vec<Set> = components(&order, &a);
        let mut got: Vec<Set> = comps.iter().map(set_of).collect();
        expected.sort();
        got.sort();
        prop_assert_eq!(&got, &expected);
        for (i, c) in comps.iter().enumerate() {
            prop_assert!(space.is_connected(c));
            for d in &comps[i + 1..] {
                for x in c.iter() {
                    for y in d.iter() {
                        prop_assert!(!space.comparable(x, y));
                    }
                }
            }
        }
    }

    #[test]
    fn connectedness_matches_open_sets(order in preorder(3), seed in any::<u32>()) {
        let n = order.len();
        let a: Set = (0..n).map(|i| seed & (1 << i) != 0).collect();
        prop_assert_eq!(space_of(&order).is_connected(&point_set(&a)), connected_by_open_sets(&order, &a));
    }

    #[test]
    fn identity_quotient_is_homeomorphic(order in preorder(7)) {
        let space = space_of(&order);
        let q = space.identity_quotient();
        prop_assert!(iso::is_homeomorphic(&space, &q.target));
    }

    #[test]
    fn quotient_target_is_a_preorder(order in preorder(7), labels in prop::collection::vec(0usize..4, 7)) {
        let n = order.len();
        let space = space_of(&order);
        let q = space.quotient_by_labels(&labels[..n]);
        prop_assert!(q.target.order().is_preorder());
        let (l, k) = label_by(&labels[..n]);
        let expected = quotient_order(&order, &l, k);
        for a in 0..k {
            for b in 0..k {
                prop_assert_eq!(q.target.le(a, b), expected[a][b]);
            }
        }
    }

    #[test]
    fn homeomorphism_agrees_with_bijection_search(a in preorder(4), b in preorder(4)) {
        let (sa, sb) = (space_of(&a), space_of(&b));
        let expected = brute_isomorphic(&a, &b);
        prop_assert_eq!(iso::is_homeomorphic(&sa, &sb), expected);
        if let Some(map) = iso::homeomorphism(&sa, &sb) {
            prop_assert!(iso::is_isomorphism(&sa, &sb, &map));
        }
    }

    #[test]
    fn relabelled_spaces_are_homeomorphic(order in preorder(7), perm_seed in any::<u64>()) {
        let n = order.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = perm_seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let permuted: Matrix = (0..n).map(|i| (0..n).map(|j| order[perm[i]][perm[j]]).collect()).collect();
        prop_assert!(iso::is_homeomorphic(&space_of(&order), &space_of(&permuted)));
    }
}
