mod common;

use num_bigint::BigInt;
use proptest::prelude::*;

use pmcount::graph::{grid_graph, nonisomorphic_trees};
use pmcount::orientation::orient_random;
use pmcount::*;

fn tree_strategy(max: usize) -> impl Strategy<Value = Tree> {
    (1..=max, any::<u64>()).prop_map(|(n, seed)| random_tree(n, seed).unwrap())
}

#[test]
fn grid_oracle_spot_values() {
    assert_eq!(common::grid_dimer_dp(2, 2), 2);
    assert_eq!(common::grid_dimer_dp(2, 4), 5);
    assert_eq!(common::grid_dimer_dp(4, 3), 11);
    assert_eq!(common::grid_dimer_dp(3, 3), 0);
    assert_eq!(common::grid_dimer_dp(8, 8), 12_988_816);
}

#[test]
fn cube_cycle_census() {
    let q3 = cartesian_product(&cycle_graph(4).unwrap(), path_graph(2).unwrap().graph());
    let cycles = enumerate_cycles(&q3, 24).unwrap();
    let by_len = |k| cycles.iter().filter(|c| c.len() == k).count();
    assert_eq!((by_len(4), by_len(6), by_len(8)), (6, 16, 6));
    assert_eq!(cycles.len(), 28);
}

#[test]
fn exhaustive_tree_products_agree() {
    for n in 1..=5 {
        for t in nonisomorphic_trees(n).unwrap() {
            let d = orient_lexicographic(t.graph());
            let c4 = orient_c4_tree(&d).unwrap();
            let via_pf = count_pfaffian(c4.base(), &c4).unwrap().count;
            assert_eq!(via_pf, count_c4_tree(&t).unwrap().count);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_sizes(a in tree_strategy(6), b in 3usize..7) {
        let c = cycle_graph(b).unwrap();
        let p = cartesian_product(&c, a.graph());
        prop_assert_eq!(p.vertex_count(), b * a.vertex_count());
        prop_assert_eq!(
            p.edge_count(),
            b * a.graph().edge_count() + a.vertex_count() * c.edge_count()
        );
        prop_assert!(p.is_connected());
    }

    #[test]
    fn bareiss_matches_cofactor_expansion(
        rows in prop::collection::vec(prop::collection::vec(-9i64..=9, 6), 6)
    ) {
        let m = Matrix::from_rows(rows.clone()).unwrap();
        prop_assert_eq!(m.det_bareiss() as i128, common::cofactor_det(&rows));
        let big = Matrix::from_fn(6, |i, j| BigInt::from(rows[i][j]));
        prop_assert_eq!(big.det_bareiss(), BigInt::from(common::cofactor_det(&rows)));
    }

    #[test]
    fn skew_poly_counts_matchings(t in tree_strategy(10), seed in any::<u64>()) {
        let n = t.vertex_count();
        let d = orient_random(t.graph(), seed);
        let skew = skew_char_poly::<BigInt>(&d).unwrap();
        let plain = char_poly_tree::<BigInt>(&t);
        prop_assert_eq!(&skew, &plain.abs());
        let m = common::matchings_by_size(n, t.graph().edges());
        for (k, &count) in m.iter().enumerate() {
            prop_assert_eq!(skew.coeff(n - 2 * k), BigInt::from(count));
            let sign = if k % 2 == 0 { 1 } else { -1 };
            prop_assert_eq!(plain.coeff(n - 2 * k), BigInt::from(sign * count as i64));
        }
        for i in (0..=n).filter(|i| (n - i) % 2 == 1) {
            prop_assert_eq!(skew.coeff(i), BigInt::from(0));
        }
    }

    #[test]
    fn converse_is_an_involution(r in 1usize..5, c in 1usize..5, seed in any::<u64>()) {
        let d = orient_random(&grid_graph(r, c).unwrap(), seed);
        prop_assert_eq!(converse(&converse(&d)), d.clone());
        let flipped: Matrix<i64> = skew_adjacency(&converse(&d));
        prop_assert_eq!(flipped, -&skew_adjacency::<i64>(&d));
    }

    #[test]
    fn swapping_halves_reverses_rungs(t in tree_strategy(7), seed in any::<u64>()) {
        let n = t.vertex_count();
        let d = orient_random(t.graph(), seed);
        let swap = |v: usize| (v + n) % (2 * n);
        let mut swapped: Vec<(usize, usize)> = orient_double(&converse(&d))
            .arcs()
            .map(|(a, b)| (swap(a), swap(b)))
            .collect();
        let mut expected: Vec<(usize, usize)> = orient_double(&d)
            .arcs()
            .map(|(a, b)| if b == a + n { (b, a) } else { (a, b) })
            .collect();
        swapped.sort_unstable();
        expected.sort_unstable();
        prop_assert_eq!(swapped, expected);
    }

    #[test]
    fn doubled_tree_cycles(t in tree_strategy(6), seed in any::<u64>()) {
        let n = t.vertex_count();
        let d = orient_double(&orient_random(t.graph(), seed));
        let rungs = Matching::rungs(d.base(), n).unwrap();
        prop_assert!(rungs.is_perfect());
        for c in enumerate_cycles(d.base(), 24).unwrap() {
            prop_assert_eq!(c.len() % 2, 0);
            prop_assert_eq!(rungs.edges_on(&c), 2);
            prop_assert!(is_nice_cycle(d.base(), &c).unwrap());
            prop_assert!(is_oddly_oriented(&d, &c).unwrap());
        }
    }

    #[test]
    fn layered_count_ignores_tree_orientation(t in tree_strategy(5), s1 in any::<u64>(), s2 in any::<u64>()) {
        let a = orient_layered(&orient_random(t.graph(), s1), 4).unwrap();
        let b = orient_layered(&orient_random(t.graph(), s2), 4).unwrap();
        let ca = count_pfaffian(a.base(), &a).unwrap().count;
        prop_assert_eq!(&ca, &count_pfaffian(b.base(), &b).unwrap().count);
        prop_assert_eq!(ca, count_p4_tree(&t).unwrap().count);
    }

    #[test]
    fn random_trees_are_reproducible(n in 1usize..30, seed in any::<u64>()) {
        let a = random_tree(n, seed).unwrap();
        let b = random_tree(n, seed).unwrap();
        prop_assert_eq!(a.graph(), b.graph());
        prop_assert_eq!(a.graph().edge_count(), n - 1);
        prop_assert!(a.graph().is_connected());
    }

    #[test]
    fn squarish_round_trip(k in 1u64..1_000_000, two in any::<bool>()) {
        let v = num_bigint::BigUint::from(k * k * if two { 2 } else { 1 });
        let d = squarish_decompose(&v).unwrap();
        prop_assert_eq!(d.factor, if two { 2 } else { 1 });
        prop_assert_eq!(d.value(), v);
    }
}
