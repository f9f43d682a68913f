//! Cotree-based routines against the brute-force oracle on random inputs.

use cograph::control::procedure_one_choices;
use cograph::oracle::{
    char_poly, exhaustive_min_sets, find_p4, integer_roots, k_subsets, kalman_rank,
};
use cograph::random::{random_cotree, random_cotree_rooted, random_threshold};
use cograph::spectral::spectrum_by_composition;
use cograph::*;
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn tree(n: usize, seed: u64) -> CoTree {
    random_cotree(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spectrum_matches_characteristic_polynomial(n in 1usize..=8, seed in any::<u64>()) {
        let t = tree(n, seed);
        let g = t.to_graph();
        let roots = integer_roots(&char_poly(&g.laplacian()).unwrap()).unwrap();
        let expected: Vec<BigInt> = spectrum(&t).eigenvalues().into_iter().map(BigInt::from).collect();
        prop_assert_eq!(roots, expected);
    }

    #[test]
    fn modal_matrix_diagonalises_laplacian(n in 1usize..=10, seed in any::<u64>()) {
        let t = tree(n, seed);
        let l = t.to_graph().laplacian();
        let v = modal_matrix(&t);
        let ones = IntegerMatrix::from_fn(n, 1, |_, _| 1);
        prop_assert_eq!(IntegerMatrix::hconcat(n, &[&ones, &v]).rank(), n);
        prop_assert!((&l * &ones).column(0).iter().all(|x| *x == BigInt::from(0)));
        let lv = &l * &v;
        let mut col = 0;
        for block in eigen_blocks(&t) {
            for _ in 0..block.multiplicity() {
                let expected = v.column(col).into_iter().map(|x| x * block.lambda).collect::<Vec<_>>();
                prop_assert_eq!(lv.column(col), expected);
                col += 1;
            }
        }
    }

    #[test]
    fn composition_matches_block_spectrum(n in 1usize..=12, seed in any::<u64>(), union_root in any::<bool>()) {
        let root = if union_root { Label::Union } else { Label::Join };
        let t = random_cotree_rooted(n, root, &mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(spectrum_by_composition(&t).eigenvalues(), spectrum(&t).eigenvalues());
    }

    #[test]
    fn trace_equals_twice_edge_count(n in 1usize..=14, seed in any::<u64>()) {
        let t = tree(n, seed);
        let g = t.to_graph();
        prop_assert_eq!(spectrum(&t).sum(), 2 * g.edge_count() as u64);
    }

    #[test]
    fn recognition_round_trips(n in 1usize..=14, seed in any::<u64>()) {
        let t = tree(n, seed);
        let g = t.to_graph();
        let back = recognize(&g).unwrap();
        prop_assert_eq!(back.to_string(), t.to_string());
        prop_assert_eq!(parse_cotree(&serialize_cotree(&t)).unwrap().to_string(), t.to_string());
    }

    #[test]
    fn recognition_agrees_with_p4_search(n in 1usize..=8, edges in proptest::collection::vec(any::<bool>(), 28)) {
        let g = Graph::from_fn(n, |i, j| edges[i * 8 + j - (i + 1) * (i + 2) / 2]);
        match recognize(&g) {
            Ok(t) => {
                prop_assert!(find_p4(&g).is_none());
                prop_assert_eq!(t.to_graph(), g);
            }
            Err(w) => {
                prop_assert!(find_p4(&g).is_some());
                let [a, b, c, d] = w.vertices();
                prop_assert!(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d));
                prop_assert!(!g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, d));
            }
        }
    }

    #[test]
    fn minimum_sets_match_exhaustive_search(n in 2usize..=7, seed in any::<u64>()) {
        let t = tree(n, seed);
        let g = t.to_graph();
        let (k, sets) = exhaustive_min_sets(&g).unwrap();
        prop_assert_eq!(min_control_size(&t).unwrap(), k);
        let fast: Vec<ControlSet> = enumerate_min_control_sets(&t).unwrap().collect();
        let as_sorted = |v: &[ControlSet]| {
            let mut out: Vec<Vec<usize>> = v.iter().map(ControlSet::one_based_sorted).collect();
            out.sort();
            out
        };
        prop_assert_eq!(as_sorted(&fast), as_sorted(&sets));
        prop_assert_eq!(count_min_control_sets(&t).unwrap(), (sets.len() as u64).into());
    }

    #[test]
    fn controllability_tests_agree(n in 2usize..=6, seed in any::<u64>()) {
        let t = tree(n, seed);
        let g = t.to_graph();
        for k in 0..=n {
            for subset in k_subsets(n, k) {
                let c = ControlSet::new(subset).unwrap();
                let cells = is_controllable(&t, &c).unwrap();
                prop_assert_eq!(pbh_check(&t, &c).unwrap(), cells, "{} on {}", c, t);
                prop_assert_eq!(kalman_rank(&g, &c).unwrap() == n, cells, "{} on {}", c, t);
            }
        }
    }

    #[test]
    fn row_choices_are_nonsingular(n in 2usize..=9, seed in any::<u64>()) {
        let t = tree(n, seed);
        for block in eigen_blocks(&t) {
            for rows in procedure_one_choices(&t, block.node).unwrap() {
                let positions: Vec<usize> = rows
                    .iter()
                    .map(|v| block.row_support.iter().position(|x| x == v).unwrap())
                    .collect();
                prop_assert_eq!(block.block.select_rows(&positions).rank(), block.multiplicity());
            }
        }
    }

    #[test]
    fn threshold_selection_is_minimum(n in 2usize..=9, seed in any::<u64>()) {
        let s = random_threshold(n, &mut ChaCha8Rng::seed_from_u64(seed));
        let g = threshold_to_graph(&s);
        let (size, set) = threshold_min_control(&s).unwrap();
        prop_assert_eq!(kalman_rank(&g, &set).unwrap(), n);
        prop_assert_eq!(exhaustive_min_sets(&g).unwrap().0, size);
    }
}

#[test]
fn internal_node_count_bounds() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for n in 2..=40 {
        let t = random_cotree(n, &mut rng);
        let internal = t.internal_nodes().count();
        assert!(internal < n, "{t}");
        let multiplicities: usize = eigen_blocks(&t).iter().map(EigenBlock::multiplicity).sum();
        assert_eq!(multiplicities, n - 1, "{t}");
    }
}
