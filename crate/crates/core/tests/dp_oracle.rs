use std::time::Instant;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use romaneq_core::dp::{tree_roman_number, tree_roman_number_rooted};
use romaneq_core::graph::random_tree;
use romaneq_core::{Solver, SolverConfig, Tree, VertexSet};

fn tree_and_x(max: usize) -> impl Strategy<Value = (Tree, VertexSet)> {
    (1..=max, any::<u64>(), any::<u64>()).prop_map(|(n, seed, mask)| {
        let t = random_tree(n, &mut ChaCha8Rng::seed_from_u64(seed));
        (t, VertexSet::from_mask(n, mask & ((1u64 << n) - 1)))
    })
}

proptest! {
    #[test]
    fn dp_matches_exact_solver((t, x) in tree_and_x(16)) {
        let exact = Solver::new(SolverConfig::default()).roman_domination_number(&t, &x).unwrap();
        prop_assert_eq!(tree_roman_number(&t, &x), exact as u64);
    }

    #[test]
    fn dp_is_root_invariant((t, x) in tree_and_x(40), root in any::<usize>()) {
        let root = root % t.order();
        prop_assert_eq!(tree_roman_number_rooted(&t, &x, root), tree_roman_number(&t, &x));
    }

    #[test]
    fn dp_is_monotone_in_x((t, x) in tree_and_x(30), extra in any::<u64>()) {
        let n = t.order();
        let more = x.union(&VertexSet::from_mask(n, extra & ((1u64 << n) - 1)));
        prop_assert!(tree_roman_number(&t, &x) <= tree_roman_number(&t, &more));
    }
}

#[test]
fn closed_forms() {
    // γ_R(P_n) = ⌈2n/3⌉ and γ_R(K_{1,k}) = 2 for k >= 2.
    for n in 1..200 {
        assert_eq!(tree_roman_number(&Tree::path(n), &VertexSet::full(n)), (2 * n as u64).div_ceil(3));
    }
    for k in 2..50 {
        assert_eq!(tree_roman_number(&Tree::star(k), &VertexSet::full(k + 1)), 2);
    }
}

#[test]
fn large_random_tree_smoke() {
    let n = 100_000;
    let t = random_tree(n, &mut ChaCha8Rng::seed_from_u64(9));
    let start = Instant::now();
    let value = tree_roman_number(&t, &VertexSet::full(n));
    let elapsed = start.elapsed();
    assert!(value > 0 && value <= 2 * n as u64 / 3 + 2);
    eprintln!("n = {n}: gamma_R = {value} in {elapsed:?}");
    // Also deep: a long path exercises the iterative traversal.
    assert_eq!(tree_roman_number(&Tree::path(n), &VertexSet::full(n)), (2 * n as u64).div_ceil(3));
}
