mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use romaneq_core::graph::{all_trees, random_tree};
use romaneq_core::solver::SolverError;
use romaneq_core::{Graph, Solver, SolverConfig, VertexSet};

use common::{connected_graphs, naive, subsets};

fn solver(threads: usize) -> Solver {
    Solver::new(SolverConfig {
        threads,
        ..SolverConfig::default()
    })
}

fn assert_matches_naive(s: &Solver, g: &Graph, x: &VertexSet) {
    let expect = naive(g, x);
    let report = s.report(g, x).unwrap();
    let at = format!("{:?} X={x:?}", g.edges());
    assert_eq!(report.gamma_r, expect.gamma_r, "{at}");
    assert_eq!(report.gamma_rr, expect.gamma_rr, "{at}");
    assert_eq!(report.all_min_wrdfs_are_rdf, expect.strong, "{at}");
    assert_eq!(report.y, expect.y, "{at}");
    let mut found: Vec<String> = s.minimum_wrdfs(g, x).unwrap().iter().map(|f| f.to_string()).collect();
    let mut wanted: Vec<String> = expect.min_wrdfs.iter().map(|f| f.to_string()).collect();
    found.sort();
    wanted.sort();
    assert_eq!(found, wanted, "{at}");
}

#[test]
fn pruned_search_equals_naive_scan_on_small_graphs() {
    let s = solver(1);
    for n in 1..=6 {
        for g in connected_graphs(n) {
            for x in subsets(n) {
                assert_matches_naive(&s, &g, &x);
            }
        }
    }
}

#[test]
fn pruned_search_equals_naive_scan_on_trees_up_to_8() {
    let s = solver(1);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 6..=8 {
        for t in all_trees(n) {
            assert_matches_naive(&s, &t, &VertexSet::full(n));
            let x = VertexSet::from_mask(n, rand::Rng::gen_range(&mut rng, 0..1u64 << n));
            assert_matches_naive(&s, &t, &x);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pruned_search_equals_naive_scan_on_random_graphs(
        n in 6usize..=8,
        edges in any::<u32>(),
        tree_seed in any::<u64>(),
        xmask in any::<u64>(),
    ) {
        // A random spanning tree plus random extra edges keeps the graph
        // connected.
        let t = random_tree(n, &mut ChaCha8Rng::seed_from_u64(tree_seed));
        let mut g = t.graph().clone();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        for (i, &(a, b)) in pairs.iter().enumerate().take(32) {
            if edges >> i & 1 == 1 && !g.has_edge(a, b) {
                g.add_edge(a, b).unwrap();
            }
        }
        let x = VertexSet::from_mask(n, xmask & ((1 << n) - 1));
        assert_matches_naive(&solver(1), &g, &x);
    }
}

#[test]
fn rescue_set_is_deterministic_across_runs_and_threads() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let single = solver(1);
    let threaded = solver(4);
    for n in [6, 9, 12] {
        let t = random_tree(n, &mut rng);
        let x = VertexSet::full(n);
        let first = single.rescue_set(&t, &x).unwrap();
        for _ in 0..3 {
            assert_eq!(single.rescue_set(&t, &x).unwrap(), first);
            assert_eq!(threaded.rescue_set(&t, &x).unwrap(), first);
        }
        assert_eq!(
            single.minimum_wrdfs(&t, &x).unwrap(),
            threaded.minimum_wrdfs(&t, &x).unwrap()
        );
    }
}

#[test]
fn caps_are_enforced() {
    let s = solver(1);
    let big = romaneq_core::Tree::path(19);
    assert_eq!(
        s.roman_domination_number(&big, &VertexSet::full(19)),
        Err(SolverError::TooLarge { order: 19, cap: 18 })
    );
    let mid = romaneq_core::Tree::path(15);
    assert!(s.roman_domination_number(&mid, &VertexSet::full(15)).is_ok());
    assert_eq!(
        s.minimum_wrdfs(&mid, &VertexSet::full(15)),
        Err(SolverError::TooLarge { order: 15, cap: 14 })
    );
}

#[test]
fn unit_clause_pair_gadget_values() {
    // Gadget of (x1) ∧ (¬x1): one K4 - e plus two pendant clause vertices.
    let g = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (0, 4), (1, 5)]).unwrap();
    let s = solver(1);
    let all = VertexSet::full(6);
    assert_eq!(s.weak_roman_domination_number(&g, &all, &VertexSet::empty(6)).unwrap(), 3);
    assert_eq!(s.roman_domination_number(&g, &all).unwrap(), 3);
}
