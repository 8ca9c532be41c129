mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use romaneq_core::generator::random_member;
use romaneq_core::graph::{all_trees, random_tree};
use romaneq_core::recognizer::{
    find_locus, reduce, BaseCase, Case, ReduceOutcome, Recognizer, Rejection, Terminal,
};
use romaneq_core::{check_decision, decide_membership, verify_trace, Solver, SolverConfig, Triple, VertexSet};

use common::subsets;

#[test]
fn agrees_with_oracle_for_extreme_x_up_to_10() {
    let s = Solver::new(SolverConfig::default());
    for n in 1..=10 {
        for t in all_trees(n) {
            let mut rec = Recognizer::new();
            for x in [VertexSet::empty(n), VertexSet::full(n)] {
                let y = s.rescue_set(&t, &x).unwrap();
                let member = s.membership_oracle(&t, &x).unwrap().is_some();
                assert_eq!(rec.accepts(&Triple::new(t.clone(), x, y).unwrap()), member);
            }
        }
    }
}

#[test]
fn rejects_every_wrong_y() {
    // For members of S with n <= 6, every other Y ⊇ X is rejected.
    let s = Solver::new(SolverConfig::default());
    let mut wrong = 0;
    for n in 1..=6 {
        for t in all_trees(n) {
            for x in subsets(n) {
                let Some(y_star) = s.membership_oracle(&t, &x).unwrap() else {
                    continue;
                };
                for y in subsets(n).filter(|y| x.is_subset(y) && *y != y_star) {
                    wrong += 1;
                    assert!(!decide_membership(&Triple::new(t.clone(), x.clone(), y).unwrap()).0);
                }
            }
        }
    }
    assert!(wrong > 100);
}

#[test]
fn each_reduction_shrinks_x() {
    for n in 1..=9 {
        for t in all_trees(n) {
            let mut cur = Triple::whole(t);
            while cur.x().len() >= 3 {
                let Ok(loc) = find_locus(&cur) else { break };
                match reduce(&cur, &loc).unwrap() {
                    ReduceOutcome::Rejected(_) => break,
                    ReduceOutcome::Reduced { case, children } => {
                        assert_eq!(children.len(), if case == Case::A { 1 } else { 2 });
                        for c in &children {
                            assert!(c.triple.x().len() < cur.x().len());
                            assert!(c.triple.order() < cur.order());
                        }
                        cur = children[0].triple.clone();
                    }
                }
            }
        }
    }
}

#[test]
fn headline_examples() {
    let (yes, trace) = decide_membership(&Triple::whole(romaneq_core::Tree::star(3)));
    assert!(yes);
    assert_eq!(trace.steps.len(), 1);
    assert_eq!(trace.steps[0].case, Case::A);
    assert_eq!(trace.terminal, Terminal::Base(BaseCase::EmptyX));

    let (no, trace) = decide_membership(&Triple::whole(romaneq_core::Tree::path(3)));
    assert!(!no);
    assert_eq!(trace.terminal, Terminal::Reject(Rejection::SingleXBranch));
    assert!(!verify_trace(&Triple::whole(romaneq_core::Tree::path(3)), &trace));
    assert!(check_decision(&Triple::whole(romaneq_core::Tree::path(3)), false, &trace));

    assert!(decide_membership(&Triple::base_full()).0);
    assert!(!decide_membership(&Triple::whole(romaneq_core::Tree::path(2))).0);
}

proptest! {
    #[test]
    fn generated_members_are_accepted_with_valid_traces(order in 1usize..=24, seed in any::<u64>()) {
        let sample = random_member(order, seed).unwrap();
        let (accepted, trace) = decide_membership(&sample.triple);
        prop_assert!(accepted);
        prop_assert!(verify_trace(&sample.triple, &trace));
        prop_assert!(trace.steps.len() <= sample.triple.x().len());
    }

    #[test]
    fn corrupted_traces_fail(order in 4usize..=16, seed in any::<u64>(), which in any::<usize>()) {
        let sample = random_member(order, seed).unwrap();
        let (_, trace) = decide_membership(&sample.triple);
        prop_assume!(!trace.steps.is_empty());
        let i = which % trace.steps.len();
        let mut bad = trace.clone();
        bad.steps[i].child_canonical.push('0');
        prop_assert!(!verify_trace(&sample.triple, &bad));
        let mut bad = trace.clone();
        bad.steps.truncate(i);
        prop_assert!(!verify_trace(&sample.triple, &bad));
    }

    #[test]
    fn random_trees_match_oracle(n in 1usize..=12, seed in any::<u64>(), mask in any::<u64>()) {
        let t = random_tree(n, &mut ChaCha8Rng::seed_from_u64(seed));
        let x = VertexSet::from_mask(n, mask & ((1u64 << n) - 1));
        let s = Solver::new(SolverConfig::default());
        let y = s.rescue_set(&t, &x).unwrap();
        let member = s.membership_oracle(&t, &x).unwrap().is_some();
        prop_assert_eq!(decide_membership(&Triple::new(t, x, y).unwrap()).0, member);
    }
}
