use std::collections::BTreeMap;

use rand::Rng;

use super::{canonical_form, Tree};

/// Every tree of order `n` up to isomorphism, ordered by canonical string.
pub fn all_trees(n: usize) -> Vec<Tree> {
    if n == 0 {
        return Vec::new();
    }
    let mut layer = vec![Tree::singleton()];
    for order in 2..=n {
        let mut next = BTreeMap::new();
        for t in &layer {
            for parent in t.vertices() {
                let (grown, _) = t.with_leaf(parent).expect("valid parent");
                next.entry(canonical_form(&grown, &vec![0; order]))
                    .or_insert(grown);
            }
        }
        layer = next.into_values().collect();
    }
    layer
}

/// Uniformly random labeled tree on `n` vertices, decoded from a Prüfer
/// sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Tree {
    assert!(n >= 1, "a tree has at least one vertex");
    if n <= 2 {
        return Tree::path(n);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let std::cmp::Reverse(leaf) = leaves.pop().expect("a leaf exists");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.push(std::cmp::Reverse(c));
        }
    }
    let std::cmp::Reverse(a) = leaves.pop().expect("two leaves remain");
    let std::cmp::Reverse(b) = leaves.pop().expect("two leaves remain");
    edges.push((a, b));
    Tree::from_edges(n, edges).expect("Prüfer decoding yields a tree")
}
