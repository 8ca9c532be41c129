#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use romaneq_core::gadget::{CnfFormula, Literal};
use romaneq_core::roman::{has_rescue_move, is_rdf, is_wrdf_for};
use romaneq_core::{Assignment, Graph, VertexSet};

/// Strongly-equal tree counts for orders 1..=10, computed once by an
/// independent brute force and frozen.
pub const STRONG_COUNTS: [usize; 10] = [1, 0, 0, 1, 1, 1, 1, 3, 4, 6];

pub fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u64..1 << n).map(move |m| VertexSet::from_mask(n, m))
}

/// Every assignment of `{0,1,2}` to `n` vertices.
pub fn all_assignments(n: usize) -> impl Iterator<Item = Assignment> {
    (0..3usize.pow(n as u32)).map(move |mut code| {
        let mut values = Vec::with_capacity(n);
        for _ in 0..n {
            values.push((code % 3) as u8);
            code /= 3;
        }
        Assignment::new(values).unwrap()
    })
}

/// Plain `3^n` scan using only the reference predicates.
pub struct Naive {
    pub gamma_r: u32,
    pub gamma_rr: u32,
    pub min_wrdfs: Vec<Assignment>,
    pub strong: bool,
    pub y: VertexSet,
}

pub fn naive(g: &Graph, x: &VertexSet) -> Naive {
    let n = g.order();
    let mut gamma_r = u32::MAX;
    let mut gamma_rr = u32::MAX;
    let mut min_wrdfs = Vec::new();
    for f in all_assignments(n) {
        let w = f.weight();
        if is_rdf(g, x, &f) {
            gamma_rr = gamma_rr.min(w);
        }
        if is_wrdf_for(g, x, &f) {
            if w < gamma_r {
                gamma_r = w;
                min_wrdfs.clear();
            }
            if w == gamma_r {
                min_wrdfs.push(f);
            }
        }
    }
    let strong = min_wrdfs.iter().all(|f| is_rdf(g, x, f));
    let mut y = VertexSet::empty(n);
    for f in &min_wrdfs {
        for u in g.vertices() {
            if f.get(u) >= 1 || has_rescue_move(g, x, f, u) {
                y.insert(u);
            }
        }
    }
    Naive {
        gamma_r,
        gamma_rr,
        min_wrdfs,
        strong,
        y,
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn edge_key(edges: &[(usize, usize)], perm: &[usize]) -> Vec<(usize, usize)> {
    let mut k: Vec<_> = edges
        .iter()
        .map(|&(a, b)| {
            let (p, q) = (perm[a], perm[b]);
            (p.min(q), p.max(q))
        })
        .collect();
    k.sort_unstable();
    k
}

/// Connected graphs of order `n`, one per isomorphism class.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut layer = vec![Graph::empty(1)];
    for order in 2..=n {
        let perms = permutations(order);
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &layer {
            for mask in 1u64..1 << (order - 1) {
                let mut edges = g.edges().to_vec();
                edges.extend((0..order - 1).filter(|v| mask >> v & 1 == 1).map(|v| (v, order - 1)));
                let key = perms.iter().map(|p| edge_key(&edges, p)).min().unwrap();
                if seen.insert(key) {
                    next.push(Graph::from_edges(order, edges).unwrap());
                }
            }
        }
        layer = next;
    }
    layer
}

/// Random formula with `1..=max_n` variables, `0..=max_m` clauses of width
/// 1 to 3.
pub fn random_cnf<R: Rng>(rng: &mut R, max_n: usize, max_m: usize) -> CnfFormula {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(0..=max_m);
    let clauses = (0..m)
        .map(|_| {
            let width = rng.gen_range(1..=n.min(3));
            let mut vars: Vec<usize> = (0..n).collect();
            let mut clause = Vec::with_capacity(width);
            for _ in 0..width {
                let var = vars.swap_remove(rng.gen_range(0..vars.len()));
                clause.push(Literal {
                    var,
                    positive: rng.gen_bool(0.5),
                });
            }
            clause
        })
        .collect();
    CnfFormula::new(n, clauses).unwrap()
}

/// Every clause over `n` variables with 1 to 3 distinct variables.
pub fn all_clauses(n: usize) -> Vec<Vec<Literal>> {
    let mut out = Vec::new();
    for mask in 1u32..1 << n {
        let vars: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        if vars.len() > 3 {
            continue;
        }
        for signs in 0u32..1 << vars.len() {
            out.push(
                vars.iter()
                    .enumerate()
                    .map(|(i, &var)| Literal {
                        var,
                        positive: signs >> i & 1 == 0,
                    })
                    .collect(),
            );
        }
    }
    out
}

/// Every formula over `n` variables with exactly `m` clauses, as multisets.
pub fn all_cnfs(n: usize, m: usize) -> Vec<CnfFormula> {
    let clauses = all_clauses(n);
    let mut out = Vec::new();
    let mut idx = vec![0usize; m];
    loop {
        out.push(CnfFormula::new(n, idx.iter().map(|&i| clauses[i].clone()).collect()).unwrap());
        // Next non-decreasing index vector.
        let Some(pos) = (0..m).rev().find(|&p| idx[p] + 1 < clauses.len()) else {
            return out;
        };
        idx[pos] += 1;
        for p in pos + 1..m {
            idx[p] = idx[pos];
        }
    }
}
