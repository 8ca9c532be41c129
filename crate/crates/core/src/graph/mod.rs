//! Simple undirected graphs, trees, and vertex sets.
//!
//! Vertex identity is positional (`0..n`). Operations that delete vertices
//! return an explicit map from new identifiers back to the old ones.

mod canon;
mod enumerate;
mod parse;

pub use canon::{canonical_form, tree_centers};
pub use enumerate::{all_trees, random_tree};
pub use parse::parse_edge_list;

use std::collections::VecDeque;
use std::fmt;
use std::ops::Deref;

use serde::Serialize;

use crate::error::GraphError;

pub type Vertex = usize;

/// Undirected simple graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
            labels: None,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::empty(n);
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, a: Vertex, b: Vertex) -> Result<(), GraphError> {
        let n = self.order();
        for v in [a, b] {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
            }
        }
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        match self.adj[a].binary_search(&b) {
            Ok(_) => return Err(GraphError::DuplicateEdge(a.min(b), a.max(b))),
            Err(pos) => self.adj[a].insert(pos, b),
        }
        let pos = self.adj[b].binary_search(&a).unwrap_err();
        self.adj[b].insert(pos, a);
        self.edges.push((a.min(b), a.max(b)));
        Ok(())
    }

    /// Appends a fresh isolated vertex and returns its identifier.
    pub fn add_vertex(&mut self) -> Vertex {
        self.adj.push(Vec::new());
        if let Some(labels) = &mut self.labels {
            labels.push(String::new());
        }
        self.adj.len() - 1
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.order() {
            return Err(GraphError::LabelCount {
                expected: self.order(),
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(min, max)` pairs in insertion order.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a < self.order() && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    /// Adjacency bitmasks, available for graphs of order at most 64.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.order() > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|ns| ns.iter().fold(0u64, |m, &w| m | (1 << w)))
                .collect(),
        )
    }

    pub fn is_connected(&self) -> bool {
        if self.order() == 0 {
            return true;
        }
        self.bfs_order(0, None).len() == self.order()
    }

    /// Vertices reachable from `start` in BFS order, never entering `blocked`.
    pub(crate) fn bfs_order(&self, start: Vertex, blocked: Option<Vertex>) -> Vec<Vertex> {
        let mut seen = vec![false; self.order()];
        if let Some(b) = blocked {
            seen[b] = true;
        }
        seen[start] = true;
        let mut order = vec![start];
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
        order
    }

    /// Subgraph induced by `keep`; returns the graph and the new-to-old map.
    /// New identifiers follow ascending old identifiers.
    pub fn induced(&self, keep: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut old_ids: Vec<Vertex> = keep.to_vec();
        old_ids.sort_unstable();
        old_ids.dedup();
        let mut new_id = vec![usize::MAX; self.order()];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let mut g = Graph::empty(old_ids.len());
        let mut edges: Vec<(Vertex, Vertex)> = self
            .edges
            .iter()
            .filter(|&&(a, b)| new_id[a] != usize::MAX && new_id[b] != usize::MAX)
            .map(|&(a, b)| (new_id[a], new_id[b]))
            .collect();
        edges.sort_unstable();
        for (a, b) in edges {
            g.add_edge(a, b).expect("induced edges are valid");
        }
        if let Some(labels) = &self.labels {
            g.labels = Some(old_ids.iter().map(|&v| labels[v].clone()).collect());
        }
        (g, old_ids)
    }

    /// Serializes in the `n m` / `a b` edge-list format.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.order(), self.edge_count());
        for &(a, b) in &self.edges {
            out.push_str(&format!("{a} {b}\n"));
        }
        out
    }
}

/// True iff `g` is connected and acyclic.
pub fn is_tree(g: &Graph) -> bool {
    g.order() >= 1 && g.edge_count() == g.order() - 1 && g.is_connected()
}

/// A graph certified connected and acyclic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tree(Graph);

impl Tree {
    pub fn new(g: Graph) -> Result<Self, GraphError> {
        if is_tree(&g) {
            Ok(Tree(g))
        } else {
            Err(GraphError::NotATree)
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Tree::new(Graph::from_edges(n, edges)?)
    }

    /// The tree of order one.
    pub fn singleton() -> Self {
        Tree(Graph::empty(1))
    }

    /// Path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        Tree::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is a tree")
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Tree::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star is a tree")
    }

    pub fn graph(&self) -> &Graph {
        &self.0
    }

    pub fn into_graph(self) -> Graph {
        self.0
    }

    /// Returns the tree with a new leaf attached to `parent`, and the leaf's id.
    pub fn with_leaf(&self, parent: Vertex) -> Result<(Tree, Vertex), GraphError> {
        let mut g = self.0.clone();
        let leaf = g.add_vertex();
        g.add_edge(parent, leaf)?;
        Ok((Tree(g), leaf))
    }

    /// Subtree induced by a vertex set that is known to be connected.
    pub fn induced_subtree(&self, keep: &[Vertex]) -> Result<(Tree, Vec<Vertex>), GraphError> {
        let (g, map) = self.0.induced(keep);
        Ok((Tree::new(g)?, map))
    }
}

impl Deref for Tree {
    type Target = Graph;
    fn deref(&self) -> &Graph {
        &self.0
    }
}

/// A subset of `0..universe`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    bits: Vec<bool>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            bits: vec![false; universe],
        }
    }

    pub fn full(universe: usize) -> Self {
        VertexSet {
            bits: vec![true; universe],
        }
    }

    pub fn from_vertices<I>(universe: usize, members: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Vertex>,
    {
        let mut set = VertexSet::empty(universe);
        for v in members {
            if v >= universe {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    order: universe,
                });
            }
            set.bits[v] = true;
        }
        Ok(set)
    }

    pub fn from_mask(universe: usize, mask: u64) -> Self {
        VertexSet {
            bits: (0..universe).map(|i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.bits.get(v).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, v: Vertex) {
        self.bits[v] = true;
    }

    pub fn remove(&mut self, v: Vertex) {
        self.bits[v] = false;
    }

    pub fn len(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.bits.iter().any(|&b| b)
    }

    pub fn is_full(&self) -> bool {
        self.bits.iter().all(|&b| b)
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let n = self.universe().max(other.universe());
        VertexSet {
            bits: (0..n).map(|v| self.contains(v) || other.contains(v)).collect(),
        }
    }

    /// Bitmask of members; `None` when the universe exceeds 64.
    pub fn to_mask(&self) -> Option<u64> {
        (self.universe() <= 64).then(|| self.iter().fold(0u64, |m, v| m | (1 << v)))
    }

    /// Same members in a larger universe.
    pub fn grown(&self, universe: usize) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.resize(universe.max(bits.len()), false);
        VertexSet { bits }
    }

    /// Restriction to `old_ids`, re-indexed by position in that list.
    pub fn restricted(&self, old_ids: &[Vertex]) -> VertexSet {
        VertexSet {
            bits: old_ids.iter().map(|&v| self.contains(v)).collect(),
        }
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// One component of `T - v` hanging off a neighbor `root` of `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    pub root: Vertex,
    pub vertices: Vec<Vertex>,
}

/// Result of cutting a tree at `v` with a distinguished neighbor `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub v: Vertex,
    pub u: Vertex,
    /// Vertices of the component containing `u`, ascending.
    pub prime: Vec<Vertex>,
    /// All other components, ordered by root.
    pub branches: Vec<Branch>,
}

impl Split {
    /// The component containing `u` as a tree in its own right, plus the
    /// new-to-old identifier map.
    pub fn prime_tree(&self, t: &Tree) -> (Tree, Vec<Vertex>) {
        t.induced_subtree(&self.prime)
            .expect("a component of a tree is a tree")
    }
}

/// Cuts `t` at `v`: the component of `T - v` holding `u`, and one branch per
/// other neighbor of `v`.
pub fn split_at(t: &Tree, v: Vertex, u: Vertex) -> Result<Split, GraphError> {
    if v >= t.order() || !t.has_edge(v, u) {
        return Err(GraphError::NotAdjacent(v, u));
    }
    let mut prime = t.bfs_order(u, Some(v));
    prime.sort_unstable();
    let branches = t
        .neighbors(v)
        .iter()
        .filter(|&&w| w != u)
        .map(|&w| {
            let mut vertices = t.bfs_order(w, Some(v));
            vertices.sort_unstable();
            Branch { root: w, vertices }
        })
        .collect();
    Ok(Split {
        v,
        u,
        prime,
        branches,
    })
}

fn bfs_distances(t: &Tree, start: Vertex) -> (Vec<usize>, Vec<Vertex>) {
    let n = t.order();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::from([start]);
    dist[start] = 0;
    while let Some(v) = queue.pop_front() {
        for &w in t.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    (dist, parent)
}

/// A longest path whose endpoints both lie in `x`. Among all such paths the
/// lexicographically smallest vertex sequence is returned.
pub fn longest_x_path(t: &Tree, x: &VertexSet) -> Result<Vec<Vertex>, GraphError> {
    let members: Vec<Vertex> = x.iter().filter(|&v| v < t.order()).collect();
    if members.len() < 2 {
        return Err(GraphError::TooFewEndpoints(members.len()));
    }
    let farthest_member = |dist: &[usize]| {
        members
            .iter()
            .copied()
            .max_by_key(|&v| (dist[v], std::cmp::Reverse(v)))
            .expect("nonempty")
    };
    // In a tree metric, the farthest member from any vertex is one of the
    // two ends of a diametral pair of members.
    let (d0, _) = bfs_distances(t, members[0]);
    let a = farthest_member(&d0);
    let (da, _) = bfs_distances(t, a);
    let b = farthest_member(&da);
    let (db, _) = bfs_distances(t, b);
    let diameter = da[b];

    let start = members
        .iter()
        .copied()
        .find(|&s| da[s].max(db[s]) == diameter)
        .expect("a diametral endpoint is a member");

    let (dist, parent) = bfs_distances(t, start);
    let mut on_route = vec![false; t.order()];
    for &target in members.iter().filter(|&&m| dist[m] == diameter) {
        let mut cur = target;
        while !on_route[cur] {
            on_route[cur] = true;
            if cur == start {
                break;
            }
            cur = parent[cur];
        }
    }
    let mut path = vec![start];
    let mut cur = start;
    while dist[cur] < diameter {
        cur = t
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| on_route[w] && dist[w] == dist[cur] + 1)
            .expect("route continues");
        path.push(cur);
    }
    Ok(path)
}
