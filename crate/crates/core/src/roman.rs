//! Assignments `V -> {0,1,2}` and the domination predicates built on them.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RomanError {
    #[error("value {value} at vertex {vertex} is not in {{0,1,2}}")]
    BadValue { vertex: Vertex, value: u8 },
    #[error("cannot parse assignment `{0}`")]
    BadDigits(String),
    #[error("move needs distinct vertices, got {0} twice")]
    SameVertex(Vertex),
    #[error("move source {0} has value 0")]
    EmptySource(Vertex),
    #[error("move target {0} already has value 2")]
    FullTarget(Vertex),
    #[error("X0 and X1 overlap")]
    OverlappingSets,
}

/// A total map from vertices to `{0, 1, 2}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment {
    values: Vec<u8>,
}

impl Assignment {
    pub fn new(values: Vec<u8>) -> Result<Self, RomanError> {
        if let Some((vertex, &value)) = values.iter().enumerate().find(|(_, &x)| x > 2) {
            return Err(RomanError::BadValue { vertex, value });
        }
        Ok(Assignment { values })
    }

    pub fn zeros(n: usize) -> Self {
        Assignment { values: vec![0; n] }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, v: Vertex) -> u8 {
        self.values[v]
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn weight(&self) -> u32 {
        self.values.iter().map(|&x| x as u32).sum()
    }

    /// `f(S)`, the total value over `s`.
    pub fn sum_over(&self, s: &VertexSet) -> u32 {
        s.iter().map(|v| self.values[v] as u32).sum()
    }

    /// Vertices with value at least 1.
    pub fn positive_set(&self) -> VertexSet {
        VertexSet::from_vertices(
            self.len(),
            self.values
                .iter()
                .enumerate()
                .filter_map(|(i, &x)| (x >= 1).then_some(i)),
        )
        .expect("indices are in range")
    }

    /// `f_{v->u}`: one unit moves from `v` to `u`.
    pub fn moved(&self, v: Vertex, u: Vertex) -> Result<Assignment, RomanError> {
        if u == v {
            return Err(RomanError::SameVertex(u));
        }
        if self.values[v] == 0 {
            return Err(RomanError::EmptySource(v));
        }
        if self.values[u] == 2 {
            return Err(RomanError::FullTarget(u));
        }
        let mut values = self.values.clone();
        values[v] -= 1;
        values[u] += 1;
        Ok(Assignment { values })
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in &self.values {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Assignment({self})")
    }
}

impl FromStr for Assignment {
    type Err = RomanError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let values = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                '2' => Ok(2),
                _ => Err(RomanError::BadDigits(s.to_string())),
            })
            .collect::<Result<Vec<u8>, _>>()?;
        Ok(Assignment { values })
    }
}

impl Serialize for Assignment {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Every vertex of `x` outside `d` has a neighbor in `d`.
pub fn is_x_dominating(d: &VertexSet, x: &VertexSet, g: &Graph) -> bool {
    x.iter()
        .filter(|&u| !d.contains(u))
        .all(|u| g.neighbors(u).iter().any(|&w| d.contains(w)))
}

/// Roman domination of `x`: each value-0 vertex of `x` sees a value-2 vertex.
pub fn is_rdf(g: &Graph, x: &VertexSet, f: &Assignment) -> bool {
    x.iter()
        .filter(|&u| f.get(u) == 0)
        .all(|u| g.neighbors(u).iter().any(|&w| f.get(w) == 2))
}

/// Weak Roman domination with constraint sets `x0` and `x1`: every value-0
/// vertex of `x0 ∪ x1` has a positive neighbor `v` such that after moving a
/// unit from `v` to it, the positive vertices still dominate `x0`.
pub fn is_wrdf(
    g: &Graph,
    x0: &VertexSet,
    x1: &VertexSet,
    f: &Assignment,
) -> Result<bool, RomanError> {
    if !x0.is_disjoint(x1) {
        return Err(RomanError::OverlappingSets);
    }
    Ok(x0
        .iter()
        .chain(x1.iter())
        .filter(|&u| f.get(u) == 0)
        .all(|u| has_rescue_move(g, x0, f, u)))
}

/// Two-set form: `is_wrdf(g, x, ∅, f)`.
pub fn is_wrdf_for(g: &Graph, x: &VertexSet, f: &Assignment) -> bool {
    is_wrdf(g, x, &VertexSet::empty(g.order()), f).expect("empty set is disjoint")
}

/// `u` (with `f(u) = 0`) has a positive neighbor whose unit can move to `u`
/// while keeping the positive set `x`-dominating.
pub fn has_rescue_move(g: &Graph, x: &VertexSet, f: &Assignment, u: Vertex) -> bool {
    g.neighbors(u).iter().any(|&v| {
        f.get(v) >= 1
            && f.moved(v, u)
                .map(|h| is_x_dominating(&h.positive_set(), x, g))
                .unwrap_or(false)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> Assignment {
        s.parse().unwrap()
    }

    fn p3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn moves() {
        assert_eq!(a("10").moved(0, 1).unwrap(), a("01"));
        assert_eq!(a("020").moved(1, 0).unwrap(), a("110"));
        assert_eq!(a("022").moved(1, 2), Err(RomanError::FullTarget(2)));
        assert_eq!(a("010").moved(0, 1), Err(RomanError::EmptySource(0)));
        assert_eq!(a("110").moved(1, 1), Err(RomanError::SameVertex(1)));
    }

    #[test]
    fn x_domination() {
        let g = p3();
        let all = VertexSet::full(3);
        assert!(is_x_dominating(
            &VertexSet::empty(3),
            &VertexSet::empty(3),
            &g
        ));
        assert!(is_x_dominating(
            &VertexSet::from_vertices(3, [1]).unwrap(),
            &all,
            &g
        ));
        assert!(!is_x_dominating(
            &VertexSet::from_vertices(3, [0]).unwrap(),
            &all,
            &g
        ));
    }

    #[test]
    fn roman_checks() {
        let g = p3();
        let all = VertexSet::full(3);
        assert!(is_rdf(&g, &all, &a("020")));
        assert!(!is_rdf(&g, &all, &a("101")));
        assert!(is_rdf(&g, &VertexSet::empty(3), &a("000")));
    }

    #[test]
    fn weak_roman_checks() {
        let p2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert!(is_wrdf_for(&p2, &VertexSet::full(2), &a("10")));
        let g = p3();
        let all = VertexSet::full(3);
        assert!(!is_wrdf_for(&g, &all, &a("010")));
        assert!(is_wrdf_for(&g, &all, &a("101")));
        let e = VertexSet::empty(3);
        assert!(is_wrdf(&g, &e, &e, &a("000")).unwrap());
        assert_eq!(
            is_wrdf(&g, &all, &VertexSet::from_vertices(3, [1]).unwrap(), &a("000")),
            Err(RomanError::OverlappingSets)
        );
    }

    #[test]
    fn digit_strings() {
        assert_eq!(a("020").to_string(), "020");
        assert!("013".parse::<Assignment>().is_err());
        assert!(Assignment::new(vec![0, 3]).is_err());
        assert_eq!(a("0212").weight(), 5);
    }
}
