use super::Graph;
use crate::error::{GraphError, ParseError};

fn numbers(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let malformed = || ParseError::MalformedLine {
        line,
        text: text.to_string(),
    };
    let mut fields = text.split_whitespace();
    let a = fields.next().ok_or_else(malformed)?;
    let b = fields.next().ok_or_else(malformed)?;
    if fields.next().is_some() {
        return Err(malformed());
    }
    Ok((
        a.parse().map_err(|_| malformed())?,
        b.parse().map_err(|_| malformed())?,
    ))
}

/// Parses `n m` followed by `m` lines `a b`. Blank lines and lines starting
/// with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let (n, m) = numbers(line, header)?;
    let mut g = Graph::empty(n);
    let mut found = 0;
    for (line, text) in lines {
        let (a, b) = numbers(line, text)?;
        found += 1;
        g.add_edge(a, b).map_err(|e| match e {
            GraphError::VertexOutOfRange { vertex, order } => ParseError::VertexOutOfRange {
                line,
                vertex,
                order,
            },
            GraphError::SelfLoop(vertex) => ParseError::SelfLoop { line, vertex },
            GraphError::DuplicateEdge(a, b) => ParseError::DuplicateEdge { line, a, b },
            other => unreachable!("add_edge cannot fail with {other}"),
        })?;
    }
    if found != m {
        return Err(ParseError::EdgeCount { expected: m, found });
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_inputs() {
        let k1 = parse_edge_list("1 0").unwrap();
        assert_eq!((k1.order(), k1.edge_count()), (1, 0));
        let p2 = parse_edge_list("2 1\n0 1\n").unwrap();
        assert!(p2.has_edge(1, 0));
        let star = parse_edge_list("4 3\n0 1\n0 2\n0 3").unwrap();
        assert_eq!(star.neighbors(0), &[1, 2, 3]);
        assert_eq!(star.degree(1), 1);
    }

    #[test]
    fn distinct_errors() {
        assert_eq!(parse_edge_list(""), Err(ParseError::MissingHeader));
        assert!(matches!(
            parse_edge_list("2 1\n0 x"),
            Err(ParseError::MalformedLine { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("2 1\n0 1 2"),
            Err(ParseError::MalformedLine { .. })
        ));
        assert_eq!(
            parse_edge_list("2 1\n0 2"),
            Err(ParseError::VertexOutOfRange {
                line: 2,
                vertex: 2,
                order: 2
            })
        );
        assert_eq!(
            parse_edge_list("2 1\n1 1"),
            Err(ParseError::SelfLoop { line: 2, vertex: 1 })
        );
        assert_eq!(
            parse_edge_list("3 2\n0 1\n1 0"),
            Err(ParseError::DuplicateEdge { line: 3, a: 0, b: 1 })
        );
        assert_eq!(
            parse_edge_list("3 2\n0 1"),
            Err(ParseError::EdgeCount {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn comments_and_round_trip() {
        let g = parse_edge_list("# path\n3 2\n\n0 1\n1 2\n").unwrap();
        assert_eq!(parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }
}
