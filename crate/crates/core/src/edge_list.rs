//! Plain-text edge lists: a header line `n <count>` followed by one `u v`
//! pair per line. Blank lines are ignored.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let err = |line: usize, reason: String| Error::EdgeList { line, reason };

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing `n <count>` header".into()))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|e| err(header_line, format!("bad vertex count {count:?}: {e}")))?,
        _ => {
            return Err(err(
                header_line,
                format!("expected `n <count>`, got {header:?}"),
            ))
        }
    };

    let mut seen = HashSet::new();
    let mut edges = Vec::new();
    for (line, content) in lines {
        let fields: Vec<&str> = content.split_whitespace().collect();
        let [a, b] = fields.as_slice() else {
            return Err(err(line, format!("expected `u v`, got {content:?}")));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|e| err(line, format!("bad vertex {s:?}: {e}")))
        };
        let (u, v) = (parse(a)?, parse(b)?);
        if u >= n || v >= n {
            return Err(err(
                line,
                format!("vertex out of range 0..{n} in edge {u} {v}"),
            ));
        }
        if u == v {
            return Err(err(line, format!("self-loop at {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(line, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path};

    #[test]
    fn parses_examples() {
        assert_eq!(parse_edge_list("n 2\n0 1").unwrap(), complete(2));
        assert_eq!(parse_edge_list("n 4\n0 1\n1 2\n2 3").unwrap(), path(4));
        assert_eq!(parse_edge_list("n 1\n").unwrap(), Graph::empty(1));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("n 3\n0 1\n0 1", 3),
            ("n 3\n0 1\n1 0", 3),
            ("n 3\n\n1 1", 3),
            ("n 3\n0 3", 2),
            ("n x", 1),
            ("m 3", 1),
            ("n 3\n0 1 2", 2),
        ];
        for (text, want) in cases {
            match parse_edge_list(text) {
                Err(Error::EdgeList { line, .. }) => assert_eq!(line, want, "{text:?}"),
                other => panic!("{text:?}: unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn writer_round_trips() {
        let g = path(6);
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }
}
