//! Plain-text edge list format.
//!
//! Grammar: first non-comment line `n <count>`, then one `u v` pair per
//! line. Blank lines are skipped and `#` starts a comment, whole-line or
//! trailing.

use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("missing 'n <count>' header line")]
    MissingHeader,
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
}

/// Parses the edge-list format into a graph.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut n: Option<(usize, usize)> = None; // (order, header line)
    let mut edges: Vec<(Vertex, Vertex, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match (&n, tokens.as_slice()) {
            (None, ["n", count]) => {
                let order = count.parse().map_err(|_| EdgeListError::Malformed {
                    line,
                    msg: format!("bad vertex count {count:?}"),
                })?;
                n = Some((order, line));
            }
            (None, _) => return Err(EdgeListError::MissingHeader),
            (Some(_), [u, v]) => {
                let parse = |s: &str| {
                    s.parse::<Vertex>().map_err(|_| EdgeListError::Malformed {
                        line,
                        msg: format!("bad vertex id {s:?}"),
                    })
                };
                edges.push((parse(u)?, parse(v)?, line));
            }
            (Some(_), _) => {
                return Err(EdgeListError::Malformed {
                    line,
                    msg: format!("expected 'u v', got {content:?}"),
                })
            }
        }
    }
    let (order, header_line) = n.ok_or(EdgeListError::MissingHeader)?;
    let plain: Vec<(Vertex, Vertex)> = edges.iter().map(|&(u, v, _)| (u, v)).collect();
    Graph::new(order, &plain).map_err(|source| {
        let line = match source {
            GraphError::VertexOutOfRange { v, .. } => edges
                .iter()
                .find(|&&(a, b, _)| a == v || b == v)
                .map(|&(_, _, l)| l)
                .unwrap_or(header_line),
            GraphError::LoopEdge { v } => edges
                .iter()
                .find(|&&(a, b, _)| a == v && b == v)
                .map(|&(_, _, l)| l)
                .unwrap_or(header_line),
            _ => header_line,
        };
        EdgeListError::Graph { line, source }
    })
}

/// Writes a graph in the edge-list format. `parse_edge_list` round-trips it.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_simple_graphs() {
        let k2 = parse_edge_list("n 2\n0 1\n").unwrap();
        assert_eq!(k2.order(), 2);
        assert_eq!(k2.edges(), vec![(0, 1)]);

        let p3 = parse_edge_list("n 3\n0 1\n1 2\n").unwrap();
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);

        // comments and blank lines
        let g = parse_edge_list("# header\nn 3 # order\n\n0 1\n# done\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn reports_line_numbers() {
        assert_eq!(
            parse_edge_list("n 2\n0 x\n").unwrap_err(),
            EdgeListError::Malformed {
                line: 2,
                msg: "bad vertex id \"x\"".into()
            }
        );
        assert!(matches!(
            parse_edge_list("n 2\n0 1 2\n").unwrap_err(),
            EdgeListError::Malformed { line: 2, .. }
        ));
        assert!(matches!(
            parse_edge_list("0 1\n").unwrap_err(),
            EdgeListError::MissingHeader
        ));
        // vertex id inconsistent with the declared order
        assert!(matches!(
            parse_edge_list("n 2\n0 1\n1 2\n").unwrap_err(),
            EdgeListError::Graph {
                line: 3,
                source: GraphError::VertexOutOfRange { v: 2, n: 2 }
            }
        ));
    }

    #[test]
    fn roundtrip() {
        let g = Graph::new(5, &[(0, 4), (1, 2), (2, 3)]).unwrap();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }
}
