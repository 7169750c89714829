//! Human-authored edge lists: one `u,v` pair per line, `#` comments allowed.

use super::{Graph, GraphError};

/// Parses an edge list. The vertex count is `n` when given, otherwise one
/// more than the largest index mentioned.
pub fn parse_edge_list(text: &str, n: Option<usize>) -> Result<Graph, GraphError> {
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 2 {
            return Err(GraphError::EdgeList {
                line: line_no,
                reason: format!("expected `u,v`, found {line:?}"),
            });
        }
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|e| GraphError::EdgeList {
                line: line_no,
                reason: format!("bad vertex index {s:?}: {e}"),
            })
        };
        pairs.push((line_no, parse(fields[0])?, parse(fields[1])?));
    }
    let n = n.unwrap_or_else(|| {
        pairs
            .iter()
            .map(|&(_, u, v)| u.max(v) + 1)
            .max()
            .unwrap_or(0)
    });
    let mut g = Graph::empty(n);
    for (line, u, v) in pairs {
        g.add_edge(u, v).map_err(|e| GraphError::EdgeList {
            line,
            reason: e.to_string(),
        })?;
    }
    Ok(g)
}
