//! Plain edge-list text: the vertex count on the first line, then one
//! whitespace-separated 0-based pair `u v` per line. Blank lines and lines
//! starting with `#` are ignored.

use super::{Graph, GraphError};

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields = tokens(raw);
        match n {
            None => {
                let [(col, tok)] = fields.as_slice() else {
                    return Err(parse_err(line, 1, "expected a single vertex count"));
                };
                n = Some(parse_usize(tok, line, *col)?);
            }
            Some(order) => {
                let [(cu, u), (cv, v)] = fields.as_slice() else {
                    let col = fields.get(2).map_or(1, |f| f.0);
                    return Err(parse_err(line, col, "expected exactly two vertex indices"));
                };
                let u = parse_usize(u, line, *cu)?;
                let v = parse_usize(v, line, *cv)?;
                for (x, col) in [(u, *cu), (v, *cv)] {
                    if x >= order {
                        return Err(parse_err(line, col, &format!("vertex {x} >= n = {order}")));
                    }
                }
                edges.push((u, v, line));
            }
        }
    }
    let n = n.ok_or_else(|| parse_err(1, 1, "missing vertex count"))?;
    let mut g = Graph::empty(n).map_err(|_| parse_err(1, 1, "vertex count must be positive"))?;
    for (u, v, line) in edges {
        g.try_add_edge(u, v).map_err(|e| parse_err(line, 1, &e.to_string()))?;
    }
    Ok(g)
}

/// Renders `g` in the edge-list format accepted by [`parse_edge_list`].
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Whitespace-separated tokens with their 1-based column.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn parse_usize(tok: &str, line: usize, column: usize) -> Result<usize, GraphError> {
    tok.parse()
        .map_err(|_| parse_err(line, column, &format!("not a non-negative integer: {tok:?}")))
}

fn parse_err(line: usize, column: usize, message: &str) -> GraphError {
    GraphError::Parse {
        line,
        column,
        message: message.to_string(),
    }
}
