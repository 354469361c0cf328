//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! a b        edge {a, b}
//! v:         isolated vertex v
//! ```
//!
//! Tokens are rendered [`VertexLabel`]s, so derived graphs such as
//! `L(S(G))` survive a write/read cycle with their provenance intact.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, VertexLabel};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn token(line: usize, raw: &str) -> Result<VertexLabel> {
    VertexLabel::parse(raw).map_err(|e| parse_error(line, e.to_string()))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut b = GraphBuilder::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        match fields.as_slice() {
            [single] => {
                let Some(name) = single.strip_suffix(':') else {
                    return Err(parse_error(
                        line,
                        format!("expected `u v` or `v:`, found `{trimmed}`"),
                    ));
                };
                b.add_vertex(token(line, name)?);
            }
            [u, v] => {
                let (u, v) = (token(line, u)?, token(line, v)?);
                if u == v {
                    return Err(parse_error(line, format!("self-loop at `{u}`")));
                }
                if b.contains_edge(&u, &v) {
                    return Err(parse_error(line, format!("duplicate edge `{u} {v}`")));
                }
                b.add_edge(u, v)
                    .map_err(|e| parse_error(line, e.to_string()))?;
            }
            _ => {
                return Err(parse_error(
                    line,
                    format!("expected 1 or 2 fields, found {}", fields.len()),
                ))
            }
        }
    }
    Ok(b.build())
}

/// Sorted edges, then `v:` lines for isolated vertices.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    for v in g.vertices() {
        if g.degree(v).unwrap_or(0) == 0 {
            out.push_str(&format!("{v}:\n"));
        }
    }
    out
}
