//! Plain-text edge-list format.
//!
//! ```text
//! # optional comment lines
//! n 3
//! e 0 1
//! e 1 2
//! ```
//!
//! The first non-comment line declares the order. Each `e u v` line adds an
//! edge. Serialization writes edges with `u < v` in lexicographic order, so
//! the output is canonical.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").expect("writing to a String");
    }
    out
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut order: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |message: String| Error::Parse { line, message };
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut fields = trimmed.split_whitespace();
        let tag = fields.next().expect("non-empty line has a field");
        let nums = fields
            .map(|f| {
                f.parse::<usize>()
                    .map_err(|_| err(format!("`{f}` is not a non-negative integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        match (tag, order, nums.as_slice()) {
            ("n", None, [n]) => order = Some(*n),
            ("n", Some(_), _) => return Err(err("duplicate `n` line".into())),
            ("n", None, _) => return Err(err("`n` takes exactly one value".into())),
            ("e", None, _) => return Err(err("edge before the `n` line".into())),
            ("e", Some(n), &[u, v]) => {
                if u >= n || v >= n {
                    return Err(err(format!("edge ({u}, {v}) out of range for order {n}")));
                }
                if u == v {
                    return Err(err(format!("loop at vertex {u}")));
                }
                edges.push((u, v));
            }
            ("e", Some(_), _) => return Err(err("`e` takes exactly two values".into())),
            (other, _, _) => return Err(err(format!("unknown line tag `{other}`"))),
        }
    }
    let n = order.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        message: "missing `n` line".into(),
    })?;
    Graph::new(n, &edges)
}
