//! DOT export with per-path edge highlighting, for eyeballing witnesses in
//! Graphviz.

use crate::graph::Graph;
use crate::path::{PathError, VertexPath};
use std::collections::BTreeMap;
use std::fmt::Write;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DotError {
    #[error("highlighted path {index} is not a valid path of the graph: {source}")]
    InvalidPath { index: usize, source: PathError },
}

const PALETTE: [&str; 6] = ["red", "blue", "green", "orange", "purple", "brown"];

/// Renders `g` as DOT source. Each highlighted path's edges carry that
/// path's palette color; edges on several highlighted paths get a color
/// list, which Graphviz draws as parallel splines. Output is deterministic
/// for fixed input.
pub fn to_dot(g: &Graph, highlighted: &[VertexPath]) -> Result<String, DotError> {
    for (index, p) in highlighted.iter().enumerate() {
        if !p.is_valid_in(g) {
            let err = crate::path::VertexPath::new(g, p.vertices().to_vec())
                .expect_err("is_valid_in was false");
            return Err(DotError::InvalidPath { index, source: err });
        }
    }

    // (u, v) with u < v -> palette colors of the paths covering that edge.
    let mut colors: BTreeMap<(usize, usize), Vec<&str>> = BTreeMap::new();
    for (index, p) in highlighted.iter().enumerate() {
        let color = PALETTE[index % PALETTE.len()];
        for pair in p.vertices().windows(2) {
            let key = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            colors.entry(key).or_default().push(color);
        }
    }

    let mut out = String::new();
    out.push_str("graph g {\n");
    for v in 0..g.order() {
        writeln!(out, "  {v};").unwrap();
    }
    for (u, v) in g.edges() {
        match colors.get(&(u, v)) {
            Some(cs) => {
                writeln!(out, "  {u} -- {v} [color=\"{}\", penwidth=2];", cs.join(":")).unwrap()
            }
            None => writeln!(out, "  {u} -- {v};").unwrap(),
        }
    }
    out.push_str("}\n");
    Ok(out)
}
