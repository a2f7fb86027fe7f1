//! Line-oriented semigraph text format.
//!
//! ```text
//! # comment
//! v a b c d e      (optional; fixes vertex order, may list isolated vertices)
//! e a b c          (one edge per line, order significant)
//! e c d
//! ```

use std::fmt::Write as _;

use semigraph_core::{ModelError, Semigraph, SemigraphBuilder};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: {source}")]
    AtLine { line: usize, source: ModelError },
    #[error("{0}")]
    Model(ModelError),
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with their 1-based character columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (col, (byte, ch)) in line.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((col, byte)),
            (true, Some((c, b))) => {
                out.push((c + 1, &line[b..byte]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some((c, b)) = start {
        out.push((c + 1, &line[b..]));
    }
    out.into_iter()
}

pub fn parse(text: &str) -> Result<Semigraph, FormatError> {
    let mut builder = SemigraphBuilder::new();
    let mut edge_lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = tokens(raw);
        let Some((col, head)) = toks.next() else {
            continue;
        };
        if head.starts_with('#') {
            continue;
        }
        let rest: Vec<(usize, &str)> = toks.collect();
        if let Some(&(c, label)) = rest.iter().find(|(_, t)| t.starts_with('#')) {
            return Err(syntax(
                line,
                c,
                format!("label `{label}` may not start with `#`"),
            ));
        }
        match head {
            "v" => {
                for &(c, label) in &rest {
                    builder
                        .declare(label)
                        .map_err(|e| syntax(line, c, e.to_string()))?;
                }
            }
            "e" => {
                if rest.len() < 2 {
                    let c = rest.first().map_or(col + 1, |t| t.0);
                    return Err(syntax(
                        line,
                        c,
                        format!("an edge needs at least 2 vertices, found {}", rest.len()),
                    ));
                }
                builder
                    .edge(rest.iter().map(|t| t.1))
                    .map_err(|source| FormatError::AtLine { line, source })?;
                edge_lines.push(line);
            }
            other => {
                return Err(syntax(
                    line,
                    col,
                    format!("expected `v`, `e` or `#`, found `{other}`"),
                ));
            }
        }
    }
    builder.build().map_err(|err| match &err {
        ModelError::DuplicateEdge { second, .. } | ModelError::Intersection { second, .. } => {
            FormatError::AtLine {
                line: edge_lines[*second],
                source: err,
            }
        }
        ModelError::EdgeTooShort { edge, .. } | ModelError::RepeatedVertex { edge, .. } => {
            FormatError::AtLine {
                line: edge_lines[*edge],
                source: err,
            }
        }
        _ => FormatError::Model(err),
    })
}

/// Canonical text: one `v` line with the whole vertex table, then the edges
/// in stored order and orientation. `parse(&emit(g))` rebuilds `g` exactly.
pub fn emit(g: &Semigraph) -> String {
    let mut out = String::from("v");
    for label in g.labels() {
        out.push(' ');
        out.push_str(label);
    }
    out.push('\n');
    for e in g.edges() {
        out.push('e');
        for v in e.vertices() {
            let _ = write!(out, " {}", g.label(*v));
        }
        out.push('\n');
    }
    out
}
