//! OGF text format: header `n m`, then `m` lines `u v` with `0 <= u < v < n`.
//! Lines whose first non-blank character is `#` are comments.

use std::io::{BufRead, Write};

use thiserror::Error;

use crate::graph::{OrderedGraph, Vertex};

#[derive(Debug, Error)]
pub enum OgfError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {0}: {1}")]
    Malformed(usize, String),
    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: Vertex, v: Vertex },
    #[error("expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("graph too large: {0} vertices (limit {1})")]
    TooLarge(usize, usize),
}

fn is_comment(line: &str) -> bool {
    line.trim_start().starts_with('#')
}

pub fn parse(reader: impl BufRead) -> Result<OrderedGraph, OgfError> {
    let mut lines = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        if is_comment(&line) || line.trim().is_empty() {
            continue;
        }
        lines.push((idx + 1, line));
    }
    let Some(&(header_line, ref header)) = lines.first() else {
        return Err(OgfError::Malformed(0, "empty input".into()));
    };
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| OgfError::Malformed(header_line, "bad vertex count".into()))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| OgfError::Malformed(header_line, "bad edge count".into()))?;
    if it.next().is_some() {
        return Err(OgfError::Malformed(header_line, "trailing tokens in header".into()));
    }
    if n > OrderedGraph::MAX_VERTICES {
        return Err(OgfError::TooLarge(n, OrderedGraph::MAX_VERTICES));
    }

    let mut g = OrderedGraph::new(n);
    let mut found = 0usize;
    for &(line_no, ref line) in &lines[1..] {
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| OgfError::Malformed(line_no, "bad edge endpoint".into()))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| OgfError::Malformed(line_no, "bad edge endpoint".into()))?;
        if it.next().is_some() {
            return Err(OgfError::Malformed(line_no, "trailing tokens on edge line".into()));
        }
        if u >= v {
            return Err(OgfError::Malformed(
                line_no,
                format!("edge ({u}, {v}) must satisfy u < v"),
            ));
        }
        if v >= n {
            return Err(OgfError::Malformed(
                line_no,
                format!("edge ({u}, {v}) out of range for n = {n}"),
            ));
        }
        if g.has_edge(u, v) {
            return Err(OgfError::DuplicateEdge { line: line_no, u, v });
        }
        g.add_edge(u, v);
        found += 1;
    }
    if found != m {
        return Err(OgfError::EdgeCountMismatch { expected: m, found });
    }
    Ok(g)
}

pub fn parse_str(text: &str) -> Result<OrderedGraph, OgfError> {
    parse(text.as_bytes())
}

/// Canonical form: header then edges sorted ascending, no comments.
pub fn write(g: &OrderedGraph, mut out: impl Write) -> Result<(), OgfError> {
    writeln!(out, "{} {}", g.n(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

pub fn to_string(g: &OrderedGraph) -> String {
    let mut buf = Vec::new();
    write(g, &mut buf).expect("write to Vec cannot fail");
    String::from_utf8(buf).expect("OGF output is ASCII")
}

pub fn read_file(path: &std::path::Path) -> Result<OrderedGraph, OgfError> {
    let file = std::fs::File::open(path)?;
    parse(std::io::BufReader::new(file))
}

pub fn write_file(g: &OrderedGraph, path: &std::path::Path) -> Result<(), OgfError> {
    let file = std::fs::File::create(path)?;
    write(g, std::io::BufWriter::new(file))
}
