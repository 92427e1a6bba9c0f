//! Whitespace-separated edge-list text format.
//!
//! One `u v` pair per line. Lines starting with `#` or `%` and blank lines are
//! skipped, tokens after the second are ignored (weights, timestamps). Node
//! labels are arbitrary strings remapped to `0..N` in order of first
//! appearance. Self-loops and repeated edges are dropped and counted.

use std::collections::{HashMap, HashSet};
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use super::{Edge, Graph, NodeId};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct EdgeListImport {
    pub graph: Graph,
    /// Original label of each node id.
    pub labels: Vec<String>,
    pub dropped_duplicates: usize,
    pub dropped_self_loops: usize,
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<EdgeListImport> {
    parse_edge_list(BufReader::new(File::open(path)?))
}

pub fn parse_edge_list(reader: impl BufRead) -> Result<EdgeListImport> {
    let mut ids: HashMap<String, NodeId> = HashMap::new();
    let mut labels = Vec::new();
    let mut seen: HashSet<Edge> = HashSet::new();
    let mut edges = Vec::new();
    let mut dropped_duplicates = 0;
    let mut dropped_self_loops = 0;

    let mut intern = |label: &str, labels: &mut Vec<String>| -> Result<NodeId> {
        if let Some(&id) = ids.get(label) {
            return Ok(id);
        }
        let id = NodeId::try_from(labels.len()).map_err(|_| Error::format("too many nodes"))?;
        ids.insert(label.to_owned(), id);
        labels.push(label.to_owned());
        Ok(id)
    };

    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let (a, b) = match (tokens.next(), tokens.next()) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(Error::format_at(
                    idx + 1,
                    format!("expected two node labels, found '{trimmed}'"),
                ))
            }
        };
        let u = intern(a, &mut labels)?;
        let v = intern(b, &mut labels)?;
        if u == v {
            dropped_self_loops += 1;
            continue;
        }
        let e = (u.min(v), u.max(v));
        if seen.insert(e) {
            edges.push(e);
        } else {
            dropped_duplicates += 1;
        }
    }

    if labels.is_empty() {
        return Err(Error::format("edge list contains no edges"));
    }
    Ok(EdgeListImport {
        graph: Graph::from_checked(labels.len(), edges),
        labels,
        dropped_duplicates,
        dropped_self_loops,
    })
}

/// Writes `g` as an edge list with a `# n m` comment header.
pub fn write_edge_list(g: &Graph, mut out: impl Write) -> std::io::Result<()> {
    writeln!(out, "# {} {}", g.n(), g.m())?;
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    out.flush()
}
