//! Simple undirected graphs and the connectivity machinery built on them.

mod dsu;
pub mod edgelist;
pub mod generators;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

pub use dsu::DsuForest;
pub use generators::{gen_ba, gen_er, ModelKind};

/// Node identifier. Nodes are always `0..n`.
pub type NodeId = u32;

/// Undirected edge stored with the smaller endpoint first.
pub type Edge = (NodeId, NodeId);

/// Immutable simple undirected graph.
///
/// The edge list keeps insertion order (generator order), which is what edge
/// ids refer to. Adjacency is stored in CSR form with each neighbour list
/// sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    offsets: Vec<usize>,
    neighbors: Vec<NodeId>,
}

/// Table-style summary of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    /// Mean degree `2M/N`.
    pub avg_k: f64,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges and endpoints outside `0..n`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        if n > NodeId::MAX as usize {
            return Err(Error::param(format!("too many nodes: {n}")));
        }
        let mut seen = HashSet::new();
        let mut list = Vec::new();
        for (u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::param(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::param(format!("self-loop on node {u}")));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::param(format!("duplicate edge ({}, {})", e.0, e.1)));
            }
            list.push(e);
        }
        Ok(Self::from_checked(n, list))
    }

    /// `edges` must already be normalized, in range, loop-free and unique.
    pub(crate) fn from_checked(n: usize, edges: Vec<Edge>) -> Self {
        let mut degree = vec![0usize; n];
        for &(u, v) in &edges {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut neighbors = vec![0; 2 * edges.len()];
        for &(u, v) in &edges {
            neighbors[fill[u as usize]] = v;
            fill[u as usize] += 1;
            neighbors[fill[v as usize]] = u;
            fill[v as usize] += 1;
        }
        for v in 0..n {
            neighbors[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        Graph {
            n,
            edges,
            offsets,
            neighbors,
        }
    }

    /// Node count `N`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count `M`.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.neighbors[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.offsets.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// Mean degree `2M/N`; zero for the empty graph.
    pub fn avg_degree(&self) -> f64 {
        if self.n == 0 {
            0.0
        } else {
            2.0 * self.m() as f64 / self.n as f64
        }
    }

    pub fn stats(&self) -> GraphStats {
        GraphStats {
            n: self.n,
            m: self.m(),
            avg_k: self.avg_degree(),
        }
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        (u as usize) < self.n
            && (v as usize) < self.n
            && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edge degree `k_u * k_v` of an existing edge.
    pub fn edge_degree(&self, (u, v): Edge) -> Result<u64> {
        if !self.has_edge(u, v) {
            return Err(Error::Lookup(format!("no edge ({u}, {v}) in graph")));
        }
        Ok(self.degree(u) as u64 * self.degree(v) as u64)
    }

    /// Edge degree of the edge with index `id` in [`Graph::edges`].
    pub fn edge_degree_by_id(&self, id: usize) -> u64 {
        let (u, v) = self.edges[id];
        self.degree(u) as u64 * self.degree(v) as u64
    }
}

/// Size of the largest connected component of the subgraph induced by the
/// active nodes and active edges. Edges touching an inactive node are
/// ignored.
pub fn lcc_size(g: &Graph, active_nodes: &[bool], active_edges: &[bool]) -> usize {
    assert_eq!(
        active_nodes.len(),
        g.n(),
        "active_nodes length must equal N"
    );
    assert_eq!(
        active_edges.len(),
        g.m(),
        "active_edges length must equal M"
    );
    let mut dsu = DsuForest::new(g.n());
    for (v, _) in active_nodes.iter().enumerate().filter(|(_, a)| **a) {
        dsu.activate(v);
    }
    for (&(u, v), _) in g.edges().iter().zip(active_edges).filter(|(_, a)| **a) {
        if active_nodes[u as usize] && active_nodes[v as usize] {
            dsu.union(u as usize, v as usize);
        }
    }
    dsu.max_size()
}

/// Component sizes found by breadth-first search, in order of each
/// component's smallest node id.
pub fn component_sizes(g: &Graph) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut queue = std::collections::VecDeque::new();
    let mut sizes = Vec::new();
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        queue.push_back(s as NodeId);
        let mut count = 0;
        while let Some(v) = queue.pop_front() {
            count += 1;
            for &w in g.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    queue.push_back(w);
                }
            }
        }
        sizes.push(count);
    }
    sizes
}
