//! Erdős–Rényi and Barabási–Albert generators.

use std::fmt;
use std::str::FromStr;

use rand::seq::index;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{Edge, Graph, NodeId};
use crate::rng::{self, GENERATOR_STREAM};
use crate::{Error, Result};

/// Origin of a network.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModelKind {
    #[serde(rename = "ER")]
    Er,
    #[serde(rename = "BA")]
    Ba,
    #[serde(rename = "empirical")]
    Empirical,
}

impl ModelKind {
    /// Generates a synthetic graph with mean degree close to `avg_k`.
    /// For BA the attachment count is `avg_k / 2`, which must be a whole
    /// number.
    pub fn generate(self, n: usize, avg_k: f64, seed: u64) -> Result<Graph> {
        match self {
            ModelKind::Er => gen_er(n, avg_k, seed),
            ModelKind::Ba => gen_ba(n, ba_attachment(avg_k)?, seed),
            ModelKind::Empirical => Err(Error::param("empirical networks cannot be generated")),
        }
    }
}

/// Edges per new node for a BA graph of nominal mean degree `avg_k`.
pub fn ba_attachment(avg_k: f64) -> Result<usize> {
    let m = avg_k / 2.0;
    if !(m >= 1.0 && m.fract() == 0.0 && m.is_finite()) {
        return Err(Error::param(format!(
            "BA mean degree must be an even integer >= 2, got {avg_k}"
        )));
    }
    Ok(m as usize)
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelKind::Er => "ER",
            ModelKind::Ba => "BA",
            ModelKind::Empirical => "empirical",
        })
    }
}

impl FromStr for ModelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "er" => Ok(ModelKind::Er),
            "ba" => Ok(ModelKind::Ba),
            "empirical" => Ok(ModelKind::Empirical),
            other => Err(Error::param(format!("unknown network model '{other}'"))),
        }
    }
}

/// G(n, M) random graph with `M = round(n * avg_k / 2)` distinct edges chosen
/// uniformly among all node pairs.
pub fn gen_er(n: usize, avg_k: f64, seed: u64) -> Result<Graph> {
    if n < 2 {
        return Err(Error::param(format!("ER graph needs n >= 2, got {n}")));
    }
    if !(avg_k.is_finite() && avg_k >= 0.0) {
        return Err(Error::param(format!(
            "mean degree must be finite and >= 0, got {avg_k}"
        )));
    }
    let pairs = n as u64 * (n as u64 - 1) / 2;
    let target = (n as f64 * avg_k / 2.0).round();
    if target > pairs as f64 {
        return Err(Error::param(format!(
            "mean degree {avg_k} needs {target} edges but only {pairs} node pairs exist for n = {n}"
        )));
    }
    let target = target as usize;
    let pairs = usize::try_from(pairs).map_err(|_| Error::param("n too large"))?;

    let mut rng = rng::stream(seed, GENERATOR_STREAM);
    let edges = index::sample(&mut rng, pairs, target)
        .into_iter()
        .map(|k| pair_from_index(k as u64))
        .collect();
    Ok(Graph::from_checked(n, edges))
}

/// Inverse of `k = j(j-1)/2 + i` for `i < j`.
fn pair_from_index(k: u64) -> Edge {
    let mut j = ((1.0 + (1.0 + 8.0 * k as f64).sqrt()) / 2.0) as u64;
    while j * (j - 1) / 2 > k {
        j -= 1;
    }
    while (j + 1) * j / 2 <= k {
        j += 1;
    }
    let i = k - j * (j - 1) / 2;
    (i as NodeId, j as NodeId)
}

/// Preferential-attachment graph: a complete seed graph on `m` nodes, then
/// each further node links to `m` distinct existing nodes picked with
/// probability proportional to their current degree.
pub fn gen_ba(n: usize, m: usize, seed: u64) -> Result<Graph> {
    if m < 1 || n <= m {
        return Err(Error::param(format!(
            "BA graph needs n > m >= 1, got n = {n}, m = {m}"
        )));
    }
    if n > NodeId::MAX as usize {
        return Err(Error::param(format!("too many nodes: {n}")));
    }
    let mut rng = rng::stream(seed, GENERATOR_STREAM);
    let mut edges: Vec<Edge> = Vec::with_capacity(m * (m - 1) / 2 + (n - m) * m);
    // One entry per edge endpoint, so uniform picks are degree-proportional.
    let mut pool: Vec<NodeId> = Vec::with_capacity(2 * edges.capacity());

    for v in 0..m as NodeId {
        for u in 0..v {
            edges.push((u, v));
            pool.push(u);
            pool.push(v);
        }
    }

    let mut chosen: Vec<NodeId> = Vec::with_capacity(m);
    for v in m as NodeId..n as NodeId {
        chosen.clear();
        while chosen.len() < m {
            // Only reachable with m = 1, where the seed node has degree 0.
            let pick = if pool.is_empty() {
                rng.gen_range(0..v)
            } else {
                pool[rng.gen_range(0..pool.len())]
            };
            if !chosen.contains(&pick) {
                chosen.push(pick);
            }
        }
        for &u in &chosen {
            edges.push((u, v));
            pool.push(u);
            pool.push(v);
        }
    }
    Ok(Graph::from_checked(n, edges))
}
