//! Binary record layout shared by datasets and model predictions.
//!
//! All integers little-endian:
//!
//! ```text
//! offset  size              field
//! 0       4                 magic "RBST"
//! 4       2                 version (u16) = 1
//! 6       4                 N (u32)
//! 10      4                 steps (u32)
//! 14      1                 scenario: 0=RNF 1=HDAA 2=REF 3=HEDAA
//! 15      N * ceil(N/8)     adjacency rows, bit j of row i (MSB first) = edge(i, j)
//! ...     4 * (steps + 1)   label values, f32
//! ```

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::attack::Scenario;
use crate::graph::{Graph, NodeId};
use crate::metrics::LabelVector;
use crate::{Error, Result};

pub const MAGIC: &[u8; 4] = b"RBST";
pub const VERSION: u16 = 1;
pub const HEADER_LEN: usize = 15;

/// Symmetric N×N binary adjacency matrix with zero diagonal, bit-packed by row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyImage {
    n: usize,
    bits: Vec<u8>,
}

impl AdjacencyImage {
    pub fn row_bytes(n: usize) -> usize {
        n.div_ceil(8)
    }

    pub fn from_graph(g: &Graph) -> Self {
        let n = g.n();
        let stride = Self::row_bytes(n);
        let mut bits = vec![0u8; n * stride];
        for &(u, v) in g.edges() {
            for (row, col) in [(u as usize, v as usize), (v as usize, u as usize)] {
                bits[row * stride + col / 8] |= 0x80 >> (col % 8);
            }
        }
        AdjacencyImage { n, bits }
    }

    fn from_bits(n: usize, bits: Vec<u8>) -> Result<Self> {
        let img = AdjacencyImage { n, bits };
        let stride = Self::row_bytes(n);
        for i in 0..n {
            if img.get(i, i) {
                return Err(Error::format(format!("adjacency diagonal set at node {i}")));
            }
            // Padding bits past column N must stay clear.
            if !n.is_multiple_of(8) && img.bits[i * stride + stride - 1] & (0xFF >> (n % 8)) != 0 {
                return Err(Error::format(format!(
                    "adjacency row {i} has padding bits set"
                )));
            }
            for j in i + 1..n {
                if img.get(i, j) != img.get(j, i) {
                    return Err(Error::format(format!(
                        "adjacency not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(img)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        let stride = Self::row_bytes(self.n);
        self.bits[i * stride + j / 8] & (0x80 >> (j % 8)) != 0
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bits
    }

    /// Graph whose edges are the set bits above the diagonal, row-major.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.get(i, j) {
                    edges.push((i as NodeId, j as NodeId));
                }
            }
        }
        Graph::from_checked(self.n, edges)
    }
}

/// One network with its label (or prediction) vector.
#[derive(Debug, Clone, PartialEq)]
pub struct Record {
    scenario: Scenario,
    adjacency: AdjacencyImage,
    label: Vec<f32>,
}

impl Record {
    /// `label` holds `steps + 1` values, so at least two.
    pub fn new(scenario: Scenario, adjacency: AdjacencyImage, label: Vec<f32>) -> Result<Self> {
        if label.len() < 2 {
            return Err(Error::param(
                "record label needs steps >= 1 plus a robustness value",
            ));
        }
        if u32::try_from(label.len() - 1).is_err() || u32::try_from(adjacency.n()).is_err() {
            return Err(Error::param("record dimensions exceed 32 bits"));
        }
        Ok(Record {
            scenario,
            adjacency,
            label,
        })
    }

    pub fn from_label(g: &Graph, scenario: Scenario, label: &LabelVector) -> Result<Self> {
        let values = label.to_flat().into_iter().map(|x| x as f32).collect();
        Record::new(scenario, AdjacencyImage::from_graph(g), values)
    }

    pub fn scenario(&self) -> Scenario {
        self.scenario
    }

    pub fn n(&self) -> usize {
        self.adjacency.n()
    }

    pub fn steps(&self) -> usize {
        self.label.len() - 1
    }

    pub fn adjacency(&self) -> &AdjacencyImage {
        &self.adjacency
    }

    pub fn label(&self) -> &[f32] {
        &self.label
    }

    pub fn label_vector(&self) -> LabelVector {
        LabelVector::from_flat(self.label.iter().map(|&x| x as f64).collect())
            .expect("label has >= 2 values")
    }

    pub fn encoded_len(&self) -> usize {
        HEADER_LEN + self.adjacency.bits.len() + 4 * self.label.len()
    }

    pub fn encode(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.encoded_len());
        self.write_to(&mut out)
            .expect("writing to a Vec cannot fail");
        out
    }

    pub fn write_to(&self, mut out: impl Write) -> std::io::Result<()> {
        out.write_all(MAGIC)?;
        out.write_all(&VERSION.to_le_bytes())?;
        out.write_all(&(self.n() as u32).to_le_bytes())?;
        out.write_all(&(self.steps() as u32).to_le_bytes())?;
        out.write_all(&[self.scenario.code()])?;
        out.write_all(&self.adjacency.bits)?;
        for v in &self.label {
            out.write_all(&v.to_le_bytes())?;
        }
        Ok(())
    }

    pub fn decode(bytes: &[u8]) -> Result<Self> {
        if bytes.len() < HEADER_LEN {
            return Err(Error::format(format!(
                "record truncated: {} header bytes",
                bytes.len()
            )));
        }
        if &bytes[..4] != MAGIC {
            return Err(Error::format("bad record magic"));
        }
        let version = u16::from_le_bytes([bytes[4], bytes[5]]);
        if version != VERSION {
            return Err(Error::format(format!(
                "unsupported record version {version}"
            )));
        }
        let n = u32::from_le_bytes(bytes[6..10].try_into().unwrap()) as usize;
        let steps = u32::from_le_bytes(bytes[10..14].try_into().unwrap()) as usize;
        let scenario = Scenario::from_code(bytes[14])
            .ok_or_else(|| Error::format(format!("unknown scenario code {}", bytes[14])))?;
        if steps == 0 {
            return Err(Error::format("record has zero steps"));
        }
        let adj_len = (n as u64) * AdjacencyImage::row_bytes(n) as u64;
        let expected = HEADER_LEN as u64 + adj_len + 4 * (steps as u64 + 1);
        if bytes.len() as u64 != expected {
            return Err(Error::format(format!(
                "record length {} does not match header (expected {expected})",
                bytes.len()
            )));
        }
        let adj_end = HEADER_LEN + adj_len as usize;
        let adjacency = AdjacencyImage::from_bits(n, bytes[HEADER_LEN..adj_end].to_vec())?;
        let label = bytes[adj_end..]
            .chunks_exact(4)
            .map(|c| f32::from_le_bytes(c.try_into().unwrap()))
            .collect();
        Ok(Record {
            scenario,
            adjacency,
            label,
        })
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Self> {
        Record::decode(&fs::read(path)?)
    }

    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.encode())?;
        Ok(())
    }
}
