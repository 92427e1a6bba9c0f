//! Dataset building, manifests and empirical-network ingestion.

mod record;

use std::collections::HashSet;
use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::attack::{simulate, AttackOptions, CurveSpec, Scenario};
use crate::graph::edgelist::read_edge_list;
use crate::graph::generators::ba_attachment;
use crate::graph::{Graph, ModelKind};
use crate::metrics::LabelVector;
use crate::{rng, Error, Result};

pub use record::{AdjacencyImage, Record, HEADER_LEN, MAGIC, VERSION};

pub const MANIFEST_VERSION: u32 = 1;
pub const MANIFEST_FILE: &str = "manifest.json";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Split {
    Train,
    Val,
    Test,
}

impl Split {
    /// 80/10/10 split by position inside a block of `count` graphs.
    pub fn for_index(index: usize, count: usize) -> Split {
        if index * 10 < count * 8 {
            Split::Train
        } else if index * 10 < count * 9 {
            Split::Val
        } else {
            Split::Test
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub id: u64,
    /// Record path relative to the manifest's directory.
    pub file: String,
    pub split: Split,
    pub model: ModelKind,
    pub avg_k: f64,
    pub n: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub version: u32,
    pub scenario: Scenario,
    pub steps: usize,
    pub records: Vec<ManifestEntry>,
}

impl Manifest {
    pub fn new(scenario: Scenario, steps: usize) -> Self {
        Manifest {
            version: MANIFEST_VERSION,
            scenario,
            steps,
            records: Vec::new(),
        }
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let manifest: Manifest = serde_json::from_slice(&fs::read(path)?)?;
        manifest.validate()?;
        Ok(manifest)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut out = BufWriter::new(File::create(path)?);
        serde_json::to_writer_pretty(&mut out, self)?;
        out.write_all(b"\n")?;
        out.flush()?;
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        if self.version != MANIFEST_VERSION {
            return Err(Error::format(format!(
                "unsupported manifest version {}",
                self.version
            )));
        }
        let mut ids = HashSet::new();
        for r in &self.records {
            if !ids.insert(r.id) {
                return Err(Error::format(format!("record id {} listed twice", r.id)));
            }
        }
        Ok(())
    }

    pub fn split_counts(&self) -> (usize, usize, usize) {
        self.records
            .iter()
            .fold((0, 0, 0), |(tr, va, te), r| match r.split {
                Split::Train => (tr + 1, va, te),
                Split::Val => (tr, va + 1, te),
                Split::Test => (tr, va, te + 1),
            })
    }

    pub fn entries(&self, split: Split) -> impl Iterator<Item = &ManifestEntry> {
        self.records.iter().filter(move |r| r.split == split)
    }
}

/// Parameters of a synthetic dataset.
#[derive(Debug, Clone, PartialEq)]
pub struct DatasetConfig {
    pub models: Vec<ModelKind>,
    pub avg_ks: Vec<f64>,
    /// Graphs per `(model, avg_k)` pair; must be a multiple of 10.
    pub per_config_count: usize,
    pub n: usize,
    pub spec: CurveSpec,
    pub scenario: Scenario,
    pub base_seed: u64,
    pub options: AttackOptions,
}

impl DatasetConfig {
    fn validate(&self) -> Result<()> {
        if self.models.is_empty() || self.avg_ks.is_empty() {
            return Err(Error::param(
                "dataset needs at least one model and one mean degree",
            ));
        }
        if self.per_config_count == 0 || !self.per_config_count.is_multiple_of(10) {
            return Err(Error::param(format!(
                "per-config count {} cannot be split 8/1/1",
                self.per_config_count
            )));
        }
        for &model in &self.models {
            for &k in &self.avg_ks {
                match model {
                    ModelKind::Ba => {
                        ba_attachment(k)?;
                    }
                    ModelKind::Er => {}
                    ModelKind::Empirical => {
                        return Err(Error::param(
                            "empirical networks cannot be part of a synthetic dataset",
                        ))
                    }
                }
            }
        }
        Ok(())
    }

    /// Manifest entries in id order, before any simulation.
    pub fn plan(&self) -> Result<Vec<ManifestEntry>> {
        self.validate()?;
        let mut entries = Vec::new();
        for &model in &self.models {
            for &avg_k in &self.avg_ks {
                for i in 0..self.per_config_count {
                    let id = entries.len() as u64;
                    entries.push(ManifestEntry {
                        id,
                        file: format!("records/{id:06}.rbst"),
                        split: Split::for_index(i, self.per_config_count),
                        model,
                        avg_k,
                        n: self.n,
                        seed: rng::graph_seed(self.base_seed, id),
                    });
                }
            }
        }
        Ok(entries)
    }
}

/// Generates, simulates and labels the graph described by `entry`. The graph
/// and its removal order share the entry's seed on separate random streams.
pub fn simulate_entry(
    entry: &ManifestEntry,
    scenario: Scenario,
    spec: &CurveSpec,
    opts: &AttackOptions,
) -> Result<(Graph, Record)> {
    let g = entry.model.generate(entry.n, entry.avg_k, entry.seed)?;
    let curve = simulate(&g, scenario, spec, entry.seed, opts)?;
    let label = LabelVector::from_curve(curve.into_values())?;
    let record = Record::from_label(&g, scenario, &label)?;
    Ok((g, record))
}

/// Records simulated in parallel per chunk, then written in id order.
const BUILD_CHUNK: usize = 64;

/// Builds the dataset under `out_dir`: one record file per graph in
/// `records/` plus `manifest.json`. Output depends only on `config`.
pub fn build_dataset(config: &DatasetConfig, out_dir: impl AsRef<Path>) -> Result<Manifest> {
    let out_dir = out_dir.as_ref();
    let entries = config.plan()?;
    fs::create_dir_all(out_dir.join("records"))?;

    for chunk in entries.chunks(BUILD_CHUNK) {
        let encoded: Vec<Vec<u8>> = chunk
            .par_iter()
            .map(|e| {
                simulate_entry(e, config.scenario, &config.spec, &config.options)
                    .map(|(_, r)| r.encode())
            })
            .collect::<Result<_>>()?;
        for (entry, bytes) in chunk.iter().zip(encoded) {
            fs::write(out_dir.join(&entry.file), bytes)?;
        }
    }

    let manifest = Manifest {
        version: MANIFEST_VERSION,
        scenario: config.scenario,
        steps: config.spec.steps(),
        records: entries,
    };
    manifest.write(out_dir.join(MANIFEST_FILE))?;
    Ok(manifest)
}

/// Manifest plus the directory its record paths are relative to.
#[derive(Debug, Clone)]
pub struct Dataset {
    pub root: PathBuf,
    pub manifest: Manifest,
}

impl Dataset {
    /// Opens a manifest file, or `manifest.json` inside a directory.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let file = if path.is_dir() {
            path.join(MANIFEST_FILE)
        } else {
            path.to_path_buf()
        };
        let manifest = Manifest::read(&file)?;
        let root = file.parent().map(Path::to_path_buf).unwrap_or_default();
        Ok(Dataset { root, manifest })
    }

    pub fn record_path(&self, entry: &ManifestEntry) -> PathBuf {
        self.root.join(&entry.file)
    }

    pub fn read_record(&self, entry: &ManifestEntry) -> Result<Record> {
        let rec = Record::read_file(self.record_path(entry))?;
        if rec.scenario() != self.manifest.scenario || rec.steps() != self.manifest.steps {
            return Err(Error::format(format!(
                "record {} is {}/{} steps but the manifest says {}/{}",
                entry.id,
                rec.scenario(),
                rec.steps(),
                self.manifest.scenario,
                self.manifest.steps
            )));
        }
        Ok(rec)
    }
}

/// Summary of an imported real-world network.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmpiricalStats {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub avg_k: f64,
    pub dropped_duplicates: usize,
    pub dropped_self_loops: usize,
}

/// Reads an edge list, keeping every component.
pub fn ingest_edge_list(path: impl AsRef<Path>, name: &str) -> Result<(Graph, EmpiricalStats)> {
    let imp = read_edge_list(path)?;
    let stats = imp.graph.stats();
    Ok((
        imp.graph,
        EmpiricalStats {
            name: name.to_owned(),
            n: stats.n,
            m: stats.m,
            avg_k: stats.avg_k,
            dropped_duplicates: imp.dropped_duplicates,
            dropped_self_loops: imp.dropped_self_loops,
        },
    ))
}
