//! `robustcurve` command-line tool.
//!
//! Exit codes: 0 on success, 1 for usage errors, 2 for data or format errors.

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use robustcurve::attack::{curve_ensemble, simulate, AttackOptions, CurveSpec, Scenario};
use robustcurve::dataset::{build_dataset, ingest_edge_list, Dataset, DatasetConfig, Split};
use robustcurve::eval::{
    bench, write_plot_data, CurveSet, ErrorReport, ExternalEngine, PairedLabel,
};
use robustcurve::graph::edgelist::{read_edge_list, write_edge_list};
use robustcurve::graph::{Graph, ModelKind};
use robustcurve::metrics::robustness;

#[derive(Debug, Parser)]
#[command(
    name = "robustcurve",
    version,
    about = "Network connectivity robustness: simulation, datasets, evaluation"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Generate a synthetic network and write it as an edge list
    Generate {
        #[arg(long)]
        model: ModelKind,
        #[arg(long)]
        n: usize,
        /// Mean degree
        #[arg(long)]
        k: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Simulate the attack curve of one network and write it as CSV
    Curve {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        scenario: Scenario,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
        /// Random realizations; more than one writes p,mean,std instead of p,value
        #[arg(long, default_value_t = 1)]
        realizations: usize,
        #[command(flatten)]
        attack: AttackFlags,
        #[command(flatten)]
        common: Common,
    },
    /// Build a labelled dataset of synthetic networks
    Dataset {
        /// Comma-separated network models (er, ba)
        #[arg(long, value_delimiter = ',', required = true)]
        models: Vec<ModelKind>,
        /// Comma-separated mean degrees
        #[arg(long, value_delimiter = ',', required = true)]
        ks: Vec<f64>,
        /// Networks per (model, mean degree) pair, a multiple of 10
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 1000)]
        n: usize,
        #[arg(long)]
        scenario: Scenario,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
        #[command(flatten)]
        attack: AttackFlags,
        #[command(flatten)]
        common: Common,
    },
    /// Compare prediction records against fresh simulation and report errors as JSON
    Eval {
        /// Prediction manifest (or the directory holding manifest.json)
        #[arg(long)]
        pred: PathBuf,
        /// Only evaluate records of this network model
        #[arg(long)]
        model: Option<ModelKind>,
        /// Only evaluate records with this mean degree
        #[arg(long)]
        k: Option<f64>,
        /// Only evaluate records of this split (train, val, test)
        #[arg(long)]
        split: Option<String>,
        /// Directory for sim.csv and pred.csv plot data (p,mean,std)
        #[arg(long)]
        plot_dir: Option<PathBuf>,
        #[command(flatten)]
        attack: AttackFlags,
        #[command(flatten)]
        common: Common,
    },
    /// Read an edge list and print N, M and mean degree as JSON
    Stats {
        #[arg(long)]
        input: PathBuf,
        /// Name reported in the output (defaults to the file stem)
        #[arg(long)]
        name: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Time the naive and incremental simulators (and optionally a model command)
    Bench {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        scenario: Scenario,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        /// Shell command timed as the "model" engine, e.g. a surrogate inference run
        #[arg(long)]
        model_cmd: Option<String>,
        /// Print the report as JSON instead of a table
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Args)]
struct Common {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file (directory for `dataset`); stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads
    #[arg(long, env = "ROBUSTCURVE_THREADS")]
    threads: Option<usize>,
}

/// Network to simulate: an edge-list file or a generated graph.
#[derive(Debug, Args)]
struct Source {
    /// Edge-list file
    #[arg(long, conflicts_with_all = ["model", "n", "k"])]
    input: Option<PathBuf>,
    #[arg(long, requires_all = ["n", "k"])]
    model: Option<ModelKind>,
    #[arg(long)]
    n: Option<usize>,
    /// Mean degree
    #[arg(long)]
    k: Option<f64>,
}

#[derive(Debug, Args)]
struct AttackFlags {
    /// Re-rank degrees after every removal (HDAA, HEDAA)
    #[arg(long)]
    adaptive: bool,
    /// Draw an independent removal set at every grid point (RNF, REF)
    #[arg(long)]
    resample: bool,
}

impl AttackFlags {
    fn options(&self) -> AttackOptions {
        AttackOptions {
            adaptive: self.adaptive,
            resample_per_step: self.resample,
        }
    }
}

impl Source {
    fn load(&self, seed: u64) -> Result<Graph> {
        match (&self.input, self.model, self.n, self.k) {
            (Some(path), ..) => Ok(read_edge_list(path)
                .with_context(|| format!("reading {}", path.display()))?
                .graph),
            (None, Some(model), Some(n), Some(k)) => Ok(model.generate(n, k, seed)?),
            _ => Err(usage("either --input or --model, --n and --k are required")),
        }
    }
}

#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<UsageError>().is_some() {
        return 1;
    }
    match e.downcast_ref::<robustcurve::Error>() {
        Some(robustcurve::Error::Parameter(_)) => 1,
        _ => 2,
    }
}

fn common(cmd: &Cmd) -> &Common {
    match cmd {
        Cmd::Generate { common, .. }
        | Cmd::Curve { common, .. }
        | Cmd::Dataset { common, .. }
        | Cmd::Eval { common, .. }
        | Cmd::Stats { common, .. }
        | Cmd::Bench { common, .. } => common,
    }
}

fn run(cli: Cli) -> Result<()> {
    if let Some(threads) = common(&cli.command).threads {
        if threads == 0 {
            return Err(usage("--threads must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()?;
    }
    match cli.command {
        Cmd::Generate {
            model,
            n,
            k,
            common,
        } => {
            let g = model.generate(n, k, common.seed)?;
            write_edge_list(&g, output(common.out.as_deref())?)?;
        }
        Cmd::Curve {
            source,
            scenario,
            steps,
            realizations,
            attack,
            common,
        } => {
            let g = source.load(common.seed)?;
            let spec = CurveSpec::new(steps)?;
            let opts = attack.options();
            let out = output(common.out.as_deref())?;
            if realizations <= 1 {
                simulate(&g, scenario, &spec, common.seed, &opts)?.write_csv(&spec, out)?;
            } else {
                let curves = curve_ensemble(&g, scenario, &spec, realizations, common.seed, &opts)?;
                let set = CurveSet::new(curves.into_iter().map(|c| c.into_values()).collect())?;
                write_plot_data(&set.mean_curve(), &set.std_curve(), out)?;
            }
        }
        Cmd::Dataset {
            models,
            ks,
            count,
            n,
            scenario,
            steps,
            attack,
            common,
        } => {
            let out_dir = common
                .out
                .ok_or_else(|| usage("dataset needs --out <dir>"))?;
            let config = DatasetConfig {
                models,
                avg_ks: ks,
                per_config_count: count,
                n,
                spec: CurveSpec::new(steps)?,
                scenario,
                base_seed: common.seed,
                options: attack.options(),
            };
            let manifest = build_dataset(&config, &out_dir)?;
            let (train, val, test) = manifest.split_counts();
            let summary = serde_json::json!({
                "manifest": out_dir.join(robustcurve::dataset::MANIFEST_FILE),
                "records": manifest.records.len(),
                "train": train,
                "val": val,
                "test": test,
            });
            println!("{}", serde_json::to_string_pretty(&summary)?);
        }
        Cmd::Eval {
            pred,
            model,
            k,
            split,
            plot_dir,
            attack,
            common,
        } => {
            let split = split.map(|s| parse_split(&s)).transpose()?;
            let report = evaluate(
                &pred,
                model,
                k,
                split,
                plot_dir.as_deref(),
                &attack.options(),
            )?;
            let mut out = output(common.out.as_deref())?;
            serde_json::to_writer_pretty(&mut out, &report)?;
            writeln!(out)?;
        }
        Cmd::Stats {
            input,
            name,
            common,
        } => {
            let name = name.unwrap_or_else(|| {
                input
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_default()
            });
            let (_, stats) = ingest_edge_list(&input, &name)
                .with_context(|| format!("reading {}", input.display()))?;
            let json = serde_json::json!({
                "name": stats.name,
                "n": stats.n,
                "m": stats.m,
                "k": (stats.avg_k * 100.0).round() / 100.0,
                "dropped_duplicates": stats.dropped_duplicates,
                "dropped_self_loops": stats.dropped_self_loops,
            });
            let mut out = output(common.out.as_deref())?;
            serde_json::to_writer_pretty(&mut out, &json)?;
            writeln!(out)?;
        }
        Cmd::Bench {
            source,
            scenario,
            steps,
            repeats,
            model_cmd,
            json,
            common,
        } => {
            let g = source.load(common.seed)?;
            let spec = CurveSpec::new(steps)?;
            let externals = model_cmd
                .into_iter()
                .map(|cmd| ExternalEngine {
                    name: "model".to_owned(),
                    run: Box::new(move || run_shell(&cmd)),
                })
                .collect();
            let report = bench(&g, scenario, &spec, common.seed, repeats, externals)?;
            let mut out = output(common.out.as_deref())?;
            if json {
                serde_json::to_writer_pretty(&mut out, &report)?;
                writeln!(out)?;
            } else {
                writeln!(
                    out,
                    "{} on N={} M={} steps={} (median of {})",
                    report.scenario, report.n, report.m, report.steps, report.repeats
                )?;
                writeln!(out, "{:<12} {:>14} {:>12}", "engine", "seconds", "speedup")?;
                for row in &report.rows {
                    writeln!(
                        out,
                        "{:<12} {:>14.6} {:>11.1}x",
                        row.engine, row.seconds, row.speedup_vs_naive
                    )?;
                }
            }
            out.flush()?;
        }
    }
    Ok(())
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => {
            if let Some(parent) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                fs::create_dir_all(parent)?;
            }
            Box::new(BufWriter::new(
                File::create(p).with_context(|| format!("creating {}", p.display()))?,
            ))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn parse_split(s: &str) -> Result<Split> {
    match s.to_ascii_lowercase().as_str() {
        "train" => Ok(Split::Train),
        "val" => Ok(Split::Val),
        "test" => Ok(Split::Test),
        other => Err(usage(format!("unknown split '{other}'"))),
    }
}

fn run_shell(cmd: &str) -> robustcurve::Result<()> {
    let status = Command::new("sh").arg("-c").arg(cmd).status()?;
    if !status.success() {
        return Err(robustcurve::Error::Io(io::Error::other(format!(
            "model command exited with {status}"
        ))));
    }
    Ok(())
}

/// Re-simulates every selected prediction record from its own adjacency
/// image and the manifest seed, then compares.
fn evaluate(
    pred: &Path,
    model: Option<ModelKind>,
    k: Option<f64>,
    split: Option<Split>,
    plot_dir: Option<&Path>,
    opts: &robustcurve::AttackOptions,
) -> Result<ErrorReport> {
    let ds = Dataset::open(pred).with_context(|| format!("opening {}", pred.display()))?;
    let entries: Vec<_> = ds
        .manifest
        .records
        .iter()
        .filter(|e| model.is_none_or(|m| e.model == m))
        .filter(|e| k.is_none_or(|k| e.avg_k == k))
        .filter(|e| split.is_none_or(|s| e.split == s))
        .collect();
    if entries.is_empty() {
        bail!(UsageError("no prediction records match the filters".into()));
    }
    let spec = CurveSpec::new(ds.manifest.steps)?;
    let scenario = ds.manifest.scenario;
    let pairs: Vec<PairedLabel> = entries
        .par_iter()
        .map(|entry| -> robustcurve::Result<PairedLabel> {
            let rec = ds.read_record(entry)?;
            let g = rec.adjacency().to_graph();
            let sim = simulate(&g, scenario, &spec, entry.seed, opts)?.into_values();
            let label = rec.label_vector();
            Ok(PairedLabel {
                pred_curve: label.curve().to_vec(),
                pred_robustness: label.robustness(),
                sim_robustness: robustness(&sim)?,
                sim_curve: sim,
            })
        })
        .collect::<robustcurve::Result<_>>()?;

    let model_name = match model {
        Some(m) => m.to_string(),
        None => {
            let first = entries[0].model;
            if entries.iter().all(|e| e.model == first) {
                first.to_string()
            } else {
                "mixed".to_owned()
            }
        }
    };
    let avg_k = k.or_else(|| {
        let first = entries[0].avg_k;
        entries.iter().all(|e| e.avg_k == first).then_some(first)
    });

    if let Some(dir) = plot_dir {
        fs::create_dir_all(dir)?;
        let sim = CurveSet::new(pairs.iter().map(|p| p.sim_curve.clone()).collect())?;
        let pred = CurveSet::new(pairs.iter().map(|p| p.pred_curve.clone()).collect())?;
        write_plot_data(
            &sim.mean_curve(),
            &sim.std_curve(),
            BufWriter::new(File::create(dir.join("sim.csv"))?),
        )?;
        write_plot_data(
            &pred.mean_curve(),
            &pred.std_curve(),
            BufWriter::new(File::create(dir.join("pred.csv"))?),
        )?;
    }

    Ok(ErrorReport::compute(&pairs, scenario, model_name, avg_k)?)
}
