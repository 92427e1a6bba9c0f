//! Accuracy statistics for predicted curves, plot data and timing.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::attack::{attack_curve, naive_attack_curve, removal_order, CurveSpec, Scenario};
use crate::graph::Graph;
use crate::{fmt as numfmt, Error, Result};

/// Equal-length curves, one per network or realization.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveSet {
    curves: Vec<Vec<f64>>,
}

impl CurveSet {
    pub fn new(curves: Vec<Vec<f64>>) -> Result<Self> {
        if let Some(first) = curves.first() {
            let len = first.len();
            for (i, c) in curves.iter().enumerate() {
                if c.len() != len {
                    return Err(Error::param(format!(
                        "curve {i} has length {} instead of {len}",
                        c.len()
                    )));
                }
                if c.iter().any(|v| !v.is_finite()) {
                    return Err(Error::param(format!("curve {i} has non-finite values")));
                }
            }
        }
        Ok(CurveSet { curves })
    }

    pub fn curves(&self) -> &[Vec<f64>] {
        &self.curves
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    /// Length of each curve (0 for an empty set).
    pub fn curve_len(&self) -> usize {
        self.curves.first().map_or(0, Vec::len)
    }

    pub fn mean_curve(&self) -> Vec<f64> {
        let k = self.curves.len() as f64;
        (0..self.curve_len())
            .map(|i| self.curves.iter().map(|c| c[i]).sum::<f64>() / k)
            .collect()
    }

    /// Population standard deviation across curves at every index.
    pub fn std_curve(&self) -> Vec<f64> {
        let k = self.curves.len() as f64;
        self.mean_curve()
            .iter()
            .enumerate()
            .map(|(i, mean)| {
                let var = self
                    .curves
                    .iter()
                    .map(|c| (c[i] - mean).powi(2))
                    .sum::<f64>()
                    / k;
                var.sqrt()
            })
            .collect()
    }
}

/// Mean over curve positions of the population standard deviation across
/// the set.
pub fn mean_std(set: &CurveSet) -> Result<f64> {
    if set.len() < 2 {
        return Err(Error::param("mean_std needs at least two curves"));
    }
    if set.curve_len() == 0 {
        return Err(Error::param("mean_std of zero-length curves"));
    }
    let std = set.std_curve();
    Ok(std.iter().sum::<f64>() / std.len() as f64)
}

/// `(1/L) Σ |pred_i - sim_i|` per network, averaged over networks.
pub fn mean_abs_diff(pred: &CurveSet, sim: &CurveSet) -> Result<f64> {
    if pred.len() != sim.len() || pred.curve_len() != sim.curve_len() {
        return Err(Error::param(format!(
            "shape mismatch: {}x{} predicted vs {}x{} simulated",
            pred.len(),
            pred.curve_len(),
            sim.len(),
            sim.curve_len()
        )));
    }
    if pred.is_empty() || pred.curve_len() == 0 {
        return Err(Error::param("mean_abs_diff of an empty set"));
    }
    let l = pred.curve_len() as f64;
    let total: f64 = pred
        .curves
        .iter()
        .zip(&sim.curves)
        .map(|(p, s)| p.iter().zip(s).map(|(a, b)| (a - b).abs()).sum::<f64>() / l)
        .sum();
    Ok(total / pred.len() as f64)
}

/// Accuracy of a set of predictions against simulation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub e_sim: f64,
    pub e_pred: f64,
    pub e_pair: f64,
    pub scenario: Scenario,
    pub model: String,
    pub avg_k: Option<f64>,
    pub n_networks: usize,
    /// Mean |R_pred - R_sim| using the directly predicted robustness value.
    pub r_direct_err: f64,
    /// Mean |mean(pred curve) - R_sim|.
    pub r_curve_err: f64,
}

/// One predicted and one simulated label vector (curve plus robustness).
#[derive(Debug, Clone, PartialEq)]
pub struct PairedLabel {
    pub pred_curve: Vec<f64>,
    pub pred_robustness: f64,
    pub sim_curve: Vec<f64>,
    pub sim_robustness: f64,
}

impl ErrorReport {
    /// Statistics over curve elements only; the trailing robustness values
    /// feed `r_direct_err` and `r_curve_err`. `e_sim` and `e_pred` are 0 for
    /// a single network.
    pub fn compute(
        pairs: &[PairedLabel],
        scenario: Scenario,
        model: String,
        avg_k: Option<f64>,
    ) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::param("error report over zero networks"));
        }
        let pred = CurveSet::new(pairs.iter().map(|p| p.pred_curve.clone()).collect())?;
        let sim = CurveSet::new(pairs.iter().map(|p| p.sim_curve.clone()).collect())?;
        let spread = |set: &CurveSet| {
            if set.len() < 2 {
                Ok(0.0)
            } else {
                mean_std(set)
            }
        };
        let k = pairs.len() as f64;
        Ok(ErrorReport {
            e_sim: spread(&sim)?,
            e_pred: spread(&pred)?,
            e_pair: mean_abs_diff(&pred, &sim)?,
            scenario,
            model,
            avg_k,
            n_networks: pairs.len(),
            r_direct_err: pairs
                .iter()
                .map(|p| (p.pred_robustness - p.sim_robustness).abs())
                .sum::<f64>()
                / k,
            r_curve_err: pairs
                .iter()
                .map(|p| {
                    let from_curve = p.pred_curve.iter().sum::<f64>() / p.pred_curve.len() as f64;
                    (from_curve - p.sim_robustness).abs()
                })
                .sum::<f64>()
                / k,
        })
    }
}

/// Writes `p,mean,std` rows, `p_j = j / len`.
pub fn export_plot_data(mean: &[f64], std: &[f64], path: impl AsRef<Path>) -> Result<()> {
    let out = BufWriter::new(File::create(path)?);
    write_plot_data(mean, std, out)
}

pub fn write_plot_data(mean: &[f64], std: &[f64], mut out: impl Write) -> Result<()> {
    if mean.len() != std.len() {
        return Err(Error::param(format!(
            "mean has {} points but std has {}",
            mean.len(),
            std.len()
        )));
    }
    let steps = mean.len() as f64;
    writeln!(out, "p,mean,std")?;
    for (j, (m, s)) in mean.iter().zip(std).enumerate() {
        writeln!(
            out,
            "{},{},{}",
            numfmt::sig9(j as f64 / steps),
            numfmt::sig9(*m),
            numfmt::sig9(*s)
        )?;
    }
    out.flush()?;
    Ok(())
}

/// Parses a `p,mean,std` file back into `(p, mean, std)` columns.
pub fn read_plot_data(path: impl AsRef<Path>) -> Result<(Vec<f64>, Vec<f64>, Vec<f64>)> {
    let reader = BufReader::new(File::open(path)?);
    let mut cols = (Vec::new(), Vec::new(), Vec::new());
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        if idx == 0 {
            if line.trim() != "p,mean,std" {
                return Err(Error::format_at(1, "expected header 'p,mean,std'"));
            }
            continue;
        }
        let fields: Vec<f64> = line
            .split(',')
            .map(|f| f.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::format_at(idx + 1, e.to_string()))?;
        if fields.len() != 3 {
            return Err(Error::format_at(idx + 1, "expected three columns"));
        }
        cols.0.push(fields[0]);
        cols.1.push(fields[1]);
        cols.2.push(fields[2]);
    }
    Ok(cols)
}

/// Median wall-clock seconds of `repeats` runs of `f`.
pub fn time_median(repeats: usize, mut f: impl FnMut() -> Result<()>) -> Result<f64> {
    let mut times = Vec::with_capacity(repeats.max(1));
    for _ in 0..repeats.max(1) {
        let start = Instant::now();
        f()?;
        times.push(start.elapsed().as_secs_f64());
    }
    times.sort_by(f64::total_cmp);
    Ok(times[times.len() / 2])
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub engine: String,
    pub seconds: f64,
    /// Naive time divided by this engine's time.
    pub speedup_vs_naive: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub scenario: Scenario,
    pub n: usize,
    pub m: usize,
    pub steps: usize,
    pub repeats: usize,
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    pub fn seconds(&self, engine: &str) -> Option<f64> {
        self.rows
            .iter()
            .find(|r| r.engine == engine)
            .map(|r| r.seconds)
    }
}

/// An extra engine timed next to the simulators, e.g. surrogate inference.
pub struct ExternalEngine<'a> {
    pub name: String,
    pub run: Box<dyn FnMut() -> Result<()> + 'a>,
}

/// Times one full simulation (order plus curve) with the naive and the
/// incremental engine, and any external engines, reporting medians over
/// `repeats` runs.
pub fn bench(
    g: &Graph,
    scenario: Scenario,
    spec: &CurveSpec,
    seed: u64,
    repeats: usize,
    externals: Vec<ExternalEngine<'_>>,
) -> Result<BenchReport> {
    let naive = time_median(repeats, || {
        naive_attack_curve(g, &removal_order(g, scenario, seed), spec).map(drop)
    })?;
    let incremental = time_median(repeats, || {
        attack_curve(g, &removal_order(g, scenario, seed), spec).map(drop)
    })?;
    let mut timings = vec![
        ("naive".to_owned(), naive),
        ("incremental".to_owned(), incremental),
    ];
    for mut ext in externals {
        timings.push((ext.name, time_median(repeats, &mut ext.run)?));
    }
    let rows = timings
        .into_iter()
        .map(|(engine, seconds)| BenchRow {
            speedup_vs_naive: naive / seconds.max(f64::MIN_POSITIVE),
            engine,
            seconds,
        })
        .collect();
    Ok(BenchReport {
        scenario,
        n: g.n(),
        m: g.m(),
        steps: spec.steps(),
        repeats: repeats.max(1),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen_er;
    use crate::metrics::clamp_filter;
    use proptest::prelude::*;

    fn set(curves: &[&[f64]]) -> CurveSet {
        CurveSet::new(curves.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    #[test]
    fn mean_std_examples() {
        assert_eq!(mean_std(&set(&[&[0.3, 0.2], &[0.3, 0.2]])).unwrap(), 0.0);
        assert_eq!(mean_std(&set(&[&[0.0, 0.0], &[1.0, 1.0]])).unwrap(), 0.5);
        assert!(mean_std(&set(&[&[1.0]])).is_err());
    }

    #[test]
    fn mean_abs_diff_examples() {
        let sim = set(&[&[1.0, 0.5, 0.2], &[0.9, 0.4, 0.0]]);
        assert_eq!(mean_abs_diff(&sim, &sim).unwrap(), 0.0);
        let shifted = CurveSet::new(
            sim.curves()
                .iter()
                .map(|c| c.iter().map(|v| v + 0.01).collect())
                .collect(),
        )
        .unwrap();
        assert!((mean_abs_diff(&shifted, &sim).unwrap() - 0.01).abs() < 1e-12);
        assert!(mean_abs_diff(&set(&[&[1.0]]), &sim).is_err());
    }

    #[test]
    fn curve_set_rejects_bad_input() {
        assert!(CurveSet::new(vec![vec![1.0, 0.5], vec![1.0]]).is_err());
        assert!(CurveSet::new(vec![vec![f64::NAN]]).is_err());
    }

    #[test]
    fn report_fields() {
        let pairs = vec![
            PairedLabel {
                pred_curve: vec![1.0, 0.6],
                pred_robustness: 0.8,
                sim_curve: vec![1.0, 0.5],
                sim_robustness: 0.75,
            },
            PairedLabel {
                pred_curve: vec![0.9, 0.4],
                pred_robustness: 0.6,
                sim_curve: vec![1.0, 0.3],
                sim_robustness: 0.65,
            },
        ];
        let r = ErrorReport::compute(&pairs, Scenario::Rnf, "ER".into(), Some(4.0)).unwrap();
        assert!((r.e_pair - 0.075).abs() < 1e-12);
        assert!((r.e_sim - 0.05).abs() < 1e-12);
        assert!((r.e_pred - 0.075).abs() < 1e-12);
        assert!((r.r_direct_err - 0.05).abs() < 1e-12);
        assert!((r.r_curve_err - 0.025).abs() < 1e-12);
        assert_eq!(r.n_networks, 2);
        let json = serde_json::to_value(&r).unwrap();
        for key in [
            "e_sim",
            "e_pred",
            "e_pair",
            "scenario",
            "model",
            "avg_k",
            "n_networks",
        ] {
            assert!(json.get(key).is_some(), "missing {key}");
        }
    }

    #[test]
    fn plot_data_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("plot.csv");
        let mean: Vec<f64> = (0..1000)
            .map(|i| 1.0 - (i as f64 / 1000.0).powf(0.7) / 3.0)
            .collect();
        let std: Vec<f64> = (0..1000)
            .map(|i| (i as f64 * 0.37).sin().abs() / 97.0)
            .collect();
        export_plot_data(&mean, &std, &path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 1001);
        let (p, m, s) = read_plot_data(&path).unwrap();
        assert_eq!(p.len(), 1000);
        for i in 0..1000 {
            assert!((m[i] - mean[i]).abs() <= 1e-8 * mean[i].abs().max(1e-300));
            assert!((s[i] - std[i]).abs() <= 1e-8 * std[i].abs().max(1e-300));
        }
        assert_eq!(p[1], 0.001);

        export_plot_data(&[0.5; 4], &[0.0; 4], &path).unwrap();
        let (_, _, s) = read_plot_data(&path).unwrap();
        assert!(s.iter().all(|&x| x == 0.0));
        assert!(export_plot_data(&[0.5; 4], &[0.0; 3], &path).is_err());
    }

    #[test]
    fn bench_reports_all_engines() {
        let g = gen_er(200, 4.0, 1).unwrap();
        let spec = CurveSpec::new(200).unwrap();
        let mut calls = 0;
        let ext = ExternalEngine {
            name: "model".into(),
            run: Box::new(|| {
                calls += 1;
                Ok(())
            }),
        };
        let report = bench(&g, Scenario::Hedaa, &spec, 0, 3, vec![ext]).unwrap();
        assert_eq!(report.rows.len(), 3);
        assert!(report.seconds("naive").unwrap() > 0.0);
        assert!(report.seconds("incremental").is_some());
        assert_eq!(calls, 3);
    }

    fn curves_strategy() -> impl Strategy<Value = Vec<Vec<f64>>> {
        (2usize..8, 1usize..20)
            .prop_flat_map(|(k, l)| prop::collection::vec(prop::collection::vec(0.0f64..1.0, l), k))
    }

    proptest! {
        #[test]
        fn mean_std_order_invariant(curves in curves_strategy()) {
            let a = mean_std(&CurveSet::new(curves.clone()).unwrap()).unwrap();
            let mut rev = curves;
            rev.reverse();
            let b = mean_std(&CurveSet::new(rev).unwrap()).unwrap();
            prop_assert!((a - b).abs() < 1e-12);
        }

        #[test]
        fn mean_abs_diff_symmetric(a in curves_strategy(), seed in any::<u64>()) {
            let b: Vec<Vec<f64>> = a.iter().enumerate()
                .map(|(i, c)| c.iter().enumerate().map(|(j, v)| (v + ((seed >> ((i + j) % 60)) & 7) as f64 / 10.0) % 1.0).collect())
                .collect();
            let (sa, sb) = (CurveSet::new(a).unwrap(), CurveSet::new(b).unwrap());
            prop_assert_eq!(mean_abs_diff(&sa, &sa).unwrap(), 0.0);
            prop_assert!((mean_abs_diff(&sa, &sb).unwrap() - mean_abs_diff(&sb, &sa).unwrap()).abs() < 1e-12);
        }

        #[test]
        fn clamping_never_hurts(sim in curves_strategy(), noise in prop::collection::vec(-1.5f64..1.5, 160)) {
            let pred: Vec<Vec<f64>> = sim.iter().enumerate()
                .map(|(i, c)| c.iter().enumerate().map(|(j, v)| v + noise[(i * 20 + j) % noise.len()]).collect())
                .collect();
            let clamped: Vec<Vec<f64>> = pred.iter().map(|c| clamp_filter(c)).collect();
            let sim = CurveSet::new(sim).unwrap();
            let before = mean_abs_diff(&CurveSet::new(pred).unwrap(), &sim).unwrap();
            let after = mean_abs_diff(&CurveSet::new(clamped).unwrap(), &sim).unwrap();
            prop_assert!(after <= before + 1e-12);
        }
    }
}
