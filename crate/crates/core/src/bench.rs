//! Paired comparison of the classical spring embedder against BIGCROSS.
//!
//! Each record lays out one graph twice from the same seeded initial
//! placement, once per algorithm, and measures the initial and both final
//! drawings. A summary reports per-metric medians under each algorithm, the
//! median paired difference (BIGCROSS minus classical) and a two-sided
//! Wilcoxon signed-rank test on the paired differences.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::{initial_placement, run_from, EngineError};
use crate::generators::{GenError, GenSpec, Model};
use crate::metrics::{measure, MetricsReport};
use crate::params::{LayoutParams, Variant};
use crate::seed::{derive_seed, rng};
use crate::stats::{median, wilcoxon_signed_rank, StatsError, WilcoxonResult};

/// Fewest records a summary accepts.
pub const MIN_RECORDS: usize = 6;

/// Vertex-count range of benchmark graphs.
pub const N_RANGE: std::ops::RangeInclusive<usize> = 10..=50;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("need at least {MIN_RECORDS} records, got {0}")]
    TooFewRecords(usize),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Stats(#[from] StatsError),
    #[error("vertex range {0}..={1} is empty or starts below 7")]
    BadSizeRange(usize, usize),
    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),
}

/// One paired experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub graph_spec: GenSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    /// Seed of the shared initial placement.
    pub seed: u64,
    pub vertices: usize,
    pub edges: usize,
    pub params: LayoutParams,
    pub initial_metrics: MetricsReport,
    pub classical_metrics: MetricsReport,
    pub bigcross_metrics: MetricsReport,
    pub classical_iters: u32,
    pub bigcross_iters: u32,
    pub classical_converged: bool,
    pub bigcross_converged: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classical_time: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bigcross_time: Option<f64>,
}

impl BenchRecord {
    /// Drops wall-clock times, which differ between otherwise identical runs.
    pub fn without_timing(self) -> Self {
        BenchRecord {
            classical_time: None,
            bigcross_time: None,
            ..self
        }
    }
}

/// Generates the graph for `spec`, places it with `seed`, and runs the
/// classical algorithm and `params` (the BIGCROSS configuration) from that
/// placement.
pub fn run_pair(spec: &GenSpec, params: &LayoutParams, seed: u64) -> Result<BenchRecord, BenchError> {
    let graph = spec.generate()?;
    let start = initial_placement(graph.vertex_count(), seed);
    let classical_params = params.with_variant(Variant::Classical);
    let classical = run_from(&graph, start.clone(), &classical_params)?;
    let bigcross = run_from(&graph, start.clone(), params)?;
    Ok(BenchRecord {
        graph_spec: spec.clone(),
        note: spec.model.note().map(String::from),
        seed,
        vertices: graph.vertex_count(),
        edges: graph.edge_count(),
        params: *params,
        initial_metrics: measure(&graph, &start),
        classical_metrics: measure(&graph, &classical.final_layout),
        bigcross_metrics: measure(&graph, &bigcross.final_layout),
        classical_iters: classical.iterations,
        bigcross_iters: bigcross.iterations,
        classical_converged: classical.converged,
        bigcross_converged: bigcross.converged,
        classical_time: Some(classical.wall_time),
        bigcross_time: Some(bigcross.wall_time),
    })
}

/// Random graph families used in benchmarks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    ErdosRenyi,
    WattsStrogatz,
    EppsteinWang,
    RandomPlanar,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::ErdosRenyi,
        Family::WattsStrogatz,
        Family::EppsteinWang,
        Family::RandomPlanar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::ErdosRenyi => "erdos-renyi",
            Family::WattsStrogatz => "watts-strogatz",
            Family::EppsteinWang => "eppstein-wang",
            Family::RandomPlanar => "random-planar",
        }
    }

    pub fn note(self) -> Option<&'static str> {
        match self {
            Family::RandomPlanar => Model::RandomPlanar { m: 0 }.note(),
            _ => None,
        }
    }

    fn tag(self) -> u64 {
        match self {
            Family::ErdosRenyi => 1,
            Family::WattsStrogatz => 2,
            Family::EppsteinWang => 3,
            Family::RandomPlanar => 4,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = BenchError;
    fn from_str(s: &str) -> Result<Self, BenchError> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == norm)
            .ok_or_else(|| BenchError::UnknownFamily(s.to_string()))
    }
}

/// Graph spec and placement seed for item `index` of a benchmark.
///
/// `n` is uniform in 10..=50. Erdős–Rényi and Eppstein–Wang draw `m`
/// uniformly from `[n - 1, 3n]`, random planar graphs from
/// `[n - 1, 3n - 6]`; Watts–Strogatz uses `k = 4`, `p = 0.1`, and
/// Eppstein–Wang mixes for `10 n` steps.
pub fn sample_spec(family: Family, master_seed: u64, index: u64) -> (GenSpec, u64) {
    sample_spec_in(family, N_RANGE, master_seed, index)
}

/// [`sample_spec`] with a custom vertex-count range (lower bound at least 7, so that 3n edges fit).
pub fn sample_spec_in(
    family: Family,
    n_range: std::ops::RangeInclusive<usize>,
    master_seed: u64,
    index: u64,
) -> (GenSpec, u64) {
    let item = derive_seed(derive_seed(master_seed, family.tag()), index);
    let mut r = rng(item);
    let n = r.gen_range(n_range);
    let model = match family {
        Family::ErdosRenyi => Model::ErdosRenyi {
            m: r.gen_range(n - 1..=3 * n),
        },
        Family::WattsStrogatz => Model::WattsStrogatz { k: 4, p: 0.1 },
        Family::EppsteinWang => Model::EppsteinWang {
            m: r.gen_range(n - 1..=3 * n),
            steps: 10 * n,
        },
        Family::RandomPlanar => Model::RandomPlanar {
            m: r.gen_range(n - 1..=3 * n - 6),
        },
    };
    let spec = GenSpec {
        model,
        n,
        seed: derive_seed(item, 1),
    };
    (spec, derive_seed(item, 2))
}

/// Runs `count` paired experiments for one family with `n` drawn from
/// `n_range`.
pub fn run_family(
    family: Family,
    count: usize,
    master_seed: u64,
    n_range: std::ops::RangeInclusive<usize>,
    params: &LayoutParams,
) -> Result<Vec<BenchRecord>, BenchError> {
    if *n_range.start() < 7 || n_range.is_empty() {
        return Err(BenchError::BadSizeRange(*n_range.start(), *n_range.end()));
    }
    (0..count as u64)
        .map(|i| {
            let (spec, seed) = sample_spec_in(family, n_range.clone(), master_seed, i);
            run_pair(&spec, params, seed)
        })
        .collect()
}

/// Quantities compared between the two algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    Crossings,
    AngleMean,
    AngleStddev,
    EdgeLenMean,
    EdgeLenStddev,
    AngularResolution,
    Iterations,
}

impl Metric {
    pub const ALL: [Metric; 7] = [
        Metric::Crossings,
        Metric::AngleMean,
        Metric::AngleStddev,
        Metric::EdgeLenMean,
        Metric::EdgeLenStddev,
        Metric::AngularResolution,
        Metric::Iterations,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Metric::Crossings => "crossings",
            Metric::AngleMean => "angle_mean",
            Metric::AngleStddev => "angle_stddev",
            Metric::EdgeLenMean => "edge_len_mean",
            Metric::EdgeLenStddev => "edge_len_stddev",
            Metric::AngularResolution => "angular_resolution",
            Metric::Iterations => "iterations",
        }
    }

    /// Paired values `(bigcross, classical)` for one record, or `None` when
    /// the quantity is undefined for either drawing: crossing-angle
    /// statistics need a crossing in both drawings, angular resolution a
    /// vertex of degree two.
    pub fn pair(self, r: &BenchRecord) -> Option<(f64, f64)> {
        let (b, c) = (&r.bigcross_metrics, &r.classical_metrics);
        match self {
            Metric::Crossings => Some((b.crossings as f64, c.crossings as f64)),
            Metric::AngleMean | Metric::AngleStddev if b.crossings == 0 || c.crossings == 0 => None,
            Metric::AngleMean => Some((b.angle_mean, c.angle_mean)),
            Metric::AngleStddev => Some((b.angle_stddev, c.angle_stddev)),
            Metric::EdgeLenMean => Some((b.edge_len_mean, c.edge_len_mean)),
            Metric::EdgeLenStddev => Some((b.edge_len_stddev, c.edge_len_stddev)),
            Metric::AngularResolution if !(b.angular_resolution_defined && c.angular_resolution_defined) => None,
            Metric::AngularResolution => Some((b.angular_resolution, c.angular_resolution)),
            Metric::Iterations => Some((r.bigcross_iters as f64, r.classical_iters as f64)),
        }
    }
}

/// Summary of one metric over a record set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricSummary {
    pub metric: Metric,
    /// Records where the metric is defined for both drawings.
    pub pairs: usize,
    pub median_bigcross: Option<f64>,
    pub median_classical: Option<f64>,
    /// Median of `bigcross - classical`.
    pub median_diff: Option<f64>,
    pub wilcoxon: Option<WilcoxonResult>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchSummary {
    pub records: usize,
    pub rows: Vec<MetricSummary>,
}

pub const CSV_HEADER: &str = "metric,median_bigcross,median_classical,median_diff,W,n_effective,p,method";

fn opt(v: Option<f64>) -> String {
    v.map_or_else(|| "NA".to_string(), |x| x.to_string())
}

fn opt_fixed(v: Option<f64>, digits: usize) -> String {
    v.map_or_else(|| "-".to_string(), |x| format!("{x:.digits$}"))
}

impl BenchSummary {
    pub fn row(&self, metric: Metric) -> &MetricSummary {
        self.rows
            .iter()
            .find(|r| r.metric == metric)
            .expect("summaries cover every metric")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for row in &self.rows {
            let (w, n_eff, p, method) = match &row.wilcoxon {
                Some(w) => (
                    w.w_statistic.to_string(),
                    w.n_effective.to_string(),
                    opt(w.p_value),
                    w.method.as_str().to_string(),
                ),
                None => ("NA".into(), "0".into(), "NA".into(), "NA".into()),
            };
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{}",
                row.metric.name(),
                opt(row.median_bigcross),
                opt(row.median_classical),
                opt(row.median_diff),
                w,
                n_eff,
                p,
                method
            );
        }
        out
    }

    /// Plain-text table with one row per measure, BIGCROSS and classical
    /// medians side by side.
    pub fn to_table(&self, title: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{title} ({} graphs)", self.records);
        let _ = writeln!(
            out,
            "{:<20} {:>10} {:>10} {:>10} {:>6} {:>10}",
            "measure", "BIGCROSS", "Classical", "diff", "pairs", "p"
        );
        for row in &self.rows {
            let digits = if matches!(row.metric, Metric::Crossings | Metric::Iterations) {
                0
            } else {
                2
            };
            let p = row
                .wilcoxon
                .and_then(|w| w.p_value)
                .map_or_else(|| "-".to_string(), |p| format!("{p:.2e}"));
            let _ = writeln!(
                out,
                "{:<20} {:>10} {:>10} {:>10} {:>6} {:>10}",
                row.metric.name(),
                opt_fixed(row.median_bigcross, digits),
                opt_fixed(row.median_classical, digits),
                opt_fixed(row.median_diff, 2),
                row.pairs,
                p
            );
        }
        out
    }
}

/// Per-metric medians and Wilcoxon tests over a record set.
pub fn summarize(records: &[BenchRecord]) -> Result<BenchSummary, BenchError> {
    if records.len() < MIN_RECORDS {
        return Err(BenchError::TooFewRecords(records.len()));
    }
    let mut rows = Vec::with_capacity(Metric::ALL.len());
    for metric in Metric::ALL {
        let pairs: Vec<(f64, f64)> = records.iter().filter_map(|r| metric.pair(r)).collect();
        let row = if pairs.is_empty() {
            MetricSummary {
                metric,
                pairs: 0,
                median_bigcross: None,
                median_classical: None,
                median_diff: None,
                wilcoxon: None,
            }
        } else {
            let bc: Vec<f64> = pairs.iter().map(|p| p.0).collect();
            let cl: Vec<f64> = pairs.iter().map(|p| p.1).collect();
            let diffs: Vec<f64> = pairs.iter().map(|p| p.0 - p.1).collect();
            MetricSummary {
                metric,
                pairs: pairs.len(),
                median_bigcross: Some(median(&bc)?),
                median_classical: Some(median(&cl)?),
                median_diff: Some(median(&diffs)?),
                wilcoxon: Some(wilcoxon_signed_rank(&diffs)?),
            }
        };
        rows.push(row);
    }
    Ok(BenchSummary {
        records: records.len(),
        rows,
    })
}
