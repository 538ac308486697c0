//! All-ordered-pairs benchmark over a sweep of maximum link bandwidths.
//!
//! For every sweep point the topology gets fresh seeded bandwidths, each
//! selected algorithm is run for every ordered `(s, d)`, and the report
//! records pair counts, summed per-invocation wall time, and the
//! bandwidth shortfall against the exhaustive oracle.

use std::fmt;
use std::fs;
use std::path::{Path as FsPath, PathBuf};
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{enumerate_simple_paths, optimal_pair_bruteforce_with_cap, DEFAULT_PATH_CAP};
use crate::graph::{assign_random_bandwidths, generate_random_graph, parse_topology, Bandwidth, Graph, NodeId};
use crate::mba::mba_pair;
use crate::mlbdp::mlbdp_full;

pub const DEFAULT_SWEEP: [Bandwidth; 9] = [10, 20, 50, 100, 200, 500, 1000, 2000, 5000];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Mlbdp,
    Mba,
    Oracle,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Mlbdp => "mlbdp",
            Algorithm::Mba => "mba",
            Algorithm::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "mlbdp" => Ok(Algorithm::Mlbdp),
            "mba" => Ok(Algorithm::Mba),
            "oracle" | "ilp" => Ok(Algorithm::Oracle),
            other => Err(Error::UnknownAlgorithm(other.to_string())),
        }
    }
}

/// Comma-separated algorithm list, e.g. `mlbdp,mba,oracle`.
pub fn parse_algorithms(list: &str) -> Result<Vec<Algorithm>> {
    let mut out: Vec<Algorithm> = list
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    if out.is_empty() {
        return Err(Error::InvalidArgument("no algorithms selected".into()));
    }
    Ok(out)
}

/// One row of the sweep: keep the topology's own bandwidths, or redraw
/// them uniformly from `1..=max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepPoint {
    Fixed,
    Max(Bandwidth),
}

impl fmt::Display for SweepPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SweepPoint::Fixed => f.write_str("fixed"),
            SweepPoint::Max(x) => write!(f, "{x}"),
        }
    }
}

/// `fixed`, or a comma-separated list of maxima.
pub fn parse_sweep(list: &str) -> Result<Vec<SweepPoint>> {
    if list.trim() == "fixed" {
        return Ok(vec![SweepPoint::Fixed]);
    }
    list.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| match s.trim().parse::<Bandwidth>() {
            Ok(0) | Err(_) => Err(Error::InvalidArgument(format!("bad sweep value `{s}`"))),
            Ok(x) => Ok(SweepPoint::Max(x)),
        })
        .collect()
}

/// How a heuristic that finds no pair where the oracle does is charged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MissPolicy {
    /// The whole oracle bandwidth counts as the difference.
    #[default]
    Full,
    /// Misses add nothing to the difference.
    Zero,
}

impl FromStr for MissPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(MissPolicy::Full),
            "zero" => Ok(MissPolicy::Zero),
            other => Err(Error::InvalidArgument(format!("unknown miss policy `{other}`"))),
        }
    }
}

impl fmt::Display for MissPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MissPolicy::Full => "full",
            MissPolicy::Zero => "zero",
        })
    }
}

#[derive(Debug, Clone)]
pub enum TopologySource {
    File(PathBuf),
    Generated { nodes: usize, links: usize },
    Graph { name: String, graph: Graph },
}

impl TopologySource {
    fn load(&self, seed: u64) -> Result<(String, Graph)> {
        match self {
            TopologySource::File(path) => {
                let text = fs::read_to_string(path)?;
                let name = path
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| "topology".into());
                Ok((name, parse_topology(&text)?))
            }
            TopologySource::Generated { nodes, links } => Ok((
                format!("gen_{nodes}_{links}"),
                generate_random_graph(*nodes, *links, seed)?,
            )),
            TopologySource::Graph { name, graph } => Ok((name.clone(), graph.clone())),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub topology: TopologySource,
    pub sweep: Vec<SweepPoint>,
    pub seed: u64,
    pub algorithms: Vec<Algorithm>,
    pub miss_policy: MissPolicy,
    pub path_cap: usize,
}

impl RunConfig {
    pub fn new(topology: TopologySource) -> Self {
        Self {
            topology,
            sweep: DEFAULT_SWEEP.iter().map(|&x| SweepPoint::Max(x)).collect(),
            seed: 1,
            algorithms: vec![Algorithm::Mlbdp, Algorithm::Mba, Algorithm::Oracle],
            miss_policy: MissPolicy::Full,
            path_cap: DEFAULT_PATH_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub max_bw: SweepPoint,
    pub algo: Algorithm,
    pub pairs_found: usize,
    pub wall_time_ms: f64,
    pub diff_total: Option<Bandwidth>,
    pub diff_avg: Option<f64>,
}

/// Combined bandwidth per ordered pair for one sweep point; `None` means
/// no pair was returned. Indexed `s * n + d`; the diagonal is always `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOutcome {
    pub max_bw: SweepPoint,
    pub combined: Vec<(Algorithm, Vec<Option<Bandwidth>>)>,
}

impl SweepOutcome {
    pub fn for_algorithm(&self, algo: Algorithm) -> Option<&[Option<Bandwidth>]> {
        self.combined
            .iter()
            .find(|(a, _)| *a == algo)
            .map(|(_, v)| v.as_slice())
    }
}

#[derive(Debug, Clone)]
pub struct BenchmarkReport {
    pub topology: String,
    pub nodes: usize,
    pub links: usize,
    pub seed: u64,
    pub miss_policy: MissPolicy,
    pub rows: Vec<ReportRow>,
    pub outcomes: Vec<SweepOutcome>,
    /// Ordered pairs where the expected ordering oracle ≥ mlbdp ≥ mba
    /// (on bandwidth or on pair counts) did not hold.
    pub violations: Vec<String>,
}

impl BenchmarkReport {
    pub fn row(&self, max_bw: SweepPoint, algo: Algorithm) -> Option<&ReportRow> {
        self.rows.iter().find(|r| r.max_bw == max_bw && r.algo == algo)
    }

    pub fn ordered_pairs(&self) -> usize {
        self.nodes * self.nodes.saturating_sub(1)
    }
}

type Timed = (Vec<Option<Bandwidth>>, Duration);

fn run_source(g: &Graph, s: NodeId, algo: Algorithm, cap: usize) -> Result<Timed> {
    let n = g.node_count();
    let mut row = vec![None; n];
    let mut total = Duration::ZERO;
    match algo {
        Algorithm::Mlbdp => {
            let start = Instant::now();
            let results = mlbdp_full(g, s)?;
            total += start.elapsed();
            for (d, res) in results {
                row[d] = Some(res.combined);
            }
        }
        Algorithm::Mba | Algorithm::Oracle => {
            for d in (0..n).filter(|&d| d != s) {
                let start = Instant::now();
                let pair = match algo {
                    Algorithm::Mba => mba_pair(g, s, d)?,
                    _ => optimal_pair_bruteforce_with_cap(g, s, d, cap)?,
                };
                total += start.elapsed();
                row[d] = pair.map(|p| p.combined());
            }
        }
    }
    Ok((row, total))
}

/// Checks up front that exhaustive enumeration fits under `cap` for every
/// ordered pair.
fn check_oracle_cap(g: &Graph, cap: usize) -> Result<()> {
    (0..g.node_count())
        .into_par_iter()
        .try_for_each(|s| {
            for d in (s + 1)..g.node_count() {
                enumerate_simple_paths(g, s, d, cap)?;
            }
            Ok(())
        })
}

pub fn run_benchmark(cfg: &RunConfig) -> Result<BenchmarkReport> {
    if cfg.sweep.is_empty() {
        return Err(Error::InvalidArgument("empty bandwidth sweep".into()));
    }
    if cfg.algorithms.is_empty() {
        return Err(Error::InvalidArgument("no algorithms selected".into()));
    }
    let mut algorithms = cfg.algorithms.clone();
    algorithms.sort();
    algorithms.dedup();

    let (name, base) = cfg.topology.load(cfg.seed)?;
    let n = base.node_count();
    let with_oracle = algorithms.contains(&Algorithm::Oracle);
    if with_oracle {
        check_oracle_cap(&base, cfg.path_cap)?;
    }

    let mut rows = Vec::new();
    let mut outcomes = Vec::new();
    let mut violations = Vec::new();

    for &point in &cfg.sweep {
        let g = match point {
            SweepPoint::Fixed => base.clone(),
            SweepPoint::Max(x) => assign_random_bandwidths(&base, x, cfg.seed)?,
        };
        let mut per_algo = Vec::new();
        let mut times = Vec::new();
        for &algo in &algorithms {
            let per_source: Vec<Timed> = (0..n)
                .into_par_iter()
                .map(|s| run_source(&g, s, algo, cfg.path_cap))
                .collect::<Result<_>>()?;
            let mut flat = Vec::with_capacity(n * n);
            let mut total = Duration::ZERO;
            for (row, dur) in per_source {
                flat.extend(row);
                total += dur;
            }
            per_algo.push((algo, flat));
            times.push(total);
        }
        let outcome = SweepOutcome { max_bw: point, combined: per_algo };
        let oracle = outcome.for_algorithm(Algorithm::Oracle);

        for ((algo, combined), dur) in outcome.combined.iter().zip(&times) {
            let pairs_found = combined.iter().filter(|c| c.is_some()).count();
            let (diff_total, diff_avg) = match oracle {
                Some(best) if *algo != Algorithm::Oracle => {
                    let (total, feasible) = difference(best, combined, cfg.miss_policy);
                    let avg = if feasible == 0 { 0.0 } else { total as f64 / feasible as f64 };
                    (Some(total), Some(avg))
                }
                _ => (None, None),
            };
            rows.push(ReportRow {
                max_bw: point,
                algo: *algo,
                pairs_found,
                wall_time_ms: dur.as_secs_f64() * 1e3,
                diff_total,
                diff_avg,
            });
        }
        violations.extend(consistency_violations(&outcome, n));
        outcomes.push(outcome);
    }

    Ok(BenchmarkReport {
        topology: name,
        nodes: n,
        links: base.link_count(),
        seed: cfg.seed,
        miss_policy: cfg.miss_policy,
        rows,
        outcomes,
        violations,
    })
}

/// `(sum of shortfalls, number of oracle-feasible pairs)`.
fn difference(
    oracle: &[Option<Bandwidth>],
    heuristic: &[Option<Bandwidth>],
    policy: MissPolicy,
) -> (Bandwidth, usize) {
    let mut total = 0;
    let mut feasible = 0;
    for (best, got) in oracle.iter().zip(heuristic) {
        let Some(best) = best else { continue };
        feasible += 1;
        total += match (got, policy) {
            (Some(got), _) => best.saturating_sub(*got),
            (None, MissPolicy::Full) => *best,
            (None, MissPolicy::Zero) => 0,
        };
    }
    (total, feasible)
}

fn consistency_violations(outcome: &SweepOutcome, n: usize) -> Vec<String> {
    let order = [Algorithm::Oracle, Algorithm::Mlbdp, Algorithm::Mba];
    let present: Vec<(Algorithm, &[Option<Bandwidth>])> = order
        .iter()
        .filter_map(|&a| outcome.for_algorithm(a).map(|v| (a, v)))
        .collect();
    let mut out = Vec::new();
    for w in present.windows(2) {
        let (hi_algo, hi) = w[0];
        let (lo_algo, lo) = w[1];
        for (idx, (h, l)) in hi.iter().zip(lo).enumerate() {
            let bad = match (h, l) {
                (Some(h), Some(l)) => l > h,
                (None, Some(_)) => true,
                _ => false,
            };
            if bad {
                out.push(format!(
                    "max_bw={} pair {}->{}: {lo_algo} {:?} exceeds {hi_algo} {:?}",
                    outcome.max_bw,
                    idx / n,
                    idx % n,
                    l,
                    h
                ));
            }
        }
    }
    out
}

pub const CSV_HEADER: [&str; 6] = ["max_bw", "algo", "pairs_found", "wall_time_ms", "diff_total", "diff_avg"];

/// CSV text: one `#` metadata line, the header, then one row per
/// `(sweep point, algorithm)`.
pub fn report_to_csv(report: &BenchmarkReport) -> Result<String> {
    let mut buf = format!(
        "# topology={} nodes={} links={} seed={} miss_policy={}\n",
        report.topology, report.nodes, report.links, report.seed, report.miss_policy
    )
    .into_bytes();
    {
        let mut w = csv::Writer::from_writer(&mut buf);
        w.write_record(CSV_HEADER)?;
        for r in &report.rows {
            w.write_record([
                r.max_bw.to_string(),
                r.algo.to_string(),
                r.pairs_found.to_string(),
                format!("{:.3}", r.wall_time_ms),
                r.diff_total.map(|d| d.to_string()).unwrap_or_default(),
                r.diff_avg.map(|d| format!("{d:.4}")).unwrap_or_default(),
            ])?;
        }
        w.flush()?;
    }
    Ok(String::from_utf8(buf).expect("csv output is utf-8"))
}

pub fn write_report(report: &BenchmarkReport, path: impl AsRef<FsPath>) -> Result<()> {
    fs::write(path, report_to_csv(report)?)?;
    Ok(())
}

/// Writes one whitespace-separated series file per metric into `dir`
/// (`pairs_found.dat`, `wall_time_ms.dat`, and the diff metrics when an
/// oracle ran). Columns: `max_bw`, then one per algorithm. Returns the
/// files written.
pub fn write_plot_data(report: &BenchmarkReport, dir: impl AsRef<FsPath>) -> Result<Vec<PathBuf>> {
    let dir = dir.as_ref();
    fs::create_dir_all(dir)?;
    let mut algos: Vec<Algorithm> = report.rows.iter().map(|r| r.algo).collect();
    algos.sort();
    algos.dedup();
    let mut points: Vec<SweepPoint> = Vec::new();
    for r in &report.rows {
        if !points.contains(&r.max_bw) {
            points.push(r.max_bw);
        }
    }

    type Metric = fn(&ReportRow) -> Option<String>;
    let metrics: [(&str, Metric); 4] = [
        ("pairs_found", |r| Some(r.pairs_found.to_string())),
        ("wall_time_ms", |r| Some(format!("{:.3}", r.wall_time_ms))),
        ("diff_total", |r| r.diff_total.map(|d| d.to_string())),
        ("diff_avg", |r| r.diff_avg.map(|d| format!("{d:.4}"))),
    ];

    let mut written = Vec::new();
    for (metric, value) in metrics {
        let columns: Vec<Algorithm> = algos
            .iter()
            .copied()
            .filter(|&a| report.rows.iter().any(|r| r.algo == a && value(r).is_some()))
            .collect();
        if columns.is_empty() {
            continue;
        }
        let mut text = format!("# seed={} metric={metric}\n# max_bw", report.seed);
        for a in &columns {
            text.push(' ');
            text.push_str(a.name());
        }
        text.push('\n');
        for &p in &points {
            text.push_str(&p.to_string());
            for &a in &columns {
                let cell = report.row(p, a).and_then(value).unwrap_or_else(|| "-".into());
                text.push(' ');
                text.push_str(&cell);
            }
            text.push('\n');
        }
        let path = dir.join(format!("{metric}.dat"));
        fs::write(&path, text)?;
        written.push(path);
    }
    Ok(written)
}
