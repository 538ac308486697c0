//! Command-line front end shared by the `widepair` binary and tests.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path as FsPath, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::bench::{parse_algorithms, parse_sweep, run_benchmark, write_plot_data, write_report, Algorithm, RunConfig, TopologySource};
use crate::error::{Error, Result};
use crate::exact::{export_ilp, ilp_file_name, optimal_pair_bruteforce, DEFAULT_PATH_CAP};
use crate::graph::{assign_random_bandwidths, generate_random_graph, parse_topology, Graph, NodeId, PathPair};
use crate::mba::mba_pair;
use crate::mlbdp::mlbdp_pair;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID_INPUT: u8 = 2;
pub const EXIT_CAP_EXCEEDED: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "widepair", version, about = "Maximum-bandwidth node-disjoint path pairs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find the best disjoint pair for one source and destination.
    Solve {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value = "mlbdp")]
        algo: String,
    },
    /// Run the all-ordered-pairs benchmark and write a CSV report.
    Bench(BenchArgs),
    /// Write the integer program for one pair in LP format.
    ExportIlp {
        #[command(flatten)]
        pair: PairArgs,
        /// Output file, or a directory to receive `<topology>_<s>_<t>.lp`.
        #[arg(long)]
        out: PathBuf,
    },
    /// Generate a random connected topology.
    Gen {
        #[arg(long)]
        nodes: usize,
        #[arg(long)]
        links: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Redraw bandwidths uniformly from 1..=MAX_BW (default: all 1).
        #[arg(long)]
        max_bw: Option<u64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Exhaustive optimum for one pair (small graphs only).
    Oracle {
        #[command(flatten)]
        pair: PairArgs,
    },
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(long)]
    pub topology: PathBuf,
    #[arg(long)]
    pub source: NodeId,
    #[arg(long)]
    pub dest: NodeId,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, conflicts_with = "gen", required_unless_present = "gen")]
    pub topology: Option<PathBuf>,
    /// Generate the topology instead: `n,m`.
    #[arg(long, value_name = "N,M")]
    pub gen: Option<String>,
    /// Maximum bandwidths to sweep, or `fixed` to keep file bandwidths.
    #[arg(long, default_value = "10,20,50,100,200,500,1000,2000,5000")]
    pub sweep: String,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value = "mlbdp,mba,oracle")]
    pub algos: String,
    /// How heuristic misses enter the difference columns: `full` or `zero`.
    #[arg(long, default_value = "full")]
    pub miss_policy: String,
    #[arg(long, default_value_t = DEFAULT_PATH_CAP)]
    pub path_cap: usize,
    /// Also write per-metric plot series next to the CSV.
    #[arg(long)]
    pub plot_data: bool,
    #[arg(long)]
    pub out: PathBuf,
}

pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::CapExceeded { .. } | Error::OracleTooLarge(_) => EXIT_CAP_EXCEEDED,
        _ => EXIT_INVALID_INPUT,
    }
}

fn load(path: &FsPath) -> Result<Graph> {
    Ok(parse_topology(&fs::read_to_string(path)?)?)
}

fn print_pair(out: &mut dyn Write, algo: &str, pair: Option<&PathPair>) -> Result<()> {
    writeln!(out, "algorithm: {algo}")?;
    match pair {
        Some(p) => {
            writeln!(out, "red: {} (bandwidth {})", p.red, p.red_bw)?;
            writeln!(out, "blue: {} (bandwidth {})", p.blue, p.blue_bw)?;
            writeln!(out, "combined: {}", p.combined())?;
        }
        None => writeln!(out, "no disjoint pair")?,
    }
    Ok(())
}

/// Solves one pair with the named algorithm.
pub fn solve(g: &Graph, s: NodeId, d: NodeId, algo: Algorithm) -> Result<Option<PathPair>> {
    g.check_node(s)?;
    g.check_node(d)?;
    match algo {
        Algorithm::Mlbdp => Ok(mlbdp_pair(g, s, d)?.map(|r| r.pair)),
        Algorithm::Mba => mba_pair(g, s, d),
        Algorithm::Oracle => optimal_pair_bruteforce(g, s, d),
    }
}

pub fn execute(cli: Cli, out: &mut dyn Write) -> Result<()> {
    match cli.command {
        Command::Solve { pair, algo } => {
            let algo: Algorithm = algo.parse()?;
            let g = load(&pair.topology)?;
            let found = solve(&g, pair.source, pair.dest, algo)?;
            print_pair(out, algo.name(), found.as_ref())
        }
        Command::Oracle { pair } => {
            let g = load(&pair.topology)?;
            let found = solve(&g, pair.source, pair.dest, Algorithm::Oracle)?;
            print_pair(out, "oracle", found.as_ref())
        }
        Command::ExportIlp { pair, out: target } => {
            let g = load(&pair.topology)?;
            let text = export_ilp(&g, pair.source, pair.dest)?;
            let target = if target.is_dir() {
                let stem = pair
                    .topology
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| "topology".into());
                target.join(ilp_file_name(&stem, pair.source, pair.dest))
            } else {
                target
            };
            fs::write(&target, text)?;
            writeln!(out, "wrote {}", target.display())?;
            Ok(())
        }
        Command::Gen { nodes, links, seed, max_bw, out: target } => {
            let mut g = generate_random_graph(nodes, links, seed)?;
            if let Some(max_bw) = max_bw {
                g = assign_random_bandwidths(&g, max_bw, seed)?;
            }
            let text = format!("# generated: nodes={nodes} links={links} seed={seed}\n{g}");
            fs::write(&target, text)?;
            writeln!(out, "wrote {}", target.display())?;
            Ok(())
        }
        Command::Bench(args) => bench(args, out),
    }
}

fn bench(args: BenchArgs, out: &mut dyn Write) -> Result<()> {
    let topology = match (&args.topology, &args.gen) {
        (Some(path), _) => TopologySource::File(path.clone()),
        (None, Some(arg)) => {
            let parsed: Option<(usize, usize)> = arg
                .split_once(',')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)));
            let (nodes, links) = parsed
                .ok_or_else(|| Error::InvalidArgument(format!("--gen expects n,m, got `{arg}`")))?;
            TopologySource::Generated { nodes, links }
        }
        (None, None) => return Err(Error::InvalidArgument("need --topology or --gen".into())),
    };
    let mut cfg = RunConfig::new(topology);
    cfg.sweep = parse_sweep(&args.sweep)?;
    cfg.seed = args.seed;
    cfg.algorithms = parse_algorithms(&args.algos)?;
    cfg.miss_policy = args.miss_policy.parse()?;
    cfg.path_cap = args.path_cap;

    let report = run_benchmark(&cfg)?;
    fs::create_dir_all(&args.out)?;
    let csv_path = args.out.join("report.csv");
    write_report(&report, &csv_path)?;
    writeln!(out, "wrote {}", csv_path.display())?;
    if args.plot_data {
        for path in write_plot_data(&report, &args.out)? {
            writeln!(out, "wrote {}", path.display())?;
        }
    }
    for v in &report.violations {
        writeln!(out, "warning: {v}")?;
    }
    Ok(())
}

/// Parses `args` and runs, returning the process exit code. Errors go to
/// `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_INVALID_INPUT } else { EXIT_OK };
        }
    };
    match execute(cli, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
