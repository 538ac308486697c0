//! Small all-pairs benchmark over a bandwidth sweep, CSV on stdout.

use widepair::bench::{report_to_csv, run_benchmark, RunConfig, SweepPoint, TopologySource};

fn main() -> widepair::Result<()> {
    let mut cfg = RunConfig::new(TopologySource::Generated { nodes: 12, links: 20 });
    cfg.sweep = vec![SweepPoint::Max(10), SweepPoint::Max(100), SweepPoint::Max(1000)];
    cfg.seed = 7;
    let report = run_benchmark(&cfg)?;
    print!("{}", report_to_csv(&report)?);
    for v in &report.violations {
        eprintln!("warning: {v}");
    }
    Ok(())
}
