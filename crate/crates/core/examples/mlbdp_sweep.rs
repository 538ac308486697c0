//! Runs the limited search once per distinct bandwidth and shows which limit
//! produced each destination's winner.

use widepair::mlbdp::{mlbdp_full, mlbdp_single, unique_bandwidths};
use widepair::parse_topology;

fn main() -> widepair::Result<()> {
    let g = parse_topology(include_str!("../data/worked_example.topo"))?;
    let s = 0;
    for limit in unique_bandwidths(&g) {
        let found = mlbdp_single(&g, s, limit)?;
        let summary: Vec<String> = found.values().map(|r| format!("{}:{}", r.dest, r.combined)).collect();
        println!("limit {limit:>2}: {}", summary.join(" "));
    }
    println!();
    for (d, r) in mlbdp_full(&g, s)? {
        println!("{s} -> {d}: {} + {} = {} (limit {})", r.pair.red, r.pair.blue, r.combined, r.limit_used);
    }
    Ok(())
}
