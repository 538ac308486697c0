//! The five-node fixture solved by every algorithm.
//!
//!     cargo run --example worked_example

use widepair::bench::Algorithm;
use widepair::cli::solve;
use widepair::parse_topology;

fn main() -> widepair::Result<()> {
    let g = parse_topology(include_str!("../data/worked_example.topo"))?;
    println!("{} nodes, {} links", g.node_count(), g.link_count());
    for algo in [Algorithm::Mlbdp, Algorithm::Mba, Algorithm::Oracle] {
        match solve(&g, 0, 3, algo)? {
            Some(p) => println!(
                "{:>6}: red {} ({}), blue {} ({}), combined {}",
                algo.name(), p.red, p.red_bw, p.blue, p.blue_bw, p.combined()
            ),
            None => println!("{:>6}: no pair", algo.name()),
        }
    }
    Ok(())
}
