//! Widest (maximum-bottleneck) paths from one source.

use widepair::parse_topology;
use widepair::widest::max_bandwidth_tree;

fn main() -> widepair::Result<()> {
    let g = parse_topology(include_str!("../data/worked_example.topo"))?;
    let tree = max_bandwidth_tree(&g, 0)?;
    for d in 1..g.node_count() {
        match tree.path_to(d)? {
            Some(path) => println!("0 -> {d}: {path} bottleneck {}", tree.maxbw[d]),
            None => println!("0 -> {d}: unreachable"),
        }
    }
    println!("settle order: {:?}", tree.settle_order);
    Ok(())
}
