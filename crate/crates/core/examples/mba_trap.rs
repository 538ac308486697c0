//! A graph where taking the widest path first leaves no disjoint partner,
//! while the two-frontier search still finds a pair.

use widepair::mba::{mba_first_path, mba_pair};
use widepair::mlbdp::mlbdp_pair;
use widepair::Graph;

fn main() -> widepair::Result<()> {
    // s=0, a=1, b=2, t=3
    let g = Graph::new(4, [(0, 2, 11), (2, 1, 11), (1, 3, 11), (0, 1, 10), (2, 3, 1)])?;
    let first = mba_first_path(&g, 0, 3)?.expect("connected");
    println!("widest first path: {first}");
    println!("mba pair: {:?}", mba_pair(&g, 0, 3)?.map(|p| p.combined()));
    if let Some(r) = mlbdp_pair(&g, 0, 3)? {
        println!("mlbdp pair: {} + {} = {}", r.pair.red, r.pair.blue, r.combined);
    }
    Ok(())
}
