//! Exhaustive optimum on a small random graph, compared with both heuristics.

use widepair::exact::{enumerate_simple_paths, optimal_pair_bruteforce, DEFAULT_PATH_CAP};
use widepair::mba::mba_pair;
use widepair::mlbdp::mlbdp_pair;
use widepair::{assign_random_bandwidths, generate_random_graph};

fn main() -> widepair::Result<()> {
    let g = assign_random_bandwidths(&generate_random_graph(9, 15, 42)?, 100, 42)?;
    let (s, t) = (0, 8);
    let paths = enumerate_simple_paths(&g, s, t, DEFAULT_PATH_CAP)?;
    println!("{} simple paths {s} -> {t}", paths.len());
    let best = optimal_pair_bruteforce(&g, s, t)?;
    println!("oracle: {:?}", best.map(|p| (p.red.to_string(), p.blue.to_string(), p.combined())));
    println!("mlbdp:  {:?}", mlbdp_pair(&g, s, t)?.map(|r| r.combined));
    println!("mba:    {:?}", mba_pair(&g, s, t)?.map(|p| p.combined()));
    Ok(())
}
