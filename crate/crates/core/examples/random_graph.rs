//! Deterministic random topology generation.
//!
//!     cargo run --example random_graph -- 20 35 9

use widepair::{assign_random_bandwidths, generate_random_graph};

fn main() -> widepair::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, m, seed) = match args[..] {
        [n, m, seed, ..] => (n as usize, m as usize, seed),
        _ => (10, 15, 1),
    };
    let g = assign_random_bandwidths(&generate_random_graph(n, m, seed)?, 5000, seed)?;
    assert!(g.is_connected());
    print!("{g}");
    Ok(())
}
