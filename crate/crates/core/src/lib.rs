//! Maximum combined-bandwidth node-disjoint path pairs.
//!
//! Given a source and destination in an undirected network with integer
//! link bandwidths, find two paths that share only their endpoints and
//! whose bottleneck bandwidths sum to the largest value.
//!
//! - [`graph`]: topology model, file format, seeded generators.
//! - [`widest`]: single-source widest-path tree.
//! - [`mlbdp`]: joint red/blue search on the virtual-node grid.
//! - [`mba`]: two-round widest-path-then-delete baseline.
//! - [`exact`]: LP model export and exhaustive oracle.
//! - [`bench`]: all-pairs benchmark harness and CSV report.
//!
//! The `examples/` directory has one runnable program per capability:
//! `cargo run -p widepair --example worked_example`.

pub mod bench;
pub mod cli;
pub mod error;
pub mod exact;
pub mod graph;
pub mod mba;
pub mod mlbdp;
pub mod widest;

pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use graph::{
    assign_random_bandwidths, bottleneck, generate_random_graph, parse_topology, Bandwidth, Graph, Link,
    NodeId, Path, PathPair,
};
pub use mlbdp::{mlbdp_full, mlbdp_single, DisjointResult};
