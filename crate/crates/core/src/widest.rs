//! Single-source maximum-bottleneck ("widest path") tree.
//!
//! A Dijkstra variant that settles the tentative node of largest bottleneck
//! bandwidth and relaxes with `min` instead of `+`. Ties among equal
//! bandwidths are settled lowest node id first.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::{Bandwidth, Graph, NodeId, Path};

/// Result of [`max_bandwidth_tree`].
///
/// `maxbw[v] == 0` means `v` is unreachable. The source's own entry is
/// [`Bandwidth::MAX`], standing in for an unbounded bottleneck.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WidestTree {
    pub source: NodeId,
    pub maxbw: Vec<Bandwidth>,
    pub previous: Vec<Option<NodeId>>,
    pub permanent: Vec<bool>,
    /// Nodes in the order they were labeled permanent, source excluded.
    pub settle_order: Vec<NodeId>,
}

pub fn max_bandwidth_tree(g: &Graph, s: NodeId) -> Result<WidestTree> {
    g.check_node(s)?;
    let n = g.node_count();
    let mut maxbw = vec![0; n];
    let mut previous = vec![None; n];
    let mut permanent = vec![false; n];
    let mut settle_order = Vec::with_capacity(n);
    let mut heap = BinaryHeap::new();

    maxbw[s] = Bandwidth::MAX;
    permanent[s] = true;
    for &(v, bw) in g.neighbors(s) {
        maxbw[v] = bw;
        previous[v] = Some(s);
        heap.push((bw, Reverse(v)));
    }

    while let Some((bw, Reverse(x))) = heap.pop() {
        if permanent[x] || bw != maxbw[x] {
            continue;
        }
        permanent[x] = true;
        settle_order.push(x);
        for &(v, link_bw) in g.neighbors(x) {
            if permanent[v] {
                continue;
            }
            let candidate = bw.min(link_bw);
            if candidate > maxbw[v] {
                maxbw[v] = candidate;
                previous[v] = Some(x);
                heap.push((candidate, Reverse(v)));
            }
        }
    }

    Ok(WidestTree {
        source: s,
        maxbw,
        previous,
        permanent,
        settle_order,
    })
}

impl WidestTree {
    /// Walks predecessors back from `dest`. `None` when `dest` is unreachable.
    pub fn path_to(&self, dest: NodeId) -> Result<Option<Path>> {
        if dest >= self.maxbw.len() {
            return Err(Error::InvalidNode(dest));
        }
        if dest == self.source {
            return Err(Error::SameEndpoints(dest));
        }
        if self.maxbw[dest] == 0 {
            return Ok(None);
        }
        let mut nodes = vec![dest];
        let mut cur = dest;
        while let Some(p) = self.previous[cur] {
            nodes.push(p);
            cur = p;
            debug_assert!(nodes.len() <= self.maxbw.len(), "predecessor cycle");
        }
        debug_assert_eq!(cur, self.source);
        nodes.reverse();
        Ok(Some(Path::new(nodes)))
    }
}

pub fn extract_widest_path(tree: &WidestTree, dest: NodeId) -> Result<Option<Path>> {
    tree.path_to(dest)
}
