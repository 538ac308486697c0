//! Two-round maximum bandwidth heuristic, node-disjoint variant.
//!
//! Round one finds a widest source-destination path by thresholding: links
//! below the current threshold are dropped and a min-cost path is searched
//! with cost `C - bandwidth`. Round two repeats the search after deleting
//! the first path's intermediate nodes and links. Committing to the first
//! path is what makes the heuristic miss pairs a joint search finds.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::graph::{Bandwidth, Graph, Link, NodeId, Path, PathPair};

/// Links split by whether they touch the source, each sorted by descending
/// bandwidth (ties by endpoints).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePools {
    pub es: Vec<Link>,
    pub bs: Vec<Link>,
}

impl EdgePools {
    pub fn new(g: &Graph, s: NodeId) -> Self {
        let (mut es, mut bs): (Vec<Link>, Vec<Link>) =
            g.links().iter().partition(|l| l.touches(s));
        let desc = |a: &Link, b: &Link| b.bandwidth.cmp(&a.bandwidth).then(a.cmp(b));
        es.sort_by(desc);
        bs.sort_by(desc);
        Self { es, bs }
    }

    /// Thresholds to try, highest first: the best source link, then every
    /// lower source-link or other-link bandwidth in descending order.
    ///
    /// No path can beat the widest source link, so nothing above it is
    /// tried. Walking both pools merged makes the first threshold that
    /// connects the endpoints equal the widest-path bandwidth.
    pub fn thresholds(&self) -> Vec<Bandwidth> {
        let Some(top) = self.es.first().map(|l| l.bandwidth) else {
            return Vec::new();
        };
        let mut out: Vec<Bandwidth> = self
            .es
            .iter()
            .chain(&self.bs)
            .map(|l| l.bandwidth)
            .filter(|&bw| bw <= top)
            .collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        out.dedup();
        out
    }
}

/// Min-cost path with cost `C - bandwidth` per link, ties broken by fewer
/// hops and then by lower node ids.
fn min_cost_path(g: &Graph, s: NodeId, t: NodeId, big_c: Bandwidth) -> Option<Path> {
    let n = g.node_count();
    let mut dist: Vec<Option<(u64, usize)>> = vec![None; n];
    let mut prev: Vec<Option<NodeId>> = vec![None; n];
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();
    dist[s] = Some((0, 0));
    heap.push(Reverse((0u64, 0usize, s)));
    while let Some(Reverse((cost, hops, x))) = heap.pop() {
        if done[x] || dist[x] != Some((cost, hops)) {
            continue;
        }
        done[x] = true;
        if x == t {
            break;
        }
        for &(v, bw) in g.neighbors(x) {
            if done[v] {
                continue;
            }
            let cand = (cost + (big_c - bw), hops + 1);
            let better = match dist[v] {
                None => true,
                Some(cur) => cand < cur || (cand == cur && prev[v].is_some_and(|p| x < p)),
            };
            if better {
                dist[v] = Some(cand);
                prev[v] = Some(x);
                heap.push(Reverse((cand.0, cand.1, v)));
            }
        }
    }
    dist[t]?;
    let mut nodes = vec![t];
    let mut cur = t;
    while let Some(p) = prev[cur] {
        nodes.push(p);
        cur = p;
    }
    nodes.reverse();
    Some(Path::new(nodes))
}

/// One threshold-search round: the path found at the highest feasible
/// threshold, if any.
fn threshold_round(g: &Graph, s: NodeId, t: NodeId) -> Option<Path> {
    let pools = EdgePools::new(g, s);
    let big_c = g.max_bandwidth()? + 1;
    pools
        .thresholds()
        .into_iter()
        .find_map(|threshold| min_cost_path(&g.at_least(threshold), s, t, big_c))
}

/// First path of the heuristic: a widest `s`-`t` path.
pub fn mba_first_path(g: &Graph, s: NodeId, t: NodeId) -> Result<Option<Path>> {
    check_endpoints(g, s, t)?;
    Ok(threshold_round(g, s, t))
}

pub fn mba_pair(g: &Graph, s: NodeId, t: NodeId) -> Result<Option<PathPair>> {
    check_endpoints(g, s, t)?;
    let Some(first) = threshold_round(g, s, t) else {
        return Ok(None);
    };
    let used: Vec<(NodeId, NodeId)> = first.hops().collect();
    let reduced = g.without(first.interior(), &used);
    let Some(second) = threshold_round(&reduced, s, t) else {
        return Ok(None);
    };
    PathPair::new(g, first, second).map(Some)
}

fn check_endpoints(g: &Graph, s: NodeId, t: NodeId) -> Result<()> {
    g.check_node(s)?;
    g.check_node(t)?;
    if s == t {
        return Err(Error::SameEndpoints(s));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bottleneck, parse_topology};
    use crate::widest::max_bandwidth_tree;

    const WORKED: &str = include_str!("../data/worked_example.topo");

    #[test]
    fn pools_partition_links() {
        let g = parse_topology(WORKED).unwrap();
        let pools = EdgePools::new(&g, 0);
        let es: Vec<_> = pools.es.iter().map(|l| l.bandwidth).collect();
        let bs: Vec<_> = pools.bs.iter().map(|l| l.bandwidth).collect();
        assert_eq!(es, vec![12, 9, 2]);
        assert_eq!(bs, vec![12, 12, 7, 5, 1]);
        assert_eq!(pools.thresholds(), vec![12, 9, 7, 5, 2, 1]);
    }

    #[test]
    fn worked_example() {
        let g = parse_topology(WORKED).unwrap();
        let pair = mba_pair(&g, 0, 3).unwrap().unwrap();
        assert_eq!(pair.red.nodes(), &[0, 2, 4, 3]);
        assert_eq!(pair.blue.nodes(), &[0, 1, 3]);
        assert_eq!(pair.combined(), 19);
    }

    #[test]
    fn trap_graph_misses() {
        let g = Graph::new(4, [(0, 2, 11), (2, 1, 11), (1, 3, 11), (0, 1, 10), (2, 3, 1)]).unwrap();
        let first = mba_first_path(&g, 0, 3).unwrap().unwrap();
        assert_eq!(first.nodes(), &[0, 2, 1, 3]);
        assert_eq!(mba_pair(&g, 0, 3).unwrap(), None);
    }

    #[test]
    fn tree_has_no_pair() {
        let g = Graph::new(4, [(0, 1, 3), (1, 2, 3), (1, 3, 3)]).unwrap();
        assert_eq!(mba_pair(&g, 0, 3).unwrap(), None);
    }

    #[test]
    fn direct_link_is_not_reused() {
        let g = Graph::new(2, [(0, 1, 5)]).unwrap();
        assert_eq!(mba_pair(&g, 0, 1).unwrap(), None);
    }

    #[test]
    fn first_path_is_widest() {
        for seed in 0..40 {
            let g = crate::graph::generate_random_graph(9, 14, seed).unwrap();
            let g = crate::graph::assign_random_bandwidths(&g, 20, seed + 100).unwrap();
            let tree = max_bandwidth_tree(&g, 0).unwrap();
            for t in 1..9 {
                let p = mba_first_path(&g, 0, t).unwrap().unwrap();
                assert_eq!(bottleneck(&g, &p).unwrap(), tree.maxbw[t], "seed {seed} t {t}");
            }
        }
    }

    #[test]
    fn endpoint_errors() {
        let g = Graph::new(2, [(0, 1, 5)]).unwrap();
        assert!(matches!(mba_pair(&g, 0, 0), Err(Error::SameEndpoints(0))));
        assert!(matches!(mba_pair(&g, 0, 5), Err(Error::InvalidNode(5))));
    }
}
