//! Max-limit bandwidth disjoint paths.
//!
//! The search runs on an implicit `n × n` grid of virtual nodes. Virtual
//! node `(i, j)` means the red partial path currently ends at `i` and the
//! blue one at `j`. Moving one frontier along a base link is a virtual link,
//! so `(i, j)` has `deg(i) + deg(j)` virtual neighbors. Reaching `(d, d)`
//! means two internally node-disjoint paths from the source to `d` exist.
//!
//! A single run maximizes the red bottleneck while keeping the blue
//! bottleneck at or above a fixed limit; [`mlbdp_full`] repeats the run for
//! every distinct link bandwidth and keeps the best pair per destination.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{Bandwidth, Graph, NodeId, Path, PathPair};

/// Virtual node: the current red and blue frontiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VNode {
    pub red: NodeId,
    pub blue: NodeId,
}

impl VNode {
    pub fn new(red: NodeId, blue: NodeId) -> Self {
        Self { red, blue }
    }

    pub fn is_diagonal(&self) -> bool {
        self.red == self.blue
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Label {
    Tentative,
    Permanent,
}

/// Which frontier a virtual link advances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Red,
    Blue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VirtualHop {
    pub to: VNode,
    pub side: Side,
    /// Bandwidth of the base link being traversed.
    pub link_bw: Bandwidth,
}

/// Implicit virtual adjacency of `at`: red-side moves first, then blue-side,
/// each ascending by base neighbor id.
pub fn virtual_neighbors(g: &Graph, at: VNode) -> impl Iterator<Item = VirtualHop> + '_ {
    let red = g.neighbors(at.red).iter().map(move |&(v, bw)| VirtualHop {
        to: VNode::new(v, at.blue),
        side: Side::Red,
        link_bw: bw,
    });
    let blue = g.neighbors(at.blue).iter().map(move |&(u, bw)| VirtualHop {
        to: VNode::new(at.red, u),
        side: Side::Blue,
        link_bw: bw,
    });
    red.chain(blue)
}

/// Number of undirected virtual links, counted by walking the implicit
/// adjacency of all `n²` virtual nodes. Equals `2·m·n`.
pub fn virtual_link_count(g: &Graph) -> usize {
    let n = g.node_count();
    let directed: usize = (0..n)
        .flat_map(|i| (0..n).map(move |j| VNode::new(i, j)))
        .map(|vn| virtual_neighbors(g, vn).count())
        .sum();
    directed / 2
}

#[derive(Debug, Clone)]
pub struct VNodeState {
    pub r_maxbw: Bandwidth,
    pub b_maxbw: Bandwidth,
    pub previous: Option<VNode>,
    /// Base nodes already used by the partial pair.
    pub visited: FixedBitSet,
    pub label: Label,
}

impl Default for VNodeState {
    fn default() -> Self {
        Self {
            r_maxbw: 0,
            b_maxbw: 0,
            previous: None,
            visited: FixedBitSet::new(),
            label: Label::Tentative,
        }
    }
}

impl VNodeState {
    fn key(&self) -> (Bandwidth, Bandwidth) {
        (self.r_maxbw, self.b_maxbw)
    }
}

/// Final state of one limited run.
#[derive(Debug, Clone)]
pub struct StateTable {
    n: usize,
    source: NodeId,
    limit: Bandwidth,
    states: Vec<VNodeState>,
    /// Virtual nodes labeled permanent by the search loop, in order, with
    /// their `(r, b)` at that moment. Pre-labeled source row/column excluded.
    settled: Vec<(VNode, Bandwidth, Bandwidth)>,
}

impl StateTable {
    fn index(&self, vn: VNode) -> usize {
        vn.red * self.n + vn.blue
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn source(&self) -> NodeId {
        self.source
    }

    pub fn limit(&self) -> Bandwidth {
        self.limit
    }

    pub fn state(&self, vn: VNode) -> &VNodeState {
        &self.states[self.index(vn)]
    }

    pub fn settled(&self) -> &[(VNode, Bandwidth, Bandwidth)] {
        &self.settled
    }

    /// Destinations whose diagonal virtual node was reached.
    pub fn reached(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.n).filter(move |&d| {
            d != self.source && self.state(VNode::new(d, d)).label == Label::Permanent
        })
    }
}

/// Runs the limited search from `s` and returns the whole state table.
pub fn run_mlbdp(g: &Graph, s: NodeId, limit: Bandwidth) -> Result<StateTable> {
    g.check_node(s)?;
    if limit < 1 {
        return Err(Error::InvalidLimit);
    }
    let n = g.node_count();
    let mut table = StateTable {
        n,
        source: s,
        limit,
        states: vec![VNodeState::default(); n * n],
        settled: Vec::new(),
    };

    for i in 0..n {
        let a = table.index(VNode::new(i, s));
        let b = table.index(VNode::new(s, i));
        table.states[a].label = Label::Permanent;
        table.states[b].label = Label::Permanent;
    }

    let mut heap = BinaryHeap::new();
    let push = |heap: &mut BinaryHeap<_>, vn: VNode, r: Bandwidth, b: Bandwidth| {
        heap.push((r, b, Reverse(vn)));
    };

    // Ordered pairs of distinct source neighbors; only the blue side is
    // held to the limit.
    let source_vnode = VNode::new(s, s);
    for &(i, bw_i) in g.neighbors(s) {
        for &(j, bw_j) in g.neighbors(s) {
            if i == j || bw_j < limit {
                continue;
            }
            let vn = VNode::new(i, j);
            let mut visited = FixedBitSet::with_capacity(n);
            visited.insert(s);
            visited.insert(i);
            visited.insert(j);
            let idx = table.index(vn);
            table.states[idx] = VNodeState {
                r_maxbw: bw_i,
                b_maxbw: bw_j,
                previous: Some(source_vnode),
                visited,
                label: Label::Tentative,
            };
            push(&mut heap, vn, bw_i, bw_j);
        }
    }

    let targets = n.saturating_sub(1);
    let mut reached = 0;
    while let Some((r, b, Reverse(cur))) = heap.pop() {
        let cur_idx = table.index(cur);
        let state = &mut table.states[cur_idx];
        if state.label == Label::Permanent || state.key() != (r, b) {
            continue;
        }
        if r == 0 {
            break;
        }
        state.label = Label::Permanent;
        table.settled.push((cur, r, b));

        if cur.is_diagonal() {
            reached += 1;
            if reached == targets {
                break;
            }
            continue;
        }

        let parent_visited = state.visited.clone();
        for hop in virtual_neighbors(g, cur) {
            let moved = match hop.side {
                Side::Red => hop.to.red,
                Side::Blue => hop.to.blue,
            };
            // A frontier may step onto a used node only when that node is
            // the other frontier, which closes the pair at a destination.
            if parent_visited.contains(moved) && !hop.to.is_diagonal() {
                continue;
            }
            let candidate = match hop.side {
                Side::Red => (r.min(hop.link_bw), b),
                Side::Blue => {
                    let nb = b.min(hop.link_bw);
                    if nb < limit {
                        continue;
                    }
                    (r, nb)
                }
            };
            let to_idx = table.index(hop.to);
            let target = &mut table.states[to_idx];
            if target.label == Label::Permanent || candidate <= target.key() {
                continue;
            }
            let mut visited = parent_visited.clone();
            visited.insert(moved);
            target.r_maxbw = candidate.0;
            target.b_maxbw = candidate.1;
            target.previous = Some(cur);
            target.visited = visited;
            push(&mut heap, hop.to, candidate.0, candidate.1);
        }
    }

    Ok(table)
}

/// Best pair found for one destination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointResult {
    pub dest: NodeId,
    pub pair: PathPair,
    pub combined: Bandwidth,
    pub limit_used: Bandwidth,
}

impl DisjointResult {
    fn rank(&self) -> (Bandwidth, Bandwidth, Reverse<Bandwidth>) {
        (self.combined, self.pair.min_bw(), Reverse(self.limit_used))
    }
}

/// Rebuilds the red and blue paths from the predecessor chain of `(d, d)`.
pub fn reconstruct_pair(table: &StateTable, s: NodeId, d: NodeId) -> Result<PathPair> {
    if d >= table.n {
        return Err(Error::InvalidNode(d));
    }
    if s != table.source {
        return Err(Error::InvalidArgument(format!(
            "state table was computed from source {}, not {s}",
            table.source
        )));
    }
    let goal = table.state(VNode::new(d, d));
    if d == s || goal.label != Label::Permanent {
        return Err(Error::NotReached(d));
    }

    let origin = VNode::new(s, s);
    let mut red = vec![d];
    let mut blue = vec![d];
    let mut cur = VNode::new(d, d);
    for _ in 0..=table.n * table.n {
        let prev = table.state(cur).previous.ok_or(Error::NotReached(d))?;
        if prev == origin {
            red.push(s);
            blue.push(s);
            red.reverse();
            blue.reverse();
            return Ok(PathPair {
                red: Path::new(red),
                blue: Path::new(blue),
                red_bw: goal.r_maxbw,
                blue_bw: goal.b_maxbw,
            });
        }
        match (prev.red == cur.red, prev.blue == cur.blue) {
            (false, true) => red.push(prev.red),
            (true, false) => blue.push(prev.blue),
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "malformed predecessor chain at ({}, {})",
                    cur.red, cur.blue
                )))
            }
        }
        cur = prev;
    }
    Err(Error::InvalidArgument("predecessor chain does not terminate".into()))
}

/// Strictly increasing list of distinct link bandwidths.
pub fn unique_bandwidths(g: &Graph) -> Vec<Bandwidth> {
    let mut out: Vec<Bandwidth> = g.links().iter().map(|l| l.bandwidth).collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn collect_results(table: &StateTable) -> Result<BTreeMap<NodeId, DisjointResult>> {
    table
        .reached()
        .map(|d| {
            let pair = reconstruct_pair(table, table.source, d)?;
            Ok((
                d,
                DisjointResult {
                    dest: d,
                    combined: pair.combined(),
                    pair,
                    limit_used: table.limit,
                },
            ))
        })
        .collect()
}

/// One limited run; destinations never reached are absent.
pub fn mlbdp_single(g: &Graph, s: NodeId, limit: Bandwidth) -> Result<BTreeMap<NodeId, DisjointResult>> {
    collect_results(&run_mlbdp(g, s, limit)?)
}

/// Runs every distinct link bandwidth as the limit and keeps, per
/// destination, the largest combined bandwidth. Ties go to the larger
/// smaller-bottleneck, then to the smaller limit.
pub fn mlbdp_full(g: &Graph, s: NodeId) -> Result<BTreeMap<NodeId, DisjointResult>> {
    g.check_node(s)?;
    let mut best: BTreeMap<NodeId, DisjointResult> = BTreeMap::new();
    for limit in unique_bandwidths(g) {
        for (d, res) in mlbdp_single(g, s, limit)? {
            merge_best(&mut best, d, res);
        }
    }
    Ok(best)
}

fn merge_best(best: &mut BTreeMap<NodeId, DisjointResult>, d: NodeId, res: DisjointResult) {
    match best.get(&d) {
        Some(cur) if cur.rank() >= res.rank() => {}
        _ => {
            best.insert(d, res);
        }
    }
}

/// Convenience wrapper for a single source-destination pair.
pub fn mlbdp_pair(g: &Graph, s: NodeId, d: NodeId) -> Result<Option<DisjointResult>> {
    g.check_node(d)?;
    if s == d {
        return Err(Error::SameEndpoints(s));
    }
    Ok(mlbdp_full(g, s)?.remove(&d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_topology;

    const WORKED: &str = include_str!("../data/worked_example.topo");

    fn trap() -> Graph {
        // s=0, a=1, b=2, t=3
        Graph::new(4, [(0, 2, 11), (2, 1, 11), (1, 3, 11), (0, 1, 10), (2, 3, 1)]).unwrap()
    }

    #[test]
    fn unique_bandwidths_examples() {
        let g = parse_topology(WORKED).unwrap();
        assert_eq!(unique_bandwidths(&g), vec![1, 2, 5, 7, 9, 12]);
        let flat = Graph::new(3, [(0, 1, 4), (1, 2, 4)]).unwrap();
        assert_eq!(unique_bandwidths(&flat), vec![4]);
        assert!(unique_bandwidths(&Graph::new(3, []).unwrap()).is_empty());
    }

    #[test]
    fn worked_example_limit_seven() {
        let g = parse_topology(WORKED).unwrap();
        let table = run_mlbdp(&g, 0, 7).unwrap();
        // (c, e) and (b, e) are never seeded: blue link a-e is below the limit.
        for vn in [VNode::new(2, 4), VNode::new(1, 4)] {
            assert_ne!(table.state(vn).previous, Some(VNode::new(0, 0)));
        }
        let cb = table.state(VNode::new(2, 1));
        assert_eq!((cb.key(), cb.previous), ((12, 9), Some(VNode::new(0, 0))));
        // cb, eb, db are the first three expansions.
        let order: Vec<VNode> = table.settled().iter().map(|s| s.0).collect();
        assert_eq!(&order[..3], &[VNode::new(2, 1), VNode::new(4, 1), VNode::new(3, 1)]);
        let db = table.state(VNode::new(3, 1));
        assert_eq!(db.visited.ones().collect::<Vec<_>>(), vec![0, 1, 2, 3, 4]);

        let results = mlbdp_single(&g, 0, 7).unwrap();
        let d = &results[&3];
        assert_eq!(d.pair.red.nodes(), &[0, 2, 4, 3]);
        assert_eq!(d.pair.blue.nodes(), &[0, 1, 3]);
        assert_eq!((d.pair.red_bw, d.pair.blue_bw, d.combined), (12, 7, 19));
    }

    #[test]
    fn triangle_pair() {
        // s=0, t=1, x=2
        let g = Graph::new(3, [(0, 1, 5), (0, 2, 3), (2, 1, 4)]).unwrap();
        let res = &mlbdp_single(&g, 0, 3).unwrap()[&1];
        assert_eq!(res.pair.red.nodes(), &[0, 1]);
        assert_eq!(res.pair.blue.nodes(), &[0, 2, 1]);
        assert_eq!(res.combined, 8);
    }

    #[test]
    fn trap_graph_full_sweep() {
        let g = trap();
        let res = &mlbdp_full(&g, 0).unwrap()[&3];
        assert_eq!(res.combined, 11);
        assert_eq!(res.pair.red.nodes(), &[0, 1, 3]);
        assert_eq!(res.pair.blue.nodes(), &[0, 2, 3]);
        assert_eq!((res.pair.red_bw, res.pair.blue_bw), (10, 1));
        res.pair.check(&g).unwrap();
    }

    #[test]
    fn tree_has_no_pair() {
        let g = Graph::new(4, [(0, 1, 3), (1, 2, 3), (1, 3, 3)]).unwrap();
        assert!(mlbdp_full(&g, 0).unwrap().is_empty());
        assert_eq!(mlbdp_pair(&g, 0, 2).unwrap(), None);
    }

    #[test]
    fn two_hop_pair_has_short_chain() {
        // 0 -> {1, 2} -> 3
        let g = Graph::new(4, [(0, 1, 4), (0, 2, 6), (1, 3, 4), (2, 3, 6)]).unwrap();
        let table = run_mlbdp(&g, 0, 4).unwrap();
        let mut cur = VNode::new(3, 3);
        let mut chain = vec![cur];
        while let Some(p) = table.state(cur).previous {
            chain.push(p);
            cur = p;
        }
        // three hops: (0,0) -> (i,j) -> one side at 3 -> (3,3)
        assert_eq!(chain.len(), 4);
        let pair = reconstruct_pair(&table, 0, 3).unwrap();
        assert_eq!(pair.combined(), 10);
        pair.check(&g).unwrap();
    }

    #[test]
    fn errors() {
        let g = trap();
        assert!(matches!(run_mlbdp(&g, 9, 1), Err(Error::InvalidNode(9))));
        assert!(matches!(run_mlbdp(&g, 0, 0), Err(Error::InvalidLimit)));
        let table = run_mlbdp(&g, 0, 11).unwrap();
        assert!(matches!(reconstruct_pair(&table, 0, 0), Err(Error::NotReached(0))));
        assert!(matches!(mlbdp_pair(&g, 1, 1), Err(Error::SameEndpoints(1))));
    }

    #[test]
    fn virtual_links_worked_example() {
        let g = parse_topology(WORKED).unwrap();
        assert_eq!(virtual_link_count(&g), 2 * 8 * 5);
    }
}
