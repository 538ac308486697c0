//! Undirected capacitated networks, simple paths and disjoint path pairs.
//!
//! Nodes are dense ids `0..n`. Every link is an unordered pair with a
//! positive integer bandwidth; there are no self-loops and no parallel links.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, ParseError, ParseErrorKind, Result};

pub type NodeId = usize;
pub type Bandwidth = u64;

/// An undirected link, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Link {
    pub u: NodeId,
    pub v: NodeId,
    pub bandwidth: Bandwidth,
}

impl Link {
    pub fn new(a: NodeId, b: NodeId, bandwidth: Bandwidth) -> Self {
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        Self { u, v, bandwidth }
    }

    pub fn endpoints(&self) -> (NodeId, NodeId) {
        (self.u, self.v)
    }

    pub fn touches(&self, node: NodeId) -> bool {
        self.u == node || self.v == node
    }
}

/// Immutable undirected network.
///
/// Links are kept sorted by `(u, v)` and each adjacency list is sorted by
/// neighbor id, so iteration order is deterministic everywhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    links: Vec<Link>,
    adj: Vec<Vec<(NodeId, Bandwidth)>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, parallel links, zero bandwidths
    /// and out-of-range ids. Link order does not matter.
    pub fn new(n: usize, links: impl IntoIterator<Item = (NodeId, NodeId, Bandwidth)>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (a, b, bw) in links {
            if a >= n {
                return Err(Error::InvalidNode(a));
            }
            if b >= n {
                return Err(Error::InvalidNode(b));
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            if bw == 0 {
                return Err(Error::ZeroBandwidth);
            }
            let link = Link::new(a, b, bw);
            if !seen.insert(link.endpoints()) {
                return Err(Error::DuplicateLink(link.u, link.v));
            }
            out.push(link);
        }
        Ok(Self::from_sorted_unchecked(n, out))
    }

    fn from_sorted_unchecked(n: usize, mut links: Vec<Link>) -> Self {
        links.sort();
        let mut adj = vec![Vec::new(); n];
        for l in &links {
            adj[l.u].push((l.v, l.bandwidth));
            adj[l.v].push((l.u, l.bandwidth));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self { n, links, adj }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn link_count(&self) -> usize {
        self.links.len()
    }

    /// Links sorted by `(u, v)`.
    pub fn links(&self) -> &[Link] {
        &self.links
    }

    /// Neighbors of `node` with the bandwidth of the connecting link,
    /// ascending by neighbor id.
    pub fn neighbors(&self, node: NodeId) -> &[(NodeId, Bandwidth)] {
        &self.adj[node]
    }

    pub fn degree(&self, node: NodeId) -> usize {
        self.adj[node].len()
    }

    pub fn contains_node(&self, node: NodeId) -> bool {
        node < self.n
    }

    pub fn check_node(&self, node: NodeId) -> Result<()> {
        if self.contains_node(node) {
            Ok(())
        } else {
            Err(Error::InvalidNode(node))
        }
    }

    /// Bandwidth of link `{a, b}`, if present.
    pub fn bandwidth(&self, a: NodeId, b: NodeId) -> Option<Bandwidth> {
        let list = self.adj.get(a)?;
        list.binary_search_by_key(&b, |&(v, _)| v)
            .ok()
            .map(|idx| list[idx].1)
    }

    pub fn max_bandwidth(&self) -> Option<Bandwidth> {
        self.links.iter().map(|l| l.bandwidth).max()
    }

    /// Same topology with new bandwidths, given in `links()` order.
    pub fn with_bandwidths(&self, bandwidths: impl IntoIterator<Item = Bandwidth>) -> Result<Self> {
        let links: Vec<Link> = self
            .links
            .iter()
            .zip(bandwidths)
            .map(|(l, bw)| Link { bandwidth: bw, ..*l })
            .collect();
        if links.len() != self.links.len() {
            return Err(Error::InvalidArgument(format!(
                "expected {} bandwidths, got {}",
                self.links.len(),
                links.len()
            )));
        }
        if links.iter().any(|l| l.bandwidth == 0) {
            return Err(Error::ZeroBandwidth);
        }
        Ok(Self::from_sorted_unchecked(self.n, links))
    }

    /// Copy of the graph without the given nodes' links and without the
    /// listed links. Node ids are preserved.
    pub fn without(&self, nodes: &[NodeId], links: &[(NodeId, NodeId)]) -> Self {
        let dropped: HashSet<(NodeId, NodeId)> = links
            .iter()
            .map(|&(a, b)| Link::new(a, b, 1).endpoints())
            .collect();
        let kept = self
            .links
            .iter()
            .filter(|l| !nodes.iter().any(|&x| l.touches(x)) && !dropped.contains(&l.endpoints()))
            .copied()
            .collect();
        Self::from_sorted_unchecked(self.n, kept)
    }

    /// Copy keeping only links with bandwidth at least `threshold`.
    pub fn at_least(&self, threshold: Bandwidth) -> Self {
        let kept = self
            .links
            .iter()
            .filter(|l| l.bandwidth >= threshold)
            .copied()
            .collect();
        Self::from_sorted_unchecked(self.n, kept)
    }

    /// Breadth-first reachability from node 0.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for &(v, _) in &self.adj[x] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n
    }

    /// Re-checks every structural invariant. Always holds for graphs built
    /// through the public constructors; used by tests and generators.
    pub fn check_invariants(&self) -> Result<()> {
        let mut seen = HashSet::new();
        for l in &self.links {
            if l.u >= self.n || l.v >= self.n {
                return Err(Error::InvalidNode(l.u.max(l.v)));
            }
            if l.u == l.v {
                return Err(Error::SelfLoop(l.u));
            }
            if l.bandwidth == 0 {
                return Err(Error::ZeroBandwidth);
            }
            if !seen.insert((l.u, l.v)) {
                return Err(Error::DuplicateLink(l.u, l.v));
            }
        }
        for u in 0..self.n {
            for &(v, bw) in &self.adj[u] {
                if self.bandwidth(v, u) != Some(bw) {
                    return Err(Error::NotLinked(v, u));
                }
            }
        }
        Ok(())
    }

    /// Serializes to the line-based topology format.
    pub fn to_topology_string(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "nodes {}", self.n)?;
        for l in &self.links {
            writeln!(f, "link {} {} {}", l.u, l.v, l.bandwidth)?;
        }
        Ok(())
    }
}

/// Parses the line-based topology format:
///
/// ```text
/// # comment
/// nodes <n>
/// link <u> <v> <bw>
/// ```
///
/// Blank lines and lines starting with `#` are ignored. Errors carry the
/// 1-based line number.
pub fn parse_topology(text: &str) -> std::result::Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut seen = HashSet::new();
    let mut links = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |kind| ParseError { line, kind };
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        match fields.as_slice() {
            ["nodes", count] => {
                if n.is_some() {
                    return Err(err(ParseErrorKind::DuplicateHeader));
                }
                let count = count
                    .parse()
                    .map_err(|_| err(ParseErrorKind::Malformed(trimmed.to_string())))?;
                n = Some(count);
            }
            ["link", a, b, bw] => {
                let n = n.ok_or_else(|| err(ParseErrorKind::MissingHeader))?;
                let parse_num = |s: &str| -> std::result::Result<u64, ParseError> {
                    s.parse()
                        .map_err(|_| err(ParseErrorKind::Malformed(trimmed.to_string())))
                };
                let a = parse_num(a)? as NodeId;
                let b = parse_num(b)? as NodeId;
                let bw = parse_num(bw)?;
                for node in [a, b] {
                    if node >= n {
                        return Err(err(ParseErrorKind::NodeOutOfRange { node, n }));
                    }
                }
                if a == b {
                    return Err(err(ParseErrorKind::SelfLoop(a)));
                }
                if bw == 0 {
                    return Err(err(ParseErrorKind::ZeroBandwidth));
                }
                let link = Link::new(a, b, bw);
                if !seen.insert(link.endpoints()) {
                    return Err(err(ParseErrorKind::DuplicateLink(link.u, link.v)));
                }
                links.push(link);
            }
            _ => return Err(err(ParseErrorKind::Malformed(trimmed.to_string()))),
        }
    }
    let n = n.ok_or(ParseError {
        line: text.lines().count().max(1),
        kind: ParseErrorKind::MissingHeader,
    })?;
    Ok(Graph::from_sorted_unchecked(n, links))
}

/// splitmix64 generator; the seed is the initial state.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Value in `0..bound`. `bound` must be non-zero.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// Redraws every bandwidth uniformly from `1..=max_bw`, one draw per link
/// in sorted `(u, v)` order.
pub fn assign_random_bandwidths(g: &Graph, max_bw: Bandwidth, seed: u64) -> Result<Graph> {
    if max_bw == 0 {
        return Err(Error::InvalidMaxBandwidth);
    }
    let mut rng = SplitMix64::new(seed);
    let draws: Vec<Bandwidth> = (0..g.link_count()).map(|_| 1 + rng.below(max_bw)).collect();
    g.with_bandwidths(draws)
}

/// Connected simple graph with `n` nodes and `m` unit-bandwidth links.
///
/// A random spanning tree is laid down first (each node in a shuffled order
/// attaches to a uniformly chosen earlier one), then `m - (n - 1)` extra
/// links are sampled without replacement from the remaining pairs.
pub fn generate_random_graph(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let max_links = n.saturating_mul(n.saturating_sub(1)) / 2;
    if n < 2 || m < n - 1 || m > max_links {
        return Err(Error::InfeasibleGraph { n, m });
    }
    let mut rng = SplitMix64::new(seed);
    let mut order: Vec<NodeId> = (0..n).collect();
    shuffle(&mut order, &mut rng);

    let mut chosen = HashSet::with_capacity(m);
    let mut links = Vec::with_capacity(m);
    for k in 1..n {
        let parent = order[rng.below(k as u64) as usize];
        let link = Link::new(order[k], parent, 1);
        chosen.insert(link.endpoints());
        links.push(link);
    }

    let mut rest: Vec<(NodeId, NodeId)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|pair| !chosen.contains(pair))
        .collect();
    let extra = m - (n - 1);
    for k in 0..extra {
        let pick = k + rng.below((rest.len() - k) as u64) as usize;
        rest.swap(k, pick);
        let (u, v) = rest[k];
        links.push(Link::new(u, v, 1));
    }
    Ok(Graph::from_sorted_unchecked(n, links))
}

fn shuffle<T>(items: &mut [T], rng: &mut SplitMix64) {
    for i in (1..items.len()).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        items.swap(i, j);
    }
}

/// A simple path given as a node sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path(Vec<NodeId>);

impl Path {
    pub fn new(nodes: Vec<NodeId>) -> Self {
        Self(nodes)
    }

    pub fn nodes(&self) -> &[NodeId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<NodeId> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<NodeId> {
        self.0.last().copied()
    }

    /// Nodes strictly between the endpoints.
    pub fn interior(&self) -> &[NodeId] {
        if self.0.len() <= 2 {
            &[]
        } else {
            &self.0[1..self.0.len() - 1]
        }
    }

    /// Consecutive node pairs.
    pub fn hops(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.0.windows(2).map(|w| (w[0], w[1]))
    }

    /// Checks that the path is non-empty, simple, and follows links of `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.0.is_empty() {
            return Err(Error::EmptyPath);
        }
        let mut seen = HashSet::new();
        for &x in &self.0 {
            g.check_node(x)?;
            if !seen.insert(x) {
                return Err(Error::RepeatedNode(x));
            }
        }
        for (a, b) in self.hops() {
            if g.bandwidth(a, b).is_none() {
                return Err(Error::NotLinked(a, b));
            }
        }
        Ok(())
    }
}

impl From<Vec<NodeId>> for Path {
    fn from(nodes: Vec<NodeId>) -> Self {
        Self(nodes)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join("-"))
    }
}

/// Minimum link bandwidth along `path`.
pub fn bottleneck(g: &Graph, path: &Path) -> Result<Bandwidth> {
    match path.len() {
        0 => return Err(Error::EmptyPath),
        1 => return Err(Error::SingleNodePath),
        _ => {}
    }
    path.hops()
        .map(|(a, b)| g.bandwidth(a, b).ok_or(Error::NotLinked(a, b)))
        .try_fold(Bandwidth::MAX, |acc, bw| Ok(acc.min(bw?)))
}

/// Two paths from `s` to `t` that share no node other than `s` and `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathPair {
    pub red: Path,
    pub blue: Path,
    pub red_bw: Bandwidth,
    pub blue_bw: Bandwidth,
}

impl PathPair {
    /// Validates both paths and their disjointness, computing bottlenecks.
    pub fn new(g: &Graph, red: Path, blue: Path) -> Result<Self> {
        let red_bw = bottleneck(g, &red)?;
        let blue_bw = bottleneck(g, &blue)?;
        let pair = Self { red, blue, red_bw, blue_bw };
        pair.check(g)?;
        Ok(pair)
    }

    pub fn combined(&self) -> Bandwidth {
        self.red_bw + self.blue_bw
    }

    pub fn source(&self) -> NodeId {
        self.red.nodes()[0]
    }

    pub fn dest(&self) -> NodeId {
        *self.red.nodes().last().expect("paths are non-empty")
    }

    /// Smaller of the two bottlenecks.
    pub fn min_bw(&self) -> Bandwidth {
        self.red_bw.min(self.blue_bw)
    }

    /// Full structural check against `g`: both paths valid and simple, same
    /// endpoints, recorded bottlenecks correct, interiors disjoint, and no
    /// shared link.
    pub fn check(&self, g: &Graph) -> Result<()> {
        self.red.validate(g)?;
        self.blue.validate(g)?;
        if self.red.len() < 2 || self.blue.len() < 2 {
            return Err(Error::SingleNodePath);
        }
        if self.red.first() != self.blue.first() || self.red.last() != self.blue.last() {
            return Err(Error::NotDisjoint("paths have different endpoints".into()));
        }
        if bottleneck(g, &self.red)? != self.red_bw || bottleneck(g, &self.blue)? != self.blue_bw {
            return Err(Error::NotDisjoint("recorded bottleneck does not match path".into()));
        }
        let red_inner: HashSet<NodeId> = self.red.interior().iter().copied().collect();
        if let Some(x) = self.blue.interior().iter().find(|x| red_inner.contains(x)) {
            return Err(Error::NotDisjoint(format!("node {x} on both paths")));
        }
        let red_links: HashSet<(NodeId, NodeId)> = self
            .red
            .hops()
            .map(|(a, b)| Link::new(a, b, 1).endpoints())
            .collect();
        if let Some((a, b)) = self
            .blue
            .hops()
            .find(|&(a, b)| red_links.contains(&Link::new(a, b, 1).endpoints()))
        {
            return Err(Error::NotDisjoint(format!("link {a}-{b} on both paths")));
        }
        Ok(())
    }
}
