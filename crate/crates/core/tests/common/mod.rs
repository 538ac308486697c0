//! Test-only oracles, kept independent of the library's algorithm code.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use widepair::exact::optimal_pair_bruteforce;
use widepair::mlbdp::mlbdp_full;
use widepair::{assign_random_bandwidths, generate_random_graph, Bandwidth, Graph, NodeId};

pub const WORKED_PATH: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data/worked_example.topo");

pub fn worked() -> Graph {
    widepair::parse_topology(&std::fs::read_to_string(WORKED_PATH).unwrap()).unwrap()
}

/// s=0, a=1, b=2, t=3.
pub fn trap() -> Graph {
    Graph::new(4, [(0, 2, 11), (2, 1, 11), (1, 3, 11), (0, 1, 10), (2, 3, 1)]).unwrap()
}

/// Largest bottleneck over every simple path from `s`, by plain DFS over
/// bandwidth lookups. `0` for unreachable nodes.
pub fn widest_by_enumeration(g: &Graph, s: NodeId) -> Vec<Bandwidth> {
    fn go(g: &Graph, x: NodeId, bw: Bandwidth, on: &mut Vec<bool>, best: &mut Vec<Bandwidth>) {
        for &(v, link) in g.neighbors(x) {
            if on[v] {
                continue;
            }
            let b = bw.min(link);
            best[v] = best[v].max(b);
            on[v] = true;
            go(g, v, b, on, best);
            on[v] = false;
        }
    }
    let n = g.node_count();
    let mut best = vec![0; n];
    let mut on = vec![false; n];
    on[s] = true;
    go(g, s, Bandwidth::MAX, &mut on, &mut best);
    best
}

/// Random connected instance with uniform bandwidths in `1..=max_bw`.
pub fn random_instance(n: usize, m: usize, max_bw: Bandwidth, seed: u64) -> Graph {
    let g = generate_random_graph(n, m, seed).unwrap();
    assign_random_bandwidths(&g, max_bw, seed.wrapping_mul(0x9E37_79B9).wrapping_add(17)).unwrap()
}

/// Differential-suite instance `i`: `n` in 4..=10, `m` in `n..=min(2n, n(n-1)/2)`.
pub fn suite_instance(i: u64) -> Graph {
    let n = 4 + (i % 7) as usize;
    let hi = (2 * n).min(n * (n - 1) / 2);
    let m = n + ((i / 7) as usize) % (hi - n + 1);
    random_instance(n, m, 50, i)
}

/// Best combined bandwidth per destination, `None` if no pair.
pub fn oracle_row(g: &Graph, s: NodeId) -> Vec<Option<Bandwidth>> {
    (0..g.node_count())
        .map(|d| {
            if d == s {
                None
            } else {
                optimal_pair_bruteforce(g, s, d).unwrap().map(|p| p.combined())
            }
        })
        .collect()
}

pub fn mlbdp_combined(g: &Graph, s: NodeId, d: NodeId) -> Option<Bandwidth> {
    mlbdp_full(g, s).unwrap().get(&d).map(|r| r.combined)
}

pub fn oracle_combined(g: &Graph, s: NodeId, d: NodeId) -> Option<Bandwidth> {
    optimal_pair_bruteforce(g, s, d).unwrap().map(|p| p.combined())
}

/// Greedily shrinks an MLBDP/oracle disagreement: drop links, compress
/// bandwidths to ranks, lower each bandwidth, then drop isolated nodes.
pub fn minimize_mismatch(g: &Graph, s: NodeId, d: NodeId) -> (Graph, NodeId, NodeId) {
    let differs = |g: &Graph, s: NodeId, d: NodeId| mlbdp_combined(g, s, d) != oracle_combined(g, s, d);
    assert!(differs(g, s, d));
    let mut links: Vec<(NodeId, NodeId, Bandwidth)> =
        g.links().iter().map(|l| (l.u, l.v, l.bandwidth)).collect();
    let n = g.node_count();
    let build = |links: &[(NodeId, NodeId, Bandwidth)]| Graph::new(n, links.iter().copied()).unwrap();

    let mut changed = true;
    while changed {
        changed = false;
        let mut k = 0;
        while k < links.len() {
            let mut trial = links.clone();
            trial.remove(k);
            if differs(&build(&trial), s, d) {
                links = trial;
                changed = true;
            } else {
                k += 1;
            }
        }
    }

    let mut distinct: Vec<Bandwidth> = links.iter().map(|l| l.2).collect();
    distinct.sort_unstable();
    distinct.dedup();
    let ranked: Vec<_> = links
        .iter()
        .map(|&(u, v, b)| (u, v, distinct.binary_search(&b).unwrap() as Bandwidth + 1))
        .collect();
    if differs(&build(&ranked), s, d) {
        links = ranked;
    }
    for k in 0..links.len() {
        for lower in 1..links[k].2 {
            let mut trial = links.clone();
            trial[k].2 = lower;
            if differs(&build(&trial), s, d) {
                links = trial;
                break;
            }
        }
    }

    let mut used: Vec<NodeId> = links.iter().flat_map(|l| [l.0, l.1]).chain([s, d]).collect();
    used.sort_unstable();
    used.dedup();
    let relabel: HashMap<NodeId, NodeId> = used.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let small = Graph::new(
        used.len(),
        links.iter().map(|&(u, v, b)| (relabel[&u], relabel[&v], b)),
    )
    .unwrap();
    (small, relabel[&s], relabel[&d])
}

/// Minimal reader for the LP files the exporter writes.
#[derive(Debug, Default)]
pub struct LpText {
    pub objective: Vec<(i64, String)>,
    pub constraints: Vec<LpConstraint>,
    pub bounds: Vec<String>,
    pub binaries: Vec<String>,
}

#[derive(Debug)]
pub struct LpConstraint {
    pub name: String,
    pub terms: Vec<(i64, String)>,
    pub sense: String,
    pub rhs: i64,
}

fn parse_expr(tokens: &[&str]) -> Vec<(i64, String)> {
    let mut out = Vec::new();
    let mut sign = 1;
    let mut coef: Option<i64> = None;
    for t in tokens {
        match *t {
            "+" => sign = 1,
            "-" => sign = -1,
            tok => {
                if let Ok(k) = tok.parse::<i64>() {
                    coef = Some(k);
                } else {
                    out.push((sign * coef.take().unwrap_or(1), tok.to_string()));
                    sign = 1;
                }
            }
        }
    }
    out
}

pub fn parse_lp(text: &str) -> LpText {
    let mut lp = LpText::default();
    let mut section = "";
    for line in text.lines() {
        if line.starts_with('\\') || line.trim().is_empty() {
            continue;
        }
        if !line.starts_with(' ') {
            section = match line.trim() {
                "Maximize" => "obj",
                "Subject To" => "st",
                "Bounds" => "bounds",
                "Binaries" => "bin",
                "End" => "end",
                other => panic!("unknown section {other}"),
            };
            continue;
        }
        let (name, body) = match line.trim().split_once(": ") {
            Some((n, b)) => (n.to_string(), b),
            None => (String::new(), line.trim()),
        };
        let tokens: Vec<&str> = body.split_whitespace().collect();
        match section {
            "obj" => lp.objective = parse_expr(&tokens),
            "st" => {
                let k = tokens.len();
                lp.constraints.push(LpConstraint {
                    name,
                    terms: parse_expr(&tokens[..k - 2]),
                    sense: tokens[k - 2].to_string(),
                    rhs: tokens[k - 1].parse().unwrap(),
                });
            }
            "bounds" => lp.bounds.push(body.to_string()),
            "bin" => lp.binaries.push(body.to_string()),
            _ => panic!("content after End"),
        }
    }
    lp
}

impl LpText {
    pub fn variables(&self) -> Vec<String> {
        let mut vars: Vec<String> = self
            .constraints
            .iter()
            .flat_map(|c| c.terms.iter().map(|t| t.1.clone()))
            .chain(self.objective.iter().map(|t| t.1.clone()))
            .chain(self.binaries.iter().cloned())
            .collect();
        vars.sort();
        vars.dedup();
        vars
    }

    /// Constraint count per name prefix (name up to the first `_` + digit).
    pub fn family_counts(&self) -> BTreeMap<String, usize> {
        let mut out = BTreeMap::new();
        for c in &self.constraints {
            let cut = c
                .name
                .char_indices()
                .find(|&(i, ch)| ch == '_' && c.name[i + 1..].starts_with(|d: char| d.is_ascii_digit()))
                .map(|(i, _)| i)
                .unwrap_or(c.name.len());
            *out.entry(c.name[..cut].to_string()).or_insert(0) += 1;
        }
        out
    }

    /// Violated constraint names; unset variables read as 0.
    pub fn violations(&self, values: &HashMap<String, i64>) -> Vec<String> {
        let val = |name: &str| values.get(name).copied().unwrap_or(0);
        let mut bad = Vec::new();
        for b in &self.binaries {
            if !matches!(val(b), 0 | 1) {
                bad.push(format!("binary {b}"));
            }
        }
        for c in &self.constraints {
            let lhs: i64 = c.terms.iter().map(|(k, v)| k * val(v)).sum();
            let ok = match c.sense.as_str() {
                "<=" => lhs <= c.rhs,
                ">=" => lhs >= c.rhs,
                "=" => lhs == c.rhs,
                s => panic!("sense {s}"),
            };
            if !ok {
                bad.push(c.name.clone());
            }
        }
        bad
    }
}
