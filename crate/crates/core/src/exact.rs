//! Ground truth for small instances.
//!
//! Two independent routes: an integer program in LP text format for an
//! external solver, and exhaustive enumeration of simple paths with a scan
//! over all disjoint pairings.

use std::cmp::Reverse;
use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{bottleneck, Bandwidth, Graph, NodeId, Path, PathPair};

/// Default cap on enumerated paths per source-destination pair.
pub const DEFAULT_PATH_CAP: usize = 100_000;

/// Flow-balance right-hand side: 1 at the source, -1 at the sink.
pub fn delta(x: NodeId, s: NodeId, t: NodeId) -> i64 {
    if x == s {
        1
    } else if x == t {
        -1
    } else {
        0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarKind {
    Binary,
    Continuous,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub kind: VarKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Red flow conservation, one per node.
    RedFlow,
    /// Blue flow conservation, one per node.
    BlueFlow,
    /// Two paths enter the sink.
    SinkInflow,
    /// Nothing enters the source.
    SourceInflow,
    /// At most one path enters any other node.
    TransitInflow,
    /// Red bandwidth bounded by every red link.
    RedBottleneck,
    /// Blue bandwidth bounded by every blue link.
    BlueBottleneck,
    /// A link carries at most one color in one direction.
    LinkExclusive,
}

impl Family {
    fn tag(self) -> &'static str {
        match self {
            Family::RedFlow => "flow_r",
            Family::BlueFlow => "flow_b",
            Family::SinkInflow => "sink_in",
            Family::SourceInflow => "source_in",
            Family::TransitInflow => "transit_in",
            Family::RedBottleneck => "bw_r",
            Family::BlueBottleneck => "bw_b",
            Family::LinkExclusive => "excl",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Le,
    Eq,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub name: String,
    pub family: Family,
    /// `(coefficient, variable index)`.
    pub terms: Vec<(i64, usize)>,
    pub sense: Sense,
    pub rhs: i64,
}

/// Binary program maximizing `yr + yb` over red/blue directed link
/// variables.
#[derive(Debug, Clone)]
pub struct IlpModel {
    pub source: NodeId,
    pub sink: NodeId,
    pub big_m: i64,
    pub variables: Vec<Variable>,
    pub objective: Vec<(i64, usize)>,
    pub constraints: Vec<Constraint>,
    index: HashMap<String, usize>,
}

fn var_name(color: char, u: NodeId, v: NodeId) -> String {
    format!("{color}_{u}_{v}")
}

pub fn build_ilp(g: &Graph, s: NodeId, t: NodeId) -> Result<IlpModel> {
    g.check_node(s)?;
    g.check_node(t)?;
    if s == t {
        return Err(Error::SameEndpoints(s));
    }
    let big_m = g.max_bandwidth().unwrap_or(0) as i64 + 1;

    let mut variables = Vec::with_capacity(4 * g.link_count() + 2);
    for l in g.links() {
        for color in ['r', 'b'] {
            for (a, b) in [(l.u, l.v), (l.v, l.u)] {
                variables.push(Variable {
                    name: var_name(color, a, b),
                    kind: VarKind::Binary,
                });
            }
        }
    }
    let yr = variables.len();
    variables.push(Variable { name: "yr".into(), kind: VarKind::Continuous });
    let yb = variables.len();
    variables.push(Variable { name: "yb".into(), kind: VarKind::Continuous });
    let index: HashMap<String, usize> = variables
        .iter()
        .enumerate()
        .map(|(i, v)| (v.name.clone(), i))
        .collect();
    let var = |color: char, a: NodeId, b: NodeId| index[&var_name(color, a, b)];

    let mut constraints = Vec::new();
    let mut add = |family: Family, suffix: String, terms: Vec<(i64, usize)>, sense, rhs| {
        constraints.push(Constraint {
            name: format!("{}_{}", family.tag(), suffix),
            family,
            terms,
            sense,
            rhs,
        });
    };

    for (color, family) in [('r', Family::RedFlow), ('b', Family::BlueFlow)] {
        for x in 0..g.node_count() {
            let mut terms: Vec<(i64, usize)> =
                g.neighbors(x).iter().map(|&(v, _)| (1, var(color, x, v))).collect();
            terms.extend(g.neighbors(x).iter().map(|&(u, _)| (-1, var(color, u, x))));
            add(family, x.to_string(), terms, Sense::Eq, delta(x, s, t));
        }
    }

    let inflow = |x: NodeId| -> Vec<(i64, usize)> {
        g.neighbors(x)
            .iter()
            .flat_map(|&(v, _)| [(1, var('r', v, x)), (1, var('b', v, x))])
            .collect()
    };
    add(Family::SinkInflow, t.to_string(), inflow(t), Sense::Eq, 2);
    add(Family::SourceInflow, s.to_string(), inflow(s), Sense::Eq, 0);
    for x in (0..g.node_count()).filter(|&x| x != s && x != t) {
        add(Family::TransitInflow, x.to_string(), inflow(x), Sense::Le, 1);
    }

    // y <= B*used + M*(1 - used), where `used` sums both directions of the
    // link; exclusivity keeps that sum binary.
    for (color, y, family) in [('r', yr, Family::RedBottleneck), ('b', yb, Family::BlueBottleneck)] {
        for l in g.links() {
            let slack = big_m - l.bandwidth as i64;
            let terms = vec![(1, y), (slack, var(color, l.u, l.v)), (slack, var(color, l.v, l.u))];
            add(family, format!("{}_{}", l.u, l.v), terms, Sense::Le, big_m);
        }
    }

    for l in g.links() {
        let terms = vec![
            (1, var('r', l.u, l.v)),
            (1, var('r', l.v, l.u)),
            (1, var('b', l.u, l.v)),
            (1, var('b', l.v, l.u)),
        ];
        add(Family::LinkExclusive, format!("{}_{}", l.u, l.v), terms, Sense::Le, 1);
    }

    Ok(IlpModel {
        source: s,
        sink: t,
        big_m,
        variables,
        objective: vec![(1, yr), (1, yb)],
        constraints,
        index,
    })
}

impl IlpModel {
    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn binary_count(&self) -> usize {
        self.variables.iter().filter(|v| v.kind == VarKind::Binary).count()
    }

    pub fn continuous_count(&self) -> usize {
        self.variables.len() - self.binary_count()
    }

    pub fn count(&self, family: Family) -> usize {
        self.constraints.iter().filter(|c| c.family == family).count()
    }

    /// Variable values encoding `pair`: each path's links oriented from
    /// source to sink, `yr`/`yb` set to the bottlenecks.
    pub fn assignment_for(&self, pair: &PathPair) -> Result<Vec<i64>> {
        let mut values = vec![0; self.variables.len()];
        for (color, path) in [('r', &pair.red), ('b', &pair.blue)] {
            for (a, b) in path.hops() {
                let idx = self
                    .variable_index(&var_name(color, a, b))
                    .ok_or(Error::NotLinked(a, b))?;
                values[idx] = 1;
            }
        }
        values[self.index["yr"]] = pair.red_bw as i64;
        values[self.index["yb"]] = pair.blue_bw as i64;
        Ok(values)
    }

    /// Names of constraints (and bounds) violated by `values`.
    pub fn violations(&self, values: &[i64]) -> Vec<String> {
        let mut out = Vec::new();
        for (v, &x) in self.variables.iter().zip(values) {
            let ok = match v.kind {
                VarKind::Binary => x == 0 || x == 1,
                VarKind::Continuous => x >= 0,
            };
            if !ok {
                out.push(format!("bound:{}", v.name));
            }
        }
        for c in &self.constraints {
            let lhs: i64 = c.terms.iter().map(|&(k, i)| k * values[i]).sum();
            let ok = match c.sense {
                Sense::Le => lhs <= c.rhs,
                Sense::Eq => lhs == c.rhs,
            };
            if !ok {
                out.push(c.name.clone());
            }
        }
        out
    }

    pub fn objective_value(&self, values: &[i64]) -> i64 {
        self.objective.iter().map(|&(k, i)| k * values[i]).sum()
    }

    /// CPLEX-style LP text.
    pub fn to_lp_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "\\ widest disjoint pair {} -> {}, M = {}",
            self.source, self.sink, self.big_m
        );
        out.push_str("Maximize\n");
        let _ = writeln!(out, " obj: {}", self.expr(&self.objective));
        out.push_str("Subject To\n");
        for c in &self.constraints {
            let sense = match c.sense {
                Sense::Le => "<=",
                Sense::Eq => "=",
            };
            let _ = writeln!(out, " {}: {} {} {}", c.name, self.expr(&c.terms), sense, c.rhs);
        }
        out.push_str("Bounds\n");
        for v in self.variables.iter().filter(|v| v.kind == VarKind::Continuous) {
            let _ = writeln!(out, " {} >= 0", v.name);
        }
        out.push_str("Binaries\n");
        for v in self.variables.iter().filter(|v| v.kind == VarKind::Binary) {
            let _ = writeln!(out, " {}", v.name);
        }
        out.push_str("End\n");
        out
    }

    fn expr(&self, terms: &[(i64, usize)]) -> String {
        if terms.is_empty() {
            // LP format needs a non-empty left-hand side.
            return "0 yr".to_string();
        }
        let mut s = String::new();
        for (k, &(coef, i)) in terms.iter().enumerate() {
            let name = &self.variables[i].name;
            let sign = if coef < 0 { "-" } else { "+" };
            if k == 0 {
                if coef < 0 {
                    s.push_str("- ");
                }
            } else {
                let _ = write!(s, " {sign} ");
            }
            match coef.abs() {
                1 => s.push_str(name),
                a => {
                    let _ = write!(s, "{a} {name}");
                }
            }
        }
        s
    }
}

pub fn export_ilp(g: &Graph, s: NodeId, t: NodeId) -> Result<String> {
    Ok(build_ilp(g, s, t)?.to_lp_string())
}

/// `<topology>_<s>_<t>.lp`
pub fn ilp_file_name(topology: &str, s: NodeId, t: NodeId) -> String {
    format!("{topology}_{s}_{t}.lp")
}

/// All simple `s`-`t` paths, depth-first with neighbors ascending.
pub fn enumerate_simple_paths(g: &Graph, s: NodeId, t: NodeId, cap: usize) -> Result<Vec<Path>> {
    g.check_node(s)?;
    g.check_node(t)?;
    if s == t {
        return Err(Error::SameEndpoints(s));
    }
    if cap == 0 {
        return Err(Error::InvalidArgument("path cap must be at least 1".into()));
    }
    let mut out = Vec::new();
    let mut on_path = vec![false; g.node_count()];
    let mut stack = vec![s];
    on_path[s] = true;
    dfs(g, t, cap, &mut stack, &mut on_path, &mut out)?;
    Ok(out)
}

fn dfs(
    g: &Graph,
    t: NodeId,
    cap: usize,
    stack: &mut Vec<NodeId>,
    on_path: &mut [bool],
    out: &mut Vec<Path>,
) -> Result<()> {
    let x = *stack.last().expect("stack starts with the source");
    for &(v, _) in g.neighbors(x) {
        if on_path[v] {
            continue;
        }
        stack.push(v);
        if v == t {
            if out.len() == cap {
                return Err(Error::CapExceeded { cap });
            }
            out.push(Path::new(stack.clone()));
        } else {
            on_path[v] = true;
            dfs(g, t, cap, stack, on_path, out)?;
            on_path[v] = false;
        }
        stack.pop();
    }
    Ok(())
}

pub fn optimal_pair_bruteforce(g: &Graph, s: NodeId, t: NodeId) -> Result<Option<PathPair>> {
    optimal_pair_bruteforce_with_cap(g, s, t, DEFAULT_PATH_CAP)
}

/// Best internally node-disjoint pair by exhaustive search. The red path
/// is the one with the larger bottleneck. Ties go to the larger smaller
/// bottleneck, then to the lexicographically smallest `(red, blue)`.
pub fn optimal_pair_bruteforce_with_cap(
    g: &Graph,
    s: NodeId,
    t: NodeId,
    cap: usize,
) -> Result<Option<PathPair>> {
    if g.node_count() > 128 {
        return Err(Error::OracleTooLarge(g.node_count()));
    }
    let paths = enumerate_simple_paths(g, s, t, cap)?;
    let mut scored: Vec<(Bandwidth, u128, Path)> = paths
        .into_iter()
        .map(|p| {
            let bw = bottleneck(g, &p)?;
            let mask = p.interior().iter().fold(0u128, |m, &x| m | (1u128 << x));
            Ok((bw, mask, p))
        })
        .collect::<Result<_>>()?;
    scored.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.2.cmp(&b.2)));

    type Key = (Bandwidth, Bandwidth, Reverse<(usize, usize)>);
    let mut best: Option<(Key, usize, usize)> = None;
    for i in 0..scored.len() {
        let (bw_i, mask_i, _) = &scored[i];
        if let (Some((key, ..)), Some(next)) = (&best, scored.get(i + 1)) {
            if bw_i + next.0 < key.0 {
                break;
            }
        }
        for (j, (bw_j, mask_j, _)) in scored.iter().enumerate().skip(i + 1) {
            if let Some((key, ..)) = &best {
                if bw_i + bw_j < key.0 {
                    break;
                }
            }
            if mask_i & mask_j != 0 {
                continue;
            }
            // Sorted order makes `(i, j)` index order match the path
            // tie-break, so the first disjoint partner is the best for `i`.
            let key = (bw_i + bw_j, *bw_j, Reverse((i, j)));
            if best.as_ref().is_none_or(|(cur, ..)| key > *cur) {
                best = Some((key, i, j));
            }
            break;
        }
    }
    Ok(best.map(|(_, i, j)| PathPair {
        red: scored[i].2.clone(),
        blue: scored[j].2.clone(),
        red_bw: scored[i].0,
        blue_bw: scored[j].0,
    }))
}
