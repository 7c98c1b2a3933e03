//! Generators for the named graph families and exhaustive enumeration of
//! small connected graphs.
//!
//! Numbering conventions:
//! - `path n`: `0-1-…-(n-1)`.
//! - `cycle n`: the path plus `(n-1)-0`.
//! - `complete_bipartite p q`: side `0..p`, side `p..p+q`.
//! - `windmill n k` and `wind`: the center is vertex 0; blade `b` (in listed
//!   order) takes the next `len - 1` vertices `x_1 … x_{len-1}` and the cycle
//!   `0-x_1-…-x_{len-1}-0`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};

/// One group of identical windmill blades: `count` cycles of length `len`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Blades {
    pub count: usize,
    pub len: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { p: usize, q: usize },
    Windmill { n: usize, k: usize },
    Wind { blades: Vec<Blades> },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        match self {
            FamilySpec::Path { n } | FamilySpec::Complete { n } if *n == 0 => {
                bad(format!("{self}: order must be at least 1"))
            }
            FamilySpec::Cycle { n } if *n < 3 => bad(format!("{self}: cycles need n ≥ 3")),
            FamilySpec::CompleteBipartite { p, q } if *p == 0 || *q == 0 => {
                bad(format!("{self}: both sides must be nonempty"))
            }
            FamilySpec::Windmill { n, k } if *n < 2 || *k < 3 => {
                bad(format!("{self}: windmills need n ≥ 2 and k ≥ 3"))
            }
            FamilySpec::Wind { blades } => {
                if blades.iter().any(|b| b.len < 3 || b.count == 0) {
                    bad(format!("{self}: blades need length ≥ 3 and count ≥ 1"))
                } else if blades.is_empty() {
                    bad("wind: at least one blade".into())
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    /// Vertex count of the generated graph.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path { n } | FamilySpec::Cycle { n } | FamilySpec::Complete { n } => *n,
            FamilySpec::CompleteBipartite { p, q } => p + q,
            FamilySpec::Windmill { n, k } => n * (k - 1) + 1,
            FamilySpec::Wind { blades } => {
                1 + blades.iter().map(|b| b.count * (b.len - 1)).sum::<usize>()
            }
        }
    }

    fn blade_groups(&self) -> Option<Vec<Blades>> {
        match self {
            FamilySpec::Windmill { n, k } => Some(vec![Blades { count: *n, len: *k }]),
            FamilySpec::Wind { blades } => Some(blades.clone()),
            FamilySpec::Cycle { n } => Some(vec![Blades { count: 1, len: *n }]),
            _ => None,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path { n } => write!(f, "path({n})"),
            FamilySpec::Cycle { n } => write!(f, "cycle({n})"),
            FamilySpec::Complete { n } => write!(f, "complete({n})"),
            FamilySpec::CompleteBipartite { p, q } => write!(f, "complete_bipartite({p},{q})"),
            FamilySpec::Windmill { n, k } => write!(f, "windmill({n},{k})"),
            FamilySpec::Wind { blades } => {
                write!(f, "wind(")?;
                for (i, b) in blades.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}x{}", b.count, b.len)?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Parses the `COUNTxLEN,COUNTxLEN` blade list used by the CLI.
impl FromStr for Blades {
    type Err = Error;

    fn from_str(s: &str) -> Result<Blades> {
        let (count, len) = s.trim().split_once('x').ok_or_else(|| {
            Error::InvalidParameter(format!("blade group '{s}' is not COUNTxLEN"))
        })?;
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidParameter(format!("blade group '{s}' is not COUNTxLEN")))
        };
        Ok(Blades {
            count: parse(count)?,
            len: parse(len)?,
        })
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.order();
    let mut edges = Vec::new();
    match spec {
        FamilySpec::Path { n } => edges.extend((1..*n).map(|i| Edge::new(i - 1, i))),
        FamilySpec::Complete { n } => {
            for a in 0..*n {
                for b in a + 1..*n {
                    edges.push(Edge::new(a, b));
                }
            }
        }
        FamilySpec::CompleteBipartite { p, q } => {
            for a in 0..*p {
                for b in 0..*q {
                    edges.push(Edge::new(a, p + b));
                }
            }
        }
        FamilySpec::Cycle { .. } | FamilySpec::Windmill { .. } | FamilySpec::Wind { .. } => {
            let mut next = 1;
            for group in spec.blade_groups().unwrap() {
                for _ in 0..group.count {
                    push_blade(&mut edges, 0, next, group.len);
                    next += group.len - 1;
                }
            }
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(n, edges))
}

/// The cycle `center-first-(first+1)-…-(first+len-2)-center`.
fn push_blade(edges: &mut Vec<Edge>, center: Vertex, first: Vertex, len: usize) {
    edges.push(Edge::new(center, first));
    for i in 1..len - 1 {
        edges.push(Edge::new(first + i - 1, first + i));
    }
    edges.push(Edge::new(first + len - 2, center));
}

/// The edges of each blade of a generated windmill, in walk order from the
/// center: `[0-x_1, x_1-x_2, …, x_{k-1}-0]`.
pub fn windmill_blades(n: usize, k: usize) -> Vec<Vec<Edge>> {
    (0..n)
        .map(|b| {
            let first = 1 + b * (k - 1);
            let mut walk = vec![Edge::new(0, first)];
            walk.extend((1..k - 1).map(|i| Edge::new(first + i - 1, first + i)));
            walk.push(Edge::new(first + k - 2, 0));
            walk
        })
        .collect()
}

/// Glues the generated `spec` graph onto `g`, identifying its vertex 0 (the
/// center) with `v`. The other vertices of the attachment become
/// `g.order()..` in their generated order.
pub fn attach_windmill(g: &Graph, v: Vertex, spec: &FamilySpec) -> Result<Graph> {
    if v >= g.order() {
        return Err(Error::InvalidParameter(format!(
            "vertex {v} out of range for n = {}",
            g.order()
        )));
    }
    if spec.blade_groups().is_none() {
        return Err(Error::InvalidParameter(format!(
            "{spec} has no designated center to attach"
        )));
    }
    let h = generate(spec)?;
    let offset = g.order() - 1;
    let map = |x: Vertex| if x == 0 { v } else { x + offset };
    let mut edges: Vec<Edge> = g.edges().to_vec();
    edges.extend(h.edges().iter().map(|e| Edge::new(map(e.u), map(e.w))));
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(g.order() + h.order() - 1, edges))
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Keep one representative per isomorphism class.
    pub dedup: bool,
}

/// All labelled connected graphs on `n` vertices with minimum degree at
/// least `min_deg`, in increasing order of their edge bitmask.
pub fn enumerate_connected(n: usize, min_deg: usize) -> Result<ConnectedGraphs> {
    enumerate_connected_with(n, min_deg, EnumerateOptions::default(), &Budget::default())
}

pub fn enumerate_connected_with(
    n: usize,
    min_deg: usize,
    options: EnumerateOptions,
    budget: &Budget,
) -> Result<ConnectedGraphs> {
    if n > budget.enumerate_order || n > 11 {
        return Err(Error::Budget {
            what: "enumeration order",
            limit: budget.enumerate_order as u64,
            lower_bound: n as u64,
        });
    }
    let mut pairs = Vec::new();
    for j in 1..n {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    Ok(ConnectedGraphs {
        n,
        min_deg,
        end: 1u64 << pairs.len(),
        pairs,
        next: 0,
        seen: options.dedup.then(HashSet::new),
    })
}

/// Pull-based stream returned by [`enumerate_connected`].
pub struct ConnectedGraphs {
    n: usize,
    min_deg: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
    seen: Option<HashSet<u64>>,
}

impl ConnectedGraphs {
    fn accept(&self, mask: u64) -> Option<Vec<u16>> {
        let mut rows = vec![0u16; self.n];
        for (bit, &(i, j)) in self.pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
        if rows
            .iter()
            .any(|r| (r.count_ones() as usize) < self.min_deg)
        {
            return None;
        }
        if self.n > 1 {
            let mut reached: u16 = 1;
            let mut frontier: u16 = 1;
            while frontier != 0 {
                let mut grow = 0u16;
                let mut f = frontier;
                while f != 0 {
                    let x = f.trailing_zeros() as usize;
                    f &= f - 1;
                    grow |= rows[x];
                }
                frontier = grow & !reached;
                reached |= grow;
            }
            if reached.count_ones() as usize != self.n {
                return None;
            }
        }
        Some(rows)
    }
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            let Some(rows) = self.accept(mask) else {
                continue;
            };
            if let Some(seen) = self.seen.as_mut() {
                if !seen.insert(canonical_code(&rows)) {
                    continue;
                }
            }
            let mut edges: Vec<Edge> = self
                .pairs
                .iter()
                .enumerate()
                .filter(|(bit, _)| mask >> bit & 1 == 1)
                .map(|(_, &(i, j))| Edge::new(i, j))
                .collect();
            edges.sort_unstable();
            return Some(Graph::from_sorted_edges(self.n, edges));
        }
        None
    }
}

/// Minimum upper-triangle adjacency code over all relabelings that list the
/// vertices in nondecreasing degree order. Equal codes iff isomorphic.
pub fn canonical_code(rows: &[u16]) -> u64 {
    let n = rows.len();
    let deg: Vec<u32> = rows.iter().map(|r| r.count_ones()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| deg[v]);
    let mut best = u64::MAX;
    permute_classes(&deg, &mut order, 0, &mut |perm| {
        // perm[new] = old
        let mut code = 0u64;
        for j in 1..n {
            for i in 0..j {
                code = (code << 1) | (rows[perm[i]] >> perm[j] & 1) as u64;
            }
        }
        best = best.min(code);
    });
    best
}

fn permute_classes(
    deg: &[u32],
    slots: &mut [usize],
    start: usize,
    visit: &mut dyn FnMut(&[usize]),
) {
    if start == slots.len() {
        visit(slots);
        return;
    }
    let mut end = start + 1;
    while end < slots.len() && deg[slots[end]] == deg[slots[start]] {
        end += 1;
    }
    permute_block(deg, slots, start, end, visit);
}

fn permute_block(
    deg: &[u32],
    slots: &mut [usize],
    i: usize,
    end: usize,
    visit: &mut dyn FnMut(&[usize]),
) {
    if i == end {
        permute_classes(deg, slots, end, visit);
        return;
    }
    for j in i..end {
        slots.swap(i, j);
        permute_block(deg, slots, i + 1, end, visit);
        slots.swap(i, j);
    }
}

/// Uniform random subset of the edges of `K_n`, each kept with probability
/// `edge_probability`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, edge_probability: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(edge_probability) {
                edges.push(Edge::new(a, b));
            }
        }
    }
    Graph::from_sorted_edges(n, edges)
}
