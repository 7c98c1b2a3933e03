//! Decomposition of a δ ≥ 2 graph into simple paths between branch vertices.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A maximal path whose internal vertices all have degree two. `start` is the
/// smaller endpoint; loops have `start == end`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplePath {
    pub start: Vertex,
    pub end: Vertex,
    pub internal: Vec<Vertex>,
    /// Edge indices in walk order from `start`.
    pub edges: Vec<usize>,
}

impl SimplePath {
    pub fn length(&self) -> usize {
        self.edges.len()
    }

    pub fn is_loop(&self) -> bool {
        self.start == self.end
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplePathDecomposition {
    /// Vertices of degree at least 3, ascending.
    pub branch_vertices: Vec<Vertex>,
    /// Simple paths of length at least 2.
    pub paths: Vec<SimplePath>,
    /// Edges joining two branch vertices directly.
    pub branch_edges: Vec<usize>,
    /// Set when the graph is a cycle: its vertices in walk order from 0.
    pub cycle: Option<Vec<Vertex>>,
}

impl SimplePathDecomposition {
    /// `n_ij`: number of paths between `i ≤ j` of each length.
    pub fn counts(&self) -> BTreeMap<(Vertex, Vertex, usize), usize> {
        let mut out = BTreeMap::new();
        for p in &self.paths {
            *out.entry((p.start, p.end, p.length())).or_default() += 1;
        }
        out
    }

    /// Number of paths of each length.
    pub fn length_counts(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for p in &self.paths {
            *out.entry(p.length()).or_default() += 1;
        }
        out
    }
}

pub fn decompose_simple_paths(g: &Graph) -> Result<SimplePathDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.order() < 3 || g.min_degree() < 2 {
        return Err(Error::Precondition(
            "simple path decomposition needs δ ≥ 2".into(),
        ));
    }
    let branch_vertices: Vec<Vertex> = (0..g.order()).filter(|&v| g.degree(v) >= 3).collect();
    let idx = |a: Vertex, b: Vertex| g.edge_index(a, b).expect("adjacent");
    if branch_vertices.is_empty() {
        let mut cycle = vec![0];
        let (mut prev, mut cur) = (0, g.neighbors(0)[0]);
        while cur != 0 {
            cycle.push(cur);
            let next = g
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&x| x != prev)
                .unwrap();
            prev = cur;
            cur = next;
        }
        return Ok(SimplePathDecomposition {
            branch_vertices,
            paths: Vec::new(),
            branch_edges: Vec::new(),
            cycle: Some(cycle),
        });
    }
    let mut used = vec![false; g.size()];
    let mut paths = Vec::new();
    let mut branch_edges = Vec::new();
    for &b in &branch_vertices {
        for &x in g.neighbors(b) {
            let first = idx(b, x);
            if used[first] {
                continue;
            }
            used[first] = true;
            if g.degree(x) >= 3 {
                branch_edges.push(first);
                continue;
            }
            let mut internal = vec![x];
            let mut edges = vec![first];
            let (mut prev, mut cur) = (b, x);
            while g.degree(cur) == 2 {
                let next = g
                    .neighbors(cur)
                    .iter()
                    .copied()
                    .find(|&y| y != prev)
                    .unwrap();
                let e = idx(cur, next);
                used[e] = true;
                edges.push(e);
                prev = cur;
                cur = next;
                if g.degree(cur) == 2 {
                    internal.push(cur);
                }
            }
            // Vertices are scanned in ascending order, so `b` is the smaller
            // end of every path first reached from it.
            paths.push(SimplePath {
                start: b,
                end: cur,
                internal,
                edges,
            });
        }
    }
    branch_edges.sort_unstable();
    Ok(SimplePathDecomposition {
        branch_vertices,
        paths,
        branch_edges,
        cycle: None,
    })
}
