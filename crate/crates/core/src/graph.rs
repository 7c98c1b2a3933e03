//! Simple undirected graphs on the dense vertex set `0..n`.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};

pub type Vertex = usize;

/// An unordered vertex pair, stored with `u < w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: Vertex,
    pub w: Vertex,
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a self-loop.
    pub fn new(a: Vertex, b: Vertex) -> Edge {
        assert_ne!(a, b, "self-loop {a}-{a}");
        if a < b {
            Edge { u: a, w: b }
        } else {
            Edge { u: b, w: a }
        }
    }

    pub fn other(&self, x: Vertex) -> Vertex {
        if x == self.u {
            self.w
        } else {
            self.u
        }
    }

    pub fn contains(&self, x: Vertex) -> bool {
        self.u == x || self.w == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.w)
    }
}

/// Immutable simple graph. Edges are kept sorted, which fixes the canonical
/// edge order used by every labeling routine: edge `i` is `edges()[i]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<Vertex>>,
    words: usize,
    matrix: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

impl Graph {
    /// Builds a graph from vertex pairs, normalizing and deduplicating them.
    pub fn from_edge_list(n: usize, pairs: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut edges = Vec::with_capacity(pairs.len());
        for (index, &(a, b)) in pairs.iter().enumerate() {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { index, vertex, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop { index, vertex: a });
            }
            edges.push(Edge::new(a, b));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Graph::from_sorted_edges(n, edges))
    }

    pub(crate) fn from_sorted_edges(n: usize, edges: Vec<Edge>) -> Graph {
        let words = n.div_ceil(64).max(1);
        let mut matrix = vec![0u64; n * words];
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u].push(e.w);
            adj[e.w].push(e.u);
            matrix[e.u * words + e.w / 64] |= 1 << (e.w % 64);
            matrix[e.w * words + e.u / 64] |= 1 << (e.u % 64);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            adj,
            words,
            matrix,
        }
    }

    /// Graph with no edges.
    pub fn empty(n: usize) -> Graph {
        Graph::from_sorted_edges(n, Vec::new())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.matrix[a * self.words + b / 64] & (1 << (b % 64)) != 0
    }

    /// Position of `{a, b}` in the canonical edge order.
    pub fn edge_index(&self, a: Vertex, b: Vertex) -> Option<usize> {
        if a == b {
            return None;
        }
        self.edges.binary_search(&Edge::new(a, b)).ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// δ(G); 0 for the graph on zero vertices.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Δ(G).
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap();
            for &y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.distances_from(0).iter().all(Option::is_some)
    }

    /// Greatest eccentricity.
    pub fn diameter(&self) -> Result<usize> {
        let mut best = 0;
        for v in 0..self.n {
            for d in self.distances_from(v) {
                best = best.max(d.ok_or(Error::Disconnected)?);
            }
        }
        Ok(best)
    }

    /// `result[i]` is the set of vertices at distance exactly `i` from `v`.
    pub fn bfs_layers(&self, v: Vertex) -> Result<Vec<Vec<Vertex>>> {
        if v >= self.n {
            return Err(Error::InvalidParameter(format!(
                "vertex {v} out of range for n = {}",
                self.n
            )));
        }
        let mut layers: Vec<Vec<Vertex>> = Vec::new();
        for (x, d) in self.distances_from(v).into_iter().enumerate() {
            let d = d.ok_or(Error::Disconnected)?;
            if layers.len() <= d {
                layers.resize_with(d + 1, Vec::new);
            }
            layers[d].push(x);
        }
        Ok(layers)
    }

    /// Whether a spanning simple path exists. Backtracking from low-degree
    /// start vertices, abandoned with an error once `budget.hamiltonian_nodes`
    /// expansions have been spent.
    pub fn has_hamiltonian_path(&self, budget: &Budget) -> Result<bool> {
        if self.n <= 1 {
            return Ok(true);
        }
        if !self.is_connected() {
            return Ok(false);
        }
        if self.adj.iter().filter(|a| a.len() == 1).count() > 2 {
            return Ok(false);
        }
        let mut starts: Vec<Vertex> = (0..self.n).collect();
        starts.sort_by_key(|&v| (self.degree(v), v));
        let mut nodes = 0u64;
        let mut visited = vec![false; self.n];
        for &s in &starts {
            visited[s] = true;
            let found =
                self.extend_path(s, 1, &mut visited, &mut nodes, budget.hamiltonian_nodes)?;
            visited[s] = false;
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn extend_path(
        &self,
        tip: Vertex,
        len: usize,
        visited: &mut [bool],
        nodes: &mut u64,
        limit: u64,
    ) -> Result<bool> {
        if len == self.n {
            return Ok(true);
        }
        *nodes += 1;
        if *nodes > limit {
            return Err(Error::Budget {
                what: "hamiltonian path",
                limit,
                lower_bound: 0,
            });
        }
        let mut next: Vec<Vertex> = self.adj[tip]
            .iter()
            .copied()
            .filter(|&y| !visited[y])
            .collect();
        // Fewest onward options first.
        next.sort_by_key(|&y| (self.adj[y].iter().filter(|&&z| !visited[z]).count(), y));
        for y in next {
            visited[y] = true;
            let found = self.extend_path(y, len + 1, visited, nodes, limit)?;
            visited[y] = false;
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// δ-minimality: no proper spanning subgraph keeps minimum degree δ(G).
    /// Checked through the equivalent condition that every edge has an
    /// endpoint of degree exactly δ(G).
    pub fn is_delta_minimally(&self) -> Result<bool> {
        let delta = self.min_degree();
        if delta < 2 {
            return Err(Error::Precondition(format!(
                "δ-minimality requires δ ≥ 2, got δ = {delta}"
            )));
        }
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self
            .edges
            .iter()
            .all(|e| self.degree(e.u) == delta || self.degree(e.w) == delta))
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.size() == self.n - 1
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Connected and 2-regular.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.is_connected() && self.adj.iter().all(|a| a.len() == 2)
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    /// Two-coloring of a connected bipartite graph, or `None`.
    pub fn bipartition(&self) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
        if self.n == 0 || !self.is_connected() {
            return None;
        }
        let dist = self.distances_from(0);
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for (v, d) in dist.iter().enumerate() {
            if d.unwrap() % 2 == 0 {
                left.push(v);
            } else {
                right.push(v);
            }
        }
        let proper = self
            .edges
            .iter()
            .all(|e| dist[e.u].unwrap() % 2 != dist[e.w].unwrap() % 2);
        proper.then_some((left, right))
    }

    /// Side sizes `(p, q)` with `p ≤ q` when the graph is `K_{p,q}`.
    pub fn complete_bipartite_sides(&self) -> Option<(usize, usize)> {
        let (a, b) = self.bipartition()?;
        if b.is_empty() || a.len() * b.len() != self.size() {
            return None;
        }
        Some((a.len().min(b.len()), a.len().max(b.len())))
    }

    /// Induced subgraph on `keep`, relabelled to `0..keep.len()` in the given order.
    pub fn induced(&self, keep: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| index[e.u] != usize::MAX && index[e.w] != usize::MAX)
            .map(|e| Edge::new(index[e.u], index[e.w]))
            .collect();
        edges.sort_unstable();
        Graph::from_sorted_edges(keep.len(), edges)
    }
}

/// Smallest `t ≥ 0` with `t^k ≥ x`, by exact integer search.
pub fn ceil_root(x: u64, k: u32) -> u64 {
    if x <= 1 || k == 1 {
        return x;
    }
    let mut t = 1u64;
    while t.checked_pow(k).is_some_and(|p| p < x) {
        t += 1;
    }
    t
}

/// ⌈√x⌉.
pub fn ceil_sqrt(x: u64) -> u64 {
    ceil_root(x, 2)
}
