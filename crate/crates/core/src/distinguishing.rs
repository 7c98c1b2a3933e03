//! Exact distinguishing index D'(G) and distinguishing number D(G).
//!
//! Both are computed by the same depth-first labeling search. Points (edges
//! or vertices) are labelled in canonical order, labels are introduced in
//! first-occurrence order, and each non-identity automorphism is dropped from
//! the live set as soon as some labelled pair `(x, σ(x))` disagrees. A branch
//! dies when a live automorphism has no unlabelled point left that it moves:
//! that automorphism preserves every completion.

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use crate::perm::{automorphisms_with, edge_action, AutGroup, Permutation};

pub type Label = u32;

/// A total map from the edges of a graph to labels `1..`, indexed by the
/// graph's canonical edge order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeLabeling {
    labels: Vec<Label>,
}

impl EdgeLabeling {
    pub fn new(g: &Graph, labels: Vec<Label>) -> Result<EdgeLabeling> {
        if labels.len() != g.size() {
            return Err(Error::InvalidParameter(format!(
                "labeling has {} entries for {} edges",
                labels.len(),
                g.size()
            )));
        }
        if labels.contains(&0) {
            return Err(Error::InvalidParameter("labels start at 1".into()));
        }
        Ok(EdgeLabeling { labels })
    }

    pub fn constant(g: &Graph) -> EdgeLabeling {
        EdgeLabeling {
            labels: vec![1; g.size()],
        }
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn get(&self, edge_index: usize) -> Label {
        self.labels[edge_index]
    }

    pub fn label_of(&self, g: &Graph, e: Edge) -> Option<Label> {
        g.edge_index(e.u, e.w).map(|i| self.labels[i])
    }

    /// Number of distinct labels in use.
    pub fn labels_used(&self) -> usize {
        let mut seen: Vec<Label> = self.labels.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Renames labels to `1, 2, …` in order of first occurrence.
    pub fn canonical(&self) -> EdgeLabeling {
        EdgeLabeling {
            labels: first_occurrence(&self.labels),
        }
    }

    pub fn to_record(&self, g: &Graph, method: &str) -> LabelingRecord {
        LabelingRecord {
            edges: g
                .edges()
                .iter()
                .zip(&self.labels)
                .map(|(e, &l)| [e.u, e.w, l as usize])
                .collect(),
            labels_used: self.labels_used(),
            method: method.to_string(),
        }
    }
}

/// Serialized form `{edges: [[u, w, label], …], labels_used, method}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabelingRecord {
    pub edges: Vec<[usize; 3]>,
    pub labels_used: usize,
    pub method: String,
}

/// A total map from vertices to labels `1..`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexLabeling {
    labels: Vec<Label>,
}

impl VertexLabeling {
    pub fn new(g: &Graph, labels: Vec<Label>) -> Result<VertexLabeling> {
        if labels.len() != g.order() {
            return Err(Error::InvalidParameter(format!(
                "labeling has {} entries for {} vertices",
                labels.len(),
                g.order()
            )));
        }
        if labels.contains(&0) {
            return Err(Error::InvalidParameter("labels start at 1".into()));
        }
        Ok(VertexLabeling { labels })
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn get(&self, v: Vertex) -> Label {
        self.labels[v]
    }

    pub fn labels_used(&self) -> usize {
        let mut seen = self.labels.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

fn first_occurrence(labels: &[Label]) -> Vec<Label> {
    let mut rename: Vec<(Label, Label)> = Vec::new();
    labels
        .iter()
        .map(|&l| match rename.iter().find(|(from, _)| *from == l) {
            Some(&(_, to)) => to,
            None => {
                let to = rename.len() as Label + 1;
                rename.push((l, to));
                to
            }
        })
        .collect()
}

/// Whether `p` maps every edge to an edge of the same label.
/// Assumes `p` is an automorphism of `g`.
pub fn preserves_edge_labeling(p: &Permutation, labeling: &EdgeLabeling, g: &Graph) -> bool {
    g.edges().iter().enumerate().all(|(i, &e)| {
        let img = edge_action(p, e);
        match g.edge_index(img.u, img.w) {
            Some(j) => labeling.get(j) == labeling.get(i),
            None => false,
        }
    })
}

/// Only the identity of `group` preserves `labeling`.
pub fn is_distinguishing_edge(g: &Graph, labeling: &EdgeLabeling, group: &AutGroup) -> bool {
    group
        .non_identity()
        .all(|p| !preserves_edge_labeling(p, labeling, g))
}

pub fn is_distinguishing_vertex(labeling: &VertexLabeling, group: &AutGroup) -> bool {
    group
        .non_identity()
        .all(|p| (0..p.len()).any(|v| labeling.get(p.apply(v)) != labeling.get(v)))
}

/// Least label count together with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distinguished<L> {
    pub value: u32,
    pub witness: L,
}

/// Default label cap for D': Δ + 1 suffices for every connected graph of
/// order at least 3.
pub fn default_index_cap(g: &Graph) -> u32 {
    g.max_degree() as u32 + 1
}

pub fn distinguishing_index(g: &Graph, max_labels: u32) -> Result<Distinguished<EdgeLabeling>> {
    EdgeSearch::new(g, &Budget::default())?.index(max_labels)
}

pub fn distinguishing_number(g: &Graph, max_labels: u32) -> Result<Distinguished<VertexLabeling>> {
    VertexSearch::new(g, &Budget::default())?.number(max_labels)
}

/// A distinguishing labeling using at most `d` labels, if one exists.
pub fn find_edge_labeling(g: &Graph, d: u32) -> Result<Option<EdgeLabeling>> {
    let search = EdgeSearch::new(g, &Budget::default())?;
    match search.find(d) {
        Err(Error::NotFaithful) => Ok(None),
        other => other,
    }
}

/// Edge-labeling search over a precomputed automorphism group.
pub struct EdgeSearch<'g> {
    g: &'g Graph,
    group: AutGroup,
    engine: Engine,
    faithful: bool,
}

impl<'g> EdgeSearch<'g> {
    pub fn new(g: &'g Graph, budget: &Budget) -> Result<EdgeSearch<'g>> {
        let group = automorphisms_with(g, budget)?;
        Ok(EdgeSearch::with_group(g, group, budget))
    }

    pub fn with_group(g: &'g Graph, group: AutGroup, budget: &Budget) -> EdgeSearch<'g> {
        let perms = group.edge_permutations(g);
        let faithful = perms
            .iter()
            .all(|p| p.iter().enumerate().any(|(i, &j)| i != j));
        EdgeSearch {
            g,
            group,
            engine: Engine::new(g.size(), perms, budget.search_nodes),
            faithful,
        }
    }

    pub fn group(&self) -> &AutGroup {
        &self.group
    }

    pub fn verify(&self, labeling: &EdgeLabeling) -> bool {
        is_distinguishing_edge(self.g, labeling, &self.group)
    }

    /// Some distinguishing labeling with at most `d` labels. An unfaithful
    /// edge action is reported as [`Error::NotFaithful`].
    pub fn find(&self, d: u32) -> Result<Option<EdgeLabeling>> {
        if d == 0 {
            return Err(Error::InvalidParameter(
                "label count must be at least 1".into(),
            ));
        }
        if !self.faithful {
            return Err(Error::NotFaithful);
        }
        let Some(labels) = self.engine.run(d)? else {
            return Ok(None);
        };
        let labeling = EdgeLabeling { labels };
        if !self.verify(&labeling) {
            return Err(Error::Defect(
                "search returned a non-distinguishing labeling".into(),
            ));
        }
        Ok(Some(labeling))
    }

    pub fn index(&self, max_labels: u32) -> Result<Distinguished<EdgeLabeling>> {
        if max_labels == 0 {
            return Err(Error::InvalidParameter(
                "max_labels must be at least 1".into(),
            ));
        }
        if self.group.is_trivial() {
            return Ok(Distinguished {
                value: 1,
                witness: EdgeLabeling::constant(self.g),
            });
        }
        for d in 1..=max_labels {
            if let Some(witness) = self.find(d)? {
                return Ok(Distinguished { value: d, witness });
            }
        }
        Err(Error::Exhausted { max_labels })
    }
}

/// Vertex-labeling search over a precomputed automorphism group.
pub struct VertexSearch {
    group: AutGroup,
    engine: Engine,
}

impl VertexSearch {
    pub fn new(g: &Graph, budget: &Budget) -> Result<VertexSearch> {
        let group = automorphisms_with(g, budget)?;
        let perms = group.non_identity().map(|p| p.image().to_vec()).collect();
        Ok(VertexSearch {
            engine: Engine::new(g.order(), perms, budget.search_nodes),
            group,
        })
    }

    pub fn group(&self) -> &AutGroup {
        &self.group
    }

    pub fn find(&self, d: u32) -> Result<Option<VertexLabeling>> {
        if d == 0 {
            return Err(Error::InvalidParameter(
                "label count must be at least 1".into(),
            ));
        }
        let Some(labels) = self.engine.run(d)? else {
            return Ok(None);
        };
        let labeling = VertexLabeling { labels };
        if !is_distinguishing_vertex(&labeling, &self.group) {
            return Err(Error::Defect(
                "search returned a non-distinguishing labeling".into(),
            ));
        }
        Ok(Some(labeling))
    }

    pub fn number(&self, max_labels: u32) -> Result<Distinguished<VertexLabeling>> {
        if max_labels == 0 {
            return Err(Error::InvalidParameter(
                "max_labels must be at least 1".into(),
            ));
        }
        for d in 1..=max_labels {
            if let Some(witness) = self.find(d)? {
                return Ok(Distinguished { value: d, witness });
            }
        }
        Err(Error::Exhausted { max_labels })
    }
}

/// Labeling search over abstract points permuted by a list of non-identity
/// permutations.
struct Engine {
    points: usize,
    perms: Vec<Vec<usize>>,
    inverses: Vec<Vec<usize>>,
    last_moved: Vec<usize>,
    node_limit: u64,
}

struct State {
    labels: Vec<Label>,
    alive: Vec<usize>,
    nodes: u64,
}

impl Engine {
    fn new(points: usize, perms: Vec<Vec<usize>>, node_limit: u64) -> Engine {
        let inverses = perms
            .iter()
            .map(|p| {
                let mut inv = vec![0; points];
                for (i, &j) in p.iter().enumerate() {
                    inv[j] = i;
                }
                inv
            })
            .collect();
        let last_moved = perms
            .iter()
            .map(|p| {
                p.iter()
                    .enumerate()
                    .filter(|(i, j)| i != *j)
                    .map(|(i, _)| i)
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        Engine {
            points,
            perms,
            inverses,
            last_moved,
            node_limit,
        }
    }

    fn run(&self, d: u32) -> Result<Option<Vec<Label>>> {
        if self.perms.is_empty() {
            return Ok(Some(vec![1; self.points]));
        }
        let mut state = State {
            labels: vec![0; self.points],
            alive: (0..self.perms.len()).collect(),
            nodes: 0,
        };
        let live = state.alive.len();
        if self.descend(&mut state, 0, live, 0, d)? {
            Ok(Some(state.labels))
        } else {
            Ok(None)
        }
    }

    fn descend(
        &self,
        st: &mut State,
        t: usize,
        live: usize,
        max_used: Label,
        d: Label,
    ) -> Result<bool> {
        if t == self.points {
            return Ok(live == 0);
        }
        for label in 1..=(max_used + 1).min(d) {
            st.nodes += 1;
            if st.nodes > self.node_limit {
                return Err(Error::Budget {
                    what: "labeling search nodes",
                    limit: self.node_limit,
                    lower_bound: 0,
                });
            }
            st.labels[t] = label;
            let mut k = live;
            let mut i = 0;
            let mut doomed = false;
            while i < k {
                let s = st.alive[i];
                let a = self.perms[s][t];
                let b = self.inverses[s][t];
                let killed = (a < t && st.labels[a] != label) || (b < t && st.labels[b] != label);
                if killed {
                    st.alive.swap(i, k - 1);
                    k -= 1;
                    continue;
                }
                if self.last_moved[s] <= t {
                    doomed = true;
                    break;
                }
                i += 1;
            }
            if !doomed && self.descend(st, t + 1, k, max_used.max(label), d)? {
                return Ok(true);
            }
        }
        st.labels[t] = 0;
        Ok(false)
    }
}
