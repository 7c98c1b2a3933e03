//! Layered labeling of graphs with minimum degree at least two, using at most
//! ⌈√Δ⌉ + 1 labels.
//!
//! A maximum-degree root `v` is pinned by the counts of its spoke labels, the
//! first BFS layer is split into spoke classes `L_i` and pinned by label-count
//! vectors, and every later layer is split into classes of vertices sharing
//! the same parents, which are then separated by relabeling nearby edges.
//! Internally the labels are `0..=c` with `c = ⌈√Δ⌉`; the result is shifted
//! to `1..=c+1`.

use std::cmp::Reverse;
use std::collections::{BTreeMap, HashMap};

use crate::budget::Budget;
use crate::distinguishing::{EdgeLabeling, EdgeSearch, Label};
use crate::error::{Error, Result};
use crate::graph::{ceil_sqrt, Graph, Vertex};
use crate::perm::automorphisms_with;

use super::arrays::enumerate_label_arrays;
use super::{Constructed, Method};

/// The vertex classes the layered labeling is built on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerPartition {
    pub root: Vertex,
    /// `⌈√Δ⌉`.
    pub c: usize,
    /// `layers[i]` holds the vertices at distance `i` from the root.
    pub layers: Vec<Vec<Vertex>>,
    /// Cycles through the root whose other vertices all have degree two, as
    /// their internal vertices in walk order. Empty when the graph is a cycle.
    pub blades: Vec<Vec<Vertex>>,
    /// Spoke classes of the first layer (blade vertices excluded); spokes to
    /// `l_sets[i]` carry internal label `i`.
    pub l_sets: Vec<Vec<Vertex>>,
    /// First-layer vertices whose neighbourhood stays inside `N[root]`.
    pub m1: Vec<Vertex>,
    pub m2: Vec<Vertex>,
    pub m1i: Vec<Vec<Vertex>>,
    pub m2i: Vec<Vec<Vertex>>,
    /// `m2ij[i][j]`: vertices of `m2i[i]` with exactly `j` neighbours in the
    /// second layer.
    pub m2ij: Vec<BTreeMap<usize, Vec<Vertex>>>,
    /// Second-layer vertices grouped by their neighbour set in `m2`.
    pub a_sets: Vec<Vec<Vertex>>,
}

fn check_input(g: &Graph) -> Result<()> {
    if g.order() < 3 {
        return Err(Error::Precondition(format!(
            "need at least 3 vertices, got {}",
            g.order()
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.min_degree() < 2 {
        return Err(Error::Precondition(format!(
            "need δ ≥ 2, got δ = {}",
            g.min_degree()
        )));
    }
    Ok(())
}

pub fn layer_partition(g: &Graph) -> Result<LayerPartition> {
    check_input(g)?;
    let root = (0..g.order())
        .max_by_key(|&v| (g.degree(v), Reverse(v)))
        .expect("nonempty");
    let c = ceil_sqrt(g.degree(root) as u64) as usize;
    let layers = g.bfs_layers(root)?;
    let blades = if g.is_cycle() {
        Vec::new()
    } else {
        attached_blades(g, root)
    };
    let mut in_blade = vec![false; g.order()];
    for b in &blades {
        for &x in b {
            in_blade[x] = true;
        }
    }
    let n1: Vec<Vertex> = layers[1]
        .iter()
        .copied()
        .filter(|&x| !in_blade[x])
        .collect();
    let chunk = c - 1;
    let mut l_sets = vec![Vec::new(); c + 1];
    for (pos, &x) in n1.iter().enumerate() {
        // With Δ = c² the c+1 classes of size c-1 fall one short; the
        // overflow joins the last class.
        l_sets[(pos / chunk).min(c)].push(x);
    }
    let mut closed = vec![false; g.order()];
    closed[root] = true;
    for &x in &layers[1] {
        closed[x] = true;
    }
    let (m1, m2): (Vec<Vertex>, Vec<Vertex>) = n1
        .iter()
        .partition(|&&x| g.neighbors(x).iter().all(|&y| closed[y]));
    let mut in_m2 = vec![false; g.order()];
    for &x in &m2 {
        in_m2[x] = true;
    }
    let second: Vec<Vertex> = layers
        .get(2)
        .map(|l| l.iter().copied().filter(|&x| !in_blade[x]).collect())
        .unwrap_or_default();
    let mut in_second = vec![false; g.order()];
    for &x in &second {
        in_second[x] = true;
    }
    let m1i: Vec<Vec<Vertex>> = l_sets
        .iter()
        .map(|l| l.iter().copied().filter(|x| m1.contains(x)).collect())
        .collect();
    let m2i: Vec<Vec<Vertex>> = l_sets
        .iter()
        .map(|l| l.iter().copied().filter(|&x| in_m2[x]).collect())
        .collect();
    let m2ij = m2i
        .iter()
        .map(|set| {
            let mut by_j: BTreeMap<usize, Vec<Vertex>> = BTreeMap::new();
            for &x in set {
                let j = g.neighbors(x).iter().filter(|&&y| in_second[y]).count();
                by_j.entry(j).or_default().push(x);
            }
            by_j
        })
        .collect();
    let mut by_parents: BTreeMap<Vec<Vertex>, Vec<Vertex>> = BTreeMap::new();
    for &w in &second {
        let key: Vec<Vertex> = g
            .neighbors(w)
            .iter()
            .copied()
            .filter(|&y| in_m2[y])
            .collect();
        by_parents.entry(key).or_default().push(w);
    }
    Ok(LayerPartition {
        root,
        c,
        layers,
        blades,
        l_sets,
        m1,
        m2,
        m1i,
        m2i,
        m2ij,
        a_sets: by_parents.into_values().collect(),
    })
}

/// Cycles through `root` all of whose other vertices have degree two.
fn attached_blades(g: &Graph, root: Vertex) -> Vec<Vec<Vertex>> {
    let mut blades = Vec::new();
    for &x in g.neighbors(root) {
        if g.degree(x) != 2 {
            continue;
        }
        let mut walk = vec![x];
        let (mut prev, mut cur) = (root, x);
        let closed = loop {
            let next = g
                .neighbors(cur)
                .iter()
                .copied()
                .find(|&y| y != prev)
                .unwrap();
            if next == root {
                break true;
            }
            if g.degree(next) != 2 || walk.len() > g.order() {
                break false;
            }
            walk.push(next);
            prev = cur;
            cur = next;
        };
        // Each blade is met from both ends; keep the walk starting lower.
        if closed && walk[0] < *walk.last().unwrap() {
            blades.push(walk);
        }
    }
    blades
}

/// Labels a graph with `δ ≥ 2` using at most ⌈√Δ⌉ + 1 labels. The layered
/// construction is tried first; if its output does not verify, the exact
/// search runs under the same cap.
pub fn label_min_degree_two(g: &Graph) -> Result<Constructed> {
    label_min_degree_two_with(g, &Budget::default())
}

pub fn label_min_degree_two_with(g: &Graph, budget: &Budget) -> Result<Constructed> {
    let part = layer_partition(g)?;
    let cap = part.c as u32 + 1;
    let search = EdgeSearch::with_group(g, automorphisms_with(g, budget)?, budget);
    let labels = Builder::new(g, &part).run();
    let labeling = EdgeLabeling::new(g, labels)?;
    if labeling.labels().iter().all(|&l| l <= cap) && search.verify(&labeling) {
        return Ok(Constructed {
            labeling,
            method: Method::Layered,
        });
    }
    match search.find(cap)? {
        Some(labeling) => Ok(Constructed {
            labeling,
            method: Method::ExactFallback,
        }),
        None => Err(Error::BoundWitnessNotFound { cap }),
    }
}

const NO_LAYER: usize = usize::MAX;
/// Candidate arrangements tried per parent in the permutation repairs.
const ARRANGEMENT_LIMIT: usize = 5_000;
/// Edge sets up to this many assignments are searched exhaustively in the
/// neighbourhood repairs; larger ones are filled greedily.
const ASSIGNMENT_LIMIT: usize = 4_096;

struct Builder<'a> {
    g: &'a Graph,
    part: &'a LayerPartition,
    c: u32,
    lab: Vec<Option<u32>>,
    locked: Vec<bool>,
    layer_of: Vec<usize>,
    in_blade: Vec<bool>,
}

impl<'a> Builder<'a> {
    fn new(g: &'a Graph, part: &'a LayerPartition) -> Builder<'a> {
        let mut layer_of = vec![NO_LAYER; g.order()];
        for (i, layer) in part.layers.iter().enumerate() {
            for &x in layer {
                layer_of[x] = i;
            }
        }
        let mut in_blade = vec![false; g.order()];
        for b in &part.blades {
            for &x in b {
                in_blade[x] = true;
            }
        }
        Builder {
            g,
            part,
            c: part.c as u32,
            lab: vec![None; g.size()],
            locked: vec![false; g.size()],
            layer_of,
            in_blade,
        }
    }

    fn edge(&self, a: Vertex, b: Vertex) -> usize {
        self.g.edge_index(a, b).expect("adjacent")
    }

    fn set(&mut self, a: Vertex, b: Vertex, l: u32) {
        let e = self.edge(a, b);
        self.lab[e] = Some(l);
    }

    fn run(mut self) -> Vec<Label> {
        self.label_blades();
        self.label_first_layer();
        for t in 2..self.part.layers.len() {
            self.label_layer(t);
        }
        self.lab.iter().map(|l| l.unwrap_or(1) + 1).collect()
    }

    fn label_blades(&mut self) {
        let root = self.part.root;
        let blades = &self.part.blades;
        if blades.len() == 1 && blades[0].len() == 2 {
            let (a, b) = (blades[0][0], blades[0][1]);
            self.set(root, a, 0);
            self.set(root, b, 1);
            self.set(a, b, 2);
            return;
        }
        let mut pools: HashMap<usize, Vec<Vec<u32>>> = HashMap::new();
        let mut taken: HashMap<usize, usize> = HashMap::new();
        for blade in blades {
            let len = blade.len() + 1;
            let pool = pools.entry(len).or_insert_with(|| {
                enumerate_label_arrays(self.c, len)
                    .map(|a| a.coords)
                    .collect()
            });
            let k = taken.entry(len).or_default();
            let array = pool[*k % pool.len()].clone();
            *k += 1;
            let mut walk = vec![root];
            walk.extend(blade);
            walk.push(root);
            for (pair, l) in walk.windows(2).zip(array) {
                self.set(pair[0], pair[1], l);
            }
        }
    }

    fn label_first_layer(&mut self) {
        let part = self.part;
        let root = part.root;
        for (i, set) in part.l_sets.iter().enumerate() {
            for &x in set {
                self.set(root, x, i as u32);
            }
        }
        for group in &part.m1i {
            self.label_m1_group(group);
        }
        let in_second = self.layer_flags(2);
        for by_j in &part.m2ij {
            for (&j, group) in by_j {
                for (k, &x) in group.iter().enumerate() {
                    let ms = Multisets::new(j, self.c)
                        .nth(k)
                        .unwrap_or_else(|| vec![1; j]);
                    let children: Vec<Vertex> = self
                        .g
                        .neighbors(x)
                        .iter()
                        .copied()
                        .filter(|&y| in_second[y])
                        .collect();
                    for (&y, l) in children.iter().zip(ms) {
                        self.set(x, y, l);
                    }
                }
            }
        }
        self.fill_within_layer(1);
    }

    /// Gives every vertex of `group` a distinct label-count vector on its
    /// incident edges, choosing the lexicographically first multiset that
    /// differs from the vertices already settled.
    fn label_m1_group(&mut self, group: &[Vertex]) {
        let mut settled: Vec<Vec<usize>> = Vec::new();
        for &x in group {
            let free: Vec<usize> = self
                .g
                .neighbors(x)
                .iter()
                .map(|&y| self.edge(x, y))
                .filter(|&e| self.lab[e].is_none())
                .collect();
            let base = self.count_vector(x);
            let mut choice = None;
            for ms in Multisets::new(free.len(), self.c).take(ARRANGEMENT_LIMIT) {
                let mut counts = base.clone();
                for &l in &ms {
                    counts[l as usize] += 1;
                }
                if !settled.contains(&counts) {
                    choice = Some(ms);
                    break;
                }
            }
            let ms = choice.unwrap_or_else(|| vec![1; free.len()]);
            for (&e, l) in free.iter().zip(ms) {
                self.lab[e] = Some(l);
            }
            settled.push(self.count_vector(x));
        }
    }

    fn count_vector(&self, x: Vertex) -> Vec<usize> {
        let mut counts = vec![0; self.c as usize + 1];
        for &y in self.g.neighbors(x) {
            if let Some(l) = self.lab[self.edge(x, y)] {
                counts[l as usize] += 1;
            }
        }
        counts
    }

    fn layer_flags(&self, t: usize) -> Vec<bool> {
        (0..self.g.order())
            .map(|x| self.layer_of[x] == t && !self.in_blade[x])
            .collect()
    }

    fn fill_within_layer(&mut self, t: usize) {
        for (e, edge) in self.g.edges().iter().enumerate() {
            if self.lab[e].is_none() && self.layer_of[edge.u] == t && self.layer_of[edge.w] == t {
                self.lab[e] = Some(1);
            }
        }
    }

    fn layer(&self, t: usize) -> Vec<Vertex> {
        self.part.layers[t]
            .iter()
            .copied()
            .filter(|&x| !self.in_blade[x])
            .collect()
    }

    fn parents(&self, w: Vertex) -> Vec<Vertex> {
        let t = self.layer_of[w];
        self.g
            .neighbors(w)
            .iter()
            .copied()
            .filter(|&u| self.layer_of[u] + 1 == t && !self.in_blade[u])
            .collect()
    }

    fn label_layer(&mut self, t: usize) {
        let current = self.layer(t);
        if current.is_empty() {
            return;
        }
        let prev = self.layer(t - 1);
        // Default child labels cycle through 1..=c per parent.
        for &u in &prev {
            let mut k = 0;
            for &w in self.g.neighbors(u) {
                if self.layer_of[w] == t && !self.in_blade[w] {
                    let e = self.edge(u, w);
                    if self.lab[e].is_none() {
                        self.lab[e] = Some(k % self.c + 1);
                        k += 1;
                    }
                }
            }
        }
        let mut by_parents: BTreeMap<Vec<Vertex>, Vec<Vertex>> = BTreeMap::new();
        for &w in &current {
            by_parents.entry(self.parents(w)).or_default().push(w);
        }
        let classes: Vec<Vec<Vertex>> = by_parents.into_values().filter(|c| c.len() > 1).collect();
        if !classes.is_empty() {
            self.permute_children(t, &prev, &classes);
            self.replace_children(t, &prev, &classes);
            for class in &classes {
                self.separate_nearby(t, class);
            }
        }
        self.fill_within_layer(t);
    }

    /// Pairs of class members whose parent-edge labels coincide.
    fn collisions(&self, classes: &[Vec<Vertex>]) -> usize {
        let mut total = 0;
        for class in classes {
            let sigs: Vec<Vec<Option<u32>>> = class
                .iter()
                .map(|&w| {
                    self.parents(w)
                        .iter()
                        .map(|&u| self.lab[self.edge(u, w)])
                        .collect()
                })
                .collect();
            for i in 0..sigs.len() {
                total += sigs[i + 1..].iter().filter(|s| **s == sigs[i]).count();
            }
        }
        total
    }

    fn free_children(&self, u: Vertex, t: usize) -> Vec<usize> {
        self.g
            .neighbors(u)
            .iter()
            .filter(|&&w| self.layer_of[w] == t && !self.in_blade[w])
            .map(|&w| self.edge(u, w))
            .filter(|&e| !self.locked[e])
            .collect()
    }

    /// Reorders the labels on each parent's child edges.
    fn permute_children(&mut self, t: usize, prev: &[Vertex], classes: &[Vec<Vertex>]) {
        let mut best = self.collisions(classes);
        for &u in prev {
            if best == 0 {
                return;
            }
            let edges = self.free_children(u, t);
            if edges.len() < 2 {
                continue;
            }
            let original: Vec<u32> = edges.iter().map(|&e| self.lab[e].unwrap()).collect();
            let mut arrangement = original.clone();
            arrangement.sort_unstable();
            let mut chosen = original;
            for _ in 0..ARRANGEMENT_LIMIT {
                self.assign(&edges, &arrangement);
                let score = self.collisions(classes);
                if score < best {
                    best = score;
                    chosen = arrangement.clone();
                }
                if !next_permutation(&mut arrangement) {
                    break;
                }
            }
            self.assign(&edges, &chosen);
        }
    }

    /// Gives parents new child multisets. First-layer parents keep their
    /// count vectors distinct inside their `M_2ij` class.
    fn replace_children(&mut self, t: usize, prev: &[Vertex], classes: &[Vec<Vertex>]) {
        let mut best = self.collisions(classes);
        for &u in prev {
            if best == 0 {
                return;
            }
            let edges = self.free_children(u, t);
            if edges.is_empty() {
                continue;
            }
            let peers = if t == 2 {
                self.m2ij_peers(u)
            } else {
                Vec::new()
            };
            let fixed: Vec<usize> = self.count_vector(u);
            let own: Vec<u32> = edges.iter().map(|&e| self.lab[e].unwrap()).collect();
            let mut chosen = own.clone();
            let mut tried = 0;
            'outer: for ms in Multisets::new(edges.len(), self.c) {
                if !peers.is_empty() {
                    let mut counts = fixed.clone();
                    for &l in &own {
                        counts[l as usize] -= 1;
                    }
                    for &l in &ms {
                        counts[l as usize] += 1;
                    }
                    if peers.iter().any(|&p| self.count_vector(p) == counts) {
                        continue;
                    }
                }
                let mut arrangement = ms;
                loop {
                    self.assign(&edges, &arrangement);
                    let score = self.collisions(classes);
                    if score < best {
                        best = score;
                        chosen = arrangement.clone();
                    }
                    tried += 1;
                    if tried >= ARRANGEMENT_LIMIT || best == 0 {
                        break 'outer;
                    }
                    if !next_permutation(&mut arrangement) {
                        break;
                    }
                }
            }
            self.assign(&edges, &chosen);
        }
    }

    fn m2ij_peers(&self, u: Vertex) -> Vec<Vertex> {
        for by_j in &self.part.m2ij {
            for group in by_j.values() {
                if group.contains(&u) {
                    return group.iter().copied().filter(|&x| x != u).collect();
                }
            }
        }
        Vec::new()
    }

    fn assign(&mut self, edges: &[usize], labels: &[u32]) {
        for (&e, &l) in edges.iter().zip(labels) {
            self.lab[e] = Some(l);
        }
    }

    /// Labels unlabeled edges near `class` (inside layer `t`, from the class
    /// to layer `t+1`, then inside layer `t+1` next to the class) until
    /// colour refinement separates every member.
    fn separate_nearby(&mut self, t: usize, class: &[Vertex]) {
        if self.separated(t, class) {
            return;
        }
        let member = |x: Vertex| class.contains(&x);
        let touches_class = |x: Vertex| self.g.neighbors(x).iter().any(|&y| member(y));
        let unlabeled: Vec<usize> = (0..self.g.size())
            .filter(|&e| self.lab[e].is_none())
            .collect();
        let edges = self.g.edges();
        let action_sets: [Vec<usize>; 3] = [
            unlabeled
                .iter()
                .copied()
                .filter(|&e| {
                    let (a, b) = (edges[e].u, edges[e].w);
                    self.layer_of[a] == t && self.layer_of[b] == t && (member(a) || member(b))
                })
                .collect(),
            unlabeled
                .iter()
                .copied()
                .filter(|&e| {
                    let (a, b) = (edges[e].u, edges[e].w);
                    (member(a) && self.layer_of[b] == t + 1)
                        || (member(b) && self.layer_of[a] == t + 1)
                })
                .collect(),
            unlabeled
                .iter()
                .copied()
                .filter(|&e| {
                    let (a, b) = (edges[e].u, edges[e].w);
                    self.layer_of[a] == t + 1
                        && self.layer_of[b] == t + 1
                        && (touches_class(a) || touches_class(b))
                })
                .collect(),
        ];
        for set in action_sets {
            let set: Vec<usize> = set.into_iter().filter(|&e| self.lab[e].is_none()).collect();
            if set.is_empty() {
                continue;
            }
            let done = self.assign_exhaustive(t, class, &set) || self.assign_greedy(t, class, &set);
            for &e in &set {
                self.locked[e] = true;
            }
            if done {
                return;
            }
        }
    }

    fn assign_exhaustive(&mut self, t: usize, class: &[Vertex], set: &[usize]) -> bool {
        let c = self.c as usize;
        let total = c.checked_pow(set.len() as u32);
        if !matches!(total, Some(x) if x <= ASSIGNMENT_LIMIT) {
            return false;
        }
        let mut digits = vec![1u32; set.len()];
        loop {
            self.assign(set, &digits);
            if self.separated(t, class) {
                return true;
            }
            let mut pos = digits.len();
            loop {
                if pos == 0 {
                    for &e in set {
                        self.lab[e] = None;
                    }
                    return false;
                }
                pos -= 1;
                if digits[pos] < self.c {
                    digits[pos] += 1;
                    break;
                }
                digits[pos] = 1;
            }
        }
    }

    fn assign_greedy(&mut self, t: usize, class: &[Vertex], set: &[usize]) -> bool {
        for &e in set {
            let mut best = (usize::MAX, 1);
            for l in 1..=self.c {
                self.lab[e] = Some(l);
                let score = self.refined_collisions(t, class);
                if score < best.0 {
                    best = (score, l);
                }
            }
            self.lab[e] = Some(best.1);
        }
        self.separated(t, class)
    }

    fn separated(&self, t: usize, class: &[Vertex]) -> bool {
        self.refined_collisions(t, class) == 0
    }

    fn refined_collisions(&self, t: usize, class: &[Vertex]) -> usize {
        let colors = self.refine(t);
        let mut seen: Vec<u32> = class.iter().map(|&x| colors[x]).collect();
        seen.sort_unstable();
        seen.windows(2).filter(|w| w[0] == w[1]).count()
    }

    /// Colour refinement on the partial labeling with every vertex of the
    /// layers before `t` (and every blade vertex) individualized.
    fn refine(&self, t: usize) -> Vec<u32> {
        let n = self.g.order();
        let mut colors: Vec<u32> = {
            let keys: Vec<(usize, usize)> = (0..n)
                .map(|x| {
                    if self.layer_of[x] < t || self.in_blade[x] {
                        (0, x)
                    } else {
                        (1, self.layer_of[x])
                    }
                })
                .collect();
            dense(&keys)
        };
        let mut count = distinct(&colors);
        loop {
            let keys: Vec<(u32, Vec<(u32, u32)>)> = (0..n)
                .map(|x| {
                    let mut around: Vec<(u32, u32)> = self
                        .g
                        .neighbors(x)
                        .iter()
                        .map(|&y| (self.lab[self.edge(x, y)].map_or(0, |l| l + 1), colors[y]))
                        .collect();
                    around.sort_unstable();
                    (colors[x], around)
                })
                .collect();
            colors = dense(&keys);
            let next = distinct(&colors);
            if next == count {
                return colors;
            }
            count = next;
        }
    }
}

fn dense<K: Ord + Clone>(keys: &[K]) -> Vec<u32> {
    let mut sorted: Vec<&K> = keys.iter().collect();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(&k).unwrap() as u32)
        .collect()
}

fn distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Nondecreasing sequences of length `len` over `1..=c`, lexicographically.
pub(super) struct Multisets {
    c: u32,
    current: Option<Vec<u32>>,
}

impl Multisets {
    pub(super) fn new(len: usize, c: u32) -> Multisets {
        Multisets {
            c,
            current: (c >= 1).then(|| vec![1; len]),
        }
    }
}

impl Iterator for Multisets {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        match cur.iter().rposition(|&x| x < self.c) {
            Some(pos) => {
                let v = cur[pos] + 1;
                for slot in &mut cur[pos..] {
                    *slot = v;
                }
            }
            None => self.current = None,
        }
        Some(out)
    }
}

/// Advances to the next lexicographic permutation; false after the last.
fn next_permutation(xs: &mut [u32]) -> bool {
    let Some(i) = xs.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = xs.iter().rposition(|&x| x > xs[i]).unwrap();
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    fn graph(n: usize, pairs: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, pairs).unwrap()
    }

    fn cap(g: &Graph) -> usize {
        ceil_sqrt(g.max_degree() as u64) as usize + 1
    }

    #[test]
    fn multisets_and_permutations() {
        let all: Vec<_> = Multisets::new(2, 3).collect();
        assert_eq!(
            all,
            vec![
                vec![1, 1],
                vec![1, 2],
                vec![1, 3],
                vec![2, 2],
                vec![2, 3],
                vec![3, 3]
            ]
        );
        assert_eq!(Multisets::new(0, 2).count(), 1);
        let mut p = vec![1, 1, 2];
        let mut seen = vec![p.clone()];
        while next_permutation(&mut p) {
            seen.push(p.clone());
        }
        assert_eq!(seen, vec![vec![1, 1, 2], vec![1, 2, 1], vec![2, 1, 1]]);
    }

    #[test]
    fn partition_of_friendship_graph() {
        let g = generate(&FamilySpec::Windmill { n: 3, k: 3 }).unwrap();
        let part = layer_partition(&g).unwrap();
        assert_eq!(part.root, 0);
        assert_eq!(part.c, 3);
        assert_eq!(part.blades.len(), 3);
        assert!(part.l_sets.iter().all(|l| l.is_empty()));
    }

    #[test]
    fn partition_classes() {
        // K_{2,3} plus the edge 0-1: root 0 has neighbours 1, 2, 3, 4.
        let g = graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]);
        let part = layer_partition(&g).unwrap();
        assert_eq!(part.c, 2);
        let sizes: Vec<usize> = part.l_sets.iter().map(|l| l.len()).collect();
        assert_eq!(sizes, vec![1, 1, 2]);
        assert_eq!(part.m1, vec![1, 2, 3, 4]);
        assert!(part.m2.is_empty() && part.a_sets.is_empty());

        let c6 = generate(&FamilySpec::Cycle { n: 6 }).unwrap();
        let part = layer_partition(&c6).unwrap();
        assert_eq!(part.m2, vec![1, 5]);
        assert_eq!(part.a_sets, vec![vec![2], vec![4]]);
        assert_eq!(part.m2ij[0].get(&1), Some(&vec![1]));
    }

    #[test]
    fn spec_examples() {
        let c7 = generate(&FamilySpec::Cycle { n: 7 }).unwrap();
        let out = label_min_degree_two(&c7).unwrap();
        assert!(out.labeling.labels_used() <= 3);

        let d33 = generate(&FamilySpec::Windmill { n: 3, k: 3 }).unwrap();
        let out = label_min_degree_two(&d33).unwrap();
        assert!(out.labeling.labels_used() <= 4);

        let k4 = generate(&FamilySpec::Complete { n: 4 }).unwrap();
        let out = label_min_degree_two(&k4).unwrap();
        assert_eq!(out.labeling.labels_used(), 3);
    }

    #[test]
    fn every_output_verifies() {
        for spec in [
            FamilySpec::Complete { n: 5 },
            FamilySpec::CompleteBipartite { p: 3, q: 3 },
            FamilySpec::CompleteBipartite { p: 2, q: 5 },
            FamilySpec::Windmill { n: 4, k: 4 },
            FamilySpec::Cycle { n: 5 },
        ] {
            let g = generate(&spec).unwrap();
            let out = label_min_degree_two(&g).unwrap();
            let group = crate::perm::automorphisms(&g).unwrap();
            assert!(
                crate::distinguishing::is_distinguishing_edge(&g, &out.labeling, &group),
                "{spec}"
            );
            assert!(
                out.labeling.labels().iter().all(|&l| l as usize <= cap(&g)),
                "{spec}"
            );
        }
    }

    #[test]
    fn preconditions() {
        let path = graph(3, &[(0, 1), (1, 2)]);
        assert!(matches!(
            label_min_degree_two(&path),
            Err(Error::Precondition(_))
        ));
        let two_triangles = graph(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert!(matches!(
            label_min_degree_two(&two_triangles),
            Err(Error::Disconnected)
        ));
    }
}
