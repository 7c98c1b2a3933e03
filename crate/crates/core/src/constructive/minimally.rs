//! Labelings of 2-minimally graphs with at most ⌈√Δ⌉ labels.
//!
//! Cycles get a fixed asymmetric pattern. Otherwise the graph is cut into
//! simple paths between branch vertices: parallel paths of equal length get
//! distinct label sequences (nondecreasing ones first, so the set is never
//! closed under reversal), one path `P` at the root with unequal end labels
//! keeps its sequence to itself, and the loops at each branch vertex are
//! labeled as windmill blades with a windmill that is not label-isomorphic to
//! the root's.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::budget::Budget;
use crate::distinguishing::{EdgeLabeling, EdgeSearch, Label};
use crate::error::{Error, Result};
use crate::graph::{ceil_sqrt, Graph, Vertex};
use crate::perm::automorphisms_with;

use super::arrays::enumerate_label_arrays;
use super::layered::Multisets;
use super::paths::{decompose_simple_paths, SimplePathDecomposition};
use super::{Constructed, Method};

pub fn label_two_minimally(g: &Graph) -> Result<Constructed> {
    label_two_minimally_with(g, &Budget::default())
}

pub fn label_two_minimally_with(g: &Graph, budget: &Budget) -> Result<Constructed> {
    check_hypotheses(g)?;
    let cap = ceil_sqrt(g.max_degree() as u64) as u32;
    let search = EdgeSearch::with_group(g, automorphisms_with(g, budget)?, budget);
    let labels = if g.is_cycle() {
        cycle_pattern(g)
    } else {
        path_labels(g, &decompose_simple_paths(g)?, cap)
    };
    let labeling = EdgeLabeling::new(g, labels)?;
    if labeling.labels().iter().all(|&l| l <= cap) && search.verify(&labeling) {
        return Ok(Constructed {
            labeling,
            method: Method::TwoMinimally,
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

fn check_hypotheses(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.order() < 3 || g.min_degree() != 2 {
        return Err(Error::Precondition(format!(
            "2-minimally graphs have δ = 2, got δ = {}",
            g.min_degree()
        )));
    }
    if !g.is_delta_minimally()? {
        return Err(Error::Precondition("graph is not 2-minimally".into()));
    }
    if g.is_cycle() && g.order() <= 5 {
        return Err(Error::Precondition(format!("C_{} is excluded", g.order())));
    }
    if let Some((2, q)) = g.complete_bipartite_sides() {
        let r = ceil_sqrt(q as u64);
        if r * r == q as u64 {
            return Err(Error::Precondition(format!(
                "K_{{2,{q}}} = K_{{2,r²}} with r = {r} is excluded"
            )));
        }
    }
    Ok(())
}

/// `1, 1, 2, 1, 2, …, 2` around the cycle: the runs of 2 have lengths 1 and
/// n - 4 ≥ 2, so no rotation or reflection preserves it.
fn cycle_pattern(g: &Graph) -> Vec<Label> {
    let d = decompose_simple_paths(g).expect("cycles decompose");
    let cycle = d.cycle.expect("cycle");
    let mut labels = vec![0; g.size()];
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        labels[g.edge_index(a, b).unwrap()] = if matches!(i, 0 | 1 | 3) { 1 } else { 2 };
    }
    labels
}

/// Label sequences of length `len` over `1..=c`: nondecreasing ones in
/// lexicographic order, then the rest in lexicographic order.
fn sequences(len: usize, c: u32) -> impl Iterator<Item = Vec<Label>> {
    let sorted = Multisets::new(len, c);
    let mut odometer = Some(vec![1; len]);
    let rest = std::iter::from_fn(move || loop {
        let cur = odometer.clone()?;
        let next = odometer.as_mut().unwrap();
        match next.iter().rposition(|&x| x < c) {
            Some(pos) => {
                next[pos] += 1;
                for slot in &mut next[pos + 1..] {
                    *slot = 1;
                }
            }
            None => odometer = None,
        }
        if cur.windows(2).any(|w| w[0] > w[1]) {
            return Some(cur);
        }
    });
    sorted.chain(rest)
}

fn path_labels(g: &Graph, d: &SimplePathDecomposition, c: u32) -> Vec<Label> {
    let root = *d
        .branch_vertices
        .iter()
        .max_by_key(|&&v| (g.degree(v), std::cmp::Reverse(v)))
        .expect("non-cycle has a branch vertex");
    let rank = branch_ranks(g, d, root);
    let mut labels: Vec<Label> = vec![0; g.size()];

    // Parallel paths, oriented from the lower-ranked end.
    let mut groups: BTreeMap<(usize, usize, usize), Vec<Vec<usize>>> = BTreeMap::new();
    let mut loops: BTreeMap<(usize, usize), Vec<Vec<usize>>> = BTreeMap::new();
    for p in &d.paths {
        if p.is_loop() {
            loops
                .entry((rank[&p.start], p.length()))
                .or_default()
                .push(p.edges.clone());
            continue;
        }
        let (ra, rb) = (rank[&p.start], rank[&p.end]);
        let edges = if ra < rb {
            p.edges.clone()
        } else {
            p.edges.iter().rev().copied().collect()
        };
        groups
            .entry((ra.min(rb), ra.max(rb), p.length()))
            .or_default()
            .push(edges);
    }
    let mut reserved: HashMap<usize, Vec<Label>> = HashMap::new();
    for (&(ra, _, len), paths) in &groups {
        let mut chosen: Vec<Vec<Label>> = Vec::new();
        if ra == 0 && !reserved.contains_key(&len) {
            if let Some(p) = sequences(len, c).find(|s| s[0] != s[len - 1]) {
                reserved.insert(len, p.clone());
                chosen.push(p);
            }
        }
        let kept = reserved.get(&len).cloned();
        let mut pool = sequences(len, c).filter(|s| kept.as_ref() != Some(s));
        while chosen.len() < paths.len() {
            match pool.next() {
                Some(s) if !chosen.contains(&s) => chosen.push(s),
                Some(_) => {}
                None => chosen.push(vec![1; len]),
            }
        }
        for (edges, seq) in paths.iter().zip(chosen) {
            for (&e, l) in edges.iter().zip(seq) {
                labels[e] = l;
            }
        }
    }

    // Loops at each branch vertex, as windmill blades.
    type BladeGroup<'a> = (usize, &'a Vec<Vec<usize>>);
    let mut by_vertex: BTreeMap<usize, Vec<BladeGroup>> = BTreeMap::new();
    for ((r, len), blades) in &loops {
        by_vertex.entry(*r).or_default().push((*len, blades));
    }
    let mut offsets: HashMap<usize, usize> = HashMap::new();
    let mut root_wind: Option<Vec<Vec<Label>>> = None;
    for (&r, blade_groups) in &by_vertex {
        let pool_size: usize = blade_groups
            .iter()
            .map(|&(len, _)| enumerate_label_arrays(c, len).count().max(1))
            .max()
            .unwrap_or(1);
        let mut shift = 0;
        loop {
            let mut arrays = Vec::new();
            for &(len, blades) in blade_groups {
                let pool: Vec<Vec<Label>> =
                    enumerate_label_arrays(c, len).map(|a| a.coords).collect();
                let start = offsets.get(&len).copied().unwrap_or(0) + shift;
                for (i, edges) in blades.iter().enumerate() {
                    let seq = if pool.is_empty() {
                        vec![1; len]
                    } else {
                        pool[(start + i) % pool.len()].clone()
                    };
                    for (&e, &l) in edges.iter().zip(&seq) {
                        labels[e] = l;
                    }
                    arrays.push(seq);
                }
            }
            if r == 0 {
                root_wind = Some(arrays);
                break;
            }
            let clash = root_wind
                .as_ref()
                .is_some_and(|w| winds_isomorphic(w, &arrays));
            if !clash || shift >= pool_size {
                break;
            }
            shift += 1;
        }
        for &(len, blades) in blade_groups {
            *offsets.entry(len).or_default() += blades.len() + shift;
        }
    }

    for l in labels.iter_mut() {
        if *l == 0 {
            *l = 1;
        }
    }
    labels
}

/// Branch vertices in BFS order from `root` over simple paths and branch
/// edges.
fn branch_ranks(g: &Graph, d: &SimplePathDecomposition, root: Vertex) -> HashMap<Vertex, usize> {
    let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    let mut link = |a: Vertex, b: Vertex| {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    };
    for p in &d.paths {
        link(p.start, p.end);
    }
    for &e in &d.branch_edges {
        let edge = g.edges()[e];
        link(edge.u, edge.w);
    }
    let mut rank = HashMap::new();
    let mut queue = VecDeque::from([root]);
    rank.insert(root, 0);
    while let Some(x) = queue.pop_front() {
        let mut next = adj.get(&x).cloned().unwrap_or_default();
        next.sort_unstable();
        for y in next {
            if !rank.contains_key(&y) {
                rank.insert(y, rank.len());
                queue.push_back(y);
            }
        }
    }
    rank
}

/// Label-preserving isomorphism, fixing the center, between two windmills
/// given by their blade arrays. Checked by backtracking over vertex maps.
fn winds_isomorphic(a: &[Vec<Label>], b: &[Vec<Label>]) -> bool {
    let (ga, gb) = (LabeledWind::new(a), LabeledWind::new(b));
    if ga.n != gb.n {
        return false;
    }
    let mut map = vec![usize::MAX; ga.n];
    let mut used = vec![false; gb.n];
    map[0] = 0;
    used[0] = true;
    extend_iso(&ga, &gb, 1, &mut map, &mut used)
}

struct LabeledWind {
    n: usize,
    /// `adj[x][y]` is the label on edge `xy`, 0 when absent.
    adj: Vec<Vec<Label>>,
}

impl LabeledWind {
    fn new(arrays: &[Vec<Label>]) -> LabeledWind {
        let n = 1 + arrays.iter().map(|s| s.len() - 1).sum::<usize>();
        let mut adj = vec![vec![0; n]; n];
        let mut next = 1;
        for s in arrays {
            let mut walk = vec![0];
            walk.extend(next..next + s.len() - 1);
            walk.push(0);
            next += s.len() - 1;
            for (pair, &l) in walk.windows(2).zip(s) {
                adj[pair[0]][pair[1]] = l;
                adj[pair[1]][pair[0]] = l;
            }
        }
        LabeledWind { n, adj }
    }
}

fn extend_iso(
    a: &LabeledWind,
    b: &LabeledWind,
    x: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if x == a.n {
        return true;
    }
    for y in 1..b.n {
        if used[y] {
            continue;
        }
        let fits = (0..x).all(|z| a.adj[x][z] == b.adj[y][map[z]]);
        if !fits {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if extend_iso(a, b, x + 1, map, used) {
            return true;
        }
        used[y] = false;
    }
    map[x] = usize::MAX;
    false
}
