//! Vertex permutations and fully enumerated automorphism groups.

use std::fmt;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};

/// A bijection on `0..n`, stored as its image vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    image: Vec<Vertex>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.image)
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Validates that `image` is a bijection on `0..image.len()`.
    pub fn from_image(image: Vec<Vertex>) -> Result<Permutation> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &x in &image {
            if x >= n || seen[x] {
                return Err(Error::InvalidParameter(format!(
                    "{image:?} is not a permutation of 0..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[Vertex] {
        &self.image
    }

    pub fn apply(&self, x: Vertex) -> Vertex {
        self.image[x]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            image: other.image.iter().map(|&x| self.image[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.len()];
        for (i, &x) in self.image.iter().enumerate() {
            image[x] = i;
        }
        Permutation { image }
    }
}

/// Normalized image `{p(u), p(w)}` of an edge.
pub fn edge_action(p: &Permutation, e: Edge) -> Edge {
    Edge::new(p.apply(e.u), p.apply(e.w))
}

pub fn is_automorphism(g: &Graph, p: &Permutation) -> Result<bool> {
    if p.len() != g.order() {
        return Err(Error::LengthMismatch {
            expected: g.order(),
            got: p.len(),
        });
    }
    // p is injective and |E| is finite, so mapping E into E is enough.
    Ok(g.edges()
        .iter()
        .all(|e| g.has_edge(p.apply(e.u), p.apply(e.w))))
}

/// Aut(G), every element listed. Elements are sorted, so the identity is first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutGroup {
    elements: Vec<Permutation>,
}

impl AutGroup {
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn non_identity(&self) -> impl Iterator<Item = &Permutation> {
        self.elements.iter().filter(|p| !p.is_identity())
    }

    /// Each non-identity element as a permutation of edge indices, in the
    /// graph's canonical edge order.
    pub fn edge_permutations(&self, g: &Graph) -> Vec<Vec<usize>> {
        self.non_identity()
            .map(|p| {
                g.edges()
                    .iter()
                    .map(|&e| {
                        let img = edge_action(p, e);
                        g.edge_index(img.u, img.w)
                            .expect("automorphism maps edges to edges")
                    })
                    .collect()
            })
            .collect()
    }
}

/// Enumerates Aut(G) with the default budget.
pub fn automorphisms(g: &Graph) -> Result<AutGroup> {
    automorphisms_with(g, &Budget::default())
}

/// Backtracking over vertex images in a connectivity-greedy order.
/// Candidate images must share the vertex's refinement class (degree and
/// sorted neighbour-degree multiset) and agree on adjacency with every vertex
/// already placed, so every completed assignment is an automorphism.
pub fn automorphisms_with(g: &Graph, budget: &Budget) -> Result<AutGroup> {
    let n = g.order();
    if n == 0 {
        return Ok(AutGroup {
            elements: vec![Permutation::identity(0)],
        });
    }
    let class = initial_classes(g);
    let order = search_order(g);
    let mut search = Search {
        g,
        class: &class,
        order: &order,
        image: vec![usize::MAX; n],
        used: vec![false; n],
        found: Vec::new(),
        cap: budget.group_order,
    };
    search.descend(0)?;
    let mut elements = search.found;
    elements.sort();
    Ok(AutGroup { elements })
}

fn initial_classes(g: &Graph) -> Vec<usize> {
    let keys: Vec<(usize, Vec<usize>)> = (0..g.order())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    let mut distinct: Vec<&(usize, Vec<usize>)> = keys.iter().collect();
    distinct.sort();
    distinct.dedup();
    keys.iter()
        .map(|k| distinct.binary_search(&k).unwrap())
        .collect()
}

/// Greedy placement order: next is the vertex with the most placed
/// neighbours, ties going to the one adjacent to the latest placed vertex and
/// then to higher degree. New components start at a maximum-degree vertex.
fn search_order(g: &Graph) -> Vec<Vertex> {
    let n = g.order();
    let mut placed_at = vec![usize::MAX; n];
    let mut placed_nbrs = vec![0usize; n];
    let mut latest_nbr = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed_at[v] == usize::MAX)
            .max_by_key(|&v| {
                (
                    placed_nbrs[v],
                    latest_nbr[v],
                    g.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        placed_at[next] = order.len();
        order.push(next);
        for &y in g.neighbors(next) {
            placed_nbrs[y] += 1;
            latest_nbr[y] = order.len();
        }
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    class: &'a [usize],
    order: &'a [Vertex],
    image: Vec<Vertex>,
    used: Vec<bool>,
    found: Vec<Permutation>,
    cap: u64,
}

impl Search<'_> {
    fn descend(&mut self, depth: usize) -> Result<()> {
        let n = self.g.order();
        if depth == n {
            if self.found.len() as u64 >= self.cap {
                return Err(Error::Budget {
                    what: "automorphism group order",
                    limit: self.cap,
                    lower_bound: self.found.len() as u64 + 1,
                });
            }
            self.found.push(Permutation {
                image: self.image.clone(),
            });
            return Ok(());
        }
        let x = self.order[depth];
        for y in 0..n {
            if self.used[y] || self.class[y] != self.class[x] {
                continue;
            }
            let consistent = self.order[..depth]
                .iter()
                .all(|&z| self.g.has_edge(x, z) == self.g.has_edge(y, self.image[z]));
            if !consistent {
                continue;
            }
            self.image[x] = y;
            self.used[y] = true;
            self.descend(depth + 1)?;
            self.used[y] = false;
        }
        self.image[x] = usize::MAX;
        Ok(())
    }
}
