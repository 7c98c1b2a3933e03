//! Blade label arrays and the windmill labeling built from them.

use crate::budget::Budget;
use crate::distinguishing::{is_distinguishing_edge, EdgeLabeling, Label};
use crate::error::{Error, Result};
use crate::families::{generate, windmill_blades, FamilySpec};
use crate::formulas::windmill_dprime;
use crate::perm::automorphisms_with;

use super::{Constructed, Method};

/// The labels along one blade, read in walk order from the center. The blade
/// reflection reverses the sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelArray {
    pub coords: Vec<Label>,
}

impl LabelArray {
    pub fn new(coords: Vec<Label>) -> LabelArray {
        LabelArray { coords }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn mirror(&self) -> LabelArray {
        LabelArray {
            coords: self.coords.iter().rev().copied().collect(),
        }
    }

    pub fn is_palindrome(&self) -> bool {
        let c = &self.coords;
        (0..c.len() / 2).all(|j| c[j] == c[c.len() - 1 - j])
    }

    /// Same array up to mirroring.
    pub fn equivalent(&self, other: &LabelArray) -> bool {
        self == other || *self == other.mirror()
    }
}

/// Condition (i): no array is a palindrome. Condition (ii): no array equals
/// another one or its mirror.
pub fn arrays_valid(arrays: &[LabelArray]) -> bool {
    arrays.iter().all(|a| !a.is_palindrome())
        && arrays
            .iter()
            .enumerate()
            .all(|(i, a)| arrays[i + 1..].iter().all(|b| !a.equivalent(b)))
}

/// Streams one representative of every non-palindromic mirror class of
/// arrays of length `k` over labels `1..=r`: the arrays `s` with
/// `s < reverse(s)`, in lexicographic order.
pub fn enumerate_label_arrays(r: u32, k: usize) -> LabelArrays {
    LabelArrays {
        r,
        current: if r == 0 || k == 0 {
            None
        } else {
            Some(vec![1; k])
        },
    }
}

#[derive(Debug, Clone)]
pub struct LabelArrays {
    r: u32,
    current: Option<Vec<Label>>,
}

impl LabelArrays {
    fn advance(&mut self) {
        let Some(cur) = self.current.as_mut() else {
            return;
        };
        for slot in cur.iter_mut().rev() {
            if *slot < self.r {
                *slot += 1;
                return;
            }
            *slot = 1;
        }
        self.current = None;
    }
}

impl Iterator for LabelArrays {
    type Item = LabelArray;

    fn next(&mut self) -> Option<LabelArray> {
        loop {
            let cur = self.current.clone()?;
            self.advance();
            if cur.iter().lt(cur.iter().rev()) {
                return Some(LabelArray { coords: cur });
            }
        }
    }
}

/// An edge labeling of `D_n^k` (as produced by [`generate`]) with exactly
/// D'(D_n^k) labels: blade `b` carries the `b`-th array of
/// [`enumerate_label_arrays`].
pub fn label_windmill(n: usize, k: usize) -> Result<Constructed> {
    label_windmill_with(n, k, &Budget::default())
}

pub fn label_windmill_with(n: usize, k: usize, budget: &Budget) -> Result<Constructed> {
    let r = windmill_dprime(n as u64, k as u64)?;
    let r = Label::try_from(r)
        .map_err(|_| Error::InvalidParameter(format!("{r} labels exceed the label range")))?;
    let arrays: Vec<LabelArray> = enumerate_label_arrays(r, k).take(n).collect();
    if arrays.len() < n || !arrays_valid(&arrays) {
        return Err(Error::Defect(format!(
            "only {} valid arrays of length {k} over {r} labels for {n} blades",
            arrays.len()
        )));
    }
    let g = generate(&FamilySpec::Windmill { n, k })?;
    let mut labels = vec![0; g.size()];
    for (blade, array) in windmill_blades(n, k).iter().zip(&arrays) {
        for (e, &l) in blade.iter().zip(&array.coords) {
            labels[g.edge_index(e.u, e.w).expect("blade edge")] = l;
        }
    }
    let labeling = EdgeLabeling::new(&g, labels)?;
    if labeling.labels_used() != r as usize {
        return Err(Error::Defect(format!(
            "windmill labeling uses {} labels, expected {r}",
            labeling.labels_used()
        )));
    }
    let verified = match automorphisms_with(&g, budget) {
        Ok(group) => is_distinguishing_edge(&g, &labeling, &group),
        // Aut(D_n^k) for n ≥ 2 is generated by blade permutations and blade
        // reflections, so distinct non-palindromic arrays up to mirroring are
        // exactly the distinguishing labelings.
        Err(Error::Budget { .. }) => windmill_arrays_distinguish(n, k, &labeling, &g),
        Err(e) => return Err(e),
    };
    if !verified {
        return Err(Error::Defect(format!(
            "windmill labeling of D_{n}^{k} is not distinguishing"
        )));
    }
    Ok(Constructed {
        labeling,
        method: Method::Windmill,
    })
}

fn windmill_arrays_distinguish(
    n: usize,
    k: usize,
    labeling: &EdgeLabeling,
    g: &crate::graph::Graph,
) -> bool {
    let arrays: Vec<LabelArray> = windmill_blades(n, k)
        .iter()
        .map(|blade| {
            LabelArray::new(
                blade
                    .iter()
                    .map(|&e| labeling.label_of(g, e).expect("blade edge"))
                    .collect(),
            )
        })
        .collect();
    arrays_valid(&arrays)
}
