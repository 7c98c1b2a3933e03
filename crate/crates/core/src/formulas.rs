//! Closed-form values and the catalog of upper bounds on D'.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::distinguishing::{default_index_cap, EdgeSearch};
use crate::error::{Error, Result};
use crate::families::{generate, FamilySpec};
use crate::graph::{ceil_root, ceil_sqrt, Graph};

/// `(r^len - r^⌈len/2⌉) / 2`: blade label arrays of length `len` over `r`
/// labels that are not palindromes, counted up to reversal. `None` on
/// overflow, which callers treat as "more than enough".
pub fn array_classes(r: u64, len: u32) -> Option<u64> {
    let all = r.checked_pow(len)?;
    let palindromes = r.checked_pow(len.div_ceil(2))?;
    Some((all - palindromes) / 2)
}

fn least_r(n: u64, len: u32) -> u64 {
    // The count is at least 1 from r = 2 whenever len ≥ 2, and grows at least
    // linearly in r, so r ≤ n + 2 always terminates the scan.
    let mut r = 2;
    while r <= n.saturating_add(2) {
        match array_classes(r, len) {
            Some(c) if c < n => r += 1,
            _ => return r,
        }
    }
    unreachable!("array count exceeds n by r = n + 2")
}

fn check_windmill(n: u64, k: u64) -> Result<()> {
    if n < 2 || k < 3 {
        return Err(Error::InvalidParameter(format!(
            "windmill formulas need n ≥ 2 and k ≥ 3, got n = {n}, k = {k}"
        )));
    }
    if k > u32::MAX as u64 {
        return Err(Error::InvalidParameter(format!(
            "blade length {k} too large"
        )));
    }
    Ok(())
}

/// D(D_n^k) = min{r : (r^(k-1) - r^⌈(k-1)/2⌉)/2 ≥ n}.
pub fn windmill_d(n: u64, k: u64) -> Result<u64> {
    check_windmill(n, k)?;
    Ok(least_r(n, (k - 1) as u32))
}

/// D'(D_n^k) = min{r : (r^k - r^⌈k/2⌉)/2 ≥ n}.
pub fn windmill_dprime(n: u64, k: u64) -> Result<u64> {
    check_windmill(n, k)?;
    Ok(least_r(n, k as u32))
}

/// Smallest `t` with `base^t ≥ x`, i.e. ⌈log_base x⌉ for `x ≥ 1`.
pub fn ceil_log(base: u64, x: u64) -> u32 {
    assert!(base >= 2);
    let mut t = 0;
    let mut power = 1u64;
    while power < x {
        power = power.saturating_mul(base);
        t += 1;
    }
    t
}

/// `p`, `q` and the base `d ≥ 2` with `(d-1)^p < q ≤ d^p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KpqParams {
    pub p: u64,
    pub q: u64,
    pub d: u64,
}

impl KpqParams {
    pub fn new(p: u64, q: u64) -> Result<KpqParams> {
        if p < 1 || q < 2 || p > q {
            return Err(Error::InvalidParameter(format!(
                "K_(p,q) needs 1 ≤ p ≤ q and q ≥ 2, got p = {p}, q = {q}"
            )));
        }
        let p32 = u32::try_from(p).map_err(|_| Error::InvalidParameter("p too large".into()))?;
        let d = ceil_root(q, p32).max(2);
        Ok(KpqParams { p, q, d })
    }

    /// `d^p - ⌈log_d p⌉`, the single value of `q` the closed form leaves open.
    pub fn boundary_q(&self) -> u64 {
        let dp = self.d.checked_pow(self.p as u32).unwrap_or(u64::MAX);
        dp - ceil_log(self.d, self.p) as u64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum KpqMethod {
    /// Off the boundary: read off the closed form.
    Formula,
    /// Stars: every pendant edge needs its own label.
    Star,
    /// Resolved by exhaustive search.
    ExactSearch,
    /// Beyond the search budget, by edge count or group order.
    Unresolved,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KpqValue {
    pub params: KpqParams,
    /// `None` only with [`KpqMethod::Unresolved`].
    pub value: Option<u64>,
    pub boundary: bool,
    pub method: KpqMethod,
}

/// Largest `K_{p,q}` (by edge count) that the boundary resolution will search.
pub const KPQ_SEARCH_EDGES: u64 = 36;

/// D'(K_{p,q}) for `p ≤ q`.
///
/// Off the boundary `q = d^p - ⌈log_d p⌉` the value is `d` below it and
/// `d + 1` above it. Boundary instances and the side-swapping case `p = q`
/// (for which the closed form undercounts at `p = 2, 3`) are settled by
/// exhaustive search when `pq` is within [`KPQ_SEARCH_EDGES`] and the group
/// fits the budget, otherwise the value is left unresolved. Stars `K_{1,q}`
/// always need `q` labels.
pub fn kpq_dprime(p: u64, q: u64) -> Result<KpqValue> {
    kpq_dprime_with(p, q, &Budget::default())
}

pub fn kpq_dprime_with(p: u64, q: u64, budget: &Budget) -> Result<KpqValue> {
    let params = KpqParams::new(p, q)?;
    let d = params.d;
    let boundary_q = params.boundary_q();
    let boundary = q == boundary_q;
    let mut result = KpqValue {
        params,
        value: None,
        boundary,
        method: KpqMethod::Formula,
    };
    if p == 1 {
        result.value = Some(q);
        result.method = KpqMethod::Star;
        return Ok(result);
    }
    if !boundary && p != q {
        result.value = Some(if q < boundary_q { d } else { d + 1 });
        return Ok(result);
    }
    if p * q > KPQ_SEARCH_EDGES {
        // Large symmetric instances fall back to the closed form.
        if p == q {
            result.value = Some(if q < boundary_q { d } else { d + 1 });
        } else {
            result.method = KpqMethod::Unresolved;
        }
        return Ok(result);
    }
    let g = generate(&FamilySpec::CompleteBipartite {
        p: p as usize,
        q: q as usize,
    })?;
    let found = match EdgeSearch::new(&g, budget).and_then(|s| s.index(default_index_cap(&g))) {
        Ok(found) => found,
        Err(Error::Budget { .. }) => {
            result.method = KpqMethod::Unresolved;
            return Ok(result);
        }
        Err(e) => return Err(e),
    };
    let value = found.value as u64;
    if value != d && value != d + 1 {
        return Err(Error::Defect(format!(
            "D'(K_({p},{q})) = {value} is outside {{{d}, {}}}",
            d + 1
        )));
    }
    result.value = Some(value);
    result.method = KpqMethod::ExactSearch;
    Ok(result)
}

/// Catalogued D' for a generated family, when known without search.
pub fn known_dprime(spec: &FamilySpec) -> Option<u64> {
    match *spec {
        FamilySpec::Path { n } if n >= 3 => Some(2),
        FamilySpec::Cycle { n } if (3..=5).contains(&n) => Some(3),
        FamilySpec::Cycle { n } if n >= 6 => Some(2),
        FamilySpec::Complete { n } if (3..=5).contains(&n) => Some(3),
        FamilySpec::Complete { n } if n >= 6 => Some(2),
        FamilySpec::Windmill { n, k } => windmill_dprime(n as u64, k as u64).ok(),
        FamilySpec::CompleteBipartite { p, q } => {
            let (p, q) = (p.min(q) as u64, p.max(q) as u64);
            kpq_dprime(p, q).ok().and_then(|v| v.value)
        }
        _ => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    /// D' ≤ Δ - 1 for connected non-trees with Δ ≥ 3, except K_4 and K_{3,3}.
    DeltaMinusOne,
    /// D' ≤ ⌈√Δ⌉ + 1 for connected graphs with δ ≥ 2.
    SqrtPlusOne,
    /// D' ≤ ⌈√Δ⌉ for connected 2-minimally graphs other than C_3, C_4, C_5
    /// and K_{2,r²}.
    Sqrt,
    /// D' ≤ 2 for graphs of order at least 7 with a Hamiltonian path.
    HamiltonianTwo,
    /// D'(K_{p,q}) ≤ ⌈q^(1/p)⌉ + 1.
    KpqCorollary,
}

impl BoundKind {
    pub const ALL: [BoundKind; 5] = [
        BoundKind::DeltaMinusOne,
        BoundKind::SqrtPlusOne,
        BoundKind::Sqrt,
        BoundKind::HamiltonianTwo,
        BoundKind::KpqCorollary,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            BoundKind::DeltaMinusOne => "delta-minus-one",
            BoundKind::SqrtPlusOne => "sqrt-plus-one",
            BoundKind::Sqrt => "sqrt",
            BoundKind::HamiltonianTwo => "hamiltonian-two",
            BoundKind::KpqCorollary => "kpq-corollary",
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for BoundKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<BoundKind> {
        BoundKind::ALL
            .into_iter()
            .find(|k| k.tag() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown bound kind '{s}'")))
    }
}

/// `K_{2,r²}` for some `r`.
pub fn is_k2_square(g: &Graph) -> bool {
    match g.complete_bipartite_sides() {
        Some((2, q)) => ceil_sqrt(q as u64).pow(2) == q as u64,
        _ => false,
    }
}

fn is_k4_or_k33(g: &Graph) -> bool {
    let k4 = g.order() == 4 && g.is_complete();
    let k33 = g.complete_bipartite_sides() == Some((3, 3));
    k4 || k33
}

pub fn upper_bound(g: &Graph, kind: BoundKind) -> Option<u64> {
    upper_bound_with(g, kind, &Budget::default())
}

/// The bound `kind` gives for `g`, or `None` when `g` does not meet the
/// hypotheses of that bound (or they could not be established in budget).
pub fn upper_bound_with(g: &Graph, kind: BoundKind, budget: &Budget) -> Option<u64> {
    if g.order() < 3 || !g.is_connected() {
        return None;
    }
    let max_deg = g.max_degree() as u64;
    match kind {
        BoundKind::DeltaMinusOne => {
            (max_deg >= 3 && !g.is_tree() && !is_k4_or_k33(g)).then(|| max_deg - 1)
        }
        BoundKind::SqrtPlusOne => (g.min_degree() >= 2).then(|| ceil_sqrt(max_deg) + 1),
        BoundKind::Sqrt => {
            let two_minimally = g.min_degree() == 2 && g.is_delta_minimally().unwrap_or(false);
            let excluded = (g.is_cycle() && g.order() <= 5) || is_k2_square(g);
            (two_minimally && !excluded).then(|| ceil_sqrt(max_deg))
        }
        BoundKind::HamiltonianTwo => {
            (g.order() >= 7 && g.has_hamiltonian_path(budget).unwrap_or(false)).then_some(2)
        }
        BoundKind::KpqCorollary => {
            let (p, q) = g.complete_bipartite_sides()?;
            Some(ceil_root(q as u64, p as u32) + 1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct transcription of the defining inequality, scanning r from 1.
    fn scan(n: u64, len: u32) -> u64 {
        (1u64..)
            .find(|&r| {
                let all = r.pow(len) as i128;
                let pal = r.pow(len.div_ceil(2)) as i128;
                (all - pal) / 2 >= n as i128
            })
            .unwrap()
    }

    #[test]
    fn windmill_values() {
        assert_eq!(windmill_d(2, 3).unwrap(), 3);
        assert_eq!(windmill_d(3, 5).unwrap(), 2);
        assert_eq!(windmill_d(100, 3).unwrap(), 15);
        assert_eq!(windmill_dprime(2, 3).unwrap(), 2);
        assert_eq!(windmill_dprime(4, 3).unwrap(), 3);
        assert_eq!(windmill_dprime(10, 4).unwrap(), 3);
        assert_eq!(windmill_dprime(3, 3).unwrap(), 3);
        assert_eq!(windmill_dprime(5, 3).unwrap(), 3);
        assert!(windmill_d(1, 3).is_err());
        assert!(windmill_dprime(2, 2).is_err());
    }

    #[test]
    fn windmill_matches_scan() {
        for n in 2..200 {
            for k in 3..9 {
                assert_eq!(
                    windmill_d(n, k).unwrap(),
                    scan(n, k as u32 - 1),
                    "D({n},{k})"
                );
                assert_eq!(
                    windmill_dprime(n, k).unwrap(),
                    scan(n, k as u32),
                    "D'({n},{k})"
                );
            }
        }
    }

    #[test]
    fn windmill_huge_n_does_not_overflow() {
        let n = u64::MAX / 4;
        let r = windmill_dprime(n, 3).unwrap();
        assert!(array_classes(r, 3).is_none_or(|c| c >= n));
        assert!(array_classes(r - 1, 3).unwrap() < n);
        assert_eq!(windmill_d(1 << 40, 60).unwrap(), 2);
    }

    #[test]
    fn logarithms() {
        assert_eq!(ceil_log(2, 1), 0);
        assert_eq!(ceil_log(2, 2), 1);
        assert_eq!(ceil_log(2, 3), 2);
        assert_eq!(ceil_log(3, 9), 2);
        assert_eq!(ceil_log(3, 10), 3);
    }

    #[test]
    fn kpq_values() {
        let v = kpq_dprime(2, 4).unwrap();
        assert_eq!(
            (v.value, v.boundary, v.method),
            (Some(3), false, KpqMethod::Formula)
        );
        assert_eq!(kpq_dprime(2, 5).unwrap().value, Some(3));
        assert_eq!(kpq_dprime(2, 5).unwrap().params.d, 3);
        let v = kpq_dprime(3, 3).unwrap();
        assert_eq!((v.value, v.method), (Some(3), KpqMethod::ExactSearch));
        let v = kpq_dprime(2, 3).unwrap();
        assert!(v.boundary);
        assert_eq!(v.value, Some(2));
        assert_eq!(kpq_dprime(1, 5).unwrap().value, Some(5));
        assert!(kpq_dprime(3, 2).is_err());
        assert!(kpq_dprime(1, 1).is_err());
    }

    #[test]
    fn kpq_unresolved_beyond_budget() {
        // p = 3, d = 3: boundary at q = 27 - ⌈log_3 3⌉ = 26, far beyond search scale.
        let p = 3;
        let d = 3u64;
        let q = d.pow(p as u32) - ceil_log(d, p) as u64;
        let v = kpq_dprime(p, q).unwrap();
        assert!(v.boundary);
        assert_eq!((v.value, v.method), (None, KpqMethod::Unresolved));
    }

    #[test]
    fn catalog() {
        assert_eq!(known_dprime(&FamilySpec::Path { n: 9 }), Some(2));
        assert_eq!(known_dprime(&FamilySpec::Complete { n: 6 }), Some(2));
        assert_eq!(known_dprime(&FamilySpec::Cycle { n: 4 }), Some(3));
        assert_eq!(known_dprime(&FamilySpec::Path { n: 2 }), None);
        assert_eq!(known_dprime(&FamilySpec::Windmill { n: 2, k: 3 }), Some(2));
        assert_eq!(
            known_dprime(&FamilySpec::CompleteBipartite { p: 4, q: 2 }),
            Some(3)
        );
    }

    #[test]
    fn bounds() {
        let c5 = generate(&FamilySpec::Cycle { n: 5 }).unwrap();
        assert_eq!(upper_bound(&c5, BoundKind::Sqrt), None);
        assert_eq!(upper_bound(&c5, BoundKind::SqrtPlusOne), Some(3));

        let k24 = generate(&FamilySpec::CompleteBipartite { p: 2, q: 4 }).unwrap();
        assert_eq!(upper_bound(&k24, BoundKind::KpqCorollary), Some(3));
        assert_eq!(upper_bound(&k24, BoundKind::Sqrt), None);

        let d33 = generate(&FamilySpec::Windmill { n: 3, k: 3 }).unwrap();
        assert_eq!(d33.max_degree(), 6);
        assert_eq!(upper_bound(&d33, BoundKind::SqrtPlusOne), Some(4));
        assert_eq!(upper_bound(&d33, BoundKind::Sqrt), Some(3));
        assert_eq!(upper_bound(&d33, BoundKind::HamiltonianTwo), None);

        let k4 = generate(&FamilySpec::Complete { n: 4 }).unwrap();
        assert_eq!(upper_bound(&k4, BoundKind::DeltaMinusOne), None);
        let k5 = generate(&FamilySpec::Complete { n: 5 }).unwrap();
        assert_eq!(upper_bound(&k5, BoundKind::DeltaMinusOne), Some(3));
        let p7 = generate(&FamilySpec::Path { n: 7 }).unwrap();
        assert_eq!(upper_bound(&p7, BoundKind::HamiltonianTwo), Some(2));
        assert_eq!(upper_bound(&p7, BoundKind::DeltaMinusOne), None);
        assert_eq!(upper_bound(&p7, BoundKind::KpqCorollary), None);
    }

    #[test]
    fn bound_tags_round_trip() {
        for kind in BoundKind::ALL {
            assert_eq!(kind.tag().parse::<BoundKind>().unwrap(), kind);
            assert_eq!(
                serde_json::to_string(&kind).unwrap(),
                format!("\"{}\"", kind.tag())
            );
        }
    }
}
