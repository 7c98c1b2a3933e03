//! Certification of D' upper bounds over graph populations.
//!
//! Each graph is checked on its own (exact D' against the bound), so batches
//! run in parallel; reports come back in input order and, apart from the
//! timing field, are identical from run to run.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::distinguishing::{default_index_cap, EdgeSearch, LabelingRecord};
use crate::error::{Error, Result};
use crate::families::{enumerate_connected_with, EnumerateOptions};
use crate::formulas::{upper_bound_with, BoundKind};
use crate::graph::{ceil_root, Graph};
use crate::graph6::to_graph6;

/// A bound to certify: one of the proved bounds, or a part of the open
/// conjecture for δ ≥ 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SurveyBound {
    Proved(BoundKind),
    /// D' ≤ ⌈Δ^(1/δ)⌉ + 1 for connected graphs with δ ≥ 3.
    ConjecturePlusOne,
    /// D' ≤ ⌈Δ^(1/δ)⌉ for δ-minimally graphs with δ ≥ 3 that are neither
    /// regular nor complete bipartite.
    ConjectureMinimally,
}

impl SurveyBound {
    pub fn tag(&self) -> &'static str {
        match self {
            SurveyBound::Proved(kind) => kind.tag(),
            SurveyBound::ConjecturePlusOne => "conjecture-plus-one",
            SurveyBound::ConjectureMinimally => "conjecture-minimally",
        }
    }

    /// The bound for `g`, or `None` when `g` is outside its hypotheses.
    pub fn bound(&self, g: &Graph, budget: &Budget) -> Option<u64> {
        match self {
            SurveyBound::Proved(kind) => upper_bound_with(g, *kind, budget),
            SurveyBound::ConjecturePlusOne => conjecture_root(g).map(|t| t + 1),
            SurveyBound::ConjectureMinimally => {
                let t = conjecture_root(g)?;
                let minimally = g.is_delta_minimally().unwrap_or(false);
                let excluded = g.is_regular() || g.complete_bipartite_sides().is_some();
                (minimally && !excluded).then_some(t)
            }
        }
    }
}

/// `⌈Δ^(1/δ)⌉` for connected graphs with δ ≥ 3, by exact integer search.
fn conjecture_root(g: &Graph) -> Option<u64> {
    let delta = g.min_degree();
    if g.order() < 3 || delta < 3 || !g.is_connected() {
        return None;
    }
    Some(ceil_root(g.max_degree() as u64, delta as u32))
}

impl fmt::Display for SurveyBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for SurveyBound {
    type Err = Error;

    fn from_str(s: &str) -> Result<SurveyBound> {
        match s {
            "conjecture-plus-one" => Ok(SurveyBound::ConjecturePlusOne),
            "conjecture-minimally" => Ok(SurveyBound::ConjectureMinimally),
            _ => s.parse().map(SurveyBound::Proved),
        }
    }
}

/// One certified graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    #[serde(rename = "Delta")]
    pub max_degree: usize,
    /// Present only when the exact search completed.
    pub d_prime: Option<u32>,
    pub bound: u64,
    pub bound_kind: String,
    /// `d_prime ≤ bound`; false when `d_prime` is unknown.
    pub holds: bool,
    pub elapsed_ms: f64,
    pub witness: Option<LabelingRecord>,
    pub error: Option<String>,
}

impl Report {
    pub fn is_violation(&self) -> bool {
        self.d_prime.is_some() && !self.holds
    }

    /// The report with its timing zeroed, for run-to-run comparison.
    pub fn without_timing(&self) -> Report {
        Report {
            elapsed_ms: 0.0,
            ..self.clone()
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub held: usize,
    pub violated: usize,
    pub filtered: usize,
    pub budget_errors: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SurveyOutcome {
    pub bound: SurveyBound,
    pub reports: Vec<Report>,
    /// graph6 of every input outside the bound's hypotheses.
    pub filtered: Vec<String>,
    pub summary: Summary,
    /// Set when `fail_fast` cut the run short.
    pub stopped_early: bool,
}

impl SurveyOutcome {
    pub fn violations(&self) -> impl Iterator<Item = &Report> {
        self.reports.iter().filter(|r| r.is_violation())
    }
}

#[derive(Debug, Clone, Default)]
pub struct SurveyOptions {
    /// Worker threads; 0 lets the pool choose.
    pub jobs: usize,
    /// Stop after the batch containing the first violation.
    pub fail_fast: bool,
    pub budget: Budget,
}

/// Exact D' and the bound for one graph already known to meet the
/// hypotheses.
pub fn certify_one(g: &Graph, bound: u64, kind: SurveyBound, budget: &Budget) -> Report {
    let start = Instant::now();
    let outcome = EdgeSearch::new(g, budget).and_then(|s| s.index(default_index_cap(g)));
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let (d_prime, witness, error) = match outcome {
        Ok(found) => (
            Some(found.value),
            Some(found.witness.to_record(g, "exact")),
            None,
        ),
        Err(e) => (None, None, Some(e.to_string())),
    };
    Report {
        graph: to_graph6(g),
        n: g.order(),
        m: g.size(),
        delta: g.min_degree(),
        max_degree: g.max_degree(),
        d_prime,
        bound,
        bound_kind: kind.tag().to_string(),
        holds: d_prime.is_some_and(|d| d as u64 <= bound),
        elapsed_ms,
        witness,
        error,
    }
}

/// Certifies `bound` on every graph meeting its hypotheses. Graphs outside
/// them are listed in `filtered`. Per-graph failures (budget exhaustion)
/// land in the report and never abort the run.
pub fn certify_bound(
    graphs: &[Graph],
    bound: SurveyBound,
    options: &SurveyOptions,
) -> Result<SurveyOutcome> {
    certify_by(graphs, bound, |g| bound.bound(g, &options.budget), options)
}

fn certify_by<F>(
    graphs: &[Graph],
    bound: SurveyBound,
    bound_of: F,
    options: &SurveyOptions,
) -> Result<SurveyOutcome>
where
    F: Fn(&Graph) -> Option<u64> + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    let budget = &options.budget;
    let (eligible, filtered): (Vec<_>, Vec<_>) = pool.install(|| {
        graphs
            .par_iter()
            .map(|g| (g, bound_of(g)))
            .collect::<Vec<_>>()
            .into_iter()
            .partition(|(_, b)| b.is_some())
    });
    let filtered: Vec<String> = filtered.into_iter().map(|(g, _)| to_graph6(g)).collect();
    let batch = if options.fail_fast {
        pool.current_num_threads().max(1) * 4
    } else {
        eligible.len().max(1)
    };
    let mut reports = Vec::with_capacity(eligible.len());
    let mut stopped_early = false;
    for chunk in eligible.chunks(batch) {
        let done: Vec<Report> = pool.install(|| {
            chunk
                .par_iter()
                .map(|&(g, b)| certify_one(g, b.unwrap(), bound, budget))
                .collect()
        });
        reports.extend(done);
        if options.fail_fast {
            if let Some(first) = reports.iter().position(Report::is_violation) {
                stopped_early = first + 1 < eligible.len();
                reports.truncate(first + 1);
                break;
            }
        }
    }
    let summary = Summary {
        total: reports.len(),
        held: reports.iter().filter(|r| r.holds).count(),
        violated: reports.iter().filter(|r| r.is_violation()).count(),
        filtered: filtered.len(),
        budget_errors: reports.iter().filter(|r| r.error.is_some()).count(),
    };
    Ok(SurveyOutcome {
        bound,
        reports,
        filtered,
        summary,
        stopped_early,
    })
}

/// Every connected graph on `1..=n_max` vertices with minimum degree at
/// least `min_degree`, optionally one per isomorphism class.
pub fn population(
    n_max: usize,
    min_degree: usize,
    dedup: bool,
    budget: &Budget,
) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(enumerate_connected_with(
            n,
            min_degree,
            EnumerateOptions { dedup },
            budget,
        )?);
    }
    Ok(out)
}

/// Both parts of the δ ≥ 3 conjecture over all connected graphs (one per
/// isomorphism class) of order at most `n_max` with δ ≥ `delta_min`. The
/// scan can only falsify: a violation is a candidate counterexample with
/// its full witness.
pub fn conjecture_scan(
    n_max: usize,
    delta_min: usize,
    options: &SurveyOptions,
) -> Result<[SurveyOutcome; 2]> {
    let graphs = population(n_max, delta_min.max(3), true, &options.budget)?;
    Ok([
        certify_bound(&graphs, SurveyBound::ConjecturePlusOne, options)?,
        certify_bound(&graphs, SurveyBound::ConjectureMinimally, options)?,
    ])
}

/// One JSON object per line.
pub fn write_jsonl<W: Write + ?Sized>(reports: &[Report], out: &mut W) -> io::Result<()> {
    for r in reports {
        serde_json::to_writer(&mut *out, r)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}
