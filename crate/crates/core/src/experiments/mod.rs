//! Batch runs over graph families with machine-readable reports.

pub mod corpus;
mod runs;

use std::time::Instant;

use num_rational::{BigRational, Ratio};
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

pub use runs::{enumerate_complete, prime_scan, verify_known, KnownFamily, PrimeScanOptions};

use crate::cyclo::Angle;
use crate::error::Result;
use crate::graph::MixedGraph;
use crate::periodicity::{decide_periodicity, DecideOptions, PeriodicityReport, Verdict};

pub const SCHEMA_VERSION: u32 = 1;

/// Verdicts an instance may receive without counting as a counterexample.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    Periodic,
    NotPeriodic,
    NotPeriodicOrUndecided,
}

impl Expectation {
    pub fn admits(self, v: Verdict) -> bool {
        match self {
            Expectation::Periodic => v == Verdict::Periodic,
            Expectation::NotPeriodic => v == Verdict::NotPeriodic,
            Expectation::NotPeriodicOrUndecided => v != Verdict::Periodic,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub edges: usize,
    pub arcs: usize,
    pub undirected: bool,
    pub degree: Option<usize>,
    pub triangles: u64,
    pub two_n_over_k: Option<String>,
    pub sixteen_t_over_k3: Option<String>,
}

impl GraphSummary {
    pub fn of(g: &MixedGraph) -> Self {
        let k = g.is_regular();
        let t = g.triangle_count();
        GraphSummary {
            n: g.n(),
            edges: g.edge_count(),
            arcs: 2 * g.edge_count(),
            undirected: g.is_undirected(),
            degree: k,
            triangles: t,
            two_n_over_k: k.map(|k| Ratio::new(2 * g.n() as u128, k as u128).to_string()),
            sixteen_t_over_k3: k
                .filter(|_| g.is_undirected())
                .map(|k| Ratio::new(16 * t as u128, (k as u128).pow(3)).to_string()),
        }
    }
}

/// α_{2n−2} = n − 4 Σ_{uv ∈ E} 1/(deg u · deg v), independent of η.
pub fn alpha_2n_minus_2(g: &MixedGraph) -> BigRational {
    let deg = g.degrees();
    let sum = g.edges().iter().fold(BigRational::zero(), |acc, e| {
        acc + BigRational::new(1.into(), ((deg[e.u] * deg[e.v]) as i64).into())
    });
    BigRational::from_integer((g.n() as i64).into()) - sum * BigRational::from_integer(4.into())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InstanceRow {
    pub index: u64,
    pub label: String,
    pub eta: String,
    pub graph: GraphSummary,
    pub alpha_2n_minus_2: String,
    pub expected: Expectation,
    pub matches: bool,
    pub report: PeriodicityReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Aggregate {
    pub instances: usize,
    pub periodic: usize,
    pub not_periodic: usize,
    pub undecided: usize,
    pub counterexamples: Vec<u64>,
    pub summary: String,
}

impl Aggregate {
    pub fn from_rows(rows: &[InstanceRow]) -> Self {
        let count = |v| rows.iter().filter(|r| r.report.verdict == v).count();
        let (periodic, not_periodic, undecided) = (
            count(Verdict::Periodic),
            count(Verdict::NotPeriodic),
            count(Verdict::UndecidedNumeric),
        );
        let instances = rows.len();
        let summary = match (periodic, not_periodic, undecided) {
            (p, 0, 0) => format!("all {p} periodic"),
            (0, q, 0) => format!("all {q} not periodic"),
            (0, 0, u) => format!("all {u} undecided"),
            (p, q, u) => format!("{instances} instances: {p} periodic, {q} not periodic, {u} undecided"),
        };
        Aggregate {
            instances,
            periodic,
            not_periodic,
            undecided,
            counterexamples: rows.iter().filter(|r| !r.matches).map(|r| r.index).collect(),
            summary,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub schema: u32,
    pub experiment: String,
    pub parameters: serde_json::Value,
    pub rows: Vec<InstanceRow>,
    pub aggregate: Aggregate,
    pub consistent: bool,
    pub wall_time_ms: f64,
}

impl ExperimentReport {
    /// The aggregate and consistency flag agree with the rows.
    pub fn is_self_consistent(&self) -> bool {
        self.aggregate == Aggregate::from_rows(&self.rows)
            && self.consistent == self.aggregate.counterexamples.is_empty()
            && self
                .rows
                .iter()
                .all(|r| r.matches == r.expected.admits(r.report.verdict))
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &InstanceRow> {
        self.rows.iter().filter(|r| !r.matches)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// index, verdict, τ, α_{2n−2}
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["index", "verdict", "tau", "alpha_2n_minus_2"])
            .map_err(csv_error)?;
        for r in &self.rows {
            let verdict = serde_json::to_value(r.report.verdict)?;
            w.write_record([
                r.index.to_string(),
                verdict.as_str().unwrap_or_default().to_string(),
                r.report.tau.map(|t| t.to_string()).unwrap_or_default(),
                r.alpha_2n_minus_2.clone(),
            ])
            .map_err(csv_error)?;
        }
        let bytes = w.into_inner().map_err(|e| csv_error(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

fn csv_error(e: impl Into<std::io::Error>) -> crate::error::Error {
    crate::error::Error::Io(e.into())
}

/// One graph of an experiment.
pub struct Instance {
    pub index: u64,
    pub label: String,
    pub graph: MixedGraph,
    pub eta: Angle,
    pub expected: Expectation,
}

/// Decide every instance in parallel; rows come back ordered by index.
pub fn run_experiment<F>(
    experiment: &str,
    parameters: serde_json::Value,
    count: u64,
    build: F,
    opts: &DecideOptions,
) -> Result<ExperimentReport>
where
    F: Fn(u64) -> Result<Instance> + Sync,
{
    let start = Instant::now();
    let mut rows = (0..count)
        .into_par_iter()
        .map(|i| {
            let inst = build(i)?;
            let report = decide_periodicity(&inst.graph, &inst.eta, opts)?;
            Ok(InstanceRow {
                index: inst.index,
                label: inst.label,
                eta: inst.eta.to_string(),
                graph: GraphSummary::of(&inst.graph),
                alpha_2n_minus_2: alpha_2n_minus_2(&inst.graph).to_string(),
                expected: inst.expected,
                matches: inst.expected.admits(report.verdict),
                report,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| r.index);
    let aggregate = Aggregate::from_rows(&rows);
    Ok(ExperimentReport {
        schema: SCHEMA_VERSION,
        experiment: experiment.to_string(),
        parameters,
        consistent: aggregate.counterexamples.is_empty(),
        aggregate,
        rows,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}
