//! Verification campaigns over enumerated trees and the JSON records they
//! emit.
//!
//! Every record is wrapped in an [`Envelope`] carrying [`SCHEMA_VERSION`] and
//! a `kind` tag; see `docs/json-schema.md` for the field reference.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::domination::{gamma_brute, i_brute, ratio_report, RatioReport};
use crate::enumeration::{enumerate_shard, Shard, MAX_ORDER};
use crate::error::{Error, Result};
use crate::graph::{is_balanced_double_star, line_graph, Graph};
use crate::graph6::encode_graph6;
use crate::proof::{run_construction, BoundCertificate};

pub const SCHEMA_VERSION: u32 = 1;
pub const LINE_GRAPH_MAX_ORDER: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphReport {
    pub graph6: String,
    pub report: RatioReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqualityCase {
    pub graph6: String,
    pub report: RatioReport,
    pub balanced_double_star: bool,
    /// The constructive certificate passed every check and attained equality.
    pub construction_equality: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionFailure {
    pub graph6: String,
    pub failed_checks: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n_range: (usize, usize),
    pub trees_checked: u64,
    /// Trees with i/γ above the bound.
    pub violations: Vec<GraphReport>,
    /// Trees with Δ >= 3 and i/γ = Δ/2.
    pub equality_cases: Vec<EqualityCase>,
    pub constructions_run: u64,
    pub construction_failures: Vec<ConstructionFailure>,
    pub runtime_ms: u64,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.construction_failures.is_empty()
    }

    /// Equal up to wall-clock time.
    pub fn same_results(&self, other: &Self) -> bool {
        Self {
            runtime_ms: 0,
            ..self.clone()
        } == Self {
            runtime_ms: 0,
            ..other.clone()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineGraphReport {
    pub n_range: (usize, usize),
    pub trees_checked: u64,
    pub all_ratios_one: bool,
    pub counterexamples: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub n_min: usize,
    pub n_max: usize,
    pub shard: Shard,
    /// Also run and certify the constructive bound on every tree.
    pub construct_all: bool,
}

impl VerifyOptions {
    pub fn up_to(n_max: usize) -> Self {
        Self {
            n_min: 1,
            n_max,
            shard: Shard::WHOLE,
            construct_all: false,
        }
    }
}

enum Outcome {
    Violation(GraphReport),
    Equality(EqualityCase),
    ConstructionFailure(ConstructionFailure),
}

fn check_tree(g: &Graph, construct_all: bool) -> Result<Vec<Outcome>> {
    let report = ratio_report(g)?;
    let mut out = Vec::new();
    let graph6 = || encode_graph6(g);
    let mut certificate: Option<BoundCertificate> = None;
    if construct_all {
        let cert = run_construction(g)?;
        if !cert.passed() {
            out.push(Outcome::ConstructionFailure(ConstructionFailure {
                graph6: graph6()?,
                failed_checks: cert.failed_checks().map(|c| c.name.clone()).collect(),
            }));
        }
        certificate = Some(cert);
    }
    if !report.meets_bound {
        out.push(Outcome::Violation(GraphReport {
            graph6: graph6()?,
            report: report.clone(),
        }));
    }
    if report.max_degree >= 3 && report.equality {
        let cert = match certificate {
            Some(c) => c,
            None => run_construction(g)?,
        };
        out.push(Outcome::Equality(EqualityCase {
            graph6: graph6()?,
            balanced_double_star: is_balanced_double_star(g),
            construction_equality: cert.passed() && cert.equality,
            report,
        }));
    }
    Ok(out)
}

/// Checks i/γ against the bound on every tree of order `n_min..=n_max` in
/// the selected shard. Results are sorted by graph6 bytes, so any shard
/// partition merges to the single-shard report.
pub fn verify(opts: VerifyOptions) -> Result<VerificationReport> {
    if opts.n_min == 0 || opts.n_min > opts.n_max || opts.n_max > MAX_ORDER {
        return Err(Error::Domain(format!(
            "order range {}..={} must lie within 1..={MAX_ORDER}",
            opts.n_min, opts.n_max
        )));
    }
    let started = Instant::now();
    let mut report = VerificationReport {
        n_range: (opts.n_min, opts.n_max),
        trees_checked: 0,
        violations: Vec::new(),
        equality_cases: Vec::new(),
        constructions_run: 0,
        construction_failures: Vec::new(),
        runtime_ms: 0,
    };
    for n in opts.n_min..=opts.n_max {
        let results: Vec<Result<Vec<Outcome>>> = enumerate_shard(n, opts.shard)?
            .par_bridge()
            .map(|(_, g)| check_tree(&g, opts.construct_all))
            .collect();
        report.trees_checked += results.len() as u64;
        if opts.construct_all {
            report.constructions_run += results.len() as u64;
        }
        for outcomes in results {
            for outcome in outcomes? {
                match outcome {
                    Outcome::Violation(v) => report.violations.push(v),
                    Outcome::Equality(e) => report.equality_cases.push(e),
                    Outcome::ConstructionFailure(f) => report.construction_failures.push(f),
                }
            }
        }
    }
    sort_report(&mut report);
    report.runtime_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

fn sort_report(r: &mut VerificationReport) {
    r.violations.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    r.equality_cases.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    r.construction_failures
        .sort_by(|a, b| a.graph6.cmp(&b.graph6));
}

/// Merges shard reports over the same order range. Runtime is summed.
pub fn merge_reports(parts: Vec<VerificationReport>) -> Result<VerificationReport> {
    let mut iter = parts.into_iter();
    let mut merged = iter
        .next()
        .ok_or_else(|| Error::Domain("no reports to merge".into()))?;
    for part in iter {
        if part.n_range != merged.n_range {
            return Err(Error::Domain(format!(
                "cannot merge order ranges {:?} and {:?}",
                merged.n_range, part.n_range
            )));
        }
        merged.trees_checked += part.trees_checked;
        merged.constructions_run += part.constructions_run;
        merged.runtime_ms += part.runtime_ms;
        merged.violations.extend(part.violations);
        merged.equality_cases.extend(part.equality_cases);
        merged
            .construction_failures
            .extend(part.construction_failures);
    }
    sort_report(&mut merged);
    Ok(merged)
}

/// γ(L(T)) and i(L(T)) by the subset oracle.
pub fn line_graph_parameters(t: &Graph) -> Result<(usize, usize)> {
    let (lg, _) = line_graph(t)?;
    Ok((gamma_brute(&lg)?.0, i_brute(&lg)?.0))
}

/// Checks i(L(T)) = γ(L(T)) for every tree of order `2..=n_max`.
pub fn linegraph_check(n_max: usize) -> Result<LineGraphReport> {
    if !(2..=LINE_GRAPH_MAX_ORDER).contains(&n_max) {
        return Err(Error::Domain(format!(
            "line-graph check needs 2 <= n_max <= {LINE_GRAPH_MAX_ORDER}, got {n_max}"
        )));
    }
    let mut trees_checked = 0;
    let mut counterexamples = Vec::new();
    for n in 2..=n_max {
        let results: Vec<Result<Option<String>>> = enumerate_shard(n, Shard::WHOLE)?
            .par_bridge()
            .map(|(_, t)| {
                let (gamma, ind) = line_graph_parameters(&t)?;
                Ok(if gamma == ind {
                    None
                } else {
                    Some(encode_graph6(&t)?)
                })
            })
            .collect();
        trees_checked += results.len() as u64;
        for r in results {
            counterexamples.extend(r?);
        }
    }
    counterexamples.sort();
    Ok(LineGraphReport {
        n_range: (2, n_max),
        trees_checked,
        all_ratios_one: counterexamples.is_empty(),
        counterexamples,
    })
}

/// One line of JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope {
    pub version: u32,
    #[serde(flatten)]
    pub record: Record,
}

impl Envelope {
    pub fn new(record: Record) -> Self {
        Self {
            version: SCHEMA_VERSION,
            record,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Record {
    Solve {
        /// 1-based position of the graph in the input.
        index: usize,
        graph6: Option<String>,
        report: RatioReport,
    },
    Certificate {
        graph6: Option<String>,
        certificate: BoundCertificate,
    },
    Violation(GraphReport),
    EqualityCase(EqualityCase),
    ConstructionFailure(ConstructionFailure),
    VerificationSummary(VerificationReport),
    LinegraphSummary(LineGraphReport),
    Generated {
        family: String,
        parameter: usize,
        graph6: String,
    },
}
