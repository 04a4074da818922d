//! Executable checkers for structural claims about Γ''_I(R), and a driver
//! that runs them over families of instances.
//!
//! Every failure carries a [`Witness`] that [`Witness::replay`] re-checks
//! on a freshly built graph from the direct definition, so a reported
//! counterexample never depends on the fast construction path.

mod checks;
mod family;

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::analysis::{chromatic, clique_number, diameter, girth, is_connected, is_outerplanar, is_planar};
use crate::expr::{parse_ideal_expr, parse_ring_expr, ExprError};
use crate::graph::{cozero_graph, cozero_graph_ideal_direct, GraphError};
use crate::ring::{jacobson_radical, quotient_ring, RingError};

pub use checks::{ara_of_image, checkers, is_listed_planar_product, Checker};
pub use family::{
    FamilySpec, Fixture, IdealSelection, Instance, Pattern, RingEntry, SpecError, DEFAULT_SPEC, MAX_INSTANCES,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// The claim a checker made about Γ''_I(R), which the failing instance violates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Claim {
    Adjacent { x: String, y: String },
    NotAdjacent { x: String, y: String },
    Planar { expected: bool },
    Outerplanar { expected: bool },
    /// Connected with diameter at most this.
    ConnectedWithin { diameter: usize },
    GirthAtMost { girth: usize },
    GirthEquals { girth: usize },
    CliqueAtLeast { size: usize },
    ChromaticAtLeast { colours: usize },
    /// `vertex` is not an end of the subgraph induced off the Jacobson radical.
    NoEnd { vertex: String },
    /// Planar implies `|I| <= 2` or Γ'(R/I) has at most one vertex.
    IdealBound,
    /// Planar implies the image of the maximal ideal in R/I needs at most `bound` generators.
    AraAtMost { bound: usize },
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::Adjacent { x, y } => write!(f, "{x} ~ {y}"),
            Claim::NotAdjacent { x, y } => write!(f, "{x} !~ {y}"),
            Claim::Planar { expected } => write!(f, "planar = {expected}"),
            Claim::Outerplanar { expected } => write!(f, "outerplanar = {expected}"),
            Claim::ConnectedWithin { diameter } => write!(f, "connected, diameter <= {diameter}"),
            Claim::GirthAtMost { girth } => write!(f, "girth <= {girth}"),
            Claim::GirthEquals { girth } => write!(f, "girth = {girth}"),
            Claim::CliqueAtLeast { size } => write!(f, "clique number >= {size}"),
            Claim::ChromaticAtLeast { colours } => write!(f, "chromatic number >= {colours}"),
            Claim::NoEnd { vertex } => write!(f, "{vertex} is not an end off J(R)"),
            Claim::IdealBound => f.write_str("planar => |I| <= 2 or |V(G'(R/I))| <= 1"),
            Claim::AraAtMost { bound } => write!(f, "planar => ara(m/I) <= {bound}"),
        }
    }
}

/// A counterexample: the instance, as expressions, and the violated claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub ring: String,
    pub ideal: String,
    pub claim: Claim,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Ring(#[from] RingError),
}

impl Witness {
    /// Rebuilds the instance from its expressions, constructs Γ''_I(R) from
    /// the definition and re-evaluates the claim. `Ok(true)` means the
    /// violation reproduces.
    pub fn replay(&self) -> Result<bool, ReplayError> {
        let re = parse_ring_expr(&self.ring)?;
        let r = re.build()?;
        let ideal = parse_ideal_expr(&self.ideal)?.build(&re, &r)?;
        let g = cozero_graph_ideal_direct(&r, &ideal)?;
        let elem = |l: &str| r.element(l).ok_or_else(|| ExprError::UnknownLabel(l.to_string()));
        Ok(match &self.claim {
            Claim::Adjacent { x, y } => !g.adjacent_elements(elem(x)?, elem(y)?),
            Claim::NotAdjacent { x, y } => g.adjacent_elements(elem(x)?, elem(y)?),
            Claim::Planar { expected } => is_planar(&g)? != *expected,
            Claim::Outerplanar { expected } => is_outerplanar(&g)? != *expected,
            Claim::ConnectedWithin { diameter: d } => !is_connected(&g) || diameter(&g).map_or(true, |v| v > *d),
            Claim::GirthAtMost { girth: k } => girth(&g).map_or(true, |v| v > *k),
            Claim::GirthEquals { girth: k } => girth(&g) != Some(*k),
            Claim::CliqueAtLeast { size } => clique_number(&g)? < *size,
            Claim::ChromaticAtLeast { colours } => chromatic(&g).upper() < *colours,
            Claim::NoEnd { vertex } => {
                let j = jacobson_radical(&r)?;
                let keep: Vec<usize> = (0..g.vertex_count()).filter(|&v| !j.contains(g.element(v))).collect();
                let h = g.induced(&keep)?;
                let v = h
                    .vertex_by_label(vertex)
                    .ok_or_else(|| GraphError::UnknownVertex(vertex.clone()))?;
                h.degree(v) == 1
            }
            Claim::IdealBound => {
                let q = quotient_ring(&r, &ideal)?;
                is_planar(&g)? && ideal.len() > 2 && cozero_graph(&q.ring)?.vertex_count() > 1
            }
            Claim::AraAtMost { bound } => {
                let ara = ara_of_image(&r, &ideal)?;
                is_planar(&g)? && ara.map_or(true, |k| k > *bound)
            }
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub theorem_id: &'static str,
    pub instance: String,
    pub status: Status,
    /// Audit-mode checkers do not gate the exit code unless asked.
    pub audit: bool,
    /// "vacuous", the unmet precondition of a skip, or recorded values.
    pub note: Option<String>,
    pub witness: Option<Witness>,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub theorem_id: &'static str,
    pub audit: bool,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub instances: usize,
    pub results: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn totals(&self) -> Vec<Totals> {
        let mut out: Vec<Totals> = Vec::new();
        for r in &self.results {
            if out.last().map_or(true, |t| t.theorem_id != r.theorem_id) {
                out.push(Totals {
                    theorem_id: r.theorem_id,
                    audit: r.audit,
                    pass: 0,
                    fail: 0,
                    skipped: 0,
                });
            }
            let t = out.last_mut().unwrap();
            match r.status {
                Status::Pass => t.pass += 1,
                Status::Fail => t.fail += 1,
                Status::Skipped => t.skipped += 1,
            }
        }
        out
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| r.status == Status::Fail)
    }

    /// Failures that decide the exit code.
    pub fn gating_failures(&self, include_audit: bool) -> usize {
        self.failures().filter(|r| include_audit || !r.audit).count()
    }
}

/// Runs the selected checkers on every instance of `spec`. Results are
/// sorted by checker id and instance, so the output is the same for any
/// thread count.
pub fn run_suite(spec: &FamilySpec) -> Result<SuiteReport, SpecError> {
    let instances = spec.expand()?;
    let selected: Vec<&Checker> = checkers()
        .iter()
        .filter(|c| spec.include.is_empty() || spec.include.iter().any(|id| id == c.id))
        .filter(|c| !spec.exclude.iter().any(|id| id == c.id))
        .filter(|c| !c.fixture || spec.fixture == Some(Fixture::Corrupt))
        .collect();
    Ok(run_checkers(&instances, &selected))
}

/// Runs `selected` on `instances` in parallel.
pub fn run_checkers(instances: &[Instance], selected: &[&Checker]) -> SuiteReport {
    let mut results: Vec<CheckResult> = instances
        .par_iter()
        .flat_map_iter(|inst| selected.iter().filter_map(move |c| run_one(c, inst)))
        .collect();
    results.sort_by(|a, b| (a.theorem_id, &a.instance).cmp(&(b.theorem_id, &b.instance)));
    SuiteReport {
        instances: instances.len(),
        results,
    }
}

/// One checker on one instance; `None` when the instance has the wrong shape
/// for the checker altogether (for example a single ring for a product claim).
pub fn run_one(checker: &Checker, inst: &Instance) -> Option<CheckResult> {
    let start = Instant::now();
    let outcome = checker.run(inst);
    let (status, note, witness) = match outcome {
        checks::Outcome::NotApplicable => return None,
        checks::Outcome::Pass(note) => (Status::Pass, note, None),
        checks::Outcome::Skip(why) => (Status::Skipped, Some(why), None),
        checks::Outcome::Fail { claim, note } => (
            Status::Fail,
            note,
            Some(Witness {
                ring: inst.ring_expr(),
                ideal: inst.ideal_expr.to_string(),
                claim,
            }),
        ),
    };
    Some(CheckResult {
        theorem_id: checker.id,
        instance: inst.name.clone(),
        status,
        audit: checker.audit,
        note,
        witness,
        elapsed: start.elapsed(),
    })
}
