//! Text outputs: DOT and JSON graph exports, invariant reports, suite
//! reports and sweep CSVs.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::{invariants, Chromatic, GraphInvariants};
use crate::expr::{parse_ideal_expr, parse_ring_expr, ExprError, RingExpr};
use crate::graph::{cozero_graph, cozero_graph_ideal, zero_divisor_graph_ideal, Graph, GraphError};
use crate::ring::{FiniteRing, Ideal};
use crate::theorems::{FamilySpec, SpecError, SuiteReport};

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    /// Γ'(R); the ideal is ignored.
    Cozero,
    /// Γ''_I(R).
    CozeroIdeal,
    /// Γ_I(R).
    ZeroDivisorIdeal,
}

impl std::str::FromStr for GraphKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "cozero" => Ok(GraphKind::Cozero),
            "cozeroI" => Ok(GraphKind::CozeroIdeal),
            "zdivI" => Ok(GraphKind::ZeroDivisorIdeal),
            _ => Err(format!("unknown graph kind {s:?} (cozero, cozeroI, zdivI)")),
        }
    }
}

/// A ring, an ideal of it and one of its graphs, built from expressions.
pub struct Built {
    pub ring_expr: RingExpr,
    pub ring: FiniteRing,
    pub ideal: Ideal,
    pub graph: Graph,
}

pub fn build(ring: &str, ideal: &str, kind: GraphKind) -> Result<Built, ReportError> {
    let ring_expr = parse_ring_expr(ring)?;
    let r = ring_expr.build()?;
    let i = parse_ideal_expr(ideal)?.build(&ring_expr, &r)?;
    let graph = match kind {
        GraphKind::Cozero => cozero_graph(&r)?,
        GraphKind::CozeroIdeal => cozero_graph_ideal(&r, &i)?,
        GraphKind::ZeroDivisorIdeal => zero_divisor_graph_ideal(&r, &i)?,
    };
    Ok(Built {
        ring_expr,
        ring: r,
        ideal: i,
        graph,
    })
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Graphviz: every vertex on its own line, then the edges.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for l in g.labels() {
        let _ = writeln!(out, "  {};", quote(l));
    }
    for &(a, b) in g.edges() {
        let _ = writeln!(out, "  {} -- {};", quote(g.label(a)), quote(g.label(b)));
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphJson {
    ring: String,
    ideal: Vec<String>,
    vertices: Vec<String>,
    edges: Vec<[usize; 2]>,
}

pub fn to_json(ring: &FiniteRing, ideal: &Ideal, g: &Graph) -> String {
    let doc = GraphJson {
        ring: ring.expr().to_string(),
        ideal: ideal.members().iter().map(|&x| ring.label(x).to_string()).collect(),
        vertices: g.labels().to_vec(),
        edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
    };
    serde_json::to_string(&doc).expect("plain data serializes") + "\n"
}

/// Reads a JSON export back, resolving vertex labels in the named ring.
pub fn graph_from_json(text: &str) -> Result<Graph, ReportError> {
    let doc: GraphJson = serde_json::from_str(text)?;
    let ring = parse_ring_expr(&doc.ring)?.build()?;
    let elements = doc
        .vertices
        .iter()
        .map(|l| ring.element(l).ok_or_else(|| ExprError::UnknownLabel(l.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    let n = elements.len();
    if let Some(e) = doc.edges.iter().find(|e| e[0] >= e[1] || e[1] >= n) {
        return Err(ReportError::Invalid(format!("bad edge {e:?}")));
    }
    Ok(Graph::new(doc.vertices, elements, doc.edges.iter().map(|e| (e[0], e[1]))))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Json,
}

pub fn cmd_graph(ring: &str, ideal: &str, kind: GraphKind, format: GraphFormat) -> Result<String, ReportError> {
    let b = build(ring, ideal, kind)?;
    Ok(match format {
        GraphFormat::Dot => to_dot(&b.graph),
        GraphFormat::Json => to_json(&b.ring, &b.ideal, &b.graph),
    })
}

fn inf(v: Option<usize>) -> String {
    v.map_or("inf".into(), |k| k.to_string())
}

fn chromatic_text(c: Chromatic) -> String {
    match c {
        Chromatic::Exact(k) => k.to_string(),
        Chromatic::Bounds { lower, upper } => format!("{lower}..{upper}"),
    }
}

fn or_error<T: ToString>(r: &Result<T, GraphError>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

pub fn analyze_text(b: &Built, inv: &GraphInvariants) -> String {
    let g = &b.graph;
    let ends: Vec<&str> = inv.ends.iter().map(|&v| g.label(v)).collect();
    let ideal: Vec<&str> = b.ideal.members().iter().map(|&x| b.ring.label(x)).collect();
    let rows = [
        ("ring", b.ring.expr().to_string()),
        ("ideal", format!("{{{}}}", ideal.join(", "))),
        ("vertices", inv.vertices.to_string()),
        ("edges", inv.edges.to_string()),
        ("connected", inv.connected.to_string()),
        ("components", inv.n_components.to_string()),
        ("diameter", inf(inv.diameter)),
        ("girth", inf(inv.girth)),
        ("clique", or_error(&inv.clique_number)),
        ("chromatic", chromatic_text(inv.chromatic)),
        ("planar", or_error(&inv.planar)),
        ("outerplanar", or_error(&inv.outerplanar)),
        ("ends", format!("{{{}}}", ends.join(", "))),
    ];
    let mut out = String::new();
    for (k, v) in rows {
        let _ = writeln!(out, "{k:<12}{v}");
    }
    out
}

#[derive(Serialize)]
struct AnalyzeJson<'a> {
    ring: &'a str,
    ideal: Vec<&'a str>,
    #[serde(flatten)]
    invariants: crate::analysis::InvariantsReport,
}

pub fn analyze_json(b: &Built, inv: &GraphInvariants) -> String {
    let doc = AnalyzeJson {
        ring: b.ring.expr(),
        ideal: b.ideal.members().iter().map(|&x| b.ring.label(x)).collect(),
        invariants: inv.report(&b.graph),
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes") + "\n"
}

/// Invariant report; cap errors appear next to the affected invariant.
pub fn cmd_analyze(ring: &str, ideal: &str, kind: GraphKind, json: bool) -> Result<String, ReportError> {
    let b = build(ring, ideal, kind)?;
    let inv = invariants(&b.graph);
    Ok(if json { analyze_json(&b, &inv) } else { analyze_text(&b, &inv) })
}

/// Per-checker totals followed by every failure with its witness.
pub fn verify_text(report: &SuiteReport, gate_audit: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "instances {}", report.instances);
    let _ = writeln!(out, "{:<32} {:<7} {:>6} {:>6} {:>8}", "checker", "mode", "pass", "fail", "skipped");
    for t in report.totals() {
        let mode = if t.audit { "audit" } else { "gating" };
        let _ = writeln!(
            out,
            "{:<32} {:<7} {:>6} {:>6} {:>8}",
            t.theorem_id, mode, t.pass, t.fail, t.skipped
        );
    }
    let failures: Vec<_> = report.failures().collect();
    if !failures.is_empty() {
        let _ = writeln!(out, "\nfailures");
    }
    for f in failures {
        let w = f.witness.as_ref().expect("failures carry witnesses");
        let mode = if f.audit { " [audit]" } else { "" };
        let _ = write!(out, "  {}{mode}  {}  violates: {}", f.theorem_id, f.instance, w.claim);
        if let Some(n) = &f.note {
            let _ = write!(out, "  ({n})");
        }
        out.push('\n');
    }
    let _ = writeln!(out, "\ngating failures {}", report.gating_failures(gate_audit));
    out
}

#[derive(Serialize)]
struct VerifyJson<'a> {
    instances: usize,
    gating_failures: usize,
    totals: Vec<crate::theorems::Totals>,
    results: &'a [crate::theorems::CheckResult],
}

pub fn verify_json(report: &SuiteReport, gate_audit: bool) -> String {
    let doc = VerifyJson {
        instances: report.instances,
        gating_failures: report.gating_failures(gate_audit),
        totals: report.totals(),
        results: &report.results,
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes") + "\n"
}

/// 0 with no gating failures, 1 otherwise.
pub fn exit_code(report: &SuiteReport, gate_audit: bool) -> i32 {
    i32::from(report.gating_failures(gate_audit) > 0)
}

/// One CSV row of a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub ring_expr: String,
    pub ideal_expr: String,
    pub ring_order: usize,
    pub ideal_size: usize,
    pub n_vertices: usize,
    pub n_edges: usize,
    pub connected: bool,
    pub diameter: String,
    pub girth: String,
    /// Empty when over the search cap.
    pub clique: String,
    /// `k`, or `lo..hi` over the exact cap.
    pub chromatic: String,
    pub planar: String,
    pub outerplanar: String,
}

fn or_blank<T: ToString>(r: &Result<T, GraphError>) -> String {
    r.as_ref().map(T::to_string).unwrap_or_default()
}

pub fn sweep_row(ring_expr: &str, ideal_expr: &str, ring: &FiniteRing, ideal: &Ideal, g: &Graph) -> SweepRow {
    let inv = invariants(g);
    SweepRow {
        ring_expr: ring_expr.to_string(),
        ideal_expr: ideal_expr.to_string(),
        ring_order: ring.order(),
        ideal_size: ideal.len(),
        n_vertices: inv.vertices,
        n_edges: inv.edges,
        connected: inv.connected,
        diameter: inf(inv.diameter),
        girth: inf(inv.girth),
        clique: or_blank(&inv.clique_number),
        chromatic: chromatic_text(inv.chromatic),
        planar: or_blank(&inv.planar),
        outerplanar: or_blank(&inv.outerplanar),
    }
}

/// Invariants of Γ''_I(R) for every instance of the spec, in expansion order.
pub fn sweep_rows(spec: &FamilySpec) -> Result<Vec<SweepRow>, ReportError> {
    use rayon::prelude::*;
    let instances = spec.expand()?;
    instances
        .par_iter()
        .map(|inst| {
            let g = inst.graph()?;
            Ok(sweep_row(
                &inst.ring_expr(),
                &inst.ideal_expr.to_string(),
                inst.ring(),
                &inst.ideal,
                g,
            ))
        })
        .collect()
}

pub const SWEEP_HEADER: [&str; 13] = [
    "ring_expr",
    "ideal_expr",
    "ring_order",
    "ideal_size",
    "n_vertices",
    "n_edges",
    "connected",
    "diameter",
    "girth",
    "clique",
    "chromatic",
    "planar",
    "outerplanar",
];

pub fn sweep_csv(rows: &[SweepRow]) -> Result<String, ReportError> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record(SWEEP_HEADER)?;
    for r in rows {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| ReportError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn read_sweep_csv(text: &str) -> Result<Vec<SweepRow>, ReportError> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    Ok(r.deserialize().collect::<Result<_, _>>()?)
}

/// Writes through a temporary file in the same directory, then renames.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
