//! Family spec files and their expansion into `(R, I)` instances.
//!
//! ```text
//! # products Z_m x Z_n with mn <= 64
//! family = prod(Z(2..32), Z(2..32))
//! max_order = 64
//! ideals = product
//! exclude = girth_totally_disconnected
//! ```

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::analysis::{is_outerplanar, is_planar};
use crate::expr::{cartesian, describe_ideal, parse_ring_expr, proper_ideals, split_top_level, ExprError, IdealExpr, RingExpr};
use crate::graph::{cozero_graph, cozero_graph_ideal, Graph, GraphError};
use crate::ring::{is_prime, local_catalog, make_product_all, product_ideal, FiniteRing, Ideal, RingError, MAX_ORDER};

pub const MAX_INSTANCES: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Expand(String),
    #[error("{0}")]
    Io(String),
}

impl From<ExprError> for SpecError {
    fn from(e: ExprError) -> Self {
        SpecError::Expand(e.to_string())
    }
}

impl From<RingError> for SpecError {
    fn from(e: RingError) -> Self {
        SpecError::Expand(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealSelection {
    /// Every proper ideal.
    All,
    /// Products of proper ideals of the factors; all proper ideals for
    /// rings that are not products.
    Product,
    Zero,
}

/// A ring-expression pattern. Besides plain ring expressions it accepts
/// `Z(a..b)`, `local(n)` (local catalog rings of order `<= n`), `fields(n)`
/// (fields of order `<= n`, prime ones as `Z(p)`) and `prod(P1, ...)` over patterns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pattern {
    Ring(RingExpr),
    ZRange(usize, usize),
    Local(usize),
    Fields(u64),
    Product(Vec<Pattern>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fixture {
    /// Adds a checker asserting that every graph is edgeless.
    Corrupt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub families: Vec<Pattern>,
    pub ideals: IdealSelection,
    pub max_order: usize,
    pub max_instances: usize,
    pub include: Vec<String>,
    pub exclude: Vec<String>,
    pub audit: bool,
    /// Keep a seeded random sample of this many instances.
    pub sample: Option<usize>,
    pub seed: u64,
    pub fixture: Option<Fixture>,
}

impl Default for FamilySpec {
    fn default() -> Self {
        FamilySpec {
            families: Vec::new(),
            ideals: IdealSelection::Product,
            max_order: 64,
            max_instances: MAX_INSTANCES,
            include: Vec::new(),
            exclude: Vec::new(),
            audit: false,
            sample: None,
            seed: 0,
            fixture: None,
        }
    }
}

pub const DEFAULT_SPEC: &str = "\
# Z_m x Z_n with mn <= 64, every product of proper ideals
family = prod(Z(2..32), Z(2..32))
max_order = 64
ideals = product
";

impl FamilySpec {
    /// Products `Z_m x Z_n` with `mn <= 64` and products of proper ideals.
    pub fn default_products() -> Self {
        Self::parse(DEFAULT_SPEC).expect("built-in spec parses")
    }

    pub fn parse(text: &str) -> Result<Self, SpecError> {
        let mut spec = FamilySpec::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let err = |message: String| SpecError::Parse { line, message };
            let content = raw.split('#').next().unwrap().trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| err("expected `key = value`".into()))?;
            let (key, value) = (key.trim(), value.trim());
            let number = |v: &str| v.parse::<u64>().map_err(|_| err(format!("{key} needs a non-negative integer")));
            match key {
                "family" => spec.families.push(parse_pattern(value).map_err(err)?),
                "ideals" => {
                    spec.ideals = match value {
                        "all" => IdealSelection::All,
                        "product" => IdealSelection::Product,
                        "zero" => IdealSelection::Zero,
                        _ => return Err(err(format!("ideals must be all, product or zero, got {value:?}"))),
                    }
                }
                "max_order" => spec.max_order = number(value)? as usize,
                "max_instances" => spec.max_instances = (number(value)? as usize).min(MAX_INSTANCES),
                "include" | "exclude" => {
                    let ids = value.split(',').map(str::trim).filter(|s| !s.is_empty());
                    for id in ids {
                        if super::checkers().iter().all(|c| c.id != id) {
                            return Err(err(format!("unknown checker {id:?}")));
                        }
                        let list = if key == "include" { &mut spec.include } else { &mut spec.exclude };
                        list.push(id.to_string());
                    }
                }
                "audit" => {
                    spec.audit = value
                        .parse::<bool>()
                        .map_err(|_| err("audit must be true or false".into()))?
                }
                "sample" => spec.sample = Some(number(value)? as usize),
                "seed" => spec.seed = number(value)?,
                "fixture" => match value {
                    "corrupt" => spec.fixture = Some(Fixture::Corrupt),
                    _ => return Err(err(format!("unknown fixture {value:?}"))),
                },
                _ => return Err(err(format!("unknown key {key:?}"))),
            }
        }
        Ok(spec)
    }

    /// Distinct rings of all families, in first-seen order.
    pub fn rings(&self) -> Result<Vec<Arc<RingEntry>>, SpecError> {
        let mut leaves = HashMap::new();
        let mut exprs = Vec::new();
        for p in &self.families {
            exprs.extend(expand(p, self.max_order, &mut leaves)?.into_iter().map(|(e, _)| e));
        }
        let mut seen = std::collections::HashSet::new();
        exprs.retain(|e| seen.insert(e.clone()));
        exprs
            .into_par_iter()
            .map(|e| RingEntry::new(e).map_err(SpecError::from))
            .collect()
    }

    /// Every `(R, I)` instance, in a fixed order.
    pub fn expand(&self) -> Result<Vec<Instance>, SpecError> {
        let rings = self.rings()?;
        let per_ring: Vec<Vec<Instance>> = rings
            .par_iter()
            .map(|r| r.instances(self.ideals).map_err(SpecError::from))
            .collect::<Result<_, _>>()?;
        let mut all: Vec<Instance> = per_ring.into_iter().flatten().collect();
        if let Some(k) = self.sample {
            let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
            all.shuffle(&mut rng);
            all.truncate(k);
            all.sort_by(|a, b| a.name.cmp(&b.name));
        }
        if all.len() > self.max_instances {
            return Err(SpecError::Expand(format!(
                "{} instances exceed the cap of {}",
                all.len(),
                self.max_instances
            )));
        }
        Ok(all)
    }
}

fn parse_pattern(text: &str) -> Result<Pattern, String> {
    let t = text.trim();
    let call = |name: &str| {
        t.strip_prefix(name)
            .and_then(|r| r.trim_start().strip_prefix('('))
            .and_then(|r| r.strip_suffix(')'))
    };
    let int = |s: &str| s.trim().parse::<u64>().map_err(|_| format!("bad number in {t:?}"));
    if let Some(inner) = call("prod") {
        let parts = split_top_level(inner)
            .into_iter()
            .map(|(_, p)| parse_pattern(p))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(Pattern::Product(parts));
    }
    if let Some(inner) = call("local") {
        return Ok(Pattern::Local(int(inner)? as usize));
    }
    if let Some(inner) = call("fields") {
        return Ok(Pattern::Fields(int(inner)?));
    }
    if let Some((a, b)) = call("Z").and_then(|inner| inner.split_once("..")) {
        let (a, b) = (int(a)? as usize, int(b)? as usize);
        if a == 0 || a > b {
            return Err(format!("empty or invalid range in {t:?}"));
        }
        return Ok(Pattern::ZRange(a, b));
    }
    parse_ring_expr(t).map(Pattern::Ring).map_err(|e| e.to_string())
}

fn leaf_order(e: &RingExpr, cache: &mut HashMap<RingExpr, usize>) -> Result<usize, SpecError> {
    if let RingExpr::Zn(n) = e {
        return Ok(*n);
    }
    if let Some(&o) = cache.get(e) {
        return Ok(o);
    }
    let o = e.build()?.order();
    cache.insert(e.clone(), o);
    Ok(o)
}

fn expand(p: &Pattern, max_order: usize, cache: &mut HashMap<RingExpr, usize>) -> Result<Vec<(RingExpr, usize)>, SpecError> {
    let cap = max_order.min(MAX_ORDER);
    Ok(match p {
        Pattern::Ring(e) => {
            let o = match e {
                RingExpr::Product(fs) => {
                    let mut o = 1usize;
                    for f in fs {
                        o = o.saturating_mul(leaf_order(f, cache)?);
                    }
                    o
                }
                _ => leaf_order(e, cache)?,
            };
            if o <= cap {
                vec![(e.clone(), o)]
            } else {
                vec![]
            }
        }
        Pattern::ZRange(a, b) => (*a..=(*b).min(cap)).map(|n| (RingExpr::Zn(n), n)).collect(),
        Pattern::Fields(n) => (2..=*n)
            .filter(|&q| q as usize <= cap && crate::ring::gf(q).is_ok())
            .map(|q| {
                let e = if is_prime(q) { RingExpr::Zn(q as usize) } else { RingExpr::Gf(q) };
                (e, q as usize)
            })
            .collect(),
        Pattern::Local(n) => local_catalog((*n).min(cap))?
            .iter()
            .map(|r| Ok((parse_ring_expr(r.expr())?, r.order())))
            .collect::<Result<_, SpecError>>()?,
        Pattern::Product(ps) => {
            let lists = ps
                .iter()
                .map(|q| expand(q, max_order, cache))
                .collect::<Result<Vec<_>, _>>()?;
            cartesian(&lists.iter().map(Vec::len).collect::<Vec<_>>())
                .into_iter()
                .filter_map(|t| {
                    let order = t
                        .iter()
                        .enumerate()
                        .try_fold(1usize, |acc, (i, &k)| acc.checked_mul(lists[i][k].1).filter(|&o| o <= cap))?;
                    let fs = t.iter().enumerate().map(|(i, &k)| lists[i][k].0.clone()).collect();
                    Some((RingExpr::Product(fs), order))
                })
                .collect()
        }
    })
}

/// A ring of the family with its factors and a few cached facts.
#[derive(Debug)]
pub struct RingEntry {
    pub expr: RingExpr,
    pub ring: FiniteRing,
    /// Direct factors of a `prod(...)`; empty otherwise.
    pub factors: Vec<FiniteRing>,
    pub factor_exprs: Vec<RingExpr>,
    cozero_shape: OnceLock<Result<(bool, bool), GraphError>>,
}

impl RingEntry {
    pub fn new(expr: RingExpr) -> Result<Arc<Self>, ExprError> {
        let (ring, factors, factor_exprs) = match &expr {
            RingExpr::Product(fs) => {
                let built = fs.iter().map(RingExpr::build).collect::<Result<Vec<_>, _>>()?;
                let ring = make_product_all(&built.iter().collect::<Vec<_>>())?;
                (ring, built, fs.clone())
            }
            _ => (expr.build()?, Vec::new(), Vec::new()),
        };
        Ok(Arc::new(RingEntry {
            expr,
            ring,
            factors,
            factor_exprs,
            cozero_shape: OnceLock::new(),
        }))
    }

    pub fn parse(text: &str) -> Result<Arc<Self>, ExprError> {
        Self::new(parse_ring_expr(text)?)
    }

    /// Planarity and outerplanarity of Γ'(R).
    pub fn cozero_shape(&self) -> Result<(bool, bool), GraphError> {
        self.cozero_shape
            .get_or_init(|| {
                let g = cozero_graph(&self.ring)?;
                Ok((is_planar(&g)?, is_outerplanar(&g)?))
            })
            .clone()
    }

    pub fn instances(self: &Arc<Self>, mode: IdealSelection) -> Result<Vec<Instance>, ExprError> {
        if self.factors.is_empty() {
            let ideals = match mode {
                IdealSelection::Zero => vec![(Ideal::zero(&self.ring), IdealExpr::Zero)],
                _ => proper_ideals(&self.expr, &self.ring)?,
            };
            return Ok(ideals
                .into_iter()
                .map(|(i, e)| Instance::new(self.clone(), i, e, Vec::new()))
                .collect());
        }
        let mut per = Vec::new();
        for (e, f) in self.factor_exprs.iter().zip(&self.factors) {
            let mut list = match mode {
                IdealSelection::Zero => vec![(Ideal::zero(f), IdealExpr::Zero)],
                _ => proper_ideals(e, f)?,
            };
            if mode == IdealSelection::All {
                let whole = Ideal::whole(f);
                let d = describe_ideal(f, &whole);
                list.push((whole, d));
            }
            per.push(list);
        }
        let refs: Vec<&FiniteRing> = self.factors.iter().collect();
        let mut out = Vec::new();
        for t in cartesian(&per.iter().map(Vec::len).collect::<Vec<_>>()) {
            let parts: Vec<Ideal> = t.iter().enumerate().map(|(i, &k)| per[i][k].0.clone()).collect();
            let p = product_ideal(&self.ring, &refs, &parts.iter().collect::<Vec<_>>())?;
            if p.ideal.is_proper() {
                let e = IdealExpr::Product(t.iter().enumerate().map(|(i, &k)| per[i][k].1.clone()).collect());
                out.push(Instance::new(self.clone(), p.ideal, e, parts));
            }
        }
        Ok(out)
    }
}

/// One `(R, I)` pair. The graph Γ''_I(R) is built on first use.
#[derive(Debug)]
pub struct Instance {
    pub entry: Arc<RingEntry>,
    pub ideal: Ideal,
    pub ideal_expr: IdealExpr,
    /// Component ideals when `R` is a product.
    pub parts: Vec<Ideal>,
    /// `ring :: ideal`, the sort key in reports.
    pub name: String,
    graph: OnceLock<Result<Graph, GraphError>>,
    planar: OnceLock<Result<bool, GraphError>>,
}

impl Instance {
    pub fn new(entry: Arc<RingEntry>, ideal: Ideal, ideal_expr: IdealExpr, parts: Vec<Ideal>) -> Self {
        let name = format!("{} :: {}", entry.expr, ideal_expr);
        Instance {
            entry,
            ideal,
            ideal_expr,
            parts,
            name,
            graph: OnceLock::new(),
            planar: OnceLock::new(),
        }
    }

    /// An instance from expression text, e.g. `("prod(Z(2),Z(4))", "prodI(zero,gen(2))")`.
    pub fn parse(ring: &str, ideal: &str) -> Result<Self, ExprError> {
        let entry = RingEntry::parse(ring)?;
        let ideal_expr = crate::expr::parse_ideal_expr(ideal)?;
        let i = ideal_expr.build(&entry.expr, &entry.ring)?;
        if !i.is_proper() {
            return Err(RingError::Improper.into());
        }
        let parts = match &ideal_expr {
            IdealExpr::Product(ps) if !entry.factors.is_empty() => ps
                .iter()
                .zip(entry.factor_exprs.iter().zip(&entry.factors))
                .map(|(p, (e, f))| p.build(e, f))
                .collect::<Result<_, _>>()?,
            _ => Vec::new(),
        };
        Ok(Instance::new(entry, i, ideal_expr, parts))
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.entry.ring
    }

    pub fn ring_expr(&self) -> String {
        self.entry.expr.to_string()
    }

    pub fn graph(&self) -> Result<&Graph, GraphError> {
        self.graph
            .get_or_init(|| cozero_graph_ideal(&self.entry.ring, &self.ideal))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn planar(&self) -> Result<bool, GraphError> {
        self.planar.get_or_init(|| is_planar(self.graph()?)).clone()
    }

    /// Whether the ideal was given componentwise.
    pub fn is_product(&self) -> bool {
        self.parts.len() >= 2
    }

    pub fn component_proper(&self) -> bool {
        self.parts.iter().all(Ideal::is_proper)
    }

    /// Γ''_{I_i}(R_i) for factor `i`.
    pub fn component_graph(&self, i: usize) -> Result<Graph, GraphError> {
        cozero_graph_ideal(&self.entry.factors[i], &self.parts[i])
    }
}
