//! Ring and ideal expressions.
//!
//! Rings: `Z(n)`, `GF(p,[c0,...,cd])`, `GF(q)`, `cat(name)`, `prod(E1,...)`,
//! `table(path)`. Ideals: `zero`, `gen(label,...)`, `prodI(J1,...)`.
//! Printing is canonical and parses back to the same tree.

use std::fmt;
use std::path::Path;

use thiserror::Error;

use crate::ring::{
    catalog_ring, enumerate_ideals, gf, ideal_generated, make_product_all, make_quotient_poly, make_zn, min_generators,
    product_ideal, read_table_ring, FiniteRing, Ideal, MinGenerators, RingError, MAX_GENERATED_IDEAL,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    #[error("arity mismatch: {0}")]
    Arity(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingExpr {
    Zn(usize),
    /// `Z_p[X]/(f)`, coefficients ascending.
    Poly { p: u64, coeffs: Vec<u64> },
    Gf(u64),
    Catalog(String),
    Product(Vec<RingExpr>),
    Table(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum IdealExpr {
    Zero,
    Gen(Vec<String>),
    Product(Vec<IdealExpr>),
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Zn(n) => write!(f, "Z({n})"),
            RingExpr::Poly { p, coeffs } => write!(f, "GF({p},[{}])", join(coeffs)),
            RingExpr::Gf(q) => write!(f, "GF({q})"),
            RingExpr::Catalog(name) => write!(f, "cat({name})"),
            RingExpr::Product(fs) => write!(f, "prod({})", join(fs)),
            RingExpr::Table(path) => write!(f, "table({path})"),
        }
    }
}

impl fmt::Display for IdealExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealExpr::Zero => f.write_str("zero"),
            IdealExpr::Gen(labels) => write!(f, "gen({})", labels.join(",")),
            IdealExpr::Product(parts) => write!(f, "prodI({})", join(parts)),
        }
    }
}

impl RingExpr {
    pub fn build(&self) -> Result<FiniteRing, ExprError> {
        Ok(match self {
            RingExpr::Zn(n) => make_zn(*n)?,
            RingExpr::Poly { p, coeffs } => make_quotient_poly(*p, coeffs)?,
            RingExpr::Gf(q) => catalog_ring(&format!("GF({q})")).or_else(|_| gf(*q))?,
            RingExpr::Catalog(name) => catalog_ring(name)?,
            RingExpr::Product(fs) => {
                let built = fs.iter().map(RingExpr::build).collect::<Result<Vec<_>, _>>()?;
                make_product_all(&built.iter().collect::<Vec<_>>())?
            }
            RingExpr::Table(path) => read_table_ring(Path::new(path))?,
        })
    }

    /// Direct factors when this is a `prod(...)`.
    pub fn factors(&self) -> Option<&[RingExpr]> {
        match self {
            RingExpr::Product(fs) => Some(fs),
            _ => None,
        }
    }
}

impl IdealExpr {
    /// The ideal this expression denotes in `ring`, which must be the ring
    /// built from `ring_expr`.
    pub fn build(&self, ring_expr: &RingExpr, ring: &FiniteRing) -> Result<Ideal, ExprError> {
        match self {
            IdealExpr::Zero => Ok(Ideal::zero(ring)),
            IdealExpr::Gen(labels) => {
                let gens = labels
                    .iter()
                    .map(|l| ring.element(l).ok_or_else(|| ExprError::UnknownLabel(l.clone())))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(ideal_generated(ring, &gens))
            }
            IdealExpr::Product(parts) => {
                let Some(fs) = ring_expr.factors() else {
                    return Err(ExprError::Arity(format!("prodI over non-product ring {ring_expr}")));
                };
                if fs.len() != parts.len() {
                    return Err(ExprError::Arity(format!(
                        "{} ideals for {} factors",
                        parts.len(),
                        fs.len()
                    )));
                }
                let factors = fs.iter().map(RingExpr::build).collect::<Result<Vec<_>, _>>()?;
                let ideals = parts
                    .iter()
                    .zip(fs.iter().zip(&factors))
                    .map(|(j, (e, r))| j.build(e, r))
                    .collect::<Result<Vec<_>, _>>()?;
                let p = product_ideal(ring, &factors.iter().collect::<Vec<_>>(), &ideals.iter().collect::<Vec<_>>())?;
                Ok(p.ideal)
            }
        }
    }
}

/// A short `gen(...)` (or `zero`) naming `ideal`: a minimum generating set
/// when the search is cheap, otherwise a greedy one.
pub fn describe_ideal(ring: &FiniteRing, ideal: &Ideal) -> IdealExpr {
    if ideal.is_zero() {
        return IdealExpr::Zero;
    }
    let gens = match (ideal.len() <= MAX_GENERATED_IDEAL)
        .then(|| min_generators(ring, ideal, 3).ok())
        .flatten()
    {
        Some(MinGenerators::Exactly { generators, .. }) => generators,
        _ => {
            let mut gens = Vec::new();
            let mut have = Ideal::zero(ring);
            for &x in ideal.members() {
                if !have.contains(x) {
                    gens.push(x);
                    have = ideal_generated(ring, &gens);
                }
            }
            gens
        }
    };
    IdealExpr::Gen(gens.iter().map(|&g| ring.label(g).to_string()).collect())
}

/// Every proper ideal of `ring` with an expression for it. Products get
/// `prodI(...)` built from their factors' ideals.
pub fn proper_ideals(ring_expr: &RingExpr, ring: &FiniteRing) -> Result<Vec<(Ideal, IdealExpr)>, ExprError> {
    if let Some(fs) = ring_expr.factors() {
        let factors = fs.iter().map(RingExpr::build).collect::<Result<Vec<_>, _>>()?;
        let mut per = Vec::new();
        for (e, r) in fs.iter().zip(&factors) {
            let mut all = proper_ideals(e, r)?;
            all.push((Ideal::whole(r), describe_ideal(r, &Ideal::whole(r))));
            per.push(all);
        }
        let refs: Vec<&FiniteRing> = factors.iter().collect();
        let mut out = Vec::new();
        for combo in cartesian(&per.iter().map(Vec::len).collect::<Vec<_>>()) {
            let parts: Vec<&Ideal> = combo.iter().enumerate().map(|(i, &k)| &per[i][k].0).collect();
            let p = product_ideal(ring, &refs, &parts)?;
            if p.ideal.is_proper() {
                let exprs = combo.iter().enumerate().map(|(i, &k)| per[i][k].1.clone()).collect();
                out.push((p.ideal, IdealExpr::Product(exprs)));
            }
        }
        return Ok(out);
    }
    Ok(enumerate_ideals(ring)?
        .into_iter()
        .filter(Ideal::is_proper)
        .map(|i| {
            let e = describe_ideal(ring, &i);
            (i, e)
        })
        .collect())
}

/// All index tuples `t` with `t[i] < sizes[i]`, last index fastest.
pub(crate) fn cartesian(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &s in sizes {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..s).map(move |k| {
                    let mut t = t.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    out
}

pub fn parse_ring_expr(text: &str) -> Result<RingExpr, ExprError> {
    let mut p = Parser { s: text, pos: 0 };
    let e = p.ring()?;
    p.end()?;
    Ok(e)
}

pub fn parse_ideal_expr(text: &str) -> Result<IdealExpr, ExprError> {
    let mut p = Parser { s: text, pos: 0 };
    let e = p.ideal()?;
    p.end()?;
    Ok(e)
}

/// Parses an ideal expression and resolves it against a ring.
pub fn parse_ideal_in(text: &str, ring_expr: &RingExpr, ring: &FiniteRing) -> Result<Ideal, ExprError> {
    parse_ideal_expr(text)?.build(ring_expr, ring)
}

/// Splits at commas outside any brackets; offsets are relative to `s`.
pub(crate) fn split_top_level(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push((start, &s[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push((start, &s[start..]));
    out
}

struct Parser<'a> {
    s: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn ws(&mut self) {
        while self.s[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.s[self.pos..].chars().next().unwrap().len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.ws();
        self.s[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<(), ExprError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn end(&mut self) -> Result<(), ExprError> {
        match self.peek() {
            None => Ok(()),
            Some(_) => self.err("trailing input"),
        }
    }

    fn ident(&mut self) -> Result<&str, ExprError> {
        self.ws();
        let rest = &self.s[self.pos..];
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        if len == 0 {
            return self.err("expected a name");
        }
        let start = self.pos;
        self.pos += len;
        Ok(&self.s[start..self.pos])
    }

    fn int(&mut self) -> Result<u64, ExprError> {
        self.ws();
        let rest = &self.s[self.pos..];
        let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        if len == 0 {
            return self.err("expected an integer");
        }
        let v = rest[..len].parse().or_else(|_| self.err("integer too large"))?;
        self.pos += len;
        Ok(v)
    }

    /// Raw text up to the `)` closing the current call.
    fn raw_arg(&mut self) -> Result<String, ExprError> {
        let rest = &self.s[self.pos..];
        let mut depth = 0i32;
        for (i, c) in rest.char_indices() {
            match c {
                '(' | '[' => depth += 1,
                ']' => depth -= 1,
                ')' if depth == 0 => {
                    self.pos += i;
                    return Ok(rest[..i].trim().to_string());
                }
                ')' => depth -= 1,
                _ => {}
            }
        }
        self.pos = self.s.len();
        self.err("unclosed '('")
    }

    fn ring(&mut self) -> Result<RingExpr, ExprError> {
        let start = self.pos;
        let name = self.ident()?.to_string();
        self.expect('(')?;
        let e = match name.as_str() {
            "Z" => RingExpr::Zn(self.int()? as usize),
            "GF" => {
                let p = self.int()?;
                if self.peek() == Some(',') {
                    self.pos += 1;
                    self.expect('[')?;
                    let mut coeffs = vec![self.int()?];
                    while self.peek() == Some(',') {
                        self.pos += 1;
                        coeffs.push(self.int()?);
                    }
                    self.expect(']')?;
                    RingExpr::Poly { p, coeffs }
                } else {
                    RingExpr::Gf(p)
                }
            }
            "cat" => RingExpr::Catalog(self.ident()?.to_string()),
            "prod" => {
                let mut fs = vec![self.ring()?];
                while self.peek() == Some(',') {
                    self.pos += 1;
                    fs.push(self.ring()?);
                }
                RingExpr::Product(fs)
            }
            "table" => {
                let path = self.raw_arg()?;
                if path.is_empty() {
                    return self.err("empty table path");
                }
                RingExpr::Table(path)
            }
            _ => {
                self.pos = start;
                self.ws();
                return self.err(format!("unknown ring constructor '{name}'"));
            }
        };
        self.expect(')')?;
        Ok(e)
    }

    fn ideal(&mut self) -> Result<IdealExpr, ExprError> {
        let start = self.pos;
        let name = self.ident()?.to_string();
        match name.as_str() {
            "zero" => Ok(IdealExpr::Zero),
            "gen" => {
                self.expect('(')?;
                let body_start = self.pos;
                let body = self.raw_arg()?;
                self.expect(')')?;
                let raw = &self.s[body_start..];
                let lead = raw.len() - raw.trim_start().len();
                let mut labels = Vec::new();
                if !body.is_empty() {
                    for (off, part) in split_top_level(&body) {
                        let label = part.trim();
                        if label.is_empty() {
                            self.pos = body_start + lead + off;
                            return self.err("empty label");
                        }
                        labels.push(label.to_string());
                    }
                }
                Ok(IdealExpr::Gen(labels))
            }
            "prodI" => {
                self.expect('(')?;
                let mut parts = vec![self.ideal()?];
                while self.peek() == Some(',') {
                    self.pos += 1;
                    parts.push(self.ideal()?);
                }
                self.expect(')')?;
                Ok(IdealExpr::Product(parts))
            }
            _ => {
                self.pos = start;
                self.ws();
                self.err(format!("unknown ideal constructor '{name}'"))
            }
        }
    }
}
