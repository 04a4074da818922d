//! Finite commutative rings with identity, stored as Cayley tables.
//!
//! Elements are dense indices `0..n` into the addition and multiplication
//! tables. A [`FiniteRing`] is immutable once validated; derived data
//! (units, principal ideals, the ideal lattice) is computed lazily and cached.

mod build;
mod catalog;
mod ideal;
mod iso;
mod table_file;
mod validate;

use std::collections::HashSet;
use std::sync::OnceLock;

use thiserror::Error;

use crate::bitset::BitSet;

pub use build::{make_product, make_product_all, make_quotient_poly, make_table_ring, make_zn};
pub use catalog::{catalog_names, catalog_ring, gf, is_prime, local_catalog};
pub use ideal::{
    affine_orbit, enumerate_ideals, ideal_generated, is_local, jacobson_radical, maximal_ideals,
    min_generators, product_ideal, quotient_ring, Ideal, MinGenerators, ProductIdeal, Quotient, MAX_GENERATED_IDEAL, MAX_GENERATOR_CAP,
};
pub use iso::{iso_invariants, ring_iso, IsoInvariants};
pub use table_file::{parse_table_ring, read_table_ring, write_table_ring};

/// Hard cap on ring order for any construction.
pub const MAX_ORDER: usize = 1 << 16;
/// Cap for the breadth-first ideal lattice enumeration.
pub const MAX_IDEAL_ENUM_ORDER: usize = 256;
/// Cap for isomorphism search.
pub const MAX_ISO_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("ring order {order} is outside 1..={cap}")]
    Size { order: usize, cap: usize },
    #[error("{what} is limited to rings of order <= {cap}, got {order}")]
    Cap {
        what: &'static str,
        order: usize,
        cap: usize,
    },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomial {0} is not monic of degree >= 1")]
    NotMonic(String),
    #[error("malformed tables: {0}")]
    Shape(String),
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("axiom `{axiom}` fails at ({a}, {b}, {c})")]
    Axiom {
        axiom: &'static str,
        a: String,
        b: String,
        c: String,
    },
    #[error("unknown catalog ring {0:?}")]
    UnknownCatalog(String),
    #[error("the zero ring has no nonzero identity")]
    ZeroRing,
    #[error("the ideal is the whole ring")]
    Improper,
    #[error("not an ideal: {0}")]
    NotIdeal(String),
    #[error("ideal does not belong to this ring: {0}")]
    Mismatch(String),
    #[error("{0}")]
    Io(String),
}

#[derive(Debug, Clone, Default)]
struct Cache {
    units: OnceLock<BitSet>,
    principal: OnceLock<Vec<BitSet>>,
    ideals: OnceLock<Result<Vec<Ideal>, RingError>>,
}

/// A finite commutative ring with identity given by its operation tables.
#[derive(Debug, Clone)]
pub struct FiniteRing {
    labels: Vec<String>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    zero: usize,
    one: usize,
    expr: String,
    factor_orders: Vec<usize>,
    cache: Cache,
}

impl FiniteRing {
    /// Validates the tables and builds the ring. `expr` is kept for reports.
    pub(crate) fn from_tables(
        labels: Vec<String>,
        add: Vec<u32>,
        mul: Vec<u32>,
        expr: String,
    ) -> Result<Self, RingError> {
        let checked = validate::validate(&labels, &add, &mul)?;
        Ok(FiniteRing {
            labels,
            add,
            mul,
            neg: checked.neg,
            zero: checked.zero,
            one: checked.one,
            expr,
            factor_orders: Vec::new(),
            cache: Cache::default(),
        })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    /// True for the one-element ring, where `0 = 1`.
    pub fn is_zero_ring(&self) -> bool {
        self.order() == 1
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn element(&self, label: &str) -> Option<usize> {
        let wanted: String = label.chars().filter(|c| !c.is_whitespace()).collect();
        self.labels.iter().position(|l| *l == wanted)
    }

    /// The expression that built this ring.
    pub fn expr(&self) -> &str {
        &self.expr
    }

    pub(crate) fn set_expr(&mut self, expr: impl Into<String>) {
        self.expr = expr.into();
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order() + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Orders of the direct factors when built as a product, else empty.
    pub fn factor_orders(&self) -> &[usize] {
        &self.factor_orders
    }

    /// Splits a product-ring element into its component indices.
    pub fn components(&self, x: usize) -> Vec<usize> {
        let mut out = vec![0; self.factor_orders.len()];
        let mut rest = x;
        for (slot, &m) in out.iter_mut().zip(&self.factor_orders).rev() {
            *slot = rest % m;
            rest /= m;
        }
        out
    }

    /// Inverse of [`FiniteRing::components`].
    pub fn compose(&self, parts: &[usize]) -> usize {
        debug_assert_eq!(parts.len(), self.factor_orders.len());
        parts
            .iter()
            .zip(&self.factor_orders)
            .fold(0, |acc, (&p, &m)| acc * m + p)
    }

    pub fn unit_set(&self) -> &BitSet {
        self.cache.units.get_or_init(|| {
            let n = self.order();
            let mut units = BitSet::new(n);
            for x in 0..n {
                if (0..n).any(|y| self.mul(x, y) == self.one) {
                    units.insert(x);
                }
            }
            units
        })
    }

    pub fn units(&self) -> Vec<usize> {
        self.unit_set().to_vec()
    }

    pub fn is_unit(&self, x: usize) -> bool {
        self.unit_set().contains(x)
    }

    /// The principal ideal `xR`.
    pub fn principal(&self, x: usize) -> &BitSet {
        &self.principal_all()[x]
    }

    pub(crate) fn principal_all(&self) -> &[BitSet] {
        self.cache.principal.get_or_init(|| {
            let n = self.order();
            (0..n)
                .map(|x| BitSet::from_iter_with_len(n, (0..n).map(|r| self.mul(x, r))))
                .collect()
        })
    }

    /// Additive order of `x`.
    pub fn additive_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut acc = x;
        while acc != self.zero {
            acc = self.add(acc, x);
            k += 1;
        }
        k
    }

    /// Additive order of the identity.
    pub fn characteristic(&self) -> usize {
        self.additive_order(self.one)
    }

    /// Brute-force O(n³) re-check of every ring axiom on the stored tables.
    pub fn validate_exhaustive(&self) -> Result<(), RingError> {
        validate::validate_exhaustive(self)
    }

    pub(crate) fn ideals_cache(&self) -> &OnceLock<Result<Vec<Ideal>, RingError>> {
        &self.cache.ideals
    }

    pub(crate) fn axiom_error(&self, axiom: &'static str, a: usize, b: usize, c: usize) -> RingError {
        RingError::Axiom {
            axiom,
            a: self.labels[a].clone(),
            b: self.labels[b].clone(),
            c: self.labels[c].clone(),
        }
    }
}

pub(crate) fn check_labels(labels: &[String]) -> Result<(), RingError> {
    let mut seen = HashSet::with_capacity(labels.len());
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(RingError::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}
