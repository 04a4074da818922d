//! Ideals, the ideal lattice, quotients and generator counts.

use std::collections::{HashMap, HashSet, VecDeque};

use super::{FiniteRing, RingError, MAX_IDEAL_ENUM_ORDER};
use crate::bitset::BitSet;

/// An ideal, stored as a sorted member list plus a membership mask.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ideal {
    ring_order: usize,
    members: Vec<usize>,
    mask: BitSet,
    proper: bool,
}

impl Ideal {
    /// Checks closure and builds the ideal.
    pub fn new(ring: &FiniteRing, members: impl IntoIterator<Item = usize>) -> Result<Self, RingError> {
        let n = ring.order();
        let mut mask = BitSet::new(n);
        for x in members {
            if x >= n {
                return Err(RingError::NotIdeal(format!("element index {x} out of range")));
            }
            mask.insert(x);
        }
        if !mask.contains(ring.zero()) {
            return Err(RingError::NotIdeal("missing zero".into()));
        }
        let elems = mask.to_vec();
        for &a in &elems {
            for &b in &elems {
                if !mask.contains(ring.add(a, b)) {
                    return Err(RingError::NotIdeal(format!(
                        "{} + {} escapes",
                        ring.label(a),
                        ring.label(b)
                    )));
                }
            }
            for r in ring.elements() {
                if !mask.contains(ring.mul(r, a)) {
                    return Err(RingError::NotIdeal(format!(
                        "{} * {} escapes",
                        ring.label(r),
                        ring.label(a)
                    )));
                }
            }
        }
        Ok(Self::from_mask(ring, mask))
    }

    pub(crate) fn from_mask(ring: &FiniteRing, mask: BitSet) -> Self {
        Ideal {
            ring_order: ring.order(),
            members: mask.to_vec(),
            proper: !mask.contains(ring.one()),
            mask,
        }
    }

    pub fn zero(ring: &FiniteRing) -> Self {
        Self::from_mask(ring, BitSet::from_iter_with_len(ring.order(), [ring.zero()]))
    }

    pub fn whole(ring: &FiniteRing) -> Self {
        Self::from_mask(ring, BitSet::full(ring.order()))
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn mask(&self) -> &BitSet {
        &self.mask
    }

    pub fn contains(&self, x: usize) -> bool {
        self.mask.contains(x)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `1 ∉ I`.
    pub fn is_proper(&self) -> bool {
        self.proper
    }

    pub fn is_zero(&self) -> bool {
        self.members.len() == 1
    }

    pub fn ring_order(&self) -> usize {
        self.ring_order
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.mask.is_subset(&other.mask)
    }

    pub(crate) fn check_ring(&self, ring: &FiniteRing) -> Result<(), RingError> {
        if self.ring_order != ring.order() {
            return Err(RingError::Mismatch(format!(
                "ideal of a ring of order {}, ring has order {}",
                self.ring_order,
                ring.order()
            )));
        }
        Ok(())
    }
}

/// `A + B = {a + b}` for two ideals given as masks.
fn ideal_sum(ring: &FiniteRing, a: &BitSet, b: &BitSet) -> BitSet {
    let mut out = BitSet::new(ring.order());
    let bs = b.to_vec();
    for x in a.iter() {
        for &y in &bs {
            out.insert(ring.add(x, y));
        }
    }
    out
}

/// Smallest ideal containing `gens`, by worklist closure under `+` and ring multiples.
pub fn ideal_generated(ring: &FiniteRing, gens: &[usize]) -> Ideal {
    let n = ring.order();
    let mut mask = BitSet::new(n);
    let mut queue: VecDeque<usize> = VecDeque::new();
    for &x in std::iter::once(&ring.zero()).chain(gens) {
        if mask.insert(x) {
            queue.push_back(x);
        }
    }
    let mut members: Vec<usize> = mask.to_vec();
    while let Some(a) = queue.pop_front() {
        for r in 0..n {
            let ar = ring.mul(a, r);
            if mask.insert(ar) {
                members.push(ar);
                queue.push_back(ar);
            }
        }
        let mut i = 0;
        while i < members.len() {
            let s = ring.add(a, members[i]);
            if mask.insert(s) {
                members.push(s);
                queue.push_back(s);
            }
            i += 1;
        }
    }
    Ideal::from_mask(ring, mask)
}

/// The set `xR + I`.
pub fn affine_orbit(ring: &FiniteRing, x: usize, ideal: &Ideal) -> BitSet {
    ideal_sum(ring, ring.principal(x), ideal.mask())
}

/// All ideals of `ring`, sorted by size then members, found by extending
/// each known ideal `J` to `J + gR` for every `g ∉ J`, starting from `{0}`.
pub fn enumerate_ideals(ring: &FiniteRing) -> Result<Vec<Ideal>, RingError> {
    ring.ideals_cache()
        .get_or_init(|| enumerate_uncached(ring))
        .clone()
}

fn enumerate_uncached(ring: &FiniteRing) -> Result<Vec<Ideal>, RingError> {
    let n = ring.order();
    if n > MAX_IDEAL_ENUM_ORDER {
        return Err(RingError::Cap {
            what: "ideal enumeration",
            order: n,
            cap: MAX_IDEAL_ENUM_ORDER,
        });
    }
    let principal = ring.principal_all();
    let start = BitSet::from_iter_with_len(n, [ring.zero()]);
    let mut seen: HashSet<BitSet> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(j) = queue.pop_front() {
        for g in 0..n {
            if j.contains(g) {
                continue;
            }
            let next = ideal_sum(ring, &j, &principal[g]);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut ideals: Vec<Ideal> = seen.into_iter().map(|m| Ideal::from_mask(ring, m)).collect();
    ideals.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.members.cmp(&b.members)));
    Ok(ideals)
}

/// Proper ideals maximal under inclusion.
pub fn maximal_ideals(ring: &FiniteRing) -> Result<Vec<Ideal>, RingError> {
    let ideals = enumerate_ideals(ring)?;
    let proper: Vec<&Ideal> = ideals.iter().filter(|i| i.is_proper()).collect();
    Ok(proper
        .iter()
        .filter(|i| !proper.iter().any(|j| j.len() > i.len() && i.is_subset(j)))
        .map(|i| (*i).clone())
        .collect())
}

/// Intersection of the maximal ideals.
pub fn jacobson_radical(ring: &FiniteRing) -> Result<Ideal, RingError> {
    if ring.is_zero_ring() {
        return Err(RingError::ZeroRing);
    }
    let mut mask = BitSet::full(ring.order());
    for m in maximal_ideals(ring)? {
        mask.intersect_with(m.mask());
    }
    Ok(Ideal::from_mask(ring, mask))
}

/// The unique maximal ideal when `ring` is local.
pub fn is_local(ring: &FiniteRing) -> Result<Option<Ideal>, RingError> {
    let mut max = maximal_ideals(ring)?;
    Ok(if max.len() == 1 { max.pop() } else { None })
}

/// A quotient ring together with the projection `R -> R/I`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub ring: FiniteRing,
    pub projection: Vec<usize>,
}

/// `R/I` on cosets ordered by least member; labels are `a+I` with `a` the
/// least member. The zero ideal yields `R` itself with the identity projection.
pub fn quotient_ring(ring: &FiniteRing, ideal: &Ideal) -> Result<Quotient, RingError> {
    ideal.check_ring(ring)?;
    if !ideal.is_proper() {
        return Err(RingError::Improper);
    }
    let n = ring.order();
    if ideal.is_zero() {
        return Ok(Quotient {
            ring: ring.clone(),
            projection: (0..n).collect(),
        });
    }
    let mut projection = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if projection[x] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for &i in ideal.members() {
            projection[ring.add(x, i)] = c;
        }
    }
    let m = reps.len();
    let mut add = Vec::with_capacity(m * m);
    let mut mul = Vec::with_capacity(m * m);
    for &a in &reps {
        for &b in &reps {
            add.push(projection[ring.add(a, b)] as u32);
            mul.push(projection[ring.mul(a, b)] as u32);
        }
    }
    let labels = reps.iter().map(|&a| format!("{}+I", ring.label(a))).collect();
    let q = FiniteRing::from_tables(labels, add, mul, format!("{}/I", ring.expr()))?;
    Ok(Quotient { ring: q, projection })
}

/// Result of [`min_generators`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinGenerators {
    Exactly { count: usize, generators: Vec<usize> },
    ExceedsCap { cap: usize },
}

impl MinGenerators {
    pub fn count(&self) -> Option<usize> {
        match self {
            MinGenerators::Exactly { count, .. } => Some(*count),
            MinGenerators::ExceedsCap { .. } => None,
        }
    }
}

pub const MAX_GENERATOR_CAP: usize = 5;
pub const MAX_GENERATED_IDEAL: usize = 128;

/// Least number of elements generating `ideal`, searching `k = 0..=cap`.
///
/// Level `k` holds every distinct ideal generated by some `k` elements of
/// `ideal` (one witness generator list each); level `k+1` extends each by one
/// more element. Deduplicating by ideal keeps the search exhaustive.
pub fn min_generators(ring: &FiniteRing, ideal: &Ideal, cap: usize) -> Result<MinGenerators, RingError> {
    ideal.check_ring(ring)?;
    if cap > MAX_GENERATOR_CAP {
        return Err(RingError::Cap {
            what: "generator search depth",
            order: cap,
            cap: MAX_GENERATOR_CAP,
        });
    }
    if ideal.len() > MAX_GENERATED_IDEAL {
        return Err(RingError::Cap {
            what: "generator search",
            order: ideal.len(),
            cap: MAX_GENERATED_IDEAL,
        });
    }
    if ideal.is_zero() {
        return Ok(MinGenerators::Exactly {
            count: 0,
            generators: Vec::new(),
        });
    }
    let principal = ring.principal_all();
    let start = BitSet::from_iter_with_len(ring.order(), [ring.zero()]);
    let mut level: HashMap<BitSet, Vec<usize>> = HashMap::from([(start, Vec::new())]);
    for k in 1..=cap {
        let mut next: HashMap<BitSet, Vec<usize>> = HashMap::new();
        let mut keys: Vec<&BitSet> = level.keys().collect();
        keys.sort();
        for j in keys {
            let gens = &level[j];
            for &g in ideal.members() {
                if j.contains(g) {
                    continue;
                }
                let sum = ideal_sum(ring, j, &principal[g]);
                next.entry(sum).or_insert_with(|| {
                    let mut v = gens.clone();
                    v.push(g);
                    v
                });
            }
        }
        if let Some(gens) = next.get(ideal.mask()) {
            let mut generators = gens.clone();
            generators.sort_unstable();
            return Ok(MinGenerators::Exactly { count: k, generators });
        }
        level = next;
    }
    Ok(MinGenerators::ExceedsCap { cap })
}

/// A product ideal `I1 × ... × In`, flagged when some `Ii` is a whole factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductIdeal {
    pub ideal: Ideal,
    pub component_proper: bool,
}

/// `{(a1, ..., an) : ai ∈ Ii}` inside a ring built by `make_product_all`.
pub fn product_ideal(
    ring: &FiniteRing,
    factors: &[&FiniteRing],
    parts: &[&Ideal],
) -> Result<ProductIdeal, RingError> {
    let orders = ring.factor_orders();
    if orders.len() != parts.len() || factors.len() != parts.len() {
        return Err(RingError::Mismatch(format!(
            "ring has {} factors, got {} ideals",
            orders.len(),
            parts.len()
        )));
    }
    for ((f, part), &o) in factors.iter().zip(parts).zip(orders) {
        if f.order() != o {
            return Err(RingError::Mismatch(format!(
                "factor of order {} where {o} expected",
                f.order()
            )));
        }
        part.check_ring(f)?;
    }
    let mut mask = BitSet::new(ring.order());
    let mut idx = vec![0usize; parts.len()];
    'outer: loop {
        let tuple: Vec<usize> = idx.iter().zip(parts).map(|(&i, p)| p.members()[i]).collect();
        mask.insert(ring.compose(&tuple));
        for k in (0..idx.len()).rev() {
            idx[k] += 1;
            if idx[k] < parts[k].len() {
                continue 'outer;
            }
            idx[k] = 0;
        }
        break;
    }
    Ok(ProductIdeal {
        ideal: Ideal::from_mask(ring, mask),
        component_proper: parts.iter().all(|p| p.is_proper()),
    })
}
