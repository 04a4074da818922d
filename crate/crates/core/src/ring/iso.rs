//! Ring isomorphism by invariant filtering and generator backtracking.

use std::collections::BTreeMap;

use super::{FiniteRing, RingError, MAX_ISO_ORDER};

/// Isomorphism invariants; equal invariants are necessary for isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IsoInvariants {
    pub order: usize,
    pub characteristic: usize,
    pub units: usize,
    pub idempotents: usize,
    pub nilpotents: usize,
    /// Sorted multiset of per-element signatures.
    pub profile: Vec<(usize, usize, bool, bool)>,
}

/// `(additive order, |xR|, unit, nilpotent)`.
fn signature(r: &FiniteRing, x: usize) -> (usize, usize, bool, bool) {
    (r.additive_order(x), r.principal(x).count(), r.is_unit(x), is_nilpotent(r, x))
}

fn is_nilpotent(r: &FiniteRing, x: usize) -> bool {
    let mut p = x;
    for _ in 0..r.order() {
        if p == r.zero() {
            return true;
        }
        p = r.mul(p, x);
    }
    p == r.zero()
}

pub fn iso_invariants(r: &FiniteRing) -> IsoInvariants {
    let mut profile: Vec<_> = r.elements().map(|x| signature(r, x)).collect();
    profile.sort_unstable();
    IsoInvariants {
        order: r.order(),
        characteristic: r.characteristic(),
        units: r.units().len(),
        idempotents: r.elements().filter(|&x| r.mul(x, x) == x).count(),
        nilpotents: profile.iter().filter(|s| s.3).count(),
        profile,
    }
}

/// Greedy generators: each adds an element outside the subring generated so far.
fn ring_generators(r: &FiniteRing) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut closed = subring_closure(r, &[]);
    for x in r.elements() {
        if !closed[x] {
            gens.push(x);
            closed = subring_closure(r, &gens);
        }
    }
    gens
}

fn subring_closure(r: &FiniteRing, gens: &[usize]) -> Vec<bool> {
    let mut seen = vec![false; r.order()];
    let mut list = Vec::new();
    for &x in [r.zero(), r.one()].iter().chain(gens) {
        if !seen[x] {
            seen[x] = true;
            list.push(x);
        }
    }
    let mut i = 0;
    while i < list.len() {
        let a = list[i];
        for j in 0..=i {
            let b = list[j];
            for c in [r.add(a, b), r.mul(a, b)] {
                if !seen[c] {
                    seen[c] = true;
                    list.push(c);
                }
            }
        }
        i += 1;
    }
    seen
}

/// Partial map closed under `+` and `·`.
#[derive(Clone)]
struct Partial {
    fwd: Vec<Option<usize>>,
    back: Vec<Option<usize>>,
    domain: Vec<usize>,
}

impl Partial {
    /// Sets `f(a) = b` and closes; `false` on a conflict.
    fn assign(&mut self, r1: &FiniteRing, r2: &FiniteRing, a: usize, b: usize) -> bool {
        let mut queue = vec![(a, b)];
        while let Some((x, y)) = queue.pop() {
            match (self.fwd[x], self.back[y]) {
                (Some(fy), _) if fy == y => continue,
                (Some(_), _) | (None, Some(_)) => return false,
                (None, None) => {}
            }
            self.fwd[x] = Some(y);
            self.back[y] = Some(x);
            self.domain.push(x);
            for k in 0..self.domain.len() {
                let u = self.domain[k];
                let fu = self.fwd[u].unwrap();
                queue.push((r1.add(x, u), r2.add(y, fu)));
                queue.push((r1.mul(x, u), r2.mul(y, fu)));
            }
        }
        true
    }
}

/// An isomorphism `R1 -> R2` as an index map, or `None` when none exists.
pub fn ring_iso(r1: &FiniteRing, r2: &FiniteRing) -> Result<Option<Vec<usize>>, RingError> {
    for r in [r1, r2] {
        if r.order() > MAX_ISO_ORDER {
            return Err(RingError::Cap {
                what: "isomorphism search",
                order: r.order(),
                cap: MAX_ISO_ORDER,
            });
        }
    }
    if r1.order() != r2.order() {
        return Ok(None);
    }
    if r1.is_zero_ring() {
        return Ok(Some(vec![0]));
    }
    if iso_invariants(r1) != iso_invariants(r2) {
        return Ok(None);
    }
    let mut by_sig: BTreeMap<_, Vec<usize>> = BTreeMap::new();
    for y in r2.elements() {
        by_sig.entry(signature(r2, y)).or_default().push(y);
    }
    let gens = ring_generators(r1);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| by_sig.get(&signature(r1, g)).cloned().unwrap_or_default())
        .collect();

    let n = r1.order();
    let mut start = Partial {
        fwd: vec![None; n],
        back: vec![None; n],
        domain: Vec::new(),
    };
    if !start.assign(r1, r2, r1.zero(), r2.zero()) || !start.assign(r1, r2, r1.one(), r2.one()) {
        return Ok(None);
    }
    Ok(search(r1, r2, &gens, &candidates, 0, start))
}

fn search(
    r1: &FiniteRing,
    r2: &FiniteRing,
    gens: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    map: Partial,
) -> Option<Vec<usize>> {
    if depth == gens.len() {
        return map.fwd.iter().copied().collect();
    }
    for &c in &candidates[depth] {
        let mut next = map.clone();
        if next.assign(r1, r2, gens[depth], c) {
            if let Some(found) = search(r1, r2, gens, candidates, depth + 1, next) {
                return Some(found);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{catalog_ring, gf, make_product, make_quotient_poly, make_zn};

    fn is_iso_map(r1: &FiniteRing, r2: &FiniteRing, f: &[usize]) -> bool {
        let mut hit = vec![false; r2.order()];
        f.iter().for_each(|&y| hit[y] = true);
        hit.iter().all(|&h| h)
            && r1.elements().all(|a| {
                r1.elements().all(|b| {
                    f[r1.add(a, b)] == r2.add(f[a], f[b]) && f[r1.mul(a, b)] == r2.mul(f[a], f[b])
                })
            })
    }

    #[test]
    fn crt_isomorphism() {
        let z12 = make_zn(12).unwrap();
        let p = make_product(&make_zn(3).unwrap(), &make_zn(4).unwrap()).unwrap();
        let f = ring_iso(&p, &z12).unwrap().unwrap();
        assert!(is_iso_map(&p, &z12, &f));
    }

    #[test]
    fn non_isomorphic_rings_of_order_four() {
        let rings = [
            make_zn(4).unwrap(),
            gf(4).unwrap(),
            make_quotient_poly(2, &[0, 0, 1]).unwrap(),
            make_product(&make_zn(2).unwrap(), &make_zn(2).unwrap()).unwrap(),
            make_quotient_poly(2, &[1, 0, 1]).unwrap(),
        ];
        for (i, a) in rings.iter().enumerate() {
            for (j, b) in rings.iter().enumerate() {
                let same = ring_iso(a, b).unwrap().is_some();
                // Z_2[X]/(X^2+1) is Z_2[X]/(X^2) after X -> X+1.
                let expected = i == j || (i.min(j), i.max(j)) == (2, 4);
                assert_eq!(same, expected, "{} vs {}", a.expr(), b.expr());
            }
        }
    }

    #[test]
    fn order_eight_locals_differ() {
        let a = catalog_ring("Z2xy").unwrap();
        let b = catalog_ring("Z4x").unwrap();
        let c = make_zn(8).unwrap();
        assert!(ring_iso(&a, &b).unwrap().is_none());
        assert!(ring_iso(&a, &c).unwrap().is_none());
        assert!(ring_iso(&b, &c).unwrap().is_none());
        let f = ring_iso(&a, &a).unwrap().unwrap();
        assert!(is_iso_map(&a, &a, &f));
    }

    #[test]
    fn gf_moduli_agree() {
        // Two different irreducible cubics give the same field.
        let a = make_quotient_poly(2, &[1, 1, 0, 1]).unwrap();
        let b = make_quotient_poly(2, &[1, 0, 1, 1]).unwrap();
        let f = ring_iso(&a, &b).unwrap().unwrap();
        assert!(is_iso_map(&a, &b, &f));
    }

    #[test]
    fn cap() {
        let big = make_zn(65).unwrap();
        assert!(ring_iso(&big, &big).is_err());
    }
}
