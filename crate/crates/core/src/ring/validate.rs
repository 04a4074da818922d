//! Ring axiom validation.
//!
//! Associativity and distributivity are checked against an additive
//! generating set `G` instead of all triples: `+` is associative iff
//! `(x+g)+y = x+(g+y)` for every generator `g` (Light's test), `x·-` is
//! additive iff `x(y+g) = xy+xg` for every generator, and once the product is
//! biadditive, associativity reduces to triples of generators. The cost is
//! `O(|G|·n²)` with `|G| <= log2(n)`.

use super::{check_labels, FiniteRing, RingError};

pub(super) struct Checked {
    pub zero: usize,
    pub one: usize,
    pub neg: Vec<u32>,
}

fn label(labels: &[String], i: usize) -> String {
    labels[i].clone()
}

fn fail(labels: &[String], axiom: &'static str, a: usize, b: usize, c: usize) -> RingError {
    RingError::Axiom {
        axiom,
        a: label(labels, a),
        b: label(labels, b),
        c: label(labels, c),
    }
}

pub(super) fn validate(labels: &[String], add: &[u32], mul: &[u32]) -> Result<Checked, RingError> {
    let n = labels.len();
    if n == 0 || n > super::MAX_ORDER {
        return Err(RingError::Size {
            order: n,
            cap: super::MAX_ORDER,
        });
    }
    if add.len() != n * n || mul.len() != n * n {
        return Err(RingError::Shape(format!(
            "expected {} entries per table, got {} and {}",
            n * n,
            add.len(),
            mul.len()
        )));
    }
    if let Some(bad) = add.iter().chain(mul).find(|&&v| v as usize >= n) {
        return Err(RingError::Shape(format!("entry {bad} out of range 0..{n}")));
    }
    check_labels(labels)?;

    let a = |x: usize, y: usize| add[x * n + y] as usize;
    let m = |x: usize, y: usize| mul[x * n + y] as usize;

    for x in 0..n {
        for y in x + 1..n {
            if a(x, y) != a(y, x) {
                return Err(fail(labels, "additive commutativity", x, y, y));
            }
            if m(x, y) != m(y, x) {
                return Err(fail(labels, "multiplicative commutativity", x, y, y));
            }
        }
    }

    let zero = (0..n)
        .find(|&e| (0..n).all(|x| a(e, x) == x))
        .ok_or_else(|| fail(labels, "additive identity", 0, 0, 0))?;
    let mut neg = vec![0u32; n];
    for x in 0..n {
        let y = (0..n)
            .find(|&y| a(x, y) == zero)
            .ok_or_else(|| fail(labels, "additive inverse", x, x, x))?;
        neg[x] = y as u32;
    }
    let one = (0..n)
        .find(|&e| (0..n).all(|x| m(e, x) == x))
        .ok_or_else(|| fail(labels, "multiplicative identity", 0, 0, 0))?;
    if n > 1 && one == zero {
        return Err(fail(labels, "nonzero identity", one, one, one));
    }

    let gens = additive_generators(n, zero, &a);

    for &g in &gens {
        for x in 0..n {
            let xg = a(x, g);
            for y in 0..n {
                if a(xg, y) != a(x, a(g, y)) {
                    return Err(fail(labels, "additive associativity", x, g, y));
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = m(x, y);
            for &g in &gens {
                if m(x, a(y, g)) != a(xy, m(x, g)) {
                    return Err(fail(labels, "distributivity", x, y, g));
                }
            }
        }
    }
    for &g1 in &gens {
        for &g2 in &gens {
            for &g3 in &gens {
                if m(m(g1, g2), g3) != m(g1, m(g2, g3)) {
                    return Err(fail(labels, "multiplicative associativity", g1, g2, g3));
                }
            }
        }
    }

    Ok(Checked { zero, one, neg })
}

/// Greedy generating set: every element is a left-bracketed sum of generators.
fn additive_generators(n: usize, zero: usize, a: &impl Fn(usize, usize) -> usize) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut reached = vec![false; n];
    reached[zero] = true;
    let mut count = 1;
    for x in 0..n {
        if reached[x] {
            continue;
        }
        gens.push(x);
        let mut frontier: Vec<usize> = (0..n).filter(|&i| reached[i]).collect();
        while let Some(c) = frontier.pop() {
            for &g in &gens {
                let s = a(c, g);
                if !reached[s] {
                    reached[s] = true;
                    count += 1;
                    frontier.push(s);
                }
            }
        }
        if count == n {
            break;
        }
    }
    gens
}

pub(super) fn validate_exhaustive(r: &FiniteRing) -> Result<(), RingError> {
    let n = r.order();
    check_labels(r.labels())?;
    for x in 0..n {
        if r.add(r.zero(), x) != x {
            return Err(r.axiom_error("additive identity", r.zero(), x, x));
        }
        if r.mul(r.one(), x) != x {
            return Err(r.axiom_error("multiplicative identity", r.one(), x, x));
        }
        if r.add(x, r.neg(x)) != r.zero() {
            return Err(r.axiom_error("additive inverse", x, x, x));
        }
        for y in 0..n {
            if r.add(x, y) != r.add(y, x) {
                return Err(r.axiom_error("additive commutativity", x, y, y));
            }
            if r.mul(x, y) != r.mul(y, x) {
                return Err(r.axiom_error("multiplicative commutativity", x, y, y));
            }
            for z in 0..n {
                if r.add(r.add(x, y), z) != r.add(x, r.add(y, z)) {
                    return Err(r.axiom_error("additive associativity", x, y, z));
                }
                if r.mul(r.mul(x, y), z) != r.mul(x, r.mul(y, z)) {
                    return Err(r.axiom_error("multiplicative associativity", x, y, z));
                }
                if r.mul(x, r.add(y, z)) != r.add(r.mul(x, y), r.mul(x, z)) {
                    return Err(r.axiom_error("distributivity", x, y, z));
                }
            }
        }
    }
    if n > 1 && r.one() == r.zero() {
        return Err(r.axiom_error("nonzero identity", r.one(), r.one(), r.one()));
    }
    Ok(())
}
