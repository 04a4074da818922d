//! Named rings: finite fields `GF(q)` and a few local rings whose maximal
//! ideal is not principal.

use super::build::{make_quotient_poly, make_zn};
use super::{FiniteRing, RingError};

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// `(p, d)` with `q = p^d`, when `q` is a prime power.
fn prime_power(q: u64) -> Option<(u64, u32)> {
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut rest = q;
    let mut d = 0;
    while rest % p == 0 {
        rest /= p;
        d += 1;
    }
    (rest == 1).then_some((p, d))
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let d = f.len() - 1;
    // Any factorization has a monic factor of degree <= d/2.
    for k in 1..=d / 2 {
        let count = p.pow(k as u32);
        for code in 0..count {
            let mut g: Vec<u64> = (0..k)
                .scan(code, |c, _| {
                    let v = *c % p;
                    *c /= p;
                    Some(v)
                })
                .collect();
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn poly_rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    for k in (dg..r.len()).rev() {
        let c = r[k];
        if c == 0 {
            continue;
        }
        for (i, &gi) in g.iter().enumerate() {
            let idx = k - dg + i;
            r[idx] = (r[idx] + p - (c * gi) % p) % p;
        }
    }
    r.truncate(dg);
    r
}

/// Least monic irreducible polynomial of degree `d` over `Z_p`, ascending coefficients.
pub(crate) fn conway_like_modulus(p: u64, d: u32) -> Vec<u64> {
    let count = p.pow(d);
    for code in 0..count {
        let mut f: Vec<u64> = (0..d)
            .scan(code, |c, _| {
                let v = *c % p;
                *c /= p;
                Some(v)
            })
            .collect();
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// The finite field with `q` elements.
pub fn gf(q: u64) -> Result<FiniteRing, RingError> {
    let (p, d) = prime_power(q).ok_or(RingError::UnknownCatalog(format!("GF({q})")))?;
    let mut ring = if d == 1 {
        make_zn(p as usize)?
    } else {
        make_quotient_poly(p, &conway_like_modulus(p, d))?
    };
    ring.set_expr(format!("GF({q})"));
    Ok(ring)
}

/// `base ⋉ coeff^vars`: pairs `(a, v)` with `(a,v)(b,w) = (ab, φ(a)w + φ(b)v)`,
/// i.e. `base[X1..Xk]` modulo all degree-two monomials. `phi` maps base
/// elements into `coeff` and must be a ring homomorphism.
fn square_zero_extension(
    base: &FiniteRing,
    coeff: &FiniteRing,
    phi: &[usize],
    vars: &[&str],
    expr: &str,
) -> Result<FiniteRing, RingError> {
    let nb = base.order();
    let nc = coeff.order();
    let k = vars.len();
    let n = nb * nc.pow(k as u32);
    let split = |mut x: usize| -> (usize, Vec<usize>) {
        let mut v = vec![0; k];
        for slot in v.iter_mut().rev() {
            *slot = x % nc;
            x /= nc;
        }
        (x, v)
    };
    let join = |a: usize, v: &[usize]| v.iter().fold(a, |acc, &c| acc * nc + c);
    let elems: Vec<(usize, Vec<usize>)> = (0..n).map(split).collect();

    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for (a, v) in &elems {
        for (b, w) in &elems {
            let s: Vec<usize> = v.iter().zip(w).map(|(&x, &y)| coeff.add(x, y)).collect();
            add.push(join(base.add(*a, *b), &s) as u32);
            let pa = phi[*a];
            let pb = phi[*b];
            let t: Vec<usize> = v
                .iter()
                .zip(w)
                .map(|(&x, &y)| coeff.add(coeff.mul(pa, y), coeff.mul(pb, x)))
                .collect();
            mul.push(join(base.mul(*a, *b), &t) as u32);
        }
    }
    let labels = elems
        .iter()
        .map(|(a, v)| {
            let mut terms: Vec<String> = v
                .iter()
                .zip(vars)
                .rev()
                .filter(|(&c, _)| c != coeff.zero())
                .map(|(&c, var)| {
                    let cl = coeff.label(c);
                    if c == coeff.one() {
                        (*var).to_string()
                    } else if cl.contains('+') {
                        format!("({cl}){var}")
                    } else {
                        format!("{cl}{var}")
                    }
                })
                .collect();
            terms.reverse();
            if *a != base.zero() || terms.is_empty() {
                terms.push(base.label(*a).to_string());
            }
            terms.join("+")
        })
        .collect();
    FiniteRing::from_tables(labels, add, mul, expr.to_string())
}

struct Entry {
    name: &'static str,
    build: fn() -> Result<FiniteRing, RingError>,
}

const NAMED: &[Entry] = &[
    Entry {
        name: "Z2xy",
        build: || {
            let z2 = make_zn(2)?;
            square_zero_extension(&z2, &z2, &[0, 1], &["x", "y"], "cat(Z2xy)")
        },
    },
    Entry {
        name: "Z4x",
        build: || {
            let z4 = make_zn(4)?;
            let z2 = make_zn(2)?;
            square_zero_extension(&z4, &z2, &[0, 1, 0, 1], &["x"], "cat(Z4x)")
        },
    },
    Entry {
        name: "Z3xy",
        build: || {
            let z3 = make_zn(3)?;
            square_zero_extension(&z3, &z3, &[0, 1, 2], &["x", "y"], "cat(Z3xy)")
        },
    },
    Entry {
        name: "F4uv",
        build: || {
            let f4 = gf(4)?;
            square_zero_extension(&f4, &f4, &[0, 1, 2, 3], &["u", "v"], "cat(F4uv)")
        },
    },
];

/// Names accepted by [`catalog_ring`] besides `GF(q)`.
pub fn catalog_names() -> Vec<&'static str> {
    NAMED.iter().map(|e| e.name).collect()
}

/// Looks up a named ring: `Z2xy` = Z_2[X,Y]/(X²,XY,Y²), `Z4x` = Z_4[X]/(X²,2X),
/// `Z3xy` = Z_3[X,Y]/(X²,XY,Y²), `F4uv` = GF(4)[U,V]/(U²,UV,V²), and
/// `GF(q)` for prime powers `q <= 25`.
pub fn catalog_ring(name: &str) -> Result<FiniteRing, RingError> {
    let trimmed = name.trim();
    if let Some(q) = trimmed
        .strip_prefix("GF(")
        .and_then(|s| s.strip_suffix(')'))
        .and_then(|s| s.trim().parse::<u64>().ok())
    {
        if q <= 25 && prime_power(q).is_some() {
            return gf(q);
        }
        return Err(RingError::UnknownCatalog(trimmed.to_string()));
    }
    NAMED
        .iter()
        .find(|e| e.name == trimmed)
        .ok_or_else(|| RingError::UnknownCatalog(trimmed.to_string()))
        .and_then(|e| (e.build)())
}

/// Local rings of order `<= max_order`: `Z(p^k)`, non-prime `GF(q)`,
/// `Z_2[X]/(X²)` and the catalog rings with non-principal maximal ideal.
pub fn local_catalog(max_order: usize) -> Result<Vec<FiniteRing>, RingError> {
    let mut out = Vec::new();
    for q in 2..=max_order as u64 {
        if let Some((_, d)) = prime_power(q) {
            out.push(make_zn(q as usize)?);
            if d > 1 {
                out.push(gf(q)?);
            }
        }
    }
    if max_order >= 4 {
        out.push(make_quotient_poly(2, &[0, 0, 1])?);
    }
    for name in ["Z2xy", "Z4x"] {
        let r = catalog_ring(name)?;
        if r.order() <= max_order {
            out.push(r);
        }
    }
    Ok(out)
}
