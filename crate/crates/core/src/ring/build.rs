use super::catalog::is_prime;
use super::{FiniteRing, RingError, MAX_ORDER};

/// The ring of integers modulo `n`.
pub fn make_zn(n: usize) -> Result<FiniteRing, RingError> {
    if n == 0 || n > MAX_ORDER {
        return Err(RingError::Size {
            order: n,
            cap: MAX_ORDER,
        });
    }
    let labels = (0..n).map(|i| i.to_string()).collect();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            add.push(((a + b) % n) as u32);
            mul.push(((a * b) % n) as u32);
        }
    }
    FiniteRing::from_tables(labels, add, mul, format!("Z({n})"))
}

/// `Z_p[X]/(f)` for a monic `f` given by ascending coefficients `c0, c1, ..., cd`.
pub fn make_quotient_poly(p: u64, coeffs: &[u64]) -> Result<FiniteRing, RingError> {
    if !is_prime(p) {
        return Err(RingError::NotPrime(p));
    }
    let f: Vec<u64> = coeffs.iter().map(|c| c % p).collect();
    let describe = || format!("{coeffs:?}");
    if f.len() < 2 || *f.last().unwrap() != 1 {
        return Err(RingError::NotMonic(describe()));
    }
    let d = f.len() - 1;
    let order = (p as usize)
        .checked_pow(d as u32)
        .filter(|&o| o <= MAX_ORDER)
        .ok_or(RingError::Size {
            order: usize::MAX,
            cap: MAX_ORDER,
        })?;
    let p_us = p as usize;
    let decode = |mut x: usize| -> Vec<u64> {
        (0..d)
            .map(|_| {
                let c = (x % p_us) as u64;
                x /= p_us;
                c
            })
            .collect()
    };
    let encode = |v: &[u64]| -> usize { v.iter().rev().fold(0, |acc, &c| acc * p_us + c as usize) };
    let polys: Vec<Vec<u64>> = (0..order).map(decode).collect();

    let mut add = Vec::with_capacity(order * order);
    let mut mul = Vec::with_capacity(order * order);
    for a in &polys {
        for b in &polys {
            let s: Vec<u64> = a.iter().zip(b).map(|(x, y)| (x + y) % p).collect();
            add.push(encode(&s) as u32);
            mul.push(encode(&mul_mod(a, b, &f, p)) as u32);
        }
    }
    let labels = polys.iter().map(|v| poly_label(v, "x")).collect();
    let expr = format!(
        "GF({p},[{}])",
        f.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
    );
    FiniteRing::from_tables(labels, add, mul, expr)
}

/// Product modulo a monic polynomial; all inputs reduced mod `p`.
pub(crate) fn mul_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let d = f.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for k in (d..prod.len()).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        // subtract c * X^(k-d) * f
        for (i, &fi) in f.iter().enumerate() {
            let idx = k - d + i;
            prod[idx] = (prod[idx] + (p - (c * fi) % p)) % p;
        }
    }
    prod.truncate(d);
    prod.resize(d, 0);
    prod
}

/// Renders ascending coefficients as `2x^2+x+1`.
pub(crate) fn poly_label(coeffs: &[u64], var: &str) -> String {
    let mut terms = Vec::new();
    for (k, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let coef = if c == 1 && k > 0 {
            String::new()
        } else {
            c.to_string()
        };
        terms.push(match k {
            0 => coef,
            1 => format!("{coef}{var}"),
            _ => format!("{coef}{var}^{k}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// Binary direct product with labels `(a,b)`.
pub fn make_product(r1: &FiniteRing, r2: &FiniteRing) -> Result<FiniteRing, RingError> {
    make_product_all(&[r1, r2])
}

/// Direct product of any number of factors; elements are tuples in
/// mixed-radix order, first factor most significant.
pub fn make_product_all(factors: &[&FiniteRing]) -> Result<FiniteRing, RingError> {
    if factors.is_empty() {
        return Err(RingError::Shape("empty product".into()));
    }
    if factors.iter().any(|f| f.is_zero_ring()) {
        return Err(RingError::ZeroRing);
    }
    let orders: Vec<usize> = factors.iter().map(|f| f.order()).collect();
    let n = orders
        .iter()
        .try_fold(1usize, |acc, &o| acc.checked_mul(o).filter(|&v| v <= MAX_ORDER))
        .ok_or(RingError::Size {
            order: orders.iter().map(|&o| o as u128).product::<u128>() as usize,
            cap: MAX_ORDER,
        })?;

    let split = |mut x: usize| -> Vec<usize> {
        let mut parts = vec![0; orders.len()];
        for (slot, &m) in parts.iter_mut().zip(&orders).rev() {
            *slot = x % m;
            x /= m;
        }
        parts
    };
    let join = |parts: &[usize]| parts.iter().zip(&orders).fold(0, |acc, (&p, &m)| acc * m + p);

    let tuples: Vec<Vec<usize>> = (0..n).map(split).collect();
    let labels = tuples
        .iter()
        .map(|t| {
            let inner: Vec<&str> = t.iter().zip(factors).map(|(&x, f)| f.label(x)).collect();
            format!("({})", inner.join(","))
        })
        .collect();
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    let mut s = vec![0; orders.len()];
    let mut p = vec![0; orders.len()];
    for a in &tuples {
        for b in &tuples {
            for (i, f) in factors.iter().enumerate() {
                s[i] = f.add(a[i], b[i]);
                p[i] = f.mul(a[i], b[i]);
            }
            add.push(join(&s) as u32);
            mul.push(join(&p) as u32);
        }
    }
    let expr = format!(
        "prod({})",
        factors.iter().map(|f| f.expr()).collect::<Vec<_>>().join(",")
    );
    let mut ring = FiniteRing::from_tables(labels, add, mul, expr)?;
    ring.factor_orders = orders;
    Ok(ring)
}

/// Builds a ring from explicit tables; zero and one are inferred.
pub fn make_table_ring(
    labels: Vec<String>,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
) -> Result<FiniteRing, RingError> {
    let n = labels.len();
    let flatten = |t: Vec<Vec<usize>>, name: &str| -> Result<Vec<u32>, RingError> {
        if t.len() != n || t.iter().any(|row| row.len() != n) {
            return Err(RingError::Shape(format!("{name} table is not {n}x{n}")));
        }
        Ok(t.into_iter().flatten().map(|v| v as u32).collect())
    };
    let add = flatten(add, "addition")?;
    let mul = flatten(mul, "multiplication")?;
    FiniteRing::from_tables(labels, add, mul, "table".into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{enumerate_ideals, ring_iso};

    #[test]
    fn zn_size_errors() {
        assert!(matches!(make_zn(0), Err(RingError::Size { .. })));
        assert!(matches!(make_zn(MAX_ORDER + 1), Err(RingError::Size { .. })));
        let z1 = make_zn(1).unwrap();
        assert!(z1.is_zero_ring());
        assert_eq!(z1.zero(), z1.one());
    }

    #[test]
    fn zn_ideal_count_matches_divisors() {
        assert_eq!(enumerate_ideals(&make_zn(12).unwrap()).unwrap().len(), 6);
    }

    #[test]
    fn quotient_poly_dual_numbers_and_gf4() {
        let dual = make_quotient_poly(2, &[0, 0, 1]).unwrap();
        assert_eq!(dual.order(), 4);
        assert_eq!(dual.labels(), &["0", "1", "x", "x+1"]);
        assert_eq!(dual.units().len(), 2);

        let f4 = make_quotient_poly(2, &[1, 1, 1]).unwrap();
        // every nonzero element has an inverse found by table search
        for x in 1..4 {
            assert!((0..4).any(|y| f4.mul(x, y) == f4.one()), "{x}");
        }
        assert_eq!(f4.units().len(), 3);
    }

    #[test]
    fn quotient_poly_rejects_bad_input() {
        assert_eq!(make_quotient_poly(4, &[0, 0, 1]).unwrap_err(), RingError::NotPrime(4));
        assert!(matches!(make_quotient_poly(2, &[1, 1, 0]), Err(RingError::NotMonic(_))));
        assert!(matches!(make_quotient_poly(3, &[2]), Err(RingError::NotMonic(_))));
    }

    #[test]
    fn poly_labels() {
        assert_eq!(poly_label(&[1, 1, 2], "x"), "2x^2+x+1");
        assert_eq!(poly_label(&[0, 0], "x"), "0");
    }

    #[test]
    fn products() {
        let z2 = make_zn(2).unwrap();
        let z22 = make_product(&z2, &z2).unwrap();
        assert_eq!(z22.units().len(), 1);
        assert_eq!(z22.label(z22.units()[0]), "(1,1)");
        let z3z4 = make_product(&make_zn(3).unwrap(), &make_zn(4).unwrap()).unwrap();
        assert!(ring_iso(&z3z4, &make_zn(12).unwrap()).unwrap().is_some());
        assert!(matches!(
            make_product(&make_zn(300).unwrap(), &make_zn(300).unwrap()),
            Err(RingError::Size { .. })
        ));
        assert_eq!(make_product(&z2, &make_zn(1).unwrap()).unwrap_err(), RingError::ZeroRing);
    }

    #[test]
    fn table_ring_rejects_nonassociative_mul() {
        // Z_2-algebra on basis {1, e, f} with e·e = f, e·f = e, f·f = 0:
        // commutative, unital and bilinear, but (e·e)·f = 0 while e·(e·f) = f.
        let labels: Vec<String> = (0..8).map(|i| format!("v{i}")).collect();
        let coords = |x: usize| (x & 1, (x >> 1) & 1, (x >> 2) & 1);
        let add = (0..8).map(|a| (0..8).map(|b| a ^ b).collect()).collect();
        let mul = (0..8)
            .map(|x| {
                (0..8)
                    .map(|y| {
                        let (a1, b1, c1) = coords(x);
                        let (a2, b2, c2) = coords(y);
                        let one = a1 * a2;
                        let e = a1 * b2 + b1 * a2 + b1 * c2 + c1 * b2;
                        let f = a1 * c2 + c1 * a2 + b1 * b2;
                        (one % 2) | (e % 2) << 1 | (f % 2) << 2
                    })
                    .collect()
            })
            .collect();
        match make_table_ring(labels, add, mul).unwrap_err() {
            RingError::Axiom { axiom, a, b, c } => {
                assert_eq!(axiom, "multiplicative associativity");
                let idx = |l: &str| l[1..].parse::<usize>().unwrap();
                let t = |x: usize, y: usize| {
                    let (a1, b1, c1) = coords(x);
                    let (a2, b2, c2) = coords(y);
                    ((a1 * a2) % 2) | ((a1 * b2 + b1 * a2 + b1 * c2 + c1 * b2) % 2) << 1
                        | ((a1 * c2 + c1 * a2 + b1 * b2) % 2) << 2
                };
                let (a, b, c) = (idx(&a), idx(&b), idx(&c));
                assert_ne!(t(t(a, b), c), t(a, t(b, c)));
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn table_ring_same_as_zn() {
        let z4 = make_zn(4).unwrap();
        let labels = z4.labels().to_vec();
        let add = (0..4).map(|a| (0..4).map(|b| z4.add(a, b)).collect()).collect();
        let mul = (0..4).map(|a| (0..4).map(|b| z4.mul(a, b)).collect()).collect();
        let t = make_table_ring(labels, add, mul).unwrap();
        assert!(ring_iso(&t, &z4).unwrap().is_some());
    }
}
