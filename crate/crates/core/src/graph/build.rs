use rayon::prelude::*;

use super::{Graph, GraphError};
use crate::bitset::BitSet;
use crate::ring::{affine_orbit, quotient_ring, FiniteRing, Ideal};

/// How to build Γ''_I(R).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Construction {
    /// Γ'(R/I) blown up along the cosets of `I`.
    #[default]
    Fast,
    /// The definition, one affine orbit per element.
    Direct,
}

const PAR_THRESHOLD: usize = 256;

fn check_ring(ring: &FiniteRing) -> Result<(), GraphError> {
    if ring.is_zero_ring() {
        return Err(GraphError::ZeroRing);
    }
    Ok(())
}

fn check_ideal(ring: &FiniteRing, ideal: &Ideal) -> Result<(), GraphError> {
    check_ring(ring)?;
    if ideal.ring_order() != ring.order() {
        return Err(crate::ring::RingError::Mismatch(format!(
            "ideal of a ring of order {}, ring has order {}",
            ideal.ring_order(),
            ring.order()
        ))
        .into());
    }
    if !ideal.is_proper() {
        return Err(GraphError::Improper);
    }
    Ok(())
}

/// Edges `(i, j)`, `i < j`, among `vertices` where `adjacent(x, y)` holds.
fn collect_edges(vertices: &[usize], adjacent: impl Fn(usize, usize) -> bool + Sync) -> Vec<(usize, usize)> {
    let row = |i: usize| -> Vec<(usize, usize)> {
        (i + 1..vertices.len())
            .filter(|&j| adjacent(vertices[i], vertices[j]))
            .map(|j| (i, j))
            .collect()
    };
    if vertices.len() >= PAR_THRESHOLD {
        (0..vertices.len()).into_par_iter().flat_map_iter(row).collect()
    } else {
        (0..vertices.len()).flat_map(row).collect()
    }
}

fn ring_graph(ring: &FiniteRing, vertices: Vec<usize>, edges: Vec<(usize, usize)>) -> Graph {
    let labels = vertices.iter().map(|&x| ring.label(x).to_string()).collect();
    Graph::new(labels, vertices, edges)
}

/// Γ'(R): nonzero non-units, `x ~ y` iff `x ∉ yR` and `y ∉ xR`.
pub fn cozero_graph(ring: &FiniteRing) -> Result<Graph, GraphError> {
    check_ring(ring)?;
    let vertices: Vec<usize> = ring
        .elements()
        .filter(|&x| x != ring.zero() && !ring.is_unit(x))
        .collect();
    let edges = collect_edges(&vertices, |x, y| {
        !ring.principal(y).contains(x) && !ring.principal(x).contains(y)
    });
    Ok(ring_graph(ring, vertices, edges))
}

/// Γ''_I(R) through the default [`Construction::Fast`] path.
pub fn cozero_graph_ideal(ring: &FiniteRing, ideal: &Ideal) -> Result<Graph, GraphError> {
    cozero_graph_ideal_with(ring, ideal, Construction::Fast)
}

/// Γ''_I(R) straight from the definition: vertices `x ∉ I` with
/// `xR + I ≠ R`, `x ~ y` iff `x ∉ yR + I` and `y ∉ xR + I`.
pub fn cozero_graph_ideal_direct(ring: &FiniteRing, ideal: &Ideal) -> Result<Graph, GraphError> {
    cozero_graph_ideal_with(ring, ideal, Construction::Direct)
}

pub fn cozero_graph_ideal_with(
    ring: &FiniteRing,
    ideal: &Ideal,
    how: Construction,
) -> Result<Graph, GraphError> {
    check_ideal(ring, ideal)?;
    match how {
        Construction::Fast => blow_up(ring, ideal),
        Construction::Direct => {
            let n = ring.order();
            let orbits: Vec<BitSet> = ring.elements().map(|x| affine_orbit(ring, x, ideal)).collect();
            let vertices: Vec<usize> = ring
                .elements()
                .filter(|&x| !ideal.contains(x) && orbits[x].count() != n)
                .collect();
            let edges = collect_edges(&vertices, |x, y| !orbits[y].contains(x) && !orbits[x].contains(y));
            Ok(ring_graph(ring, vertices, edges))
        }
    }
}

/// Every vertex `q` of Γ'(R/I) becomes its coset, an independent set; two
/// elements are adjacent iff their cosets are.
fn blow_up(ring: &FiniteRing, ideal: &Ideal) -> Result<Graph, GraphError> {
    let quotient = quotient_ring(ring, ideal)?;
    let base = cozero_graph(&quotient.ring)?;
    let proj = &quotient.projection;
    let vertices: Vec<usize> = ring
        .elements()
        .filter(|&x| base.vertex_of(proj[x]).is_some())
        .collect();
    let qpos: Vec<usize> = vertices.iter().map(|&x| base.vertex_of(proj[x]).unwrap()).collect();
    let mut by_coset: Vec<Vec<usize>> = vec![Vec::new(); base.vertex_count()];
    for (i, &q) in qpos.iter().enumerate() {
        by_coset[q].push(i);
    }
    let mut edges = Vec::with_capacity(base.edge_count() * ideal.len() * ideal.len());
    for &(a, b) in base.edges() {
        for &i in &by_coset[a] {
            for &j in &by_coset[b] {
                edges.push((i, j));
            }
        }
    }
    Ok(ring_graph(ring, vertices, edges))
}

/// Γ_I(R): vertices `x ∉ I` with `xy ∈ I` for some `y ∉ I`, `x ~ y` iff `xy ∈ I`.
pub fn zero_divisor_graph_ideal(ring: &FiniteRing, ideal: &Ideal) -> Result<Graph, GraphError> {
    check_ideal(ring, ideal)?;
    let outside: Vec<usize> = ring.elements().filter(|&x| !ideal.contains(x)).collect();
    let vertices: Vec<usize> = outside
        .iter()
        .copied()
        .filter(|&x| outside.iter().any(|&y| ideal.contains(ring.mul(x, y))))
        .collect();
    let edges = collect_edges(&vertices, |x, y| ideal.contains(ring.mul(x, y)));
    Ok(ring_graph(ring, vertices, edges))
}
