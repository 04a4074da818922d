//! Brute-force references built straight from the definitions.

use std::collections::BTreeSet;

use cozero::graph::Graph;
use cozero::ring::{FiniteRing, Ideal};

/// `xR + I` as a plain set.
pub fn coset_span(r: &FiniteRing, x: usize, ideal: &Ideal) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for s in r.elements() {
        for &i in ideal.members() {
            out.insert(r.add(r.mul(x, s), i));
        }
    }
    out
}

/// Vertex elements and index edges of Γ''_I(R), straight from the definition.
pub fn cozero_ideal(r: &FiniteRing, ideal: &Ideal) -> (Vec<usize>, Vec<(usize, usize)>) {
    let spans: Vec<BTreeSet<usize>> = r.elements().map(|x| coset_span(r, x, ideal)).collect();
    let vertices: Vec<usize> = r
        .elements()
        .filter(|&x| !ideal.contains(x) && spans[x].len() < r.order())
        .collect();
    let mut edges = Vec::new();
    for (i, &x) in vertices.iter().enumerate() {
        for (j, &y) in vertices.iter().enumerate().skip(i + 1) {
            if !spans[y].contains(&x) && !spans[x].contains(&y) {
                edges.push((i, j));
            }
        }
    }
    (vertices, edges)
}

pub fn same_graph(g: &Graph, reference: &(Vec<usize>, Vec<(usize, usize)>)) -> bool {
    g.elements() == reference.0.as_slice() && g.edges() == reference.1.as_slice()
}

const INF: usize = usize::MAX / 4;

pub fn all_pairs(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut d = vec![vec![INF; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for &(a, b) in edges {
        d[a][b] = 1;
        d[b][a] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

pub fn diameter(n: usize, edges: &[(usize, usize)]) -> Option<usize> {
    let d = all_pairs(n, edges);
    let m = d.iter().flatten().copied().max().unwrap_or(0);
    (m < INF).then_some(m)
}

/// Shortest cycle: for each edge, 1 + the distance between its ends once it is removed.
pub fn girth(n: usize, edges: &[(usize, usize)]) -> Option<usize> {
    let mut best = None;
    for (k, &(a, b)) in edges.iter().enumerate() {
        let rest: Vec<_> = edges.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &e)| e).collect();
        let d = all_pairs(n, &rest)[a][b];
        if d < INF {
            best = Some(best.map_or(d + 1, |g: usize| g.min(d + 1)));
        }
    }
    best
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<u32> {
    let mut adj = vec![0u32; n];
    for &(a, b) in edges {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    adj
}

/// Largest clique by subset enumeration, `n <= 16`.
pub fn clique_number(n: usize, edges: &[(usize, usize)]) -> usize {
    let adj = adjacency(n, edges);
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || adj[v] & s == s & !(1 << v)))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Least `k` admitting a proper colouring, found by trying all `k^n` maps.
pub fn chromatic_number(n: usize, edges: &[(usize, usize)]) -> usize {
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let total = k.pow(n as u32);
        for code in 0..total {
            let colour = |v: usize| code / k.pow(v as u32) % k;
            if edges.iter().all(|&(a, b)| colour(a) != colour(b)) {
                return k;
            }
        }
    }
    n
}
