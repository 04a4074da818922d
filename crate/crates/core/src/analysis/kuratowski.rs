//! Kuratowski subdivisions certifying nonplanarity.

use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

use super::planarity::{is_planar, lr_planar};
use crate::graph::{Graph, GraphError};

/// Witness extraction is skipped above this many edges; the planarity
/// verdict itself is unaffected.
const MAX_WITNESS_EDGES: usize = 40_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// A subdivision of K5 or K3,3 inside a graph. For K3,3 the first three
/// branch vertices form one side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<usize>,
    /// One path per required pair, each running from branch vertex to branch vertex.
    pub paths: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid Kuratowski witness: {0}")]
pub struct WitnessError(pub String);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Planarity {
    pub planar: bool,
    pub witness: Option<KuratowskiWitness>,
}

/// Planarity verdict plus a validated witness when the graph is nonplanar
/// and extraction succeeds.
pub fn planarity(g: &Graph) -> Result<Planarity, GraphError> {
    let planar = is_planar(g)?;
    let witness = if planar { None } else { extract(g) };
    Ok(Planarity { planar, witness })
}

/// A Kuratowski subdivision, or `None` if `g` is planar or extraction gave up.
pub fn kuratowski_witness(g: &Graph) -> Result<Option<KuratowskiWitness>, GraphError> {
    planarity(g).map(|p| p.witness)
}

fn extract(g: &Graph) -> Option<KuratowskiWitness> {
    if g.edge_count() > MAX_WITNESS_EDGES {
        return None;
    }
    let n = g.vertex_count();
    // Drop vertices while the rest stays nonplanar.
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    for v in (0..n).filter(|&v| g.degree(v) > 0) {
        let rest: Vec<(usize, usize)> = edges.iter().copied().filter(|&(a, b)| a != v && b != v).collect();
        if !lr_planar(n, &rest) {
            edges = rest;
        }
    }
    // Then edges.
    let mut i = 0;
    while i < edges.len() {
        let mut rest = edges.clone();
        rest.remove(i);
        if !lr_planar(n, &rest) {
            edges = rest;
        } else {
            i += 1;
        }
    }
    let witness = classify(n, &edges)?;
    witness.validate(g).ok()?;
    Some(witness)
}

/// Reads off the subdivision from an edge-minimal nonplanar edge set.
fn classify(n: usize, edges: &[(usize, usize)]) -> Option<KuratowskiWitness> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let branch: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 3).collect();
    let kind = match (branch.len(), adj[*branch.first()?].len()) {
        (5, 4) => KuratowskiKind::K5,
        (6, 3) => KuratowskiKind::K33,
        _ => return None,
    };
    let is_branch = |v: usize| adj[v].len() >= 3;
    let mut paths = Vec::new();
    for &s in &branch {
        for &first in &adj[s] {
            let mut path = vec![s, first];
            let (mut prev, mut cur) = (s, first);
            while !is_branch(cur) {
                let next = *adj[cur].iter().find(|&&x| x != prev)?;
                path.push(next);
                prev = cur;
                cur = next;
            }
            if s < cur {
                paths.push(path);
            }
        }
    }
    let branch_vertices = match kind {
        KuratowskiKind::K5 => branch,
        KuratowskiKind::K33 => {
            let a = branch[0];
            let other: Vec<usize> = paths
                .iter()
                .filter_map(|p| {
                    let (s, t) = (p[0], *p.last().unwrap());
                    (s == a).then_some(t).or((t == a).then_some(s))
                })
                .collect();
            let mut side: Vec<usize> = branch.iter().copied().filter(|v| !other.contains(v)).collect();
            side.extend(other);
            side
        }
    };
    paths.sort();
    Some(KuratowskiWitness {
        kind,
        branch_vertices,
        paths,
    })
}

impl KuratowskiWitness {
    /// Checks that the witness is a subdivision of its kind inside `g`.
    pub fn validate(&self, g: &Graph) -> Result<(), WitnessError> {
        let err = |m: String| Err(WitnessError(m));
        let b = &self.branch_vertices;
        let expected_pairs: Vec<(usize, usize)> = match self.kind {
            KuratowskiKind::K5 => {
                if b.len() != 5 {
                    return err(format!("K5 needs 5 branch vertices, got {}", b.len()));
                }
                (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect()
            }
            KuratowskiKind::K33 => {
                if b.len() != 6 {
                    return err(format!("K3,3 needs 6 branch vertices, got {}", b.len()));
                }
                (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect()
            }
        };
        let n = g.vertex_count();
        if let Some(&v) = b.iter().find(|&&v| v >= n) {
            return err(format!("branch vertex {v} out of range"));
        }
        if b.iter().collect::<HashSet<_>>().len() != b.len() {
            return err("repeated branch vertex".into());
        }
        let pos = |v: usize| b.iter().position(|&x| x == v);
        let mut wanted: HashSet<(usize, usize)> = expected_pairs.into_iter().collect();
        if self.paths.len() != wanted.len() {
            return err(format!("expected {} paths, got {}", wanted.len(), self.paths.len()));
        }
        let mut used_interior = HashSet::new();
        for p in &self.paths {
            if p.len() < 2 {
                return err(format!("path {p:?} too short"));
            }
            let (s, t) = (p[0], *p.last().unwrap());
            let (Some(i), Some(j)) = (pos(s), pos(t)) else {
                return err(format!("path {p:?} does not join branch vertices"));
            };
            if !wanted.remove(&(i.min(j), i.max(j))) {
                return err(format!("path {p:?} joins a pair that is not required or is repeated"));
            }
            for w in p.windows(2) {
                if w[0] >= n || w[1] >= n || !g.has_edge(w[0], w[1]) {
                    return err(format!("{} - {} is not an edge", w[0], w[1]));
                }
            }
            for &v in &p[1..p.len() - 1] {
                if pos(v).is_some() {
                    return err(format!("path {p:?} passes through branch vertex {v}"));
                }
                if !used_interior.insert(v) {
                    return err(format!("vertex {v} is shared by two paths or repeated"));
                }
            }
        }
        Ok(())
    }

    /// The witness as vertex labels of `g`.
    pub fn labelled(&self, g: &Graph) -> (Vec<String>, Vec<Vec<String>>) {
        let name = |v: &usize| g.label(*v).to_string();
        (
            self.branch_vertices.iter().map(name).collect(),
            self.paths.iter().map(|p| p.iter().map(name).collect()).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witnesses_for_k5_and_k33() {
        let w = kuratowski_witness(&Graph::complete(5)).unwrap().unwrap();
        assert_eq!(w.kind, KuratowskiKind::K5);
        assert_eq!(w.paths.len(), 10);
        let g = Graph::complete_bipartite(3, 3);
        let w = kuratowski_witness(&g).unwrap().unwrap();
        assert_eq!(w.kind, KuratowskiKind::K33);
        w.validate(&g).unwrap();
        let mut sides = w.branch_vertices.clone();
        sides[..3].sort();
        sides[3..].sort();
        assert!(sides == [0, 1, 2, 3, 4, 5] || sides == [3, 4, 5, 0, 1, 2]);
    }

    #[test]
    fn petersen_has_a_subdivision() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = Graph::from_edges(10, outer.chain(spokes).chain(inner));
        let w = kuratowski_witness(&g).unwrap().unwrap();
        // Petersen is cubic, so only K3,3 subdivisions fit.
        assert_eq!(w.kind, KuratowskiKind::K33);
        w.validate(&g).unwrap();
    }

    #[test]
    fn planar_has_none() {
        assert!(kuratowski_witness(&Graph::complete(4)).unwrap().is_none());
    }

    #[test]
    fn validation_rejects_bad_witnesses() {
        let g = Graph::complete(5);
        let mut w = kuratowski_witness(&g).unwrap().unwrap();
        w.paths.pop();
        assert!(w.validate(&g).is_err());
        let h = Graph::complete_bipartite(3, 3);
        let w = KuratowskiWitness {
            kind: KuratowskiKind::K33,
            branch_vertices: vec![0, 1, 3, 2, 4, 5],
            paths: vec![],
        };
        assert!(w.validate(&h).is_err());
        let fake = KuratowskiWitness {
            kind: KuratowskiKind::K5,
            branch_vertices: vec![0, 1, 2, 3, 4],
            paths: (0..5).flat_map(|i| (i + 1..5).map(move |j| vec![i, j])).collect(),
        };
        assert!(fake.validate(&Graph::cycle(5)).is_err());
        assert!(fake.validate(&g).is_ok());
    }
}
