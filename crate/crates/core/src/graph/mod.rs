//! Finite simple undirected graphs whose vertices are ring elements.

mod build;

use thiserror::Error;

use crate::bitset::BitSet;
use crate::ring::RingError;

pub use build::{
    cozero_graph, cozero_graph_ideal, cozero_graph_ideal_direct, cozero_graph_ideal_with,
    zero_divisor_graph_ideal, Construction,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graphs are not defined over the zero ring")]
    ZeroRing,
    #[error("the ideal must be proper")]
    Improper,
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("{what} is limited to {cap} vertices, graph has {size}")]
    Cap {
        what: &'static str,
        size: usize,
        cap: usize,
    },
}

/// A simple graph. Vertices are positions `0..n`; each carries the ring
/// element it stands for and that element's label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    elements: Vec<usize>,
    edges: Vec<(usize, usize)>,
    adj: Vec<BitSet>,
}

impl Graph {
    /// Builds a graph; edges are normalized to `i < j`, sorted and deduplicated.
    ///
    /// # Panics
    /// On self-loops, out-of-range endpoints, or repeated elements.
    pub fn new(labels: Vec<String>, elements: Vec<usize>, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let n = labels.len();
        assert_eq!(n, elements.len(), "one element per vertex");
        let mut seen = std::collections::HashSet::new();
        assert!(elements.iter().all(|e| seen.insert(*e)), "vertex elements must be distinct");
        let mut edges: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| {
                assert!(a != b, "self-loop at {a}");
                assert!(a < n && b < n, "edge ({a},{b}) out of range");
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![BitSet::new(n); n];
        for &(a, b) in &edges {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        Graph {
            labels,
            elements,
            edges,
            adj,
        }
    }

    /// A graph on `0..n` labelled by position.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Graph::new((0..n).map(|i| i.to_string()).collect(), (0..n).collect(), edges)
    }

    pub fn empty(n: usize) -> Self {
        Graph::from_edges(n, [])
    }

    pub fn complete(n: usize) -> Self {
        Graph::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Graph::from_edges(a + b, (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y))))
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need three vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted `(i, j)` pairs with `i < j`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn element(&self, v: usize) -> usize {
        self.elements[v]
    }

    /// Vertex position of a ring element, if it is a vertex.
    pub fn vertex_of(&self, element: usize) -> Option<usize> {
        self.elements.binary_search(&element).ok().or_else(|| {
            // Elements are ascending for ring graphs; fall back for hand-built ones.
            self.elements.iter().position(|&e| e == element)
        })
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    /// Adjacency of two ring elements; false when either is not a vertex.
    pub fn adjacent_elements(&self, x: usize, y: usize) -> bool {
        match (self.vertex_of(x), self.vertex_of(y)) {
            (Some(a), Some(b)) => self.has_edge(a, b),
            _ => false,
        }
    }

    /// The subgraph induced on `keep` (vertex positions), in ascending order.
    pub fn induced(&self, keep: &[usize]) -> Result<Graph, GraphError> {
        let n = self.vertex_count();
        if let Some(&bad) = keep.iter().find(|&&v| v >= n) {
            return Err(GraphError::UnknownVertex(bad.to_string()));
        }
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|(a, b)| pos[*a] != usize::MAX && pos[*b] != usize::MAX)
            .map(|&(a, b)| (pos[a], pos[b]));
        Ok(Graph::new(
            keep.iter().map(|&v| self.labels[v].clone()).collect(),
            keep.iter().map(|&v| self.elements[v]).collect(),
            edges,
        ))
    }

    /// Same graph without the edges in `drop`.
    pub fn without_edges(&self, drop: &[(usize, usize)]) -> Graph {
        let drop: std::collections::HashSet<(usize, usize)> =
            drop.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        Graph::new(
            self.labels.clone(),
            self.elements.clone(),
            self.edges.iter().copied().filter(|e| !drop.contains(e)),
        )
    }
}
