//! Exact graph invariants.

mod basic;
mod clique;
mod coloring;
mod kuratowski;
mod planarity;

pub use basic::{bfs_distances, components, diameter, distance, ends, girth, induced_subgraph, is_connected};
pub use clique::{clique_number, greedy_clique, max_clique, merge_false_twins, TwinReduction, MAX_CLIQUE_VERTICES};
pub use coloring::{chromatic, chromatic_number, dsatur, optimal_coloring, Chromatic, MAX_CHROMATIC_VERTICES};
pub use kuratowski::{kuratowski_witness, planarity, KuratowskiKind, KuratowskiWitness, Planarity, WitnessError};
pub use planarity::{is_outerplanar, is_planar, MAX_PLANARITY_VERTICES};

use serde::Serialize;

use crate::graph::{Graph, GraphError};

/// Every invariant of one graph. Searches that can hit a size cap report
/// their error in place so the rest of the record is still usable.
#[derive(Debug, Clone)]
pub struct GraphInvariants {
    pub vertices: usize,
    pub edges: usize,
    pub connected: bool,
    pub n_components: usize,
    /// `None` is ∞.
    pub diameter: Option<usize>,
    /// `None` is ∞.
    pub girth: Option<usize>,
    pub clique_number: Result<usize, GraphError>,
    pub chromatic: Chromatic,
    pub planar: Result<bool, GraphError>,
    pub outerplanar: Result<bool, GraphError>,
    pub ends: Vec<usize>,
    pub totally_disconnected: bool,
}

pub fn invariants(g: &Graph) -> GraphInvariants {
    let comps = components(g);
    GraphInvariants {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        connected: comps.len() <= 1,
        n_components: comps.len(),
        diameter: diameter(g),
        girth: girth(g),
        clique_number: clique_number(g),
        chromatic: chromatic(g),
        planar: is_planar(g),
        outerplanar: is_outerplanar(g),
        ends: ends(g),
        totally_disconnected: g.edge_count() == 0,
    }
}

/// JSON-friendly view of [`GraphInvariants`] with labels for vertices.
#[derive(Debug, Clone, Serialize)]
pub struct InvariantsReport {
    pub vertices: usize,
    pub edges: usize,
    pub connected: bool,
    pub n_components: usize,
    pub diameter: Option<usize>,
    pub girth: Option<usize>,
    pub clique_number: Option<usize>,
    pub chromatic_number: Option<usize>,
    pub chromatic_bounds: (usize, usize),
    pub planar: Option<bool>,
    pub outerplanar: Option<bool>,
    pub ends: Vec<String>,
    pub totally_disconnected: bool,
    pub errors: Vec<String>,
}

impl GraphInvariants {
    pub fn report(&self, g: &Graph) -> InvariantsReport {
        let mut errors = Vec::new();
        let clique_number = ok_or_note(&self.clique_number, &mut errors);
        let planar = ok_or_note(&self.planar, &mut errors);
        let outerplanar = ok_or_note(&self.outerplanar, &mut errors);
        InvariantsReport {
            vertices: self.vertices,
            edges: self.edges,
            connected: self.connected,
            n_components: self.n_components,
            diameter: self.diameter,
            girth: self.girth,
            clique_number,
            chromatic_number: self.chromatic.exact(),
            chromatic_bounds: (self.chromatic.lower(), self.chromatic.upper()),
            planar,
            outerplanar,
            ends: self.ends.iter().map(|&v| g.label(v).to_string()).collect(),
            totally_disconnected: self.totally_disconnected,
            errors,
        }
    }
}

fn ok_or_note<T: Copy>(r: &Result<T, GraphError>, errors: &mut Vec<String>) -> Option<T> {
    match r {
        Ok(v) => Some(*v),
        Err(e) => {
            errors.push(e.to_string());
            None
        }
    }
}
