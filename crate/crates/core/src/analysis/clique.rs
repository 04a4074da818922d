use std::collections::HashMap;

use crate::bitset::BitSet;
use crate::graph::{Graph, GraphError};

pub const MAX_CLIQUE_VERTICES: usize = 256;

/// Result of [`merge_false_twins`].
pub struct TwinReduction {
    pub graph: Graph,
    /// Original vertex standing for each reduced vertex.
    pub representative: Vec<usize>,
    /// Reduced vertex of each original vertex.
    pub class: Vec<usize>,
}

/// Collapses false twins (equal neighbourhoods). Twins are never adjacent
/// and can share a colour, so ω and χ are unchanged.
pub fn merge_false_twins(g: &Graph) -> TwinReduction {
    let mut first: HashMap<&BitSet, usize> = HashMap::new();
    let mut representative = Vec::new();
    let class = (0..g.vertex_count())
        .map(|v| {
            *first.entry(g.neighbors(v)).or_insert_with(|| {
                representative.push(v);
                representative.len() - 1
            })
        })
        .collect();
    let graph = g.induced(&representative).expect("kept vertices exist");
    TwinReduction {
        graph,
        representative,
        class,
    }
}

/// Vertices of a maximum clique, ascending.
pub fn max_clique(g: &Graph) -> Result<Vec<usize>, GraphError> {
    let TwinReduction {
        graph: h,
        representative: map,
        ..
    } = merge_false_twins(g);
    let n = h.vertex_count();
    if n > MAX_CLIQUE_VERTICES {
        return Err(GraphError::Cap {
            what: "clique search",
            size: n,
            cap: MAX_CLIQUE_VERTICES,
        });
    }
    let adj: Vec<BitSet> = (0..n).map(|v| h.neighbors(v).clone()).collect();
    let mut best = Vec::new();
    let mut current = Vec::new();
    expand(&adj, BitSet::full(n), &mut current, &mut best);
    let mut out: Vec<usize> = best.into_iter().map(|v| map[v]).collect();
    out.sort_unstable();
    Ok(out)
}

/// ω(G); 0 for the empty vertex set.
pub fn clique_number(g: &Graph) -> Result<usize, GraphError> {
    max_clique(g).map(|c| c.len())
}

/// Greedy colour classes of `cand`: vertices in colouring order with the
/// number of colours used so far, an upper bound on the clique through them.
fn colour_bound(adj: &[BitSet], cand: &BitSet) -> Vec<(usize, usize)> {
    let mut order = Vec::with_capacity(cand.count());
    let mut rest = cand.clone();
    let mut colour = 0;
    while !rest.is_empty() {
        colour += 1;
        let mut avail = rest.clone();
        while let Some(v) = avail.first() {
            avail.remove(v);
            avail.difference_with(&adj[v]);
            rest.remove(v);
            order.push((v, colour));
        }
    }
    order
}

fn expand(adj: &[BitSet], mut cand: BitSet, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    let order = colour_bound(adj, &cand);
    for &(v, bound) in order.iter().rev() {
        if current.len() + bound <= best.len() {
            return;
        }
        current.push(v);
        let mut next = cand.clone();
        next.intersect_with(&adj[v]);
        if next.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(adj, next, current, best);
        }
        current.pop();
        cand.remove(v);
    }
}

/// A clique found greedily by repeatedly taking the highest-degree candidate.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut cand = BitSet::full(n);
    let mut clique = Vec::new();
    while let Some(v) = cand.iter().max_by_key(|&v| (g.neighbors(v).intersection_count(&cand), std::cmp::Reverse(v))) {
        clique.push(v);
        cand.intersect_with(g.neighbors(v));
    }
    clique.sort_unstable();
    clique
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_clique(g: &Graph, c: &[usize]) -> bool {
        c.iter().enumerate().all(|(i, &a)| c[i + 1..].iter().all(|&b| g.has_edge(a, b)))
    }

    #[test]
    fn standard_graphs() {
        assert_eq!(clique_number(&Graph::complete(5)).unwrap(), 5);
        assert_eq!(clique_number(&Graph::empty(3)).unwrap(), 1);
        assert_eq!(clique_number(&Graph::empty(0)).unwrap(), 0);
        assert_eq!(clique_number(&Graph::complete_bipartite(4, 3)).unwrap(), 2);
        assert_eq!(clique_number(&Graph::cycle(5)).unwrap(), 2);
    }

    #[test]
    fn twins_collapse() {
        let t = merge_false_twins(&Graph::complete_bipartite(3, 4));
        assert_eq!(t.graph.vertex_count(), 2);
        assert_eq!(t.representative, vec![0, 3]);
        assert_eq!(t.class, vec![0, 0, 0, 1, 1, 1, 1]);
    }

    #[test]
    fn witness_is_a_clique() {
        // Two K4s sharing a vertex plus a pendant path.
        let mut edges = vec![];
        for a in 0..4 {
            for b in a + 1..4 {
                edges.push((a, b));
                edges.push((a + 3, b + 3));
            }
        }
        edges.push((6, 7));
        let g = Graph::from_edges(8, edges);
        let c = max_clique(&g).unwrap();
        assert_eq!(c.len(), 4);
        assert!(is_clique(&g, &c));
        assert!(is_clique(&g, &greedy_clique(&g)));
    }

    #[test]
    fn cap() {
        // A perfect matching on 600 vertices has no twins.
        let g = Graph::from_edges(600, (0..300).map(|i| (2 * i, 2 * i + 1)));
        assert!(matches!(clique_number(&g), Err(GraphError::Cap { .. })));
    }
}
