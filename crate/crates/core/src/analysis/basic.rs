use std::collections::VecDeque;

use crate::graph::{Graph, GraphError};

/// Connected components as ascending vertex lists, ordered by least vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[s] = id;
        let mut members = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v).iter() {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                    queue.push_back(w);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

/// Graphs with at most one vertex count as connected.
pub fn is_connected(g: &Graph) -> bool {
    components(g).len() <= 1
}

/// BFS distances from `s`; `None` where unreachable.
pub fn bfs_distances(g: &Graph, s: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.vertex_count()];
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        for w in g.neighbors(v).iter() {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// `d(a, b)`, `None` for ∞.
pub fn distance(g: &Graph, a: usize, b: usize) -> Result<Option<usize>, GraphError> {
    let n = g.vertex_count();
    for v in [a, b] {
        if v >= n {
            return Err(GraphError::UnknownVertex(v.to_string()));
        }
    }
    Ok(bfs_distances(g, a)[b])
}

/// Largest distance over all pairs; `None` (∞) if disconnected, 0 for at most one vertex.
pub fn diameter(g: &Graph) -> Option<usize> {
    let mut best = 0;
    for s in 0..g.vertex_count() {
        for d in bfs_distances(g, s) {
            best = best.max(d?);
        }
    }
    Some(best)
}

/// Length of a shortest cycle, `None` (∞) for forests.
///
/// A BFS from `s` that meets a non-tree edge `vw` closes a closed walk of
/// length `d(v) + d(w) + 1` through `s`; the minimum over all roots is the girth.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        dist.fill(usize::MAX);
        dist[s] = 0;
        parent[s] = usize::MAX;
        let mut queue = VecDeque::from([s]);
        'bfs: while let Some(v) = queue.pop_front() {
            if let Some(b) = best {
                if 2 * dist[v] >= b {
                    break 'bfs;
                }
            }
            for w in g.neighbors(v).iter() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    let len = dist[v] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Vertices of degree exactly one.
pub fn ends(g: &Graph) -> Vec<usize> {
    (0..g.vertex_count()).filter(|&v| g.degree(v) == 1).collect()
}

pub fn induced_subgraph(g: &Graph, keep: &[usize]) -> Result<Graph, GraphError> {
    g.induced(keep)
}
