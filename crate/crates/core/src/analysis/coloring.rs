use super::clique::{greedy_clique, max_clique, merge_false_twins, MAX_CLIQUE_VERTICES};
use crate::graph::{Graph, GraphError};

pub const MAX_CHROMATIC_VERTICES: usize = 64;

/// χ(G) either exactly or as bounds when the graph is over the exact cap.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chromatic {
    Exact(usize),
    Bounds { lower: usize, upper: usize },
}

impl Chromatic {
    pub fn exact(self) -> Option<usize> {
        match self {
            Chromatic::Exact(k) => Some(k),
            Chromatic::Bounds { .. } => None,
        }
    }

    pub fn lower(self) -> usize {
        match self {
            Chromatic::Exact(k) => k,
            Chromatic::Bounds { lower, .. } => lower,
        }
    }

    pub fn upper(self) -> usize {
        match self {
            Chromatic::Exact(k) => k,
            Chromatic::Bounds { upper, .. } => upper,
        }
    }
}

/// DSATUR colouring: repeatedly colour the vertex with the most distinct
/// neighbour colours (ties by degree, then index) with its least free colour.
pub fn dsatur(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colour = vec![usize::MAX; n];
    let mut seen: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut sat = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colour[v] == usize::MAX)
            .max_by_key(|&v| (sat[v], g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let c = (0..).find(|&c| !seen[v].get(c).copied().unwrap_or(false)).unwrap();
        colour[v] = c;
        for w in g.neighbors(v).iter() {
            let s = &mut seen[w];
            if s.len() <= c {
                s.resize(c + 1, false);
            }
            if !s[c] {
                s[c] = true;
                sat[w] += 1;
            }
        }
    }
    colour
}

/// An optimal proper colouring.
pub fn optimal_coloring(g: &Graph) -> Result<Vec<usize>, GraphError> {
    let t = merge_false_twins(g);
    let h = &t.graph;
    let n = h.vertex_count();
    if n > MAX_CHROMATIC_VERTICES {
        return Err(GraphError::Cap {
            what: "exact colouring",
            size: n,
            cap: MAX_CHROMATIC_VERTICES,
        });
    }
    let mut best = dsatur(h);
    let upper = best.iter().map(|&c| c + 1).max().unwrap_or(0);
    let lower = max_clique(h)?.len();
    for k in lower..upper {
        if let Some(c) = k_colouring(h, k) {
            best = c;
            break;
        }
    }
    // Twins take the colour of their representative.
    Ok(t.class.iter().map(|&r| best[r]).collect())
}

/// χ(G), exact up to the cap.
pub fn chromatic_number(g: &Graph) -> Result<usize, GraphError> {
    optimal_coloring(g).map(|c| c.iter().map(|&k| k + 1).max().unwrap_or(0))
}

/// Exact χ when under the cap, otherwise clique and DSATUR bounds.
pub fn chromatic(g: &Graph) -> Chromatic {
    match chromatic_number(g) {
        Ok(k) => Chromatic::Exact(k),
        Err(_) => {
            let h = merge_false_twins(g).graph;
            let lower = if h.vertex_count() <= MAX_CLIQUE_VERTICES {
                max_clique(&h).map(|c| c.len()).unwrap_or(0)
            } else {
                greedy_clique(&h).len()
            };
            let upper = dsatur(&h).iter().map(|&c| c + 1).max().unwrap_or(0);
            Chromatic::Bounds { lower, upper }
        }
    }
}

/// Backtracking search for a proper `k`-colouring, DSATUR branching order.
fn k_colouring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut state = Search {
        g,
        k,
        colour: vec![usize::MAX; n],
        count: vec![vec![0u32; k]; n],
    };
    state.solve(0, 0).then_some(state.colour)
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    colour: Vec<usize>,
    /// `count[v][c]`: neighbours of `v` coloured `c`.
    count: Vec<Vec<u32>>,
}

impl Search<'_> {
    fn saturation(&self, v: usize) -> usize {
        self.count[v].iter().filter(|&&c| c > 0).count()
    }

    fn set(&mut self, v: usize, c: usize, delta: i32) {
        for w in self.g.neighbors(v).iter() {
            self.count[w][c] = (self.count[w][c] as i32 + delta) as u32;
        }
    }

    fn solve(&mut self, coloured: usize, used: usize) -> bool {
        let n = self.g.vertex_count();
        if coloured == n {
            return true;
        }
        let v = (0..n)
            .filter(|&v| self.colour[v] == usize::MAX)
            .max_by_key(|&v| (self.saturation(v), self.g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        // A fresh colour is interchangeable with any other fresh one.
        for c in 0..self.k.min(used + 1) {
            if self.count[v][c] > 0 {
                continue;
            }
            self.colour[v] = c;
            self.set(v, c, 1);
            if self.solve(coloured + 1, used.max(c + 1)) {
                return true;
            }
            self.set(v, c, -1);
            self.colour[v] = usize::MAX;
        }
        false
    }
}
