//! Brute-force planarity by searching for K5 / K3,3 subdivisions directly.

use std::collections::BTreeSet;

/// Edge slot of `(a, b)` on 7 labelled vertices, `a != b`.
pub fn slot(a: usize, b: usize) -> usize {
    let (a, b) = (a.min(b), a.max(b));
    // Row-major upper triangle of a 7x7 matrix.
    a * 7 - a * (a + 1) / 2 + (b - a - 1)
}

pub const SLOTS: usize = 21;

/// Edge list of the graph encoded by a 21-bit mask on 7 vertices.
pub fn mask_edges(mask: u32) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..7 {
        for b in a + 1..7 {
            if mask >> slot(a, b) & 1 == 1 {
                out.push((a, b));
            }
        }
    }
    out
}

fn permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}

/// Abstract subdivisions of K5 and K3,3 with at most 7 vertices, as edge lists
/// over abstract vertices `0..v`.
fn small_subdivisions() -> Vec<(usize, Vec<(usize, usize)>)> {
    let k5: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let k33: Vec<(usize, usize)> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    for (base_v, base) in [(5usize, &k5), (6usize, &k33)] {
        let spare = 7 - base_v;
        // Every way to spend up to `spare` extra vertices on the edges.
        let m = base.len();
        let mut counts = vec![0usize; m];
        loop {
            let used: usize = counts.iter().sum();
            if used <= spare {
                let mut edges = Vec::new();
                let mut next = base_v;
                for (i, &(a, b)) in base.iter().enumerate() {
                    let mut prev = a;
                    for _ in 0..counts[i] {
                        edges.push((prev, next));
                        prev = next;
                        next += 1;
                    }
                    edges.push((prev, b));
                }
                out.push((next, edges));
            }
            // Odometer over counts in 0..=spare.
            let mut i = 0;
            while i < m {
                counts[i] += 1;
                if counts[i] <= spare {
                    break;
                }
                counts[i] = 0;
                i += 1;
            }
            if i == m {
                break;
            }
        }
    }
    out
}

/// `nonplanar[mask]` for every graph on 7 labelled vertices: true iff the
/// graph contains a labelled K5 / K3,3 subdivision as a subgraph.
pub fn nonplanar_table_7() -> Vec<bool> {
    let mut perms = Vec::new();
    permutations(&mut (0..7).collect(), 0, &mut perms);
    let mut minimal = BTreeSet::new();
    for (v, edges) in small_subdivisions() {
        for p in &perms {
            let mask = edges.iter().fold(0u32, |m, &(a, b)| m | 1 << slot(p[a], p[b]));
            debug_assert!(v <= 7);
            minimal.insert(mask);
        }
    }
    let mut table = vec![false; 1 << SLOTS];
    for m in minimal {
        table[m as usize] = true;
    }
    // Superset closure.
    for bit in 0..SLOTS {
        for mask in 0..1usize << SLOTS {
            if mask >> bit & 1 == 0 && table[mask] {
                table[mask | 1 << bit] = true;
            }
        }
    }
    table
}

/// Adjacency sets after deleting degree-0/1 vertices and suppressing
/// degree-2 vertices until neither applies. Both moves preserve the
/// existence of a Kuratowski subdivision.
pub fn reduce(n: usize, edges: &[(usize, usize)]) -> Vec<BTreeSet<usize>> {
    let mut adj = vec![BTreeSet::new(); n];
    for &(a, b) in edges {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    loop {
        let mut changed = false;
        for v in 0..n {
            match adj[v].len() {
                1 => {
                    let w = *adj[v].iter().next().unwrap();
                    adj[w].remove(&v);
                    adj[v].clear();
                    changed = true;
                }
                2 => {
                    let mut it = adj[v].iter();
                    let (a, b) = (*it.next().unwrap(), *it.next().unwrap());
                    adj[a].remove(&v);
                    adj[b].remove(&v);
                    adj[v].clear();
                    adj[a].insert(b);
                    adj[b].insert(a);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            return adj;
        }
    }
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out = combinations(&items[1..], k - 1);
    for c in &mut out {
        c.insert(0, items[0]);
    }
    out.extend(combinations(&items[1..], k));
    out
}

struct Router<'a> {
    adj: &'a [BTreeSet<usize>],
    used: Vec<bool>,
}

impl Router<'_> {
    /// Routes every pair with internally disjoint paths avoiding used vertices.
    fn route_all(&mut self, pairs: &[(usize, usize)]) -> bool {
        let Some((&(a, b), rest)) = pairs.split_first() else {
            return true;
        };
        if self.adj[a].contains(&b) && self.route_all(rest) {
            return true;
        }
        let mut path = Vec::new();
        self.extend(a, b, &mut path, rest)
    }

    fn extend(&mut self, cur: usize, target: usize, path: &mut Vec<usize>, rest: &[(usize, usize)]) -> bool {
        let next: Vec<usize> = self.adj[cur].iter().copied().collect();
        for w in next {
            if self.used[w] || w == target {
                continue;
            }
            self.used[w] = true;
            path.push(w);
            let done = if self.adj[w].contains(&target) {
                self.route_all(rest) || self.extend(w, target, path, rest)
            } else {
                self.extend(w, target, path, rest)
            };
            path.pop();
            self.used[w] = false;
            if done {
                return true;
            }
        }
        false
    }
}

fn has_pattern(adj: &[BTreeSet<usize>], branch: &[usize], pairs: &[(usize, usize)]) -> bool {
    let mut used = vec![false; adj.len()];
    for &b in branch {
        used[b] = true;
    }
    let mapped: Vec<(usize, usize)> = pairs.iter().map(|&(i, j)| (branch[i], branch[j])).collect();
    Router { adj, used }.route_all(&mapped)
}

/// Brute-force planarity for small graphs: searches every choice of branch
/// vertices and routes internally disjoint paths by backtracking.
pub fn brute_force_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    let adj = reduce(n, edges);
    let k5: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let k33: Vec<(usize, usize)> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
    let deg4: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 4).collect();
    for c in combinations(&deg4, 5) {
        if has_pattern(&adj, &c, &k5) {
            return false;
        }
    }
    let deg3: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 3).collect();
    for c in combinations(&deg3, 6) {
        // Side containing c[0], to avoid counting each split twice.
        for rest in combinations(&c[1..], 2) {
            let mut branch = vec![c[0]];
            branch.extend(&rest);
            branch.extend(c.iter().copied().filter(|v| *v != c[0] && !rest.contains(v)));
            if has_pattern(&adj, &branch, &k33) {
                return false;
            }
        }
    }
    true
}

/// A seeded random simple graph with `n` vertices and edge probability `p`.
pub fn random_graph(rng: &mut impl rand::Rng, n: usize, p: f64) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    edges
}
