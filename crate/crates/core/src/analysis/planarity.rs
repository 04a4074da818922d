//! Left-right planarity test (de Fraysseix and Rosenstiehl, in Brandes'
//! formulation), iterative so deep DFS trees do not exhaust the stack.

use crate::graph::{Graph, GraphError};

pub const MAX_PLANARITY_VERTICES: usize = 5000;

type Edge = Option<usize>;

#[derive(Clone, Copy, Default, PartialEq, Eq, Debug)]
struct Interval {
    low: Edge,
    high: Edge,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Default, Debug)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct Lr {
    n: usize,
    /// Per vertex: `(neighbour, undirected edge id)`.
    adjs: Vec<Vec<(usize, usize)>>,
    /// Orientation: edge id -> (tail, head), set once the DFS passes it.
    tail: Vec<usize>,
    head: Vec<usize>,
    oriented: Vec<bool>,
    height: Vec<Option<usize>>,
    parent_edge: Vec<Edge>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<usize>,
    ordered_adjs: Vec<Vec<usize>>,
    reference: Vec<Edge>,
    lowpt_edge: Vec<Edge>,
    /// Stack of conflict pairs tagged with a unique id.
    stack: Vec<(usize, ConflictPair)>,
    next_id: usize,
    stack_bottom: Vec<Option<usize>>,
    /// DFS cursors, shared by all roots of one phase.
    ind: Vec<usize>,
    skip_init: Vec<bool>,
}

/// Exact planarity decision.
pub fn is_planar(g: &Graph) -> Result<bool, GraphError> {
    let n = g.vertex_count();
    if n > MAX_PLANARITY_VERTICES {
        return Err(GraphError::Cap {
            what: "planarity testing",
            size: n,
            cap: MAX_PLANARITY_VERTICES,
        });
    }
    Ok(lr_planar(n, g.edges()))
}

/// Planarity of the graph on `0..n` with the given edges.
pub(crate) fn lr_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    let m = edges.len();
    if n > 2 && m > 3 * n - 6 {
        return false;
    }
    let mut adjs = vec![Vec::new(); n];
    for (id, &(a, b)) in edges.iter().enumerate() {
        adjs[a].push((b, id));
        adjs[b].push((a, id));
    }
    let mut lr = Lr {
        n,
        adjs,
        tail: vec![0; m],
        head: vec![0; m],
        oriented: vec![false; m],
        height: vec![None; n],
        parent_edge: vec![None; n],
        lowpt: vec![0; m],
        lowpt2: vec![0; m],
        nesting_depth: vec![0; m],
        ordered_adjs: vec![Vec::new(); n],
        reference: vec![None; m],
        lowpt_edge: vec![None; m],
        stack: Vec::new(),
        next_id: 0,
        stack_bottom: vec![None; m],
        ind: vec![0; n],
        skip_init: vec![false; m],
    };
    lr.run()
}

impl Lr {
    fn run(&mut self) -> bool {
        let mut roots = Vec::new();
        for v in 0..self.n {
            if self.height[v].is_none() {
                self.height[v] = Some(0);
                roots.push(v);
                self.orient(v);
            }
        }
        // Out-edges in the order the DFS oriented them, then stable by depth.
        let mut out: Vec<Vec<usize>> = (0..self.n)
            .map(|v| {
                self.adjs[v]
                    .iter()
                    .map(|&(_, e)| e)
                    .filter(|&e| self.tail[e] == v)
                    .collect()
            })
            .collect();
        for list in &mut out {
            list.sort_by_key(|&e| self.nesting_depth[e]);
        }
        self.ordered_adjs = out;
        self.ind.fill(0);
        self.skip_init.fill(false);
        roots.into_iter().all(|r| self.test(r))
    }

    fn h(&self, v: usize) -> usize {
        self.height[v].expect("visited")
    }

    fn orient(&mut self, root: usize) {
        let mut dfs = vec![root];
        while let Some(v) = dfs.pop() {
            let e = self.parent_edge[v];
            while self.ind[v] < self.adjs[v].len() {
                let (w, vw) = self.adjs[v][self.ind[v]];
                if !self.skip_init[vw] {
                    if self.oriented[vw] {
                        self.ind[v] += 1;
                        continue;
                    }
                    self.oriented[vw] = true;
                    self.tail[vw] = v;
                    self.head[vw] = w;
                    self.lowpt[vw] = self.h(v);
                    self.lowpt2[vw] = self.h(v);
                    if self.height[w].is_none() {
                        self.parent_edge[w] = Some(vw);
                        self.height[w] = Some(self.h(v) + 1);
                        dfs.push(v);
                        dfs.push(w);
                        self.skip_init[vw] = true;
                        break;
                    } else {
                        self.lowpt[vw] = self.h(w);
                    }
                }
                self.nesting_depth[vw] = 2 * self.lowpt[vw];
                if self.lowpt2[vw] < self.h(v) {
                    self.nesting_depth[vw] += 1;
                }
                if let Some(e) = e {
                    if self.lowpt[vw] < self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                        self.lowpt[e] = self.lowpt[vw];
                    } else if self.lowpt[vw] > self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                    } else {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                    }
                }
                self.ind[v] += 1;
            }
        }
    }

    fn top_id(&self) -> Option<usize> {
        self.stack.last().map(|(id, _)| *id)
    }

    fn push(&mut self, p: ConflictPair) {
        self.stack.push((self.next_id, p));
        self.next_id += 1;
    }

    fn set_ref(&mut self, at: Edge, to: Edge) {
        if let Some(e) = at {
            self.reference[e] = to;
        }
    }

    fn lowpt_of(&self, e: Edge) -> usize {
        self.lowpt[e.expect("non-empty interval")]
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        !i.is_empty() && self.lowpt_of(i.high) > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt_of(p.right.low);
        }
        if p.right.is_empty() {
            return self.lowpt_of(p.left.low);
        }
        self.lowpt_of(p.left.low).min(self.lowpt_of(p.right.low))
    }

    fn test(&mut self, root: usize) -> bool {
        let mut dfs = vec![root];
        while let Some(v) = dfs.pop() {
            let e = self.parent_edge[v];
            let mut skip_final = false;
            while self.ind[v] < self.ordered_adjs[v].len() {
                let ei = self.ordered_adjs[v][self.ind[v]];
                let w = self.head[ei];
                if !self.skip_init[ei] {
                    self.stack_bottom[ei] = self.top_id();
                    if self.parent_edge[w] == Some(ei) {
                        dfs.push(v);
                        dfs.push(w);
                        self.skip_init[ei] = true;
                        skip_final = true;
                        break;
                    } else {
                        self.lowpt_edge[ei] = Some(ei);
                        self.push(ConflictPair {
                            left: Interval::default(),
                            right: Interval {
                                low: Some(ei),
                                high: Some(ei),
                            },
                        });
                    }
                }
                if self.lowpt[ei] < self.h(v) {
                    if ei == self.ordered_adjs[v][0] {
                        let e = e.expect("non-root vertex has a parent edge");
                        self.lowpt_edge[e] = self.lowpt_edge[ei];
                    } else if !self.add_constraints(ei, e.expect("non-root vertex has a parent edge")) {
                        return false;
                    }
                }
                self.ind[v] += 1;
            }
            if !skip_final {
                if let Some(e) = e {
                    self.remove_back_edges(e);
                }
            }
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        loop {
            let (_, mut q) = self.stack.pop().expect("return edges of ei are on the stack");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            if self.lowpt_of(q.right.low) > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.set_ref(p.right.low, q.right.high);
                }
                p.right.low = q.right.low;
            } else {
                self.set_ref(q.right.low, self.lowpt_edge[e]);
            }
            if self.top_id() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some((_, top)) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let (_, mut q) = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            self.set_ref(p.right.low, q.right.high);
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.set_ref(p.left.low, q.left.high);
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.tail[e];
        let hu = self.h(u);
        while let Some((_, top)) = self.stack.last() {
            if self.lowest(top) != hu {
                break;
            }
            self.stack.pop();
        }
        if let Some((id, mut p)) = self.stack.pop() {
            while let Some(hi) = p.left.high {
                if self.head[hi] != u {
                    break;
                }
                p.left.high = self.reference[hi];
            }
            if p.left.high.is_none() && p.left.low.is_some() {
                self.set_ref(p.left.low, p.right.low);
                p.left.low = None;
            }
            while let Some(hi) = p.right.high {
                if self.head[hi] != u {
                    break;
                }
                p.right.high = self.reference[hi];
            }
            if p.right.high.is_none() && p.right.low.is_some() {
                self.set_ref(p.right.low, p.left.low);
                p.right.low = None;
            }
            self.stack.push((id, p));
        }
        if self.lowpt[e] < hu {
            let (_, top) = self.stack.last().expect("e has a return edge");
            let hl = top.left.high;
            let hr = top.right.high;
            self.reference[e] = match (hl, hr) {
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => hl,
                (Some(_), None) => hl,
                _ => hr,
            };
        }
    }
}

/// Outerplanarity: planar after adding an apex adjacent to every vertex.
pub fn is_outerplanar(g: &Graph) -> Result<bool, GraphError> {
    let n = g.vertex_count();
    if n > MAX_PLANARITY_VERTICES {
        return Err(GraphError::Cap {
            what: "outerplanarity testing",
            size: n,
            cap: MAX_PLANARITY_VERTICES,
        });
    }
    let mut edges = g.edges().to_vec();
    edges.extend((0..n).map(|v| (v, n)));
    Ok(lr_planar(n + 1, &edges))
}
