//! Vertex connectivity by unit-capacity max-flow on the split graph.
//!
//! Every vertex `v` becomes an arc `v_in → v_out` of capacity one; every edge
//! `{u, v}` becomes the arcs `u_out → v_in` and `v_out → u_in`. The maximum
//! number of internally disjoint `s`–`t` paths is the max flow from `s_out`
//! to `t_in`.

use std::collections::VecDeque;

use super::{GraphError, LabeledGraph};

struct Arc {
    to: usize,
    cap: u32,
}

struct SplitNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl SplitNetwork {
    fn new(g: &LabeledGraph) -> Self {
        let n = g.vertex_count();
        let mut net = SplitNetwork { arcs: Vec::new(), out: vec![Vec::new(); 2 * n] };
        for v in 0..n {
            net.add(2 * v, 2 * v + 1, 1);
            for &u in g.neighbors(v) {
                net.add(2 * v + 1, 2 * u, 1);
            }
        }
        net
    }

    fn add(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    fn reset(&mut self) {
        for pair in self.arcs.chunks_mut(2) {
            let total = pair[0].cap + pair[1].cap;
            pair[0].cap = total;
            pair[1].cap = 0;
        }
    }

    /// Augments along BFS paths until none remain or `limit` is reached.
    fn max_flow(&mut self, source: usize, sink: usize, limit: usize) -> usize {
        let mut flow = 0;
        let mut parent_arc = vec![usize::MAX; self.out.len()];
        while flow < limit {
            parent_arc.iter_mut().for_each(|p| *p = usize::MAX);
            let mut queue = VecDeque::from([source]);
            let mut reached = false;
            'bfs: while let Some(x) = queue.pop_front() {
                for &a in &self.out[x] {
                    let arc = &self.arcs[a];
                    if arc.cap > 0 && arc.to != source && parent_arc[arc.to] == usize::MAX {
                        parent_arc[arc.to] = a;
                        if arc.to == sink {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(arc.to);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut x = sink;
            while x != source {
                let a = parent_arc[x];
                self.arcs[a].cap -= 1;
                self.arcs[a ^ 1].cap += 1;
                x = self.arcs[a ^ 1].to;
            }
            flow += 1;
        }
        flow
    }
}

/// Maximum number of internally vertex-disjoint paths between the
/// non-adjacent vertices `s` and `t`, stopping early at `limit`.
pub fn local_connectivity(g: &LabeledGraph, s: usize, t: usize, limit: usize) -> Result<usize, GraphError> {
    let n = g.vertex_count();
    if s >= n || t >= n {
        return Err(GraphError::VertexOutOfRange(s.max(t)));
    }
    let mut net = SplitNetwork::new(g);
    Ok(net.max_flow(2 * s + 1, 2 * t, limit))
}

/// Size of a minimum vertex cut.
///
/// Disconnected graphs give 0 and complete graphs give `|V| − 1`. Following
/// Even's argument, only sources among the first `κ + 1` vertices need to be
/// tried, where `κ` is the best cut found so far (initially the minimum
/// degree); each flow stops as soon as it reaches `κ`.
pub fn vertex_connectivity(g: &LabeledGraph) -> Result<usize, GraphError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(GraphError::Empty);
    }
    if !super::is_connected(g)? {
        return Ok(0);
    }
    let mut best = g.min_degree().min(n - 1);
    let mut net = SplitNetwork::new(g);
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if g.has_edge(i, j) {
                continue;
            }
            net.reset();
            best = best.min(net.max_flow(2 * i + 1, 2 * j, best));
        }
        i += 1;
    }
    Ok(best)
}
