//! Exact maximum independent set by branch and bound.
//!
//! Candidates are greedily covered by cliques of the graph; an independent
//! set takes at most one vertex per clique, which gives the bound. Vertices
//! are branched on in reverse cover order, as in Tomita-style clique search
//! on the complement.

use fixedbitset::FixedBitSet;

use super::{GraphError, LabeledGraph};

pub const DEFAULT_INDEPENDENCE_CAP: usize = 64;

struct Search<'a> {
    neighbors: &'a [FixedBitSet],
    non_neighbors: Vec<FixedBitSet>,
    best: usize,
}

impl Search<'_> {
    /// Greedy clique cover of `cand`: vertices in cover order with the
    /// number of cliques used so far.
    fn cover(&self, cand: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
        let mut remaining = cand.clone();
        let mut order = Vec::with_capacity(cand.count_ones(..));
        let mut bounds = Vec::with_capacity(order.capacity());
        let mut class = 0;
        while !remaining.is_clear() {
            class += 1;
            let mut avail = remaining.clone();
            while let Some(v) = avail.ones().next() {
                avail.set(v, false);
                avail.intersect_with(&self.neighbors[v]);
                remaining.set(v, false);
                order.push(v);
                bounds.push(class);
            }
        }
        (order, bounds)
    }

    fn expand(&mut self, mut cand: FixedBitSet, size: usize) {
        let (order, bounds) = self.cover(&cand);
        for idx in (0..order.len()).rev() {
            if size + bounds[idx] <= self.best {
                return;
            }
            let v = order[idx];
            let mut next = cand.clone();
            next.intersect_with(&self.non_neighbors[v]);
            if next.is_clear() {
                self.best = self.best.max(size + 1);
            } else {
                self.expand(next, size + 1);
            }
            cand.set(v, false);
        }
    }
}

/// Independence number `α(g)`. Graphs with more than `cap` vertices are
/// refused; pass a larger cap to override.
pub fn independence_number(g: &LabeledGraph, cap: usize) -> Result<usize, GraphError> {
    let n = g.vertex_count();
    if n > cap {
        return Err(GraphError::IndependenceCap { size: n, cap });
    }
    if n == 0 {
        return Ok(0);
    }
    let neighbors: Vec<FixedBitSet> = (0..n)
        .map(|v| {
            let mut row = FixedBitSet::with_capacity(n);
            for &u in g.neighbors(v) {
                row.insert(u);
            }
            row
        })
        .collect();
    let non_neighbors = neighbors
        .iter()
        .enumerate()
        .map(|(v, row)| {
            let mut inv = row.clone();
            inv.toggle_range(..);
            inv.set(v, false);
            inv
        })
        .collect();
    let mut search = Search { neighbors: &neighbors, non_neighbors, best: 0 };
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    search.expand(all, 0);
    Ok(search.best)
}
