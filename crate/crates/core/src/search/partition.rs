//! Ordered partitions and equitable refinement.
//!
//! Cells are contiguous runs of `lab`; a cell is named by its start
//! position. Refinement splits a cell by the number of neighbours each
//! member has in a splitter cell, ordering fragments by that count. Every
//! decision depends only on cell positions and counts, never on vertex
//! names, so refinement commutes with automorphisms.

use std::collections::hash_map::DefaultHasher;
use std::collections::VecDeque;
use std::hash::{Hash, Hasher};

use crate::graph::LabeledGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedPartition {
    lab: Vec<usize>,
    /// Position of each vertex in `lab`.
    pos: Vec<usize>,
    /// Start of the cell containing each position.
    cell_at: Vec<usize>,
    /// Cell length, meaningful at cell starts only.
    len_at: Vec<usize>,
    cells: usize,
}

impl OrderedPartition {
    /// Single cell holding every vertex.
    pub fn unit(n: usize) -> Self {
        Self::from_cells(&[(0..n).collect()]).expect("unit partition is valid")
    }

    /// `None` unless `cells` are non-empty, disjoint and cover `0..n` for
    /// `n` the total number of entries.
    pub fn from_cells(cells: &[Vec<usize>]) -> Option<Self> {
        let n: usize = cells.iter().map(Vec::len).sum();
        let mut lab = Vec::with_capacity(n);
        let mut cell_at = Vec::with_capacity(n);
        let mut len_at = vec![0; n];
        for cell in cells {
            if cell.is_empty() {
                return None;
            }
            let start = lab.len();
            len_at[start] = cell.len();
            lab.extend_from_slice(cell);
            cell_at.extend(std::iter::repeat(start).take(cell.len()));
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in lab.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return None;
            }
            pos[v] = i;
        }
        Some(OrderedPartition { lab, pos, cell_at, len_at, cells: cells.len() })
    }

    pub fn vertex_count(&self) -> usize {
        self.lab.len()
    }

    pub fn cell_count(&self) -> usize {
        self.cells
    }

    pub fn is_discrete(&self) -> bool {
        self.cells == self.lab.len()
    }

    /// Cell starts in order.
    pub fn starts(&self) -> impl Iterator<Item = usize> + '_ {
        let mut s = 0;
        std::iter::from_fn(move || {
            (s < self.lab.len()).then(|| {
                let here = s;
                s += self.len_at[here];
                here
            })
        })
    }

    pub fn cell(&self, start: usize) -> &[usize] {
        &self.lab[start..start + self.len_at[start]]
    }

    pub fn cells(&self) -> Vec<Vec<usize>> {
        self.starts().map(|s| self.cell(s).to_vec()).collect()
    }

    /// Cell sizes in order.
    pub fn shape(&self) -> Vec<usize> {
        self.starts().map(|s| self.len_at[s]).collect()
    }

    /// Start of the cell containing `v`.
    pub fn cell_of(&self, v: usize) -> usize {
        self.cell_at[self.pos[v]]
    }

    /// Vertices in cell order; for a discrete partition this is the leaf labelling.
    pub fn lab(&self) -> &[usize] {
        &self.lab
    }

    /// First non-singleton cell of smallest size.
    pub fn target_cell(&self) -> Option<usize> {
        self.starts().filter(|&s| self.len_at[s] > 1).min_by_key(|&s| (self.len_at[s], s))
    }

    /// Moves `v` into a singleton cell placed just before the rest of its
    /// cell. Returns the start of the new singleton.
    pub fn individualize(&mut self, v: usize) -> usize {
        let start = self.cell_of(v);
        let len = self.len_at[start];
        if len == 1 {
            return start;
        }
        let p = self.pos[v];
        self.lab.swap(start, p);
        self.pos[self.lab[p]] = p;
        self.pos[v] = start;
        self.len_at[start] = 1;
        self.len_at[start + 1] = len - 1;
        for q in start + 1..start + len {
            self.cell_at[q] = start + 1;
        }
        self.cells += 1;
        start
    }

    /// Refines to the coarsest equitable partition finer than `self`, using
    /// every cell as an initial splitter. Returns a trace fingerprint.
    pub fn refine(&mut self, g: &LabeledGraph) -> u64 {
        let starts: Vec<usize> = self.starts().collect();
        self.refine_from(g, &starts)
    }

    /// Refinement seeded with the given splitter cells. Sufficient when the
    /// partition was equitable before those cells were created.
    pub fn refine_from(&mut self, g: &LabeledGraph, splitters: &[usize]) -> u64 {
        let n = self.lab.len();
        let mut hasher = DefaultHasher::new();
        let mut queue: VecDeque<usize> = splitters.iter().copied().collect();
        let mut queued = vec![false; n];
        for &s in splitters {
            queued[s] = true;
        }
        let mut count = vec![0usize; n];
        let mut touched: Vec<usize> = Vec::new();
        let mut touched_cells: Vec<usize> = Vec::new();
        let mut cell_marked = vec![false; n];

        while let Some(splitter) = queue.pop_front() {
            queued[splitter] = false;
            if self.is_discrete() {
                break;
            }
            let members = self.cell(splitter).to_vec();
            for &v in &members {
                for &u in g.neighbors(v) {
                    if count[u] == 0 {
                        touched.push(u);
                    }
                    count[u] += 1;
                }
            }
            for &u in &touched {
                let c = self.cell_of(u);
                if !cell_marked[c] {
                    cell_marked[c] = true;
                    touched_cells.push(c);
                }
            }
            touched_cells.sort_unstable();
            (splitter, touched_cells.len()).hash(&mut hasher);
            for &c in &touched_cells {
                cell_marked[c] = false;
                let len = self.len_at[c];
                if len == 1 {
                    count[self.lab[c]].hash(&mut hasher);
                    continue;
                }
                let slice = &mut self.lab[c..c + len];
                let first = count[slice[0]];
                if slice.iter().all(|&v| count[v] == first) {
                    (c, first).hash(&mut hasher);
                    continue;
                }
                slice.sort_unstable_by_key(|&v| (count[v], v));
                let mut frag_start = c;
                for q in c..c + len {
                    self.pos[self.lab[q]] = q;
                    if q > c && count[self.lab[q]] != count[self.lab[q - 1]] {
                        self.len_at[frag_start] = q - frag_start;
                        (frag_start, q - frag_start, count[self.lab[q - 1]]).hash(&mut hasher);
                        frag_start = q;
                        self.cells += 1;
                    }
                    self.cell_at[q] = frag_start;
                }
                self.len_at[frag_start] = c + len - frag_start;
                (frag_start, c + len - frag_start, count[self.lab[c + len - 1]]).hash(&mut hasher);
                let mut f = c;
                while f < c + len {
                    if !queued[f] {
                        queued[f] = true;
                        queue.push_back(f);
                    }
                    f += self.len_at[f];
                }
            }
            for &u in &touched {
                count[u] = 0;
            }
            touched.clear();
            touched_cells.clear();
        }
        self.cells.hash(&mut hasher);
        hasher.finish()
    }

    /// Whether every vertex of each cell has the same number of neighbours
    /// in every other cell.
    pub fn is_equitable(&self, g: &LabeledGraph) -> bool {
        let starts: Vec<usize> = self.starts().collect();
        let index: Vec<usize> = (0..self.lab.len()).map(|v| self.cell_of(v)).collect();
        starts.iter().all(|&c| {
            let profile = |v: usize| {
                let mut counts = vec![0usize; self.lab.len()];
                for &u in g.neighbors(v) {
                    counts[index[u]] += 1;
                }
                counts
            };
            let cell = self.cell(c);
            let first = profile(cell[0]);
            cell.iter().all(|&v| profile(v) == first)
        })
    }

    /// Whether every cell of `self` lies inside a cell of `coarser`.
    pub fn is_finer_than(&self, coarser: &OrderedPartition) -> bool {
        self.starts().all(|s| {
            let cell = self.cell(s);
            let c = coarser.cell_of(cell[0]);
            cell.iter().all(|&v| coarser.cell_of(v) == c)
        })
    }
}

/// Coarsest equitable partition finer than `p`.
pub fn refine(g: &LabeledGraph, p: &OrderedPartition) -> OrderedPartition {
    let mut out = p.clone();
    out.refine(g);
    out
}
