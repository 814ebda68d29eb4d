//! Automorphism groups by individualization-refinement.
//!
//! The search first walks one root-to-leaf path, always individualizing the
//! smallest vertex of the target cell. Then, from the deepest level upward,
//! it tries every other vertex `w` of that level's target cell that is not
//! already in the orbit of the path vertex under the generators found so
//! far, looking in the subtree under `w` for a leaf whose position-wise
//! correspondence with the first leaf is an automorphism. Generators found
//! at deeper levels fix the whole path prefix, so the orbit sizes along the
//! path multiply to the group order.

mod brute;
mod partition;

pub use brute::{brute_force_aut, brute_force_automorphisms, BRUTE_FORCE_CAP};
pub use partition::{refine, OrderedPartition};

use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::graph::{parity_parts, Bipartition, LabeledGraph, Part};
use crate::perm::{PermError, Permutation, PermutationGroup, VertexPermutation};

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("search budget of {0} nodes exceeded")]
    Budget(u64),
    #[error("graph has no vertices")]
    Empty,
    #[error("brute-force enumeration limited to {cap} vertices, graph has {size}")]
    BruteForceCap { size: usize, cap: usize },
    #[error("graph is not connected and bipartite")]
    NotBipartite,
    #[error("map is not an automorphism of {0}")]
    NotAutomorphism(String),
    #[error("automorphism neither preserves nor swaps the two parts")]
    MixedPartAction,
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// Colouring the search starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InitialColoring {
    /// One cell; finds every automorphism.
    #[default]
    Unit,
    /// Cells by (part tag, degree). Only part-preserving automorphisms are
    /// found, since the part order is fixed.
    DegreeAndParts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub initial: InitialColoring,
    pub node_budget: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { initial: InitialColoring::Unit, node_budget: DEFAULT_NODE_BUDGET }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    FirstPath,
    Explored,
    Pruned,
    Leaf,
}

/// One visited search node, as reported to a tracer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceNode {
    pub index: u64,
    pub depth: usize,
    pub kind: NodeKind,
    pub shape: Vec<usize>,
}

impl fmt::Display for TraceNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            NodeKind::FirstPath => "first",
            NodeKind::Explored => "node",
            NodeKind::Pruned => "pruned",
            NodeKind::Leaf => "leaf",
        };
        let shape: Vec<String> = self.shape.iter().map(usize::to_string).collect();
        write!(f, "{kind} {} depth {} cells {} shape {}", self.index, self.depth, self.shape.len(), shape.join(","))
    }
}

#[derive(Debug, Clone)]
pub struct AutResult {
    pub group: PermutationGroup,
    pub node_count: u64,
    pub refinement_count: u64,
    /// Orbit length of each individualized path vertex under its pointwise stabilizer.
    pub path_orbits: Vec<usize>,
}

impl AutResult {
    pub fn order(&self) -> BigUint {
        self.group.order()
    }
}

struct PathNode {
    partition: OrderedPartition,
    trace: u64,
    target: Option<usize>,
    chosen: usize,
}

struct Searcher<'a> {
    g: &'a LabeledGraph,
    budget: u64,
    nodes: u64,
    refinements: u64,
    tracer: Option<&'a mut dyn FnMut(&TraceNode)>,
    path: Vec<PathNode>,
    first_leaf: Vec<usize>,
}

impl Searcher<'_> {
    fn visit(&mut self, depth: usize, kind: NodeKind, p: &OrderedPartition) -> Result<(), SearchError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(SearchError::Budget(self.budget));
        }
        if let Some(tracer) = self.tracer.as_mut() {
            tracer(&TraceNode { index: self.nodes, depth, kind, shape: p.shape() });
        }
        Ok(())
    }

    fn child(&mut self, parent: &OrderedPartition, v: usize) -> (OrderedPartition, u64) {
        let mut p = parent.clone();
        let s = p.individualize(v);
        self.refinements += 1;
        let trace = p.refine_from(self.g, &[s]);
        (p, trace)
    }

    fn first_path(&mut self, root: OrderedPartition) -> Result<(), SearchError> {
        let mut p = root;
        self.refinements += 1;
        let mut trace = p.refine(self.g);
        loop {
            self.visit(self.path.len(), NodeKind::FirstPath, &p)?;
            let target = p.target_cell();
            let chosen = target.map_or(0, |t| *p.cell(t).iter().min().expect("cells are non-empty"));
            let next = target.map(|_| self.child(&p, chosen));
            self.path.push(PathNode { partition: p, trace, target, chosen });
            match next {
                Some((np, nt)) => {
                    p = np;
                    trace = nt;
                }
                None => break,
            }
        }
        self.first_leaf = self.path.last().expect("path has a leaf").partition.lab().to_vec();
        Ok(())
    }

    /// Looks for a leaf below `p` matching the first leaf through an automorphism.
    fn explore(&mut self, p: OrderedPartition, trace: u64, depth: usize) -> Result<Option<Permutation>, SearchError> {
        let reference = &self.path[depth];
        if trace != reference.trace || p.cell_count() != reference.partition.cell_count() {
            self.visit(depth, NodeKind::Pruned, &p)?;
            return Ok(None);
        }
        if p.is_discrete() {
            self.visit(depth, NodeKind::Leaf, &p)?;
            let mut images = vec![0; p.vertex_count()];
            for (&from, &to) in self.first_leaf.iter().zip(p.lab()) {
                images[from] = to;
            }
            let gamma = Permutation::from_images_unchecked(images);
            return Ok(self.g.is_automorphism(&gamma).then_some(gamma));
        }
        self.visit(depth, NodeKind::Explored, &p)?;
        let target = p.target_cell().expect("non-discrete partition has a target cell");
        let mut candidates = p.cell(target).to_vec();
        candidates.sort_unstable();
        for x in candidates {
            let (child, t) = self.child(&p, x);
            if let Some(gamma) = self.explore(child, t, depth + 1)? {
                return Ok(Some(gamma));
            }
        }
        Ok(None)
    }

    fn run(&mut self) -> Result<(Vec<Permutation>, Vec<usize>), SearchError> {
        let n = self.g.vertex_count();
        let mut gens: Vec<Permutation> = Vec::new();
        let mut orbits = UnionFind::new(n);
        let mut path_orbits = vec![1; self.path.len().saturating_sub(1)];
        for level in (0..self.path.len()).rev() {
            let Some(target) = self.path[level].target else { continue };
            let v = self.path[level].chosen;
            let mut cell = self.path[level].partition.cell(target).to_vec();
            cell.sort_unstable();
            let mut failed: Vec<usize> = Vec::new();
            for w in cell {
                if orbits.same(w, v) || failed.iter().any(|&f| orbits.same(f, w)) {
                    continue;
                }
                let (child, t) = self.child(&self.path[level].partition.clone(), w);
                match self.explore(child, t, level + 1)? {
                    Some(gamma) => {
                        for x in 0..n {
                            orbits.union(x, gamma.apply(x));
                        }
                        gens.push(gamma);
                    }
                    None => failed.push(w),
                }
            }
            path_orbits[level] = (0..n).filter(|&x| orbits.same(x, v)).count();
        }
        Ok((gens, path_orbits))
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn initial_partition(g: &LabeledGraph, initial: InitialColoring) -> OrderedPartition {
    let n = g.vertex_count();
    match initial {
        InitialColoring::Unit => OrderedPartition::unit(n),
        InitialColoring::DegreeAndParts => {
            let key = |v: usize| (g.bipartition().map(|bp| bp.part(v)), g.degree(v));
            let mut order: Vec<usize> = (0..n).collect();
            order.sort_by_key(|&v| (key(v), v));
            let mut cells: Vec<Vec<usize>> = Vec::new();
            for v in order {
                match cells.last_mut() {
                    Some(cell) if key(cell[0]) == key(v) => cell.push(v),
                    _ => cells.push(vec![v]),
                }
            }
            OrderedPartition::from_cells(&cells).expect("grouping covers every vertex once")
        }
    }
}

/// Full automorphism group with default options.
pub fn automorphism_group(g: &LabeledGraph) -> Result<AutResult, SearchError> {
    automorphism_group_with(g, &SearchOptions::default(), None)
}

/// Automorphism group search with explicit options and an optional per-node tracer.
pub fn automorphism_group_with<'a>(
    g: &'a LabeledGraph,
    options: &SearchOptions,
    tracer: Option<&'a mut dyn FnMut(&TraceNode)>,
) -> Result<AutResult, SearchError> {
    if g.vertex_count() == 0 {
        return Err(SearchError::Empty);
    }
    let mut searcher = Searcher {
        g,
        budget: options.node_budget,
        nodes: 0,
        refinements: 0,
        tracer,
        path: Vec::new(),
        first_leaf: Vec::new(),
    };
    searcher.first_path(initial_partition(g, options.initial))?;
    let (gens, path_orbits) = searcher.run()?;
    let domain = g.domain();
    let gens = gens
        .into_iter()
        .map(|p| {
            if !g.is_automorphism(&p) {
                return Err(SearchError::NotAutomorphism(g.name().to_string()));
            }
            Ok(VertexPermutation::new(domain, p)?)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let group = PermutationGroup::schreier_sims(domain, &gens)?;
    debug_assert_eq!(group.order(), path_orbits.iter().fold(BigUint::from(1u32), |a, &o| a * o));
    Ok(AutResult { group, node_count: searcher.nodes, refinement_count: searcher.refinements, path_orbits })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartAction {
    Preserving,
    Swapping,
}

impl fmt::Display for PartAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PartAction::Preserving => "preserving",
            PartAction::Swapping => "swapping",
        })
    }
}

/// Whether automorphism `f` keeps both parts in place or exchanges them.
/// Uses the graph's part tags, or the BFS two-colouring if untagged.
pub fn classify_bipartite_action(g: &LabeledGraph, f: &VertexPermutation) -> Result<PartAction, SearchError> {
    if f.domain() != g.domain() {
        return Err(PermError::DomainMismatch.into());
    }
    if !f.is_automorphism_of(g) {
        return Err(SearchError::NotAutomorphism(g.name().to_string()));
    }
    let computed;
    let bp: &Bipartition = match g.bipartition() {
        Some(bp) => bp,
        None => {
            computed = parity_parts(g).ok_or(SearchError::NotBipartite)?;
            &computed
        }
    };
    let mut preserves = true;
    let mut swaps = true;
    for v in 0..g.vertex_count() {
        let same = bp.part(f.apply(v)) == bp.part(v);
        preserves &= same;
        swaps &= !same;
    }
    match (preserves, swaps) {
        (true, _) => Ok(PartAction::Preserving),
        (false, true) => Ok(PartAction::Swapping),
        (false, false) => Err(SearchError::MixedPartAction),
    }
}

/// Vertices of part one (for convenience in reports).
pub fn part_one(g: &LabeledGraph) -> Option<Vec<usize>> {
    g.bipartition().map(|bp| bp.members(Part::One))
}
