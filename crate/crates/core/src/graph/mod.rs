//! Immutable simple graphs whose vertices may carry subset labels.

mod flow;
mod independence;
pub mod io;
mod metrics;
mod subset;

pub use flow::{local_connectivity, vertex_connectivity};
pub use independence::{independence_number, DEFAULT_INDEPENDENCE_CAP};
pub use metrics::{
    common_neighbors, diameter, distance, distances_from, is_connected, neighborhood_injective_on_part,
    parity_parts,
};
pub use subset::{SubsetVertex, MAX_GROUND};

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::families::FamilySpec;
use crate::perm::{Domain, Permutation};

/// Bitset adjacency rows are kept for graphs up to this many vertices.
pub const BITSET_ROW_LIMIT: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("adjacency is not symmetric at {0}-{1}")]
    Asymmetric(usize, usize),
    #[error("duplicate vertex label {0}")]
    DuplicateLabel(String),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("label {0} is not over the graph's ground set")]
    BadLabel(String),
    #[error("edge {0}-{1} joins two vertices of the same part")]
    BipartitionViolated(usize, usize),
    #[error("graph has no bipartition")]
    NoBipartition,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    Empty,
    #[error("independence search limited to {cap} vertices, graph has {size}; raise the cap to override")]
    IndependenceCap { size: usize, cap: usize },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("adjacency list: {0}")]
    AdjacencyList(String),
}

/// One side of a bipartition; renders as `1` or `2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    One,
    Two,
}

impl Part {
    pub fn other(self) -> Part {
        match self {
            Part::One => Part::Two,
            Part::Two => Part::One,
        }
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Part::One => "1",
            Part::Two => "2",
        })
    }
}

/// Per-vertex part tags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    parts: Vec<Part>,
}

impl Bipartition {
    pub fn new(parts: Vec<Part>) -> Self {
        Bipartition { parts }
    }

    pub fn part(&self, v: usize) -> Part {
        self.parts[v]
    }

    pub fn tags(&self) -> &[Part] {
        &self.parts
    }

    pub fn members(&self, part: Part) -> Vec<usize> {
        (0..self.parts.len()).filter(|&v| self.parts[v] == part).collect()
    }

    pub fn sizes(&self) -> (usize, usize) {
        let one = self.parts.iter().filter(|&&p| p == Part::One).count();
        (one, self.parts.len() - one)
    }
}

/// Which constructor produced a graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    Family(FamilySpec),
    Generic,
}

/// Content fingerprint identifying the vertex set a permutation acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphId(u64);

#[derive(Clone)]
pub struct LabeledGraph {
    id: GraphId,
    name: String,
    family: FamilyTag,
    ground: Option<usize>,
    labels: Option<Vec<SubsetVertex>>,
    adj: Vec<Vec<usize>>,
    rows: Option<Vec<FixedBitSet>>,
    bipartition: Option<Bipartition>,
    edge_count: usize,
}

impl LabeledGraph {
    /// Unlabelled graph from an edge list.
    pub fn from_edges(name: &str, n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let adj = adjacency_from_edges(n, edges)?;
        Self::assemble(name.to_string(), FamilyTag::Generic, None, None, adj, None)
    }

    /// Labelled graph from an explicit edge list.
    pub fn from_labeled_edges(
        name: &str,
        ground: usize,
        labels: Vec<SubsetVertex>,
        edges: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        let adj = adjacency_from_edges(labels.len(), edges)?;
        Self::assemble(name.to_string(), FamilyTag::Generic, Some(ground), Some(labels), adj, None)
    }

    /// Labelled graph whose edges are given by a predicate on label pairs.
    /// Labels are sorted into the canonical vertex order first.
    pub(crate) fn from_label_relation(
        family: FamilySpec,
        ground: usize,
        mut labels: Vec<SubsetVertex>,
        adjacent: impl Fn(SubsetVertex, SubsetVertex) -> bool,
        part_of: Option<&dyn Fn(SubsetVertex) -> Part>,
    ) -> Result<Self, GraphError> {
        labels.sort();
        let n = labels.len();
        let mut adj = vec![Vec::new(); n];
        for i in 0..n {
            for j in i + 1..n {
                if adjacent(labels[i], labels[j]) {
                    adj[i].push(j);
                    adj[j].push(i);
                }
            }
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        let bipartition = part_of.map(|f| Bipartition::new(labels.iter().map(|&l| f(l)).collect()));
        Self::assemble(family.to_string(), FamilyTag::Family(family), Some(ground), Some(labels), adj, bipartition)
    }

    fn assemble(
        name: String,
        family: FamilyTag,
        ground: Option<usize>,
        labels: Option<Vec<SubsetVertex>>,
        adj: Vec<Vec<usize>>,
        bipartition: Option<Bipartition>,
    ) -> Result<Self, GraphError> {
        let n = adj.len();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let rows = (n <= BITSET_ROW_LIMIT).then(|| {
            adj.iter()
                .map(|nbrs| {
                    let mut row = FixedBitSet::with_capacity(n);
                    for &u in nbrs {
                        row.insert(u);
                    }
                    row
                })
                .collect()
        });
        let mut hasher = DefaultHasher::new();
        adj.hash(&mut hasher);
        if let Some(ls) = &labels {
            for l in ls {
                l.bits().hash(&mut hasher);
            }
        }
        ground.hash(&mut hasher);
        let g = LabeledGraph {
            id: GraphId(hasher.finish()),
            name,
            family,
            ground,
            labels,
            adj,
            rows,
            bipartition,
            edge_count,
        };
        g.validate()?;
        Ok(g)
    }

    /// Attaches part tags, e.g. the result of [`parity_parts`].
    pub fn with_bipartition(mut self, bipartition: Bipartition) -> Result<Self, GraphError> {
        self.bipartition = Some(bipartition);
        self.validate()?;
        Ok(self)
    }

    /// Checks simplicity, symmetry, label distinctness and the bipartition.
    pub fn validate(&self) -> Result<(), GraphError> {
        let n = self.adj.len();
        for (v, nbrs) in self.adj.iter().enumerate() {
            for w in nbrs.windows(2) {
                if w[0] >= w[1] {
                    return Err(GraphError::DuplicateEdge(v, w[1]));
                }
            }
            for &u in nbrs {
                if u >= n {
                    return Err(GraphError::VertexOutOfRange(u));
                }
                if u == v {
                    return Err(GraphError::SelfLoop(v));
                }
                if self.adj[u].binary_search(&v).is_err() {
                    return Err(GraphError::Asymmetric(v, u));
                }
            }
        }
        if let Some(labels) = &self.labels {
            if labels.len() != n {
                return Err(GraphError::LabelCount { expected: n, got: labels.len() });
            }
            let ground = self.ground.unwrap_or(0);
            let mut sorted = labels.clone();
            sorted.sort();
            for w in sorted.windows(2) {
                if w[0] == w[1] {
                    return Err(GraphError::DuplicateLabel(w[0].to_string()));
                }
            }
            if let Some(bad) = labels.iter().find(|l| l.ground() != ground) {
                return Err(GraphError::BadLabel(bad.to_string()));
            }
        }
        if let Some(bp) = &self.bipartition {
            if bp.tags().len() != n {
                return Err(GraphError::LabelCount { expected: n, got: bp.tags().len() });
            }
            for (v, nbrs) in self.adj.iter().enumerate() {
                if let Some(&u) = nbrs.iter().find(|&&u| bp.part(u) == bp.part(v)) {
                    return Err(GraphError::BipartitionViolated(v, u));
                }
            }
        }
        Ok(())
    }

    pub fn id(&self) -> GraphId {
        self.id
    }

    pub fn domain(&self) -> Domain {
        Domain { graph: self.id, size: self.adj.len() }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn family(&self) -> &FamilyTag {
        &self.family
    }

    pub fn family_spec(&self) -> Option<&FamilySpec> {
        match &self.family {
            FamilyTag::Family(spec) => Some(spec),
            FamilyTag::Generic => None,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// `Some(d)` if every vertex has degree `d`.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        self.adj.iter().all(|nbrs| nbrs.len() == d).then_some(d)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match &self.rows {
            Some(rows) => rows[u].contains(v),
            None => self.adj[u].binary_search(&v).is_ok(),
        }
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(v, nbrs)| nbrs.iter().filter(move |&&u| u > v).map(move |&u| (v, u)))
    }

    pub fn labels(&self) -> Option<&[SubsetVertex]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<SubsetVertex> {
        self.labels.as_ref().map(|ls| ls[v])
    }

    /// Ground-set size `n` of the labels, if labelled.
    pub fn ground_size(&self) -> Option<usize> {
        self.ground
    }

    /// Index of the vertex carrying `label`.
    pub fn index_of(&self, label: SubsetVertex) -> Option<usize> {
        let labels = self.labels.as_ref()?;
        if self.family_spec().is_some() {
            labels.binary_search(&label).ok()
        } else {
            labels.iter().position(|&l| l == label)
        }
    }

    pub fn bipartition(&self) -> Option<&Bipartition> {
        self.bipartition.as_ref()
    }

    /// Whether `p` maps edges onto edges.
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        p.len() == self.vertex_count()
            && self.adj.iter().enumerate().all(|(v, nbrs)| {
                let pv = p.apply(v);
                self.adj[pv].len() == nbrs.len() && nbrs.iter().all(|&u| self.has_edge(pv, p.apply(u)))
            })
    }
}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabeledGraph({}, |V|={}, |E|={})", self.name, self.vertex_count(), self.edge_count)
    }
}

fn adjacency_from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Vec<Vec<usize>>, GraphError> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        if u >= n || v >= n {
            return Err(GraphError::VertexOutOfRange(u.max(v)));
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    for (v, row) in adj.iter_mut().enumerate() {
        row.sort_unstable();
        if let Some(w) = row.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(v, w[0]));
        }
    }
    Ok(adj)
}

/// Small named graphs used as fixtures and negative controls.
pub mod named {
    use super::{GraphError, LabeledGraph};

    pub fn path(m: usize) -> Result<LabeledGraph, GraphError> {
        let edges: Vec<_> = (1..m).map(|i| (i - 1, i)).collect();
        LabeledGraph::from_edges(&format!("P{m}"), m, &edges)
    }

    pub fn cycle(m: usize) -> Result<LabeledGraph, GraphError> {
        let edges: Vec<_> = (0..m).map(|i| (i, (i + 1) % m)).collect();
        LabeledGraph::from_edges(&format!("C{m}"), m, &edges)
    }

    /// `K_{1,leaves}` with the centre at index 0.
    pub fn star(leaves: usize) -> Result<LabeledGraph, GraphError> {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        LabeledGraph::from_edges(&format!("K1,{leaves}"), leaves + 1, &edges)
    }

    pub fn complete(m: usize) -> Result<LabeledGraph, GraphError> {
        let edges: Vec<_> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
        LabeledGraph::from_edges(&format!("K{m}"), m, &edges)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<LabeledGraph, GraphError> {
        let edges: Vec<_> = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))).collect();
        LabeledGraph::from_edges(&format!("K{a},{b}"), a + b, &edges)
    }

    pub fn edgeless(m: usize) -> Result<LabeledGraph, GraphError> {
        LabeledGraph::from_edges(&format!("N{m}"), m, &[])
    }

    /// Outer 5-cycle, inner pentagram, spokes.
    pub fn petersen() -> Result<LabeledGraph, GraphError> {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        LabeledGraph::from_edges("Petersen", 10, &edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_edge_lists() {
        assert_eq!(LabeledGraph::from_edges("x", 3, &[(0, 0)]).unwrap_err(), GraphError::SelfLoop(0));
        assert_eq!(LabeledGraph::from_edges("x", 3, &[(0, 1), (1, 0)]).unwrap_err(), GraphError::DuplicateEdge(0, 1));
        assert_eq!(LabeledGraph::from_edges("x", 3, &[(0, 3)]).unwrap_err(), GraphError::VertexOutOfRange(3));
    }

    #[test]
    fn rejects_duplicate_labels() {
        let l = SubsetVertex::from_elements(3, &[1]).unwrap();
        let err = LabeledGraph::from_labeled_edges("x", 3, vec![l, l], &[]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateLabel("{1}".into()));
    }

    #[test]
    fn named_graphs_have_expected_sizes() {
        let p = named::petersen().unwrap();
        assert_eq!((p.vertex_count(), p.edge_count(), p.regular_degree()), (10, 15, Some(3)));
        assert_eq!(named::star(3).unwrap().edge_count(), 3);
        assert_eq!(named::complete(5).unwrap().edge_count(), 10);
        assert_eq!(named::path(1).unwrap().edge_count(), 0);
        assert_eq!(named::complete_bipartite(2, 3).unwrap().edge_count(), 6);
    }

    #[test]
    fn automorphism_check() {
        let c = named::cycle(5).unwrap();
        assert!(c.is_automorphism(&Permutation::parse_cycles("(1 2 3 4 5)", 5).unwrap()));
        assert!(!c.is_automorphism(&Permutation::parse_cycles("(1 2)", 5).unwrap()));
        assert!(!c.is_automorphism(&Permutation::identity(4)));
    }

    #[test]
    fn graph_ids_track_content() {
        assert_eq!(named::cycle(6).unwrap().id(), named::cycle(6).unwrap().id());
        assert_ne!(named::cycle(6).unwrap().id(), named::path(6).unwrap().id());
    }
}
