use std::fmt;

use crate::graph::{GraphId, LabeledGraph};

use super::{PermError, Permutation};

/// The vertex set a [`VertexPermutation`] acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Domain {
    pub graph: GraphId,
    pub size: usize,
}

/// A bijection of the vertex indices of one particular graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexPermutation {
    perm: Permutation,
    graph: GraphId,
}

impl VertexPermutation {
    pub fn new(domain: Domain, perm: Permutation) -> Result<Self, PermError> {
        if perm.len() != domain.size {
            return Err(PermError::SizeMismatch(perm.len(), domain.size));
        }
        Ok(VertexPermutation { perm, graph: domain.graph })
    }

    pub fn identity(domain: Domain) -> Self {
        VertexPermutation { perm: Permutation::identity(domain.size), graph: domain.graph }
    }

    pub fn domain(&self) -> Domain {
        Domain { graph: self.graph, size: self.perm.len() }
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn into_perm(self) -> Permutation {
        self.perm
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.perm.apply(v)
    }

    /// `self ∘ other` (other first).
    pub fn compose(&self, other: &VertexPermutation) -> Result<Self, PermError> {
        if self.graph != other.graph {
            return Err(PermError::DomainMismatch);
        }
        Ok(VertexPermutation { perm: self.perm.compose(&other.perm)?, graph: self.graph })
    }

    pub fn inverse(&self) -> Self {
        VertexPermutation { perm: self.perm.inverse(), graph: self.graph }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity()
    }

    pub fn is_involution(&self) -> bool {
        self.perm.compose_unchecked(&self.perm).is_identity()
    }

    pub fn commutes_with(&self, other: &VertexPermutation) -> bool {
        self.graph == other.graph
            && self.perm.compose_unchecked(&other.perm) == other.perm.compose_unchecked(&self.perm)
    }

    /// `{u,v} ∈ E ⇔ {f(u), f(v)} ∈ E` for all pairs.
    pub fn is_automorphism_of(&self, g: &LabeledGraph) -> bool {
        self.graph == g.id() && g.is_automorphism(&self.perm)
    }

    pub fn to_cycle_string(&self) -> String {
        self.perm.to_cycle_string()
    }
}

impl fmt::Display for VertexPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.perm, f)
    }
}

impl fmt::Debug for VertexPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.perm, f)
    }
}

/// `f_θ`: the vertex map `v ↦ θ(v)` applied elementwise to subset labels.
///
/// Fails if some image label is missing from the graph, i.e. the vertex set
/// is not closed under the action of the symmetric group on the ground set.
pub fn induced_subset_action(theta: &Permutation, g: &LabeledGraph) -> Result<VertexPermutation, PermError> {
    let labels = g.labels().ok_or(PermError::Unlabeled)?;
    let ground = g.ground_size().unwrap_or(0);
    if theta.len() < ground {
        return Err(PermError::GroundMismatch { perm: theta.len(), graph: ground });
    }
    let mut images = Vec::with_capacity(labels.len());
    for label in labels {
        let mapped = label.map(theta).ok_or(PermError::GroundMismatch { perm: theta.len(), graph: ground })?;
        let idx = g.index_of(mapped).ok_or_else(|| PermError::LabelNotInGraph(mapped.to_string()))?;
        images.push(idx);
    }
    VertexPermutation::new(g.domain(), Permutation::from_images_unchecked(images))
}
