//! Exhaustive automorphism enumeration, used as an oracle for tiny graphs.
//!
//! Walks every injective partial map in lexicographic order and abandons a
//! branch as soon as one assigned pair disagrees on adjacency, so every
//! bijection of the vertex set is accounted for.

use crate::graph::LabeledGraph;
use crate::perm::{Permutation, PermutationGroup, VertexPermutation};

use super::SearchError;

pub const BRUTE_FORCE_CAP: usize = 10;

fn extend(g: &LabeledGraph, image: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
    let n = g.vertex_count();
    let v = image.len();
    if v == n {
        out.push(Permutation::from_images_unchecked(image.clone()));
        return;
    }
    for c in 0..n {
        if used[c] || !(0..v).all(|u| g.has_edge(u, v) == g.has_edge(image[u], c)) {
            continue;
        }
        used[c] = true;
        image.push(c);
        extend(g, image, used, out);
        image.pop();
        used[c] = false;
    }
}

/// Every automorphism of `g`, in lexicographic order of image lists.
pub fn brute_force_automorphisms(g: &LabeledGraph) -> Result<Vec<VertexPermutation>, SearchError> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_CAP {
        return Err(SearchError::BruteForceCap { size: n, cap: BRUTE_FORCE_CAP });
    }
    if n == 0 {
        return Err(SearchError::Empty);
    }
    let mut out = Vec::new();
    extend(g, &mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out.into_iter().map(|p| Ok(VertexPermutation::new(g.domain(), p)?)).collect()
}

/// The group of all automorphisms found by exhaustive enumeration.
pub fn brute_force_aut(g: &LabeledGraph) -> Result<PermutationGroup, SearchError> {
    let all = brute_force_automorphisms(g)?;
    let mut group = PermutationGroup::trivial(g.domain())?;
    for f in all {
        group.add_generator(f)?;
    }
    Ok(group)
}
