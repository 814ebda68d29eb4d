use std::collections::VecDeque;

use super::{Bipartition, GraphError, LabeledGraph, Part};

fn check(g: &LabeledGraph, v: usize) -> Result<(), GraphError> {
    if v < g.vertex_count() {
        Ok(())
    } else {
        Err(GraphError::VertexOutOfRange(v))
    }
}

/// BFS distances from `src`; `None` marks unreachable vertices.
pub fn distances_from(g: &LabeledGraph, src: usize) -> Result<Vec<Option<usize>>, GraphError> {
    check(g, src)?;
    let mut dist = vec![None; g.vertex_count()];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap_or(0);
        for &u in g.neighbors(v) {
            if dist[u].is_none() {
                dist[u] = Some(d + 1);
                queue.push_back(u);
            }
        }
    }
    Ok(dist)
}

/// Shortest-path length, `None` if `v` is unreachable from `u`.
pub fn distance(g: &LabeledGraph, u: usize, v: usize) -> Result<Option<usize>, GraphError> {
    check(g, v)?;
    Ok(distances_from(g, u)?[v])
}

pub fn is_connected(g: &LabeledGraph) -> Result<bool, GraphError> {
    if g.vertex_count() == 0 {
        return Err(GraphError::Empty);
    }
    Ok(distances_from(g, 0)?.iter().all(Option::is_some))
}

pub fn diameter(g: &LabeledGraph) -> Result<usize, GraphError> {
    if g.vertex_count() == 0 {
        return Err(GraphError::Empty);
    }
    let mut best = 0;
    for v in 0..g.vertex_count() {
        for d in distances_from(g, v)? {
            best = best.max(d.ok_or(GraphError::Disconnected)?);
        }
    }
    Ok(best)
}

/// Two-colouring by BFS parity, component by component; `None` on an odd cycle.
pub fn parity_parts(g: &LabeledGraph) -> Option<Bipartition> {
    let n = g.vertex_count();
    let mut color: Vec<Option<Part>> = vec![None; n];
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(Part::One);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let cv = color[v]?;
            for &u in g.neighbors(v) {
                match color[u] {
                    None => {
                        color[u] = Some(cv.other());
                        queue.push_back(u);
                    }
                    Some(cu) if cu == cv => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(Bipartition::new(color.into_iter().map(|c| c.unwrap_or(Part::One)).collect()))
}

/// `N(u) ∩ N(v)`, ascending.
pub fn common_neighbors(g: &LabeledGraph, u: usize, v: usize) -> Result<Vec<usize>, GraphError> {
    check(g, u)?;
    check(g, v)?;
    let (a, b) = (g.neighbors(u), g.neighbors(v));
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    Ok(out)
}

/// Whether the vertices of the part opposite `part` have pairwise distinct
/// neighbourhoods, so that fixing `part` pointwise fixes everything.
pub fn neighborhood_injective_on_part(g: &LabeledGraph, part: Part) -> Result<bool, GraphError> {
    let bp = g.bipartition().ok_or(GraphError::NoBipartition)?;
    let mut hoods: Vec<&[usize]> = bp.members(part.other()).into_iter().map(|w| g.neighbors(w)).collect();
    hoods.sort_unstable();
    Ok(hoods.windows(2).all(|w| w[0] != w[1]))
}
