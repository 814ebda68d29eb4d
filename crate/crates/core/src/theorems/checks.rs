use std::collections::HashSet;
use std::time::Instant;

use num_bigint::BigUint;
use rand::Rng;
use thiserror::Error;

use crate::combinatorics::{binomial, factorial};
use crate::families::{build, complement_map, symmetric_generators, Family, FamilyError, FamilySpec};
use crate::graph::{
    common_neighbors, independence_number, is_connected, neighborhood_injective_on_part, vertex_connectivity,
    GraphError, LabeledGraph, Part, DEFAULT_INDEPENDENCE_CAP,
};
use crate::perm::{PermError, Permutation, PermutationGroup, VertexPermutation};
use crate::search::{
    automorphism_group_with, classify_bipartite_action, PartAction, SearchError, SearchOptions,
};

use super::report::{ClaimId, ClaimInstance, ClaimReport, Value};

/// Largest hypercube dimension checked.
pub const HYPERCUBE_CAP: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClaimError {
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("{0} is outside the claim's hypotheses")]
    Hypothesis(String),
    #[error("map is not an automorphism of {0}")]
    NotAutomorphism(String),
    #[error("automorphism does not preserve the first part")]
    NotPartPreserving,
}

/// Knobs shared by every check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    pub budget: u64,
    /// Random elements drawn for lift and restriction checks.
    pub samples: usize,
    /// Random elements drawn for the part-action classification.
    pub classify_samples: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { budget: crate::search::DEFAULT_NODE_BUDGET, samples: 100, classify_samples: 1000 }
    }
}

impl CheckOptions {
    fn search(&self) -> SearchOptions {
        SearchOptions { node_budget: self.budget, ..SearchOptions::default() }
    }
}

fn timed(
    claim: ClaimId,
    instance: ClaimInstance,
    expected: Value,
    body: impl FnOnce() -> Result<Value, ClaimError>,
) -> ClaimReport {
    let start = Instant::now();
    let observed = match body() {
        Ok(v) => v,
        Err(ClaimError::Search(SearchError::Budget(b))) => Value::Budget(b),
        Err(e) => Value::Error(e.to_string()),
    };
    ClaimReport::new(claim, instance, expected, observed, start.elapsed())
}

fn family_graph(spec: &FamilySpec, family: Family) -> Result<LabeledGraph, ClaimError> {
    if spec.family != family {
        return Err(ClaimError::Hypothesis(spec.to_string()));
    }
    Ok(build(spec)?)
}

fn aut(g: &LabeledGraph, opts: &CheckOptions) -> Result<PermutationGroup, ClaimError> {
    Ok(automorphism_group_with(g, &opts.search(), None)?.group)
}

/// Every generator of `a` lies in `b`.
fn generators_in(a: &PermutationGroup, b: &PermutationGroup) -> Result<bool, ClaimError> {
    for f in a.generators() {
        if !b.contains(f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_vertex_transitive(g: &LabeledGraph, group: &PermutationGroup) -> bool {
    g.vertex_count() == 0 || group.orbit(0).len() == g.vertex_count()
}

/// Orbit closure of one arc under the generators; true when it reaches all `2|E|` arcs.
pub fn is_arc_transitive(g: &LabeledGraph, group: &PermutationGroup) -> bool {
    let Some((u, v)) = g.edges().next() else { return true };
    let mut seen = HashSet::from([(u, v)]);
    let mut stack = vec![(u, v)];
    while let Some((a, b)) = stack.pop() {
        for f in group.generators() {
            let image = (f.apply(a), f.apply(b));
            if seen.insert(image) {
                stack.push(image);
            }
        }
    }
    seen.len() == 2 * g.edge_count()
}

pub fn check_vertex_transitive(spec: &FamilySpec, opts: &CheckOptions) -> ClaimReport {
    match build(spec) {
        Ok(g) => check_vertex_transitive_graph(ClaimInstance::Family(*spec), &g, true, opts),
        Err(e) => timed(ClaimId::Prop1_1, ClaimInstance::Family(*spec), Value::Bool(true), || Err(e.into())),
    }
}

/// Vertex transitivity of an arbitrary graph; `expected` is false for negative controls.
pub fn check_vertex_transitive_graph(
    instance: ClaimInstance,
    g: &LabeledGraph,
    expected: bool,
    opts: &CheckOptions,
) -> ClaimReport {
    timed(ClaimId::Prop1_1, instance, Value::Bool(expected), || {
        Ok(Value::Bool(is_vertex_transitive(g, &aut(g, opts)?)))
    })
}

pub fn check_arc_transitive(spec: &FamilySpec, opts: &CheckOptions) -> ClaimReport {
    match build(spec) {
        Ok(g) => check_arc_transitive_graph(ClaimInstance::Family(*spec), &g, true, opts),
        Err(e) => timed(ClaimId::Prop1_2, ClaimInstance::Family(*spec), Value::Bool(true), || Err(e.into())),
    }
}

pub fn check_arc_transitive_graph(
    instance: ClaimInstance,
    g: &LabeledGraph,
    expected: bool,
    opts: &CheckOptions,
) -> ClaimReport {
    timed(ClaimId::Prop1_2, instance, Value::Bool(expected), || Ok(Value::Bool(is_arc_transitive(g, &aut(g, opts)?))))
}

pub fn check_connectivity(spec: &FamilySpec) -> ClaimReport {
    let expected = Value::int(binomial((spec.n - spec.k.min(spec.n)) as u64, spec.k as u64));
    timed(ClaimId::Cor1_3, ClaimInstance::Family(*spec), expected, || {
        let g = family_graph(spec, Family::BipartiteKneser)?;
        Ok(Value::int(vertex_connectivity(&g)? as u64))
    })
}

/// Order, two-sided generation by `f_θ` and `α`, and `α` a central
/// involution outside `{f_θ}`: together these pin down `Sym(n) × Z2`.
pub fn check_main_theorem(spec: &FamilySpec, opts: &CheckOptions, rng: &mut impl Rng) -> ClaimReport {
    let expected = Value::Record(vec![
        ("order", Value::Int(factorial(spec.n as u64) * 2u32)),
        ("aut_in_generated", Value::Bool(true)),
        ("generated_in_aut", Value::Bool(true)),
        ("alpha_central_involution", Value::Bool(true)),
        ("alpha_outside_h", Value::Bool(true)),
        ("restrictions_johnson", Value::Bool(true)),
    ]);
    timed(ClaimId::Thm3_6, ClaimInstance::Family(*spec), expected, || {
        let g = family_graph(spec, Family::BipartiteKneser)?;
        let group = aut(&g, opts)?;
        let alpha = complement_map(&g)?;
        let thetas = symmetric_generators(spec, &g)?;
        let h = PermutationGroup::schreier_sims(g.domain(), &thetas)?;
        let mut with_alpha = thetas.clone();
        with_alpha.push(alpha.clone());
        let s = PermutationGroup::schreier_sims(g.domain(), &with_alpha)?;
        let mut restrictions_ok = true;
        for _ in 0..opts.samples {
            let mut f = group.random_element(rng);
            if classify_bipartite_action(&g, &f)? == PartAction::Swapping {
                f = f.compose(&alpha)?;
            }
            restrictions_ok &= check_restriction_is_johnson_automorphism(&g, &f)?;
        }
        Ok(Value::Record(vec![
            ("order", Value::Int(group.order())),
            ("aut_in_generated", Value::Bool(generators_in(&group, &s)?)),
            ("generated_in_aut", Value::Bool(generators_in(&s, &group)?)),
            ("alpha_central_involution", Value::Bool(group.is_central_involution(&alpha).unwrap_or(false))),
            ("alpha_outside_h", Value::Bool(!h.contains(&alpha)?)),
            ("restrictions_johnson", Value::Bool(restrictions_ok)),
        ]))
    })
}

/// `K(n,k)` with matching `H(n,k)`; checks `n > 4` and `2k < n`.
fn kneser_pair(spec: &FamilySpec) -> Result<(LabeledGraph, LabeledGraph), ClaimError> {
    let gk = family_graph(spec, Family::Kneser)?;
    if spec.n <= 4 {
        return Err(ClaimError::Hypothesis(spec.to_string()));
    }
    let gh = build(&FamilySpec::bipartite_kneser(spec.n, spec.k))?;
    Ok((gk, gh))
}

pub fn check_kneser_theorem(spec: &FamilySpec, opts: &CheckOptions, rng: &mut impl Rng) -> ClaimReport {
    let expected = Value::Record(vec![
        ("order", Value::Int(factorial(spec.n as u64))),
        ("aut_in_generated", Value::Bool(true)),
        ("generated_in_aut", Value::Bool(true)),
        ("lift_round_trip", Value::Bool(true)),
    ]);
    timed(ClaimId::Thm3_7, ClaimInstance::Family(*spec), expected, || {
        let (gk, gh) = kneser_pair(spec)?;
        let group = aut(&gk, opts)?;
        let h = PermutationGroup::schreier_sims(gk.domain(), &symmetric_generators(spec, &gk)?)?;
        let mut lifts_ok = true;
        for _ in 0..opts.samples {
            lifts_ok &= lift_round_trip(&gk, &gh, &group.random_element(rng))?;
        }
        Ok(Value::Record(vec![
            ("order", Value::Int(group.order())),
            ("aut_in_generated", Value::Bool(generators_in(&group, &h)?)),
            ("generated_in_aut", Value::Bool(generators_in(&h, &group)?)),
            ("lift_round_trip", Value::Bool(lifts_ok)),
        ]))
    })
}

/// Whether `lift(g)` is an automorphism of `gh` that keeps the first part
/// and restricts back to `g`.
pub fn lift_round_trip(gk: &LabeledGraph, gh: &LabeledGraph, g: &VertexPermutation) -> Result<bool, ClaimError> {
    let f = lift_kneser_automorphism(gk, gh, g)?;
    if !f.is_automorphism_of(gh) {
        return Ok(false);
    }
    match restrict_to_first_part(gh, &f, gk) {
        Ok(back) => Ok(back == *g),
        Err(ClaimError::NotPartPreserving) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Extends an automorphism `g` of `K(n,k)` to `H(n,k)`: `g` on k-sets, and
/// `α g α` on (n-k)-sets.
pub fn lift_kneser_automorphism(
    gk: &LabeledGraph,
    gh: &LabeledGraph,
    g: &VertexPermutation,
) -> Result<VertexPermutation, ClaimError> {
    if g.domain() != gk.domain() {
        return Err(PermError::DomainMismatch.into());
    }
    if !g.is_automorphism_of(gk) {
        return Err(ClaimError::NotAutomorphism(gk.name().to_string()));
    }
    let k_labels = gk.labels().ok_or(PermError::Unlabeled)?;
    let h_labels = gh.labels().ok_or(PermError::Unlabeled)?;
    let k = k_labels.first().map_or(0, |l| l.len());
    let on_k_sets = |label| -> Result<_, ClaimError> {
        let idx = gk.index_of(label).ok_or_else(|| PermError::LabelNotInGraph(label.to_string()))?;
        Ok(k_labels[g.apply(idx)])
    };
    let mut images = Vec::with_capacity(h_labels.len());
    for &label in h_labels {
        let image = if label.len() == k { on_k_sets(label)? } else { on_k_sets(label.complement())?.complement() };
        images.push(gh.index_of(image).ok_or_else(|| PermError::LabelNotInGraph(image.to_string()))?);
    }
    Ok(VertexPermutation::new(gh.domain(), Permutation::from_images(images)?)?)
}

/// The action of a part-preserving automorphism of `H(n,k)` on its k-sets,
/// as a permutation of the vertices of `target` (a graph on the k-sets).
pub fn restrict_to_first_part(
    gh: &LabeledGraph,
    f: &VertexPermutation,
    target: &LabeledGraph,
) -> Result<VertexPermutation, ClaimError> {
    let bp = gh.bipartition().ok_or(GraphError::NoBipartition)?;
    let target_labels = target.labels().ok_or(PermError::Unlabeled)?;
    let mut images = Vec::with_capacity(target_labels.len());
    for &label in target_labels {
        let v = gh.index_of(label).ok_or_else(|| PermError::LabelNotInGraph(label.to_string()))?;
        if bp.part(v) != Part::One || bp.part(f.apply(v)) != Part::One {
            return Err(ClaimError::NotPartPreserving);
        }
        let image = gh.label(f.apply(v)).ok_or(PermError::Unlabeled)?;
        images.push(target.index_of(image).ok_or_else(|| PermError::LabelNotInGraph(image.to_string()))?);
    }
    Ok(VertexPermutation::new(target.domain(), Permutation::from_images(images)?)?)
}

/// Whether a part-preserving automorphism of `H(n,k)` preserves the
/// Johnson relation `|v ∩ w| = k - 1` on the first part.
pub fn check_restriction_is_johnson_automorphism(gh: &LabeledGraph, f: &VertexPermutation) -> Result<bool, ClaimError> {
    let bp = gh.bipartition().ok_or(GraphError::NoBipartition)?;
    let first = bp.members(Part::One);
    if first.iter().any(|&v| bp.part(f.apply(v)) != Part::One) {
        return Err(ClaimError::NotPartPreserving);
    }
    let label = |v: usize| gh.label(v).ok_or(PermError::Unlabeled);
    let johnson = |a: usize, b: usize| -> Result<bool, ClaimError> {
        let (la, lb) = (label(a)?, label(b)?);
        Ok((la.bits() & lb.bits()).count_ones() as usize + 1 == la.len())
    };
    for (i, &v) in first.iter().enumerate() {
        for &w in &first[i + 1..] {
            if johnson(v, w)? != johnson(f.apply(v), f.apply(w))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn check_johnson_aut(spec: &FamilySpec, opts: &CheckOptions) -> ClaimReport {
    let mut order = factorial(spec.n as u64);
    if spec.n == 2 * spec.k {
        order *= 2u32;
    }
    timed(ClaimId::JohnsonAut, ClaimInstance::Family(*spec), Value::Int(order), || {
        let g = family_graph(spec, Family::Johnson)?;
        Ok(Value::Int(aut(&g, opts)?.order()))
    })
}

pub fn check_ekr(spec: &FamilySpec) -> ClaimReport {
    let expected = Value::int(binomial(spec.n.saturating_sub(1) as u64, spec.k.saturating_sub(1) as u64));
    timed(ClaimId::EKR, ClaimInstance::Family(*spec), expected, || {
        let g = family_graph(spec, Family::Kneser)?;
        Ok(Value::int(independence_number(&g, DEFAULT_INDEPENDENCE_CAP)? as u64))
    })
}

pub fn check_hypercube_aut(n: usize, opts: &CheckOptions) -> ClaimReport {
    let spec = FamilySpec::hypercube(n);
    let expected = Value::Record(vec![
        ("order", Value::Int((BigUint::from(1u32) << n) * factorial(n as u64))),
        ("bl_isomorphic", Value::Bool(true)),
    ]);
    timed(ClaimId::Item1_QnAut, ClaimInstance::Family(spec), expected, || {
        if n > HYPERCUBE_CAP {
            return Err(ClaimError::Hypothesis(format!("Q{n} above the cap Q{HYPERCUBE_CAP}")));
        }
        let g = build(&spec)?;
        let iso = crate::families::boolean_lattice_iso(n)?;
        Ok(Value::Record(vec![
            ("order", Value::Int(aut(&g, opts)?.order())),
            ("bl_isomorphic", Value::Bool(iso.is_isomorphism())),
        ]))
    })
}

pub fn check_neighborhood_injectivity(spec: &FamilySpec) -> ClaimReport {
    let expected = Value::Record(vec![("part_one", Value::Bool(true)), ("part_two", Value::Bool(true))]);
    timed(ClaimId::Lemma3_1, ClaimInstance::Family(*spec), expected, || {
        let g = family_graph(spec, Family::BipartiteKneser)?;
        Ok(Value::Record(vec![
            ("part_one", Value::Bool(neighborhood_injective_on_part(&g, Part::One)?)),
            ("part_two", Value::Bool(neighborhood_injective_on_part(&g, Part::Two)?)),
        ]))
    })
}

/// Classifies random automorphisms as part-preserving or swapping and checks
/// the classification multiplies like `Z2` on random products.
pub fn check_part_action(spec: &FamilySpec, opts: &CheckOptions, rng: &mut impl Rng) -> ClaimReport {
    match build(spec) {
        Ok(g) => check_part_action_graph(ClaimInstance::Family(*spec), &g, opts, rng),
        Err(e) => timed(ClaimId::Lemma3_3, ClaimInstance::Family(*spec), Value::Bool(true), || Err(e.into())),
    }
}

pub fn check_part_action_graph(
    instance: ClaimInstance,
    g: &LabeledGraph,
    opts: &CheckOptions,
    rng: &mut impl Rng,
) -> ClaimReport {
    let samples = opts.classify_samples;
    let expected = Value::Record(vec![("classified", Value::int(samples as u64)), ("homomorphism", Value::Bool(true))]);
    timed(ClaimId::Lemma3_3, instance, expected, || {
        if !is_connected(g)? {
            return Err(ClaimError::Hypothesis(format!("{} is disconnected", g.name())));
        }
        let group = aut(g, opts)?;
        let sign = |f: &VertexPermutation| classify_bipartite_action(g, f).map(|a| a == PartAction::Swapping);
        let mut classified = 0u64;
        let mut homomorphism = true;
        for _ in 0..samples {
            let a = group.random_element(rng);
            let b = group.random_element(rng);
            let (Ok(sa), Ok(sb), Ok(sab)) = (sign(&a), sign(&b), sign(&a.compose(&b)?)) else { continue };
            classified += 1;
            homomorphism &= sab == (sa ^ sb);
        }
        Ok(Value::Record(vec![("classified", Value::int(classified)), ("homomorphism", Value::Bool(homomorphism))]))
    })
}

/// Common neighbours of every pair of k-sets against `C(n-k-h, k)`, and the
/// `h = 1` count differing from every other realised `h`.
pub fn check_counting_lemma(spec: &FamilySpec) -> ClaimReport {
    let (n, k) = (spec.n as u64, spec.k as u64);
    let m = binomial(n, k);
    let expected = Value::Record(vec![
        ("pairs", Value::int(m * (m + 1) / 2)),
        ("mismatches", Value::int(0u32)),
        ("h1_distinguished", Value::Bool(true)),
    ]);
    timed(ClaimId::Lemma3_5, ClaimInstance::Family(*spec), expected, || {
        let g = family_graph(spec, Family::BipartiteKneser)?;
        let first = g.bipartition().ok_or(GraphError::NoBipartition)?.members(Part::One);
        let (mut pairs, mut mismatches) = (0u64, 0u64);
        let mut realised_h = HashSet::new();
        for (i, &u) in first.iter().enumerate() {
            for &v in &first[i..] {
                let (lu, lv) = (g.label(u).ok_or(PermError::Unlabeled)?, g.label(v).ok_or(PermError::Unlabeled)?);
                let h = u64::from((lu.bits() | lv.bits()).count_ones()) - k;
                realised_h.insert(h);
                pairs += 1;
                if common_neighbors(&g, u, v)?.len() as u64 != binomial(n - k - h, k) {
                    mismatches += 1;
                }
            }
        }
        let at_one = binomial(n - k - 1, k);
        let distinguished = realised_h.iter().all(|&h| h == 1 || binomial(n - k - h, k) != at_one);
        Ok(Value::Record(vec![
            ("pairs", Value::int(pairs)),
            ("mismatches", Value::int(mismatches)),
            ("h1_distinguished", Value::Bool(distinguished)),
        ]))
    })
}

/// `C(l,u) > C(m,u)` over all `1 <= u < m < l <= max`.
pub fn check_binomial_monotonicity(max: u64) -> ClaimReport {
    let triples = if max >= 3 { binomial(max, 3) } else { 0 };
    let expected = Value::Record(vec![("triples", Value::int(triples)), ("violations", Value::int(0u32))]);
    timed(ClaimId::Lemma3_5, ClaimInstance::BinomialRange { max }, expected, || {
        let (mut count, mut violations) = (0u64, 0u64);
        for l in 1..=max {
            for m in 1..l {
                for u in 1..m {
                    count += 1;
                    if binomial(l, u) <= binomial(m, u) {
                        violations += 1;
                    }
                }
            }
        }
        Ok(Value::Record(vec![("triples", Value::int(count)), ("violations", Value::int(violations))]))
    })
}
