use kneser_sym::combinatorics::binomial;
use kneser_sym::families::{boolean_lattice_iso, build, complement_map, FamilySpec};
use kneser_sym::graph::io::{from_adjacency_list, from_graph6, to_adjacency_list, to_graph6};
use kneser_sym::graph::{
    common_neighbors, independence_number, is_connected, parity_parts, vertex_connectivity, LabeledGraph, Part,
};
use kneser_sym::perm::{induced_subset_action, Permutation};
use proptest::prelude::*;

fn random_graph() -> impl Strategy<Value = LabeledGraph> {
    (1usize..=8).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            LabeledGraph::from_edges("random", n, &edges).unwrap()
        })
    })
}

fn connected_without(g: &LabeledGraph, removed: u32) -> bool {
    let n = g.vertex_count();
    let alive: Vec<usize> = (0..n).filter(|&v| removed >> v & 1 == 0).collect();
    let Some(&start) = alive.first() else { return true };
    let mut seen = removed | 1 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &u in g.neighbors(v) {
            if seen >> u & 1 == 0 {
                seen |= 1 << u;
                stack.push(u);
            }
        }
    }
    seen.count_ones() as usize == n
}

/// Smallest separating vertex set by enumeration; `n - 1` if none exists.
fn brute_connectivity(g: &LabeledGraph) -> usize {
    let n = g.vertex_count();
    (0u32..1 << n)
        .filter(|&s| n - s.count_ones() as usize >= 2 && !connected_without(g, s))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(n.saturating_sub(1))
}

fn brute_independence(g: &LabeledGraph) -> usize {
    let n = g.vertex_count();
    (0u32..1 << n)
        .filter(|&s| g.edges().all(|(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn all_specs(max_n: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for k in 1..=n / 2 {
            out.push(FamilySpec::johnson(n, k));
            if 2 * k < n {
                out.push(FamilySpec::kneser(n, k));
                out.push(FamilySpec::bipartite_kneser(n, k));
            }
        }
        if n <= 6 {
            out.push(FamilySpec::hypercube(n));
            out.push(FamilySpec::boolean_lattice(n));
        }
    }
    out
}

#[test]
fn every_instance_is_simple_and_has_the_advertised_shape() {
    use kneser_sym::families::Family::*;
    for spec in all_specs(9) {
        let g = build(&spec).unwrap();
        g.validate().unwrap();
        let (n, k) = (spec.n as u64, spec.k as u64);
        let (order, degree) = match spec.family {
            BipartiteKneser => (2 * binomial(n, k), binomial(n - k, k)),
            Kneser => (binomial(n, k), binomial(n - k, k)),
            Johnson => (binomial(n, k), k * (n - k)),
            Hypercube | BooleanLattice => (1 << n, n),
        };
        assert_eq!(g.vertex_count() as u64, order, "{spec}");
        assert_eq!(g.regular_degree().map(|d| d as u64), Some(degree), "{spec}");
    }
}

#[test]
fn bipartite_kneser_connectivity_parity_and_counting() {
    for spec in all_specs(8).into_iter().filter(|s| s.family == kneser_sym::families::Family::BipartiteKneser) {
        let g = build(&spec).unwrap();
        let (n, k) = (spec.n as u64, spec.k as u64);
        assert_eq!(vertex_connectivity(&g).unwrap() as u64, binomial(n - k, k), "{spec}");
        assert_eq!(g.min_degree() as u64, binomial(n - k, k));
        let parity = parity_parts(&g).unwrap();
        for v in 0..g.vertex_count() {
            let by_size = if g.label(v).unwrap().len() == spec.k { Part::One } else { Part::Two };
            assert_eq!(parity.part(v), by_size);
        }
        let first = g.bipartition().unwrap().members(Part::One);
        for &u in &first {
            for &v in &first {
                let h = (g.label(u).unwrap().bits() | g.label(v).unwrap().bits()).count_ones() as u64 - k;
                assert_eq!(common_neighbors(&g, u, v).unwrap().len() as u64, binomial(n - k - h, k), "{spec} {u} {v}");
            }
        }
    }
}

#[test]
fn binomial_monotonicity_up_to_thirty() {
    for l in 1..=30u64 {
        for m in 1..l {
            for u in 1..m {
                assert!(binomial(l, u) > binomial(m, u), "C({l},{u}) vs C({m},{u})");
            }
        }
    }
}

#[test]
fn hypercube_and_boolean_lattice_are_isomorphic() {
    for n in 1..=6 {
        assert!(boolean_lattice_iso(n).unwrap().is_isomorphism());
    }
}

#[test]
fn cube_graph6_is_pinned() {
    // produced by an independent encoder over the same vertex order
    assert_eq!(to_graph6(&build(&FamilySpec::hypercube(3)).unwrap()), "GsXP_[");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn connectivity_matches_enumeration(g in random_graph()) {
        prop_assert_eq!(vertex_connectivity(&g).unwrap(), brute_connectivity(&g));
    }

    #[test]
    fn independence_matches_enumeration(g in random_graph()) {
        prop_assert_eq!(independence_number(&g, 64).unwrap(), brute_independence(&g));
    }

    #[test]
    fn text_formats_round_trip(g in random_graph()) {
        let edges: Vec<_> = g.edges().collect();
        let back = from_graph6(&to_graph6(&g), "x").unwrap();
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), edges.clone());
        if g.edges().next().is_some() || g.vertex_count() == 1 {
            let adj = from_adjacency_list(&to_adjacency_list(&g), "x").unwrap();
            prop_assert_eq!(adj.edges().collect::<Vec<_>>(), edges);
        }
        prop_assert_eq!(is_connected(&g).unwrap(), brute_connectivity(&g) > 0 || g.vertex_count() == 1);
    }

    #[test]
    fn complement_commutes_with_random_theta(images in Just((0..6).collect::<Vec<usize>>()).prop_shuffle(), k in 1usize..=2) {
        let g = build(&FamilySpec::bipartite_kneser(6, k)).unwrap();
        let f = induced_subset_action(&Permutation::from_images(images).unwrap(), &g).unwrap();
        let alpha = complement_map(&g).unwrap();
        prop_assert_eq!(alpha.compose(&f).unwrap(), f.compose(&alpha).unwrap());
    }
}
