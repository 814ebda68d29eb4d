use std::collections::{BTreeSet, VecDeque};

use kneser_sym::combinatorics::factorial;
use kneser_sym::families::{build, complement_map, symmetric_generators, FamilySpec};
use kneser_sym::graph::named;
use kneser_sym::perm::{induced_subset_action, Domain, Permutation, PermutationGroup, VertexPermutation};
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::from_images(v).unwrap())
}

fn all_perms(n: usize) -> Vec<Permutation> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Permutation>) {
        if prefix.len() == n {
            out.push(Permutation::from_images(prefix.clone()).unwrap());
            return;
        }
        for x in 0..n {
            if !prefix.contains(&x) {
                prefix.push(x);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

/// Group closure by breadth-first multiplication, independent of the stabilizer chain.
fn closure(gens: &[Permutation], n: usize) -> BTreeSet<Vec<usize>> {
    let mut seen = BTreeSet::from([(0..n).collect::<Vec<_>>()]);
    let mut queue = VecDeque::from([Permutation::identity(n)]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = g.compose(&p).unwrap();
            if seen.insert(q.images().to_vec()) {
                queue.push_back(q);
            }
        }
    }
    seen
}

fn domain(n: usize) -> Domain {
    named::edgeless(n).unwrap().domain()
}

#[test]
fn subset_action_is_a_homomorphism_exhaustively_for_small_n() {
    for (n, k) in [(3, 1), (4, 1), (4, 2)] {
        let g = build(&FamilySpec::johnson(n, k)).unwrap();
        let perms = all_perms(n);
        let images: Vec<VertexPermutation> = perms.iter().map(|t| induced_subset_action(t, &g).unwrap()).collect();
        for (a, fa) in perms.iter().zip(&images) {
            for (b, fb) in perms.iter().zip(&images) {
                let fab = induced_subset_action(&a.compose(b).unwrap(), &g).unwrap();
                assert_eq!(fab, fa.compose(fb).unwrap());
            }
        }
        // injective for n >= 2 unless n = 2k identifies nothing extra: distinct θ give distinct maps
        let distinct: BTreeSet<Vec<usize>> = images.iter().map(|f| f.perm().images().to_vec()).collect();
        assert_eq!(distinct.len(), perms.len(), "J({n},{k})");
    }
}

#[test]
fn symmetric_generators_give_n_factorial() {
    for spec in [
        FamilySpec::kneser(5, 2),
        FamilySpec::kneser(7, 3),
        FamilySpec::johnson(6, 2),
        FamilySpec::bipartite_kneser(6, 2),
        FamilySpec::bipartite_kneser(7, 1),
        FamilySpec::boolean_lattice(4),
    ] {
        let g = build(&spec).unwrap();
        let group = PermutationGroup::schreier_sims(g.domain(), &symmetric_generators(&spec, &g).unwrap()).unwrap();
        assert_eq!(group.order(), factorial(spec.n as u64), "{spec}");
    }
}

#[test]
fn schreier_sims_matches_closure_on_small_groups() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["(1 2 3)", "(1 2)"],
        vec!["(1 2)(3 4)", "(1 3)(2 4)"],
        vec!["(1 2 3 4 5)", "(2 5)(3 4)"],
        vec!["(1 2 3)(4 5 6)", "(1 4)"],
        vec!["(1 2 3 4 5 6)", "(1 2)"],
        vec!["(1 2)(3 4)(5 6)", "(1 3 5)(2 4 6)"],
    ];
    for gens in cases {
        let perms: Vec<Permutation> = gens.iter().map(|c| Permutation::parse_cycles(c, 6).unwrap()).collect();
        let vps: Vec<VertexPermutation> = perms.iter().map(|p| VertexPermutation::new(domain(6), p.clone()).unwrap()).collect();
        let group = PermutationGroup::schreier_sims(domain(6), &vps).unwrap();
        let elements = closure(&perms, 6);
        assert_eq!(group.order(), BigUint::from(elements.len()), "{gens:?}");
        for p in all_perms(6) {
            let vp = VertexPermutation::new(domain(6), p.clone()).unwrap();
            assert_eq!(group.contains(&vp).unwrap(), elements.contains(p.images()), "{gens:?} {p}");
        }
    }
}

#[test]
fn orbit_counting_is_consistent_down_the_chain() {
    let g = build(&FamilySpec::bipartite_kneser(6, 2)).unwrap();
    let mut gens = symmetric_generators(&FamilySpec::bipartite_kneser(6, 2), &g).unwrap();
    gens.push(complement_map(&g).unwrap());
    let mut group = PermutationGroup::schreier_sims(g.domain(), &gens).unwrap();
    assert_eq!(group.order(), BigUint::from(1440u32));
    let mut level = 0;
    while !group.is_trivial() {
        let base = group.base();
        let orbit = group.orbit(base[0]).len();
        assert_eq!(orbit, group.orbit_lengths()[0]);
        level += 1;
        let stabilizer = PermutationGroup::schreier_sims(g.domain(), &group.strong_generators(1)).unwrap();
        assert_eq!(stabilizer.order() * orbit, group.order(), "level {level}");
        group = stabilizer;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn subset_action_homomorphism_sampled((a, b) in (perm_strategy(7), perm_strategy(7)), k in 1usize..=3) {
        let g = build(&FamilySpec::bipartite_kneser(7, k)).unwrap();
        let fa = induced_subset_action(&a, &g).unwrap();
        let fb = induced_subset_action(&b, &g).unwrap();
        let fab = induced_subset_action(&a.compose(&b).unwrap(), &g).unwrap();
        prop_assert_eq!(fab, fa.compose(&fb).unwrap());
        prop_assert!(fa.is_automorphism_of(&g));
        let alpha = complement_map(&g).unwrap();
        prop_assert!(fa.commutes_with(&alpha));
    }

    #[test]
    fn composition_and_inverse_laws(a in perm_strategy(8), b in perm_strategy(8), c in perm_strategy(8)) {
        let ab_c = a.compose(&b).unwrap().compose(&c).unwrap();
        let a_bc = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
        for x in 0..8 {
            prop_assert_eq!(a.compose(&b).unwrap().apply(x), a.apply(b.apply(x)));
        }
        prop_assert_eq!(Permutation::parse_cycles(&a.to_cycle_string(), 8).unwrap(), a.clone());
        prop_assert_eq!(a.to_image_string().parse::<Permutation>().unwrap(), a.clone());
        prop_assert!(a.pow(a.order() as usize).is_identity());
    }

    #[test]
    fn random_products_sift_into_the_group(seed in any::<u64>(), len in 1usize..12) {
        let g = build(&FamilySpec::kneser(6, 2)).unwrap();
        let gens = symmetric_generators(&FamilySpec::kneser(6, 2), &g).unwrap();
        let group = PermutationGroup::schreier_sims(g.domain(), &gens).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut p = VertexPermutation::identity(g.domain());
        for _ in 0..len {
            let i = rand::Rng::random_range(&mut rng, 0..gens.len());
            p = p.compose(&gens[i]).unwrap();
        }
        prop_assert!(group.contains(&p).unwrap());
        prop_assert!(group.contains(&group.random_element(&mut rng)).unwrap());
    }
}
