//! Deterministic Schreier–Sims.
//!
//! Each level of the stabilizer chain keeps every strong generator that fixes
//! the earlier base points, the orbit of its base point, and a transversal
//! `u_b` with `u_b(base) = b`. New generators are inserted deepest level
//! first; every Schreier generator `u_{s(b)}⁻¹ · s · u_b` is tested exactly
//! once, when either `s` or `b` is new at that level.

use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;

use super::{Domain, PermError, Permutation, VertexPermutation};

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `(u_b, u_b⁻¹)` for orbit points `b`.
    transversal: Vec<Option<(Permutation, Permutation)>>,
}

impl Level {
    fn new(base: usize, n: usize) -> Self {
        let mut transversal = vec![None; n];
        transversal[base] = Some((Permutation::identity(n), Permutation::identity(n)));
        Level { base, gens: Vec::new(), orbit: vec![base], transversal }
    }
}

/// A permutation group on the vertices of one graph, held as a base and
/// strong generating set. Immutable once built apart from [`add_generator`].
///
/// [`add_generator`]: PermutationGroup::add_generator
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    domain: Domain,
    generators: Vec<VertexPermutation>,
    levels: Vec<Level>,
}

impl PermutationGroup {
    pub fn trivial(domain: Domain) -> Result<Self, PermError> {
        if domain.size == 0 {
            return Err(PermError::EmptyDomain);
        }
        Ok(PermutationGroup { domain, generators: Vec::new(), levels: Vec::new() })
    }

    /// Builds a BSGS for `⟨gens⟩`. Base points are chosen as the first point
    /// moved by the generator that forces a new level.
    pub fn schreier_sims(domain: Domain, gens: &[VertexPermutation]) -> Result<Self, PermError> {
        let mut group = Self::trivial(domain)?;
        for g in gens {
            group.add_generator(g.clone())?;
        }
        Ok(group)
    }

    /// Adds `g` to the generating set. Returns whether the group grew.
    pub fn add_generator(&mut self, g: VertexPermutation) -> Result<bool, PermError> {
        if g.domain() != self.domain {
            return Err(PermError::DomainMismatch);
        }
        let (residue, stop) = self.sift(g.perm(), 0);
        self.generators.push(g);
        if residue.is_identity() {
            return Ok(false);
        }
        for lvl in (0..=stop).rev() {
            self.insert(lvl, residue.clone());
        }
        Ok(true)
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn degree(&self) -> usize {
        self.domain.size
    }

    /// The generators as supplied, including redundant ones.
    pub fn generators(&self) -> &[VertexPermutation] {
        &self.generators
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Strong generators fixing the first `level` base points.
    pub fn strong_generators(&self, level: usize) -> Vec<VertexPermutation> {
        self.levels
            .get(level)
            .map(|l| l.gens.iter().map(|p| self.wrap(p.clone())).collect())
            .unwrap_or_default()
    }

    /// Basic orbit lengths, one per base point.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Exact order: product of the basic orbit lengths.
    pub fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::one(), |acc, l| acc * l.orbit.len())
    }

    pub fn is_trivial(&self) -> bool {
        self.levels.is_empty()
    }

    /// Membership by sifting through the stabilizer chain.
    pub fn contains(&self, p: &VertexPermutation) -> Result<bool, PermError> {
        if p.domain() != self.domain {
            return Err(PermError::DomainMismatch);
        }
        let (residue, _) = self.sift(p.perm(), 0);
        Ok(residue.is_identity())
    }

    /// Whether `a` commutes with every generator. The identity passes.
    pub fn is_central_involution(&self, a: &VertexPermutation) -> Result<bool, PermError> {
        if a.domain() != self.domain {
            return Err(PermError::DomainMismatch);
        }
        if !a.is_involution() {
            return Err(PermError::NotInvolution);
        }
        Ok(self.generators.iter().all(|g| g.commutes_with(a)))
    }

    /// Orbit of `v` under the whole group.
    pub fn orbit(&self, v: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut out = vec![v];
        seen[v] = true;
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            i += 1;
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Uniformly random element, as a product of one transversal element per level.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> VertexPermutation {
        let mut acc = Permutation::identity(self.degree());
        for level in self.levels.iter().rev() {
            let b = level.orbit[rng.random_range(0..level.orbit.len())];
            let (u, _) = level.transversal[b].as_ref().expect("orbit point has a transversal");
            acc = u.compose_unchecked(&acc);
        }
        self.wrap(acc)
    }

    /// Every element, in a fixed order. Intended for small groups only.
    pub fn elements(&self) -> Vec<VertexPermutation> {
        let mut out = vec![Permutation::identity(self.degree())];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for &b in &level.orbit {
                let (u, _) = level.transversal[b].as_ref().expect("orbit point has a transversal");
                for g in &out {
                    next.push(u.compose_unchecked(g));
                }
            }
            out = next;
        }
        out.into_iter().map(|p| self.wrap(p)).collect()
    }

    fn wrap(&self, p: Permutation) -> VertexPermutation {
        VertexPermutation::new(self.domain, p).expect("size checked at construction")
    }

    /// Strips `g` through levels `from..`. Returns the residue and the level
    /// where stripping stopped (`levels.len()` if it passed every level).
    fn sift(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (idx, level) in self.levels.iter().enumerate().skip(from) {
            let b = h.apply(level.base);
            match &level.transversal[b] {
                Some((_, u_inv)) => h = u_inv.compose_unchecked(&h),
                None => return (h, idx),
            }
        }
        (h, self.levels.len())
    }

    /// Adds `g` (which fixes the base points above `lvl`) to level `lvl` and
    /// restores the chain property below it.
    fn insert(&mut self, lvl: usize, g: Permutation) {
        let n = self.degree();
        if lvl == self.levels.len() {
            let base = g.first_moved().expect("only non-identity residues are inserted");
            self.levels.push(Level::new(base, n));
        }
        let level = &mut self.levels[lvl];
        level.gens.push(g);
        let new_gen = level.gens.len() - 1;

        let mut pending: VecDeque<(usize, usize)> = level.orbit.iter().map(|&b| (b, new_gen)).collect();
        while let Some((b, s)) = pending.pop_front() {
            let level = &mut self.levels[lvl];
            let gen = &level.gens[s];
            let c = gen.apply(b);
            let (u_b, _) = level.transversal[b].as_ref().expect("orbit point has a transversal");
            let s_ub = gen.compose_unchecked(u_b);
            match &level.transversal[c] {
                None => {
                    let inv = s_ub.inverse();
                    level.transversal[c] = Some((s_ub, inv));
                    level.orbit.push(c);
                    pending.extend((0..level.gens.len()).map(|t| (c, t)));
                }
                Some((_, u_c_inv)) => {
                    let schreier = u_c_inv.compose_unchecked(&s_ub);
                    if schreier.is_identity() {
                        continue;
                    }
                    let (residue, stop) = self.sift(&schreier, lvl + 1);
                    if !residue.is_identity() {
                        for deeper in (lvl + 1..=stop).rev() {
                            self.insert(deeper, residue.clone());
                        }
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build, complement_map, symmetric_generators, FamilySpec};
    use crate::graph::LabeledGraph;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cycle_graph(m: usize) -> LabeledGraph {
        let edges: Vec<_> = (0..m).map(|i| (i, (i + 1) % m)).collect();
        LabeledGraph::from_edges(&format!("C{m}"), m, &edges).unwrap()
    }

    fn vp(g: &LabeledGraph, cycles: &str) -> VertexPermutation {
        VertexPermutation::new(g.domain(), Permutation::parse_cycles(cycles, g.vertex_count()).unwrap()).unwrap()
    }

    #[test]
    fn no_generators_gives_order_one() {
        let g = cycle_graph(5);
        let group = PermutationGroup::schreier_sims(g.domain(), &[]).unwrap();
        assert_eq!(group.order(), BigUint::one());
        assert!(group.contains(&VertexPermutation::identity(g.domain())).unwrap());
    }

    #[test]
    fn empty_domain_is_an_error() {
        let g = LabeledGraph::from_edges("empty", 0, &[]).unwrap();
        assert_eq!(PermutationGroup::schreier_sims(g.domain(), &[]).unwrap_err(), PermError::EmptyDomain);
    }

    #[test]
    fn symmetric_and_alternating_groups() {
        let g = LabeledGraph::from_edges("null7", 7, &[]).unwrap();
        let sym = PermutationGroup::schreier_sims(g.domain(), &[vp(&g, "(1 2)"), vp(&g, "(1 2 3 4 5 6 7)")]).unwrap();
        assert_eq!(sym.order(), BigUint::from(5040u32));
        let alt = PermutationGroup::schreier_sims(g.domain(), &[vp(&g, "(1 2 3)"), vp(&g, "(3 4 5 6 7)")]).unwrap();
        assert_eq!(alt.order(), BigUint::from(2520u32));
        assert!(!alt.contains(&vp(&g, "(1 2)")).unwrap());
        assert!(alt.contains(&vp(&g, "(1 2)(3 4)")).unwrap());
        // a base of Sym(7) needs six distinct points
        let mut base = sym.base();
        base.sort_unstable();
        base.dedup();
        assert_eq!(base.len(), 6);
        assert_eq!(sym.orbit_lengths(), vec![7, 6, 5, 4, 3, 2]);
    }

    #[test]
    fn dihedral_group_of_hexagon() {
        let g = cycle_graph(6);
        let group = PermutationGroup::schreier_sims(g.domain(), &[vp(&g, "(1 2 3 4 5 6)"), vp(&g, "(2 6)(3 5)")]).unwrap();
        assert_eq!(group.order(), BigUint::from(12u32));
        let elems = group.elements();
        assert_eq!(elems.len(), 12);
        assert!(elems.iter().all(|e| e.is_automorphism_of(&g)));
    }

    #[test]
    fn johnson_5_2_symmetric_generators_give_120() {
        let spec = FamilySpec::johnson(5, 2);
        let g = build(&spec).unwrap();
        let group = PermutationGroup::schreier_sims(g.domain(), &symmetric_generators(&spec, &g).unwrap()).unwrap();
        assert_eq!(group.order(), BigUint::from(120u32));
    }

    #[test]
    fn bipartite_kneser_5_2_with_complement_gives_240() {
        let spec = FamilySpec::bipartite_kneser(5, 2);
        let g = build(&spec).unwrap();
        let mut gens = symmetric_generators(&spec, &g).unwrap();
        let h = PermutationGroup::schreier_sims(g.domain(), &gens).unwrap();
        let alpha = complement_map(&g).unwrap();
        assert_eq!(h.order(), BigUint::from(120u32));
        assert!(!h.contains(&alpha).unwrap());
        assert!(h.is_central_involution(&alpha).unwrap());
        gens.push(alpha);
        let s = PermutationGroup::schreier_sims(g.domain(), &gens).unwrap();
        assert_eq!(s.order(), BigUint::from(240u32));
    }

    #[test]
    fn central_involution_checks() {
        let spec = FamilySpec::kneser(5, 2);
        let g = build(&spec).unwrap();
        let group = PermutationGroup::schreier_sims(g.domain(), &symmetric_generators(&spec, &g).unwrap()).unwrap();
        assert!(group.is_central_involution(&VertexPermutation::identity(g.domain())).unwrap());
        let three_cycle = crate::perm::induced_subset_action(&Permutation::parse_cycles("(1 2 3)", 5).unwrap(), &g).unwrap();
        assert_eq!(group.is_central_involution(&three_cycle), Err(PermError::NotInvolution));
        // f_(1 2) is an involution in Sym(5) acting on the Petersen graph but not central;
        // brute-force witness: some element of the group fails to commute with it
        let swap = crate::perm::induced_subset_action(&Permutation::parse_cycles("(1 2)", 5).unwrap(), &g).unwrap();
        assert!(group.elements().iter().any(|e| !e.commutes_with(&swap)));
        assert!(!group.is_central_involution(&swap).unwrap());
    }

    #[test]
    fn random_products_are_members_and_sampling_is_in_group() {
        let spec = FamilySpec::bipartite_kneser(6, 2);
        let g = build(&spec).unwrap();
        let mut gens = symmetric_generators(&spec, &g).unwrap();
        gens.push(complement_map(&g).unwrap());
        let group = PermutationGroup::schreier_sims(g.domain(), &gens).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let mut p = VertexPermutation::identity(g.domain());
            for _ in 0..rng.random_range(1..12) {
                p = gens[rng.random_range(0..gens.len())].compose(&p).unwrap();
            }
            assert!(group.contains(&p).unwrap());
            let r = group.random_element(&mut rng);
            assert!(group.contains(&r).unwrap());
            assert!(r.is_automorphism_of(&g));
        }
    }

    #[test]
    fn order_is_product_of_basic_orbits_recursively() {
        // order of the stabilizer chain below level i equals the group generated
        // by the strong generators at level i
        let spec = FamilySpec::bipartite_kneser(5, 2);
        let g = build(&spec).unwrap();
        let mut gens = symmetric_generators(&spec, &g).unwrap();
        gens.push(complement_map(&g).unwrap());
        let group = PermutationGroup::schreier_sims(g.domain(), &gens).unwrap();
        let lengths = group.orbit_lengths();
        for lvl in 0..lengths.len() {
            let sub = PermutationGroup::schreier_sims(g.domain(), &group.strong_generators(lvl)).unwrap();
            let expected: BigUint = lengths[lvl..].iter().fold(BigUint::one(), |a, &l| a * l);
            assert_eq!(sub.order(), expected);
        }
        assert_eq!(group.orbit(0).len(), g.vertex_count());
    }

    #[test]
    fn membership_rejects_foreign_domain() {
        let a = cycle_graph(5);
        let b = cycle_graph(6);
        let group = PermutationGroup::trivial(a.domain()).unwrap();
        assert_eq!(group.contains(&VertexPermutation::identity(b.domain())), Err(PermError::DomainMismatch));
    }
}
