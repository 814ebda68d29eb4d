//! Kneser `K(n,k)`, Johnson `J(n,k)`, bipartite Kneser `H(n,k)`, hypercube
//! `Q_n` and Boolean lattice `BL_n` constructors, plus the two canonical
//! sources of automorphisms: induced ground-set permutations `f_θ` and the
//! complement map `α`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::combinatorics::k_subsets;
use crate::graph::{GraphError, LabeledGraph, Part, SubsetVertex, MAX_GROUND};
use crate::perm::{induced_subset_action, PermError, Permutation, VertexPermutation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("H({n},{k}) is a null graph when n = 2k")]
    NullGraph { n: usize, k: usize },
    #[error("{0}: requires n ≥ 2k + 1 and k ≥ 1")]
    KneserRange(FamilySpec),
    #[error("{0}: requires 1 ≤ k ≤ n/2")]
    JohnsonRange(FamilySpec),
    #[error("{0}: requires n ≥ 1")]
    CubeRange(FamilySpec),
    #[error("ground set limited to {MAX_GROUND} points, got {0}")]
    GroundTooLarge(usize),
    #[error("cannot parse family {0:?}; expected H(n,k), K(n,k), J(n,k), Qn or BLn")]
    Parse(String),
    #[error("complement map needs a bipartite Kneser graph, got {0}")]
    NotBipartiteKneser(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    Kneser,
    Johnson,
    BipartiteKneser,
    Hypercube,
    BooleanLattice,
}

/// A family member: `n` is the ground-set size, `k` the subset size
/// (zero and unused for `Hypercube` and `BooleanLattice`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub k: usize,
}

impl FamilySpec {
    pub fn kneser(n: usize, k: usize) -> Self {
        FamilySpec { family: Family::Kneser, n, k }
    }

    pub fn johnson(n: usize, k: usize) -> Self {
        FamilySpec { family: Family::Johnson, n, k }
    }

    pub fn bipartite_kneser(n: usize, k: usize) -> Self {
        FamilySpec { family: Family::BipartiteKneser, n, k }
    }

    pub fn hypercube(n: usize) -> Self {
        FamilySpec { family: Family::Hypercube, n, k: 0 }
    }

    pub fn boolean_lattice(n: usize) -> Self {
        FamilySpec { family: Family::BooleanLattice, n, k: 0 }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let FamilySpec { family, n, k } = *self;
        if n > MAX_GROUND {
            return Err(FamilyError::GroundTooLarge(n));
        }
        match family {
            Family::BipartiteKneser if k >= 1 && n == 2 * k => Err(FamilyError::NullGraph { n, k }),
            Family::Kneser | Family::BipartiteKneser if k == 0 || n < 2 * k + 1 => {
                Err(FamilyError::KneserRange(*self))
            }
            Family::Johnson if k == 0 || 2 * k > n => Err(FamilyError::JohnsonRange(*self)),
            Family::Hypercube | Family::BooleanLattice if n == 0 => Err(FamilyError::CubeRange(*self)),
            _ => Ok(()),
        }
    }

    /// Vertex count implied by the definition.
    pub fn expected_order(&self) -> u64 {
        let (n, k) = (self.n as u64, self.k as u64);
        match self.family {
            Family::Kneser | Family::Johnson => crate::combinatorics::binomial(n, k),
            Family::BipartiteKneser => 2 * crate::combinatorics::binomial(n, k),
            Family::Hypercube | Family::BooleanLattice => 1 << n,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let FamilySpec { n, k, .. } = self;
        match self.family {
            Family::Kneser => write!(f, "K({n},{k})"),
            Family::Johnson => write!(f, "J({n},{k})"),
            Family::BipartiteKneser => write!(f, "H({n},{k})"),
            Family::Hypercube => write!(f, "Q{n}"),
            Family::BooleanLattice => write!(f, "BL{n}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// Accepts `H(5,2)`, `K(5,2)`, `J(4,2)`, `Q3`, `BL3` (whitespace ignored).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || FamilyError::Parse(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let number = |t: &str| t.parse::<usize>().map_err(|_| err());
        if let Some(rest) = compact.strip_prefix("BL") {
            return Ok(FamilySpec::boolean_lattice(number(rest)?));
        }
        if let Some(rest) = compact.strip_prefix('Q') {
            return Ok(FamilySpec::hypercube(number(rest)?));
        }
        let mut chars = compact.chars();
        let family = match chars.next() {
            Some('H') => Family::BipartiteKneser,
            Some('K') => Family::Kneser,
            Some('J') => Family::Johnson,
            _ => return Err(err()),
        };
        let args = chars.as_str().strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(err)?;
        let (n, k) = args.split_once(',').ok_or_else(err)?;
        Ok(FamilySpec { family, n: number(n)?, k: number(k)? })
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Constructs the graph for `spec`. Vertices are ordered by (cardinality,
/// numeric value of the subset bit mask).
pub fn build(spec: &FamilySpec) -> Result<LabeledGraph, FamilyError> {
    spec.validate()?;
    let FamilySpec { family, n, k } = *spec;
    let ground = n as u32;
    let label = |bits: u32| SubsetVertex::new(n, bits).expect("subset within ground set");
    let graph = match family {
        Family::Kneser => {
            let labels = k_subsets(ground, k as u32).into_iter().map(label).collect();
            LabeledGraph::from_label_relation(*spec, n, labels, |a, b| a.bits() & b.bits() == 0, None)?
        }
        Family::Johnson => {
            let labels = k_subsets(ground, k as u32).into_iter().map(label).collect();
            LabeledGraph::from_label_relation(
                *spec,
                n,
                labels,
                |a, b| (a.bits() & b.bits()).count_ones() as usize + 1 == k,
                None,
            )?
        }
        Family::BipartiteKneser => {
            let mut labels: Vec<SubsetVertex> = k_subsets(ground, k as u32).into_iter().map(label).collect();
            labels.extend(k_subsets(ground, (n - k) as u32).into_iter().map(label));
            let part = move |v: SubsetVertex| if v.len() == k { Part::One } else { Part::Two };
            LabeledGraph::from_label_relation(
                *spec,
                n,
                labels,
                |a, b| a.len() != b.len() && (a.is_subset_of(b) || b.is_subset_of(a)),
                Some(&part),
            )?
        }
        Family::Hypercube | Family::BooleanLattice => {
            let labels = (0..=ground).flat_map(|c| k_subsets(ground, c)).map(label).collect();
            let parity = |v: SubsetVertex| if v.len() % 2 == 0 { Part::One } else { Part::Two };
            let adjacent: fn(SubsetVertex, SubsetVertex) -> bool = if family == Family::Hypercube {
                // tuples differing in exactly one coordinate
                |a, b| (0..a.ground()).filter(|&i| a.contains(i) != b.contains(i)).count() == 1
            } else {
                // subsets whose symmetric difference is a single element
                |a, b| (a.bits() ^ b.bits()).count_ones() == 1
            };
            LabeledGraph::from_label_relation(*spec, n, labels, adjacent, Some(&parity))?
        }
    };
    debug_assert_eq!(graph.vertex_count() as u64, spec.expected_order());
    Ok(graph)
}

/// `α : v ↦ [n] \ v` on a bipartite Kneser graph.
pub fn complement_map(g: &LabeledGraph) -> Result<VertexPermutation, FamilyError> {
    match g.family_spec() {
        Some(spec) if spec.family == Family::BipartiteKneser => {}
        _ => return Err(FamilyError::NotBipartiteKneser(g.name().to_string())),
    }
    label_map(g, SubsetVertex::complement)
}

/// Vertex permutation induced by a bijection on labels.
pub fn label_map(g: &LabeledGraph, f: impl Fn(SubsetVertex) -> SubsetVertex) -> Result<VertexPermutation, FamilyError> {
    let labels = g.labels().ok_or(PermError::Unlabeled)?;
    let images = labels
        .iter()
        .map(|&l| {
            let image = f(l);
            g.index_of(image).ok_or_else(|| PermError::LabelNotInGraph(image.to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(VertexPermutation::new(g.domain(), Permutation::from_images(images)?)?)
}

/// The transposition `(1 2)` and the cycle `(1 2 ... n)` of the ground set.
/// Duplicates and identities are dropped, so `n = 1` yields nothing.
pub fn ground_generators(n: usize) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = Vec::new();
    if n >= 2 {
        out.push(Permutation::cycle(n, &[0, 1]).expect("valid transposition"));
        let long = Permutation::cycle(n, &(0..n).collect::<Vec<_>>()).expect("valid cycle");
        if !out.contains(&long) {
            out.push(long);
        }
    }
    out
}

/// `f_(1 2)` and `f_(1 2 ... n)` on `g`, generating `{f_θ | θ ∈ Sym([n])}`.
pub fn symmetric_generators(spec: &FamilySpec, g: &LabeledGraph) -> Result<Vec<VertexPermutation>, FamilyError> {
    ground_generators(spec.n).iter().map(|theta| Ok(induced_subset_action(theta, g)?)).collect()
}

/// Explicit isomorphism `BL_n → Q_n`: subset ↦ characteristic vector.
#[derive(Debug, Clone)]
pub struct BooleanLatticeIso {
    pub lattice: LabeledGraph,
    pub cube: LabeledGraph,
    /// Lattice vertex index → cube vertex index.
    pub map: Vec<usize>,
    /// Characteristic vector of each lattice vertex.
    pub tuples: Vec<Vec<u8>>,
}

impl BooleanLatticeIso {
    /// Whether `map` is a bijection sending edges to edges and non-edges to non-edges.
    pub fn is_isomorphism(&self) -> bool {
        let n = self.lattice.vertex_count();
        let mut hit = vec![false; n];
        if self.map.len() != n || self.cube.vertex_count() != n {
            return false;
        }
        for &m in &self.map {
            if m >= n || std::mem::replace(&mut hit[m], true) {
                return false;
            }
        }
        (0..n).all(|u| (0..n).all(|v| self.lattice.has_edge(u, v) == self.cube.has_edge(self.map[u], self.map[v])))
    }
}

pub fn boolean_lattice_iso(n: usize) -> Result<BooleanLatticeIso, FamilyError> {
    let lattice = build(&FamilySpec::boolean_lattice(n))?;
    let cube = build(&FamilySpec::hypercube(n))?;
    let mut map = Vec::with_capacity(lattice.vertex_count());
    let mut tuples = Vec::with_capacity(lattice.vertex_count());
    let cube_labels = cube.labels().expect("cube vertices carry coordinate labels");
    for v in 0..lattice.vertex_count() {
        let tuple = lattice.label(v).expect("lattice vertices carry subset labels").characteristic_vector();
        let target = cube_labels
            .iter()
            .position(|c| c.characteristic_vector() == tuple)
            .expect("every 0/1 tuple is a cube vertex");
        map.push(target);
        tuples.push(tuple);
    }
    Ok(BooleanLatticeIso { lattice, cube, map, tuples })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::binomial;

    #[test]
    fn h52_shape() {
        let g = build(&FamilySpec::bipartite_kneser(5, 2)).unwrap();
        assert_eq!(g.vertex_count(), 20);
        assert_eq!(g.edge_count(), 30);
        assert_eq!(g.regular_degree(), Some(3));
        assert_eq!(g.bipartition().unwrap().sizes(), (10, 10));
        assert_eq!(g.label(0).unwrap().to_string(), "{1,2}");
    }

    #[test]
    fn johnson_4_2_is_octahedron() {
        let g = build(&FamilySpec::johnson(4, 2)).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.regular_degree(), Some(4));
        // pairwise oracle: every 2-subset meets all others except its complement
        let labels = g.labels().unwrap();
        for u in 0..6 {
            for v in 0..6 {
                let expect = u != v && (labels[u].bits() & labels[v].bits()).count_ones() == 1;
                assert_eq!(g.has_edge(u, v), expect);
            }
        }
    }

    #[test]
    fn kneser_5_2_is_petersen_sized() {
        let g = build(&FamilySpec::kneser(5, 2)).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.regular_degree()), (10, 15, Some(3)));
    }

    #[test]
    fn degree_and_order_formulas() {
        for n in 1..=8usize {
            for k in 1..=n {
                let (n64, k64) = (n as u64, k as u64);
                if n > 2 * k {
                    for spec in [FamilySpec::kneser(n, k), FamilySpec::bipartite_kneser(n, k)] {
                        let g = build(&spec).unwrap();
                        assert_eq!(g.vertex_count() as u64, spec.expected_order());
                        assert_eq!(g.regular_degree().map(|d| d as u64), Some(binomial(n64 - k64, k64)), "{spec}");
                    }
                }
                if 2 * k <= n {
                    let g = build(&FamilySpec::johnson(n, k)).unwrap();
                    assert_eq!(g.vertex_count() as u64, binomial(n64, k64));
                    assert_eq!(g.regular_degree(), Some(k * (n - k)));
                }
            }
            let q = build(&FamilySpec::hypercube(n)).unwrap();
            assert_eq!(q.vertex_count(), 1 << n);
            assert_eq!(q.regular_degree(), Some(n));
        }
    }

    #[test]
    fn invalid_specs_are_rejected() {
        assert_eq!(build(&FamilySpec::bipartite_kneser(4, 2)).unwrap_err(), FamilyError::NullGraph { n: 4, k: 2 });
        assert!(build(&FamilySpec::bipartite_kneser(5, 0)).is_err());
        assert!(build(&FamilySpec::kneser(4, 2)).is_err());
        assert!(build(&FamilySpec::kneser(3, 2)).is_err());
        assert!(build(&FamilySpec::johnson(5, 3)).is_err());
        assert!(build(&FamilySpec::johnson(5, 0)).is_err());
        assert!(build(&FamilySpec::hypercube(0)).is_err());
        assert!(build(&FamilySpec::kneser(40, 2)).is_err());
        assert!(FamilyError::NullGraph { n: 4, k: 2 }.to_string().contains("null graph"));
    }

    #[test]
    fn spec_strings() {
        for s in ["H(5,2)", "K(5,2)", "J(4,2)", "Q3", "BL3"] {
            assert_eq!(s.parse::<FamilySpec>().unwrap().to_string(), s);
        }
        assert_eq!("H( 7 , 3 )".parse::<FamilySpec>().unwrap(), FamilySpec::bipartite_kneser(7, 3));
        for bad in ["", "X(5,2)", "H(5)", "H5,2", "Q", "BLx", "K(5,2"] {
            assert!(bad.parse::<FamilySpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn complement_map_properties() {
        let g = build(&FamilySpec::bipartite_kneser(5, 2)).unwrap();
        let alpha = complement_map(&g).unwrap();
        assert!(alpha.is_involution());
        let v = g.index_of(SubsetVertex::from_elements(5, &[1, 2]).unwrap()).unwrap();
        assert_eq!(g.label(alpha.apply(v)).unwrap().to_string(), "{3,4,5}");
        let bp = g.bipartition().unwrap();
        assert!((0..20).all(|v| bp.part(alpha.apply(v)) != bp.part(v)));

        let h73 = build(&FamilySpec::bipartite_kneser(7, 3)).unwrap();
        assert_eq!(h73.edge_count(), 140);
        let a73 = complement_map(&h73).unwrap();
        for (u, v) in h73.edges() {
            assert!(h73.has_edge(a73.apply(u), a73.apply(v)));
        }

        let k = build(&FamilySpec::kneser(5, 2)).unwrap();
        assert!(matches!(complement_map(&k), Err(FamilyError::NotBipartiteKneser(_))));
    }

    #[test]
    fn symmetric_generators_are_automorphisms() {
        for spec in [
            FamilySpec::bipartite_kneser(5, 2),
            FamilySpec::bipartite_kneser(7, 3),
            FamilySpec::kneser(6, 2),
            FamilySpec::johnson(6, 3),
            FamilySpec::hypercube(4),
            FamilySpec::boolean_lattice(3),
        ] {
            let g = build(&spec).unwrap();
            let gens = symmetric_generators(&spec, &g).unwrap();
            assert_eq!(gens.len(), 2);
            assert!(gens.iter().all(|f| f.is_automorphism_of(&g)), "{spec}");
        }
        assert!(ground_generators(1).is_empty());
        assert_eq!(ground_generators(2).len(), 1);
    }

    #[test]
    fn complement_commutes_with_induced_actions() {
        let spec = FamilySpec::bipartite_kneser(7, 2);
        let g = build(&spec).unwrap();
        let alpha = complement_map(&g).unwrap();
        let thetas = [
            Permutation::parse_cycles("(1 2)", 7).unwrap(),
            Permutation::parse_cycles("(1 2 3 4 5 6 7)", 7).unwrap(),
            Permutation::parse_cycles("(1 5 2)(3 7)", 7).unwrap(),
        ];
        for theta in &thetas {
            let f = induced_subset_action(theta, &g).unwrap();
            assert_eq!(alpha.compose(&f).unwrap(), f.compose(&alpha).unwrap());
        }
    }

    #[test]
    fn boolean_lattice_iso_small() {
        let iso = boolean_lattice_iso(3).unwrap();
        assert_eq!(iso.tuples[0], vec![0, 0, 0]);
        let v = iso.lattice.index_of(SubsetVertex::from_elements(3, &[1, 3]).unwrap()).unwrap();
        assert_eq!(iso.tuples[v], vec![1, 0, 1]);
        for n in 1..=6 {
            assert!(boolean_lattice_iso(n).unwrap().is_isomorphism(), "n = {n}");
        }
    }
}
