//! Permutations of `{0..n}` and the groups they generate.
//!
//! Composition is "apply the right operand first": `compose(p, q)(x) = p(q(x))`.
//! Points are 0-based internally and 1-based in every textual form, so the
//! transposition swapping the first two points prints as `(1 2)`.

mod group;
mod vertex;

pub use group::PermutationGroup;
pub use vertex::{induced_subset_action, Domain, VertexPermutation};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("permutation size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("image list is not a bijection of 1..{0}")]
    NotBijection(usize),
    #[error("cannot parse permutation {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error("permutations act on different graphs")]
    DomainMismatch,
    #[error("group acts on an empty vertex set")]
    EmptyDomain,
    #[error("map is not an involution")]
    NotInvolution,
    #[error("vertex label {0} has no image vertex in the graph")]
    LabelNotInGraph(String),
    #[error("graph has no subset labels")]
    Unlabeled,
    #[error("ground set of size {perm} does not cover graph labels over {graph} points")]
    GroundMismatch { perm: usize, graph: usize },
}

/// A bijection of `{0..n}` stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Builds from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(PermError::NotBijection(n));
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// The cycle `(c0 c1 ... cm)` on `n` points, 0-based.
    pub fn cycle(n: usize, points: &[usize]) -> Result<Self, PermError> {
        Self::from_cycles(n, &[points.to_vec()])
    }

    /// Product of disjoint 0-based cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cyc in cycles {
            for (i, &a) in cyc.iter().enumerate() {
                if a >= n || std::mem::replace(&mut touched[a], true) {
                    return Err(PermError::NotBijection(n));
                }
                images[a] = cyc[(i + 1) % cyc.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn first_moved(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|&(i, &x)| i != x).map(|(i, _)| i)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// `self ∘ other`, i.e. `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Self, PermError> {
        if self.len() != other.len() {
            return Err(PermError::SizeMismatch(self.len(), other.len()));
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Self {
        Permutation { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::identity(self.len()), |acc, _| self.compose_unchecked(&acc))
    }

    /// Disjoint cycles of length ≥ 2, each starting at its smallest point,
    /// ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cyc.push(x);
                x = self.images[x];
            }
            out.push(cyc);
        }
        out
    }

    /// Order of the permutation as an element of the symmetric group.
    pub fn order(&self) -> u64 {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycles().iter().fold(1, |acc, c| {
            let l = c.len() as u64;
            acc / gcd(acc, l) * l
        })
    }

    /// 1-based cycle notation, `()` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
                format!("({})", pts.join(" "))
            })
            .collect()
    }

    /// 1-based image list, e.g. `[2,1,3]`.
    pub fn to_image_string(&self) -> String {
        let pts: Vec<String> = self.images.iter().map(|x| (x + 1).to_string()).collect();
        format!("[{}]", pts.join(","))
    }

    /// Parses 1-based cycle notation on `n` points. Cycles need not be
    /// disjoint; they are multiplied right to left.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Self, PermError> {
        let err = |reason: &str| PermError::Parse { text: text.to_string(), reason: reason.to_string() };
        let mut result = Permutation::identity(n);
        let mut rest = text.trim();
        let mut cycles = Vec::new();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
            let close = body.find(')').ok_or_else(|| err("unclosed cycle"))?;
            let mut cyc = Vec::new();
            for tok in body[..close].split(|c: char| c == ' ' || c == ',').filter(|t| !t.is_empty()) {
                let v: usize = tok.parse().map_err(|_| err("bad point"))?;
                if v == 0 || v > n {
                    return Err(err("point out of range"));
                }
                cyc.push(v - 1);
            }
            cycles.push(cyc);
            rest = body[close + 1..].trim_start();
        }
        for cyc in cycles.iter().rev() {
            let c = Permutation::cycle(n, cyc).map_err(|_| err("repeated point in cycle"))?;
            result = c.compose_unchecked(&result);
        }
        Ok(result)
    }

    /// Parses a 1-based image list such as `[2,1,4,5,3]`.
    pub fn parse_images(text: &str) -> Result<Self, PermError> {
        let err = |reason: &str| PermError::Parse { text: text.to_string(), reason: reason.to_string() };
        let inner = text
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| err("expected [..]"))?;
        let mut images = Vec::new();
        for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let v: usize = tok.parse().map_err(|_| err("bad point"))?;
            if v == 0 {
                return Err(err("points are 1-based"));
            }
            images.push(v - 1);
        }
        Permutation::from_images(images)
    }
}

/// `compose(p, q)(x) = p(q(x))`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation, PermError> {
    p.compose(q)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self.to_cycle_string(), self.len())
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Image lists only; cycle notation needs the degree, see [`Permutation::parse_cycles`].
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Permutation::parse_images(s)
    }
}
