use std::cmp::Ordering;
use std::fmt;

use crate::perm::Permutation;

pub const MAX_GROUND: usize = 32;

/// A subset of the ground set `[n]`, bit `i` standing for element `i + 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubsetVertex {
    bits: u32,
    n: u8,
}

impl SubsetVertex {
    /// `None` if `n > 32` or `bits` has elements outside `[n]`.
    pub fn new(n: usize, bits: u32) -> Option<Self> {
        if n > MAX_GROUND || (n < MAX_GROUND && bits >> n != 0) {
            return None;
        }
        Some(SubsetVertex { bits, n: n as u8 })
    }

    /// From 1-based elements.
    pub fn from_elements(n: usize, elems: &[usize]) -> Option<Self> {
        let mut bits = 0u32;
        for &e in elems {
            if e == 0 || e > n {
                return None;
            }
            bits |= 1 << (e - 1);
        }
        Self::new(n, bits)
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    pub fn ground(self) -> usize {
        self.n as usize
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, elem0: usize) -> bool {
        elem0 < 32 && self.bits >> elem0 & 1 == 1
    }

    pub fn is_subset_of(self, other: SubsetVertex) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn complement(self) -> SubsetVertex {
        let mask = if self.n as usize == MAX_GROUND { u32::MAX } else { (1u32 << self.n) - 1 };
        SubsetVertex { bits: !self.bits & mask, n: self.n }
    }

    /// 0-based elements, ascending.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        (0..self.n as usize).filter(move |&i| self.contains(i))
    }

    /// Elementwise image under `theta`; `None` if `theta` is too short.
    pub fn map(self, theta: &Permutation) -> Option<SubsetVertex> {
        let mut bits = 0u32;
        for e in self.elements() {
            if e >= theta.len() {
                return None;
            }
            bits |= 1 << theta.apply(e);
        }
        SubsetVertex::new(self.n as usize, bits)
    }

    /// Characteristic vector `(x_1, ..., x_n)`.
    pub fn characteristic_vector(self) -> Vec<u8> {
        (0..self.n as usize).map(|i| u8::from(self.contains(i))).collect()
    }

    /// Vertex ordering key: cardinality first, then numeric value.
    pub fn sort_key(self) -> (u32, u32) {
        (self.bits.count_ones(), self.bits)
    }
}

impl Ord for SubsetVertex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then(self.sort_key().cmp(&other.sort_key()))
    }
}

impl PartialOrd for SubsetVertex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SubsetVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let elems: Vec<String> = self.elements().map(|e| (e + 1).to_string()).collect();
        write!(f, "{{{}}}", elems.join(","))
    }
}

impl fmt::Debug for SubsetVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
