//! Small fixed-width bit sets used for vertex sets and lattice elements.

use std::cmp::Ordering;
use std::fmt;

/// Largest universe a [`BitSet`] can index.
pub const MAX_BITS: usize = 64;

/// A subset of `{0, .., 63}` stored as a single machine word.
///
/// Used both for vertex sets of a graph and for elements of a sublattice of
/// the Boolean lattice on `n` points. Indices are 0-based; rendering to
/// 1-based text is left to the I/O layers.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct BitSet(pub u64);

impl BitSet {
    pub const EMPTY: BitSet = BitSet(0);

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> BitSet {
        debug_assert!(n <= MAX_BITS);
        if n == MAX_BITS {
            BitSet(u64::MAX)
        } else {
            BitSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> BitSet {
        BitSet(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> BitSet {
        it.into_iter().fold(BitSet::EMPTY, |s, i| s.with(i))
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < MAX_BITS && self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn with(self, i: usize) -> BitSet {
        BitSet(self.0 | 1u64 << i)
    }

    #[inline]
    pub fn without(self, i: usize) -> BitSet {
        BitSet(self.0 & !(1u64 << i))
    }

    #[inline]
    pub fn union(self, other: BitSet) -> BitSet {
        BitSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: BitSet) -> BitSet {
        BitSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: BitSet) -> BitSet {
        BitSet(self.0 & !other.0)
    }

    /// Complement relative to `{0, .., n-1}`.
    #[inline]
    pub fn complement(self, n: usize) -> BitSet {
        BitSet(!self.0 & BitSet::full(n).0)
    }

    #[inline]
    pub fn is_subset(self, other: BitSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_proper_subset(self, other: BitSet) -> bool {
        self != other && self.is_subset(other)
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Lowest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> Ones {
        Ones(self.0)
    }

    /// Order by cardinality, then lexicographically on the ascending member
    /// lists. This is the canonical order for covers and lattice elements.
    pub fn canonical_cmp(&self, other: &BitSet) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }

    /// Members rendered 1-based and comma separated, `{}` when empty.
    pub fn to_one_based(self) -> String {
        if self.is_empty() {
            return "{}".to_string();
        }
        self.iter()
            .map(|i| (i + 1).to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for BitSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        BitSet::from_indices(iter)
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone)]
pub struct Ones(u64);

impl Iterator for Ones {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Ones {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = BitSet::from_indices([0, 2]);
        let b = BitSet::from_indices([2, 3]);
        assert_eq!(a.union(b), BitSet::from_indices([0, 2, 3]));
        assert_eq!(a.intersection(b), BitSet::singleton(2));
        assert_eq!(a.complement(4), BitSet::from_indices([1, 3]));
        assert!(BitSet::singleton(2).is_proper_subset(a));
        assert!(!a.is_proper_subset(a));
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(BitSet::full(64).len(), 64);
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![
            BitSet::from_indices([1, 3]),
            BitSet::from_indices([0, 2, 4]),
            BitSet::from_indices([0, 2]),
            BitSet::EMPTY,
        ];
        v.sort_by(BitSet::canonical_cmp);
        assert_eq!(
            v,
            vec![
                BitSet::EMPTY,
                BitSet::from_indices([0, 2]),
                BitSet::from_indices([1, 3]),
                BitSet::from_indices([0, 2, 4]),
            ]
        );
    }

    #[test]
    fn one_based_rendering() {
        assert_eq!(BitSet::EMPTY.to_one_based(), "{}");
        assert_eq!(BitSet::from_indices([0, 4]).to_one_based(), "1,5");
    }
}
