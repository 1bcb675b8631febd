//! Subsets of a carrier of at most 64 elements, packed into one machine word.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest carrier supported by [`IndexSet`].
pub const MAX_ELEMENTS: usize = 64;

/// A set of element indices `< 64`.
///
/// Ordering (`Ord`) is by raw bit pattern; use [`IndexSet::canonical_cmp`]
/// for the cardinality-then-lexicographic order used in reports.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(u64);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        IndexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn singleton(a: usize) -> Self {
        debug_assert!(a < MAX_ELEMENTS);
        IndexSet(1u64 << a)
    }

    /// `{0, 1, ..., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            IndexSet(u64::MAX)
        } else {
            IndexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn contains(self, a: usize) -> bool {
        a < MAX_ELEMENTS && self.0 >> a & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, a: usize) {
        debug_assert!(a < MAX_ELEMENTS);
        self.0 |= 1u64 << a;
    }

    #[inline]
    pub fn with(self, a: usize) -> Self {
        let mut s = self;
        s.insert(a);
        s
    }

    #[inline]
    pub fn remove(&mut self, a: usize) {
        self.0 &= !(1u64 << a);
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        IndexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        IndexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        IndexSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest member, if any.
    #[inline]
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// The unique member of a one-element set.
    pub fn as_singleton(self) -> Option<usize> {
        (self.len() == 1).then(|| self.0.trailing_zeros() as usize)
    }

    /// Whether every member is `< n`.
    #[inline]
    pub fn within(self, n: usize) -> bool {
        self.is_subset(IndexSet::full(n))
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Cardinality first, then lexicographic comparison of the sorted member lists.
    pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }
}

/// Members in increasing order.
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
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

impl ExactSizeIterator for Iter {}

impl IntoIterator for IndexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = IndexSet::EMPTY;
        for a in iter {
            s.insert(a);
        }
        s
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

// Serialized as a sorted index array.
impl Serialize for IndexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for IndexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&bad) = v.iter().find(|&&a| a >= MAX_ELEMENTS) {
            return Err(serde::de::Error::custom(format!(
                "element index {bad} exceeds the {MAX_ELEMENTS}-element limit"
            )));
        }
        Ok(v.into_iter().collect())
    }
}
