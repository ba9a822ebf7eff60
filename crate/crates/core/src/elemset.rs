//! Small fixed-capacity element sets backed by a single `u64`.

use std::fmt;

/// Index of an element inside its owning poset, in `0..n`.
pub type ElementId = usize;

/// Largest element count any poset in this crate can hold.
pub const MAX_ELEMENTS: usize = 64;

/// A set of element ids, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElemSet(pub u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> ElemSet {
        debug_assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            ElemSet(u64::MAX)
        } else {
            ElemSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(x: ElementId) -> ElemSet {
        ElemSet(1u64 << x)
    }

    #[inline]
    pub fn contains(self, x: ElementId) -> bool {
        x < MAX_ELEMENTS && self.0 >> x & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, x: ElementId) {
        self.0 |= 1u64 << x;
    }

    #[inline]
    pub fn remove(&mut self, x: ElementId) {
        self.0 &= !(1u64 << x);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<ElementId> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> ElemSetIter {
        ElemSetIter(self.0)
    }

    pub fn to_vec(self) -> Vec<ElementId> {
        self.iter().collect()
    }
}

impl FromIterator<ElementId> for ElemSet {
    fn from_iter<I: IntoIterator<Item = ElementId>>(iter: I) -> Self {
        let mut s = ElemSet::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl<'a> FromIterator<&'a ElementId> for ElemSet {
    fn from_iter<I: IntoIterator<Item = &'a ElementId>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl IntoIterator for ElemSet {
    type Item = ElementId;
    type IntoIter = ElemSetIter;

    fn into_iter(self) -> ElemSetIter {
        self.iter()
    }
}

/// Ascending iterator over the members of an [`ElemSet`].
pub struct ElemSetIter(u64);

impl Iterator for ElemSetIter {
    type Item = ElementId;

    #[inline]
    fn next(&mut self) -> Option<ElementId> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for ElemSetIter {}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
