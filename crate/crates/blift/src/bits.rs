//! Fixed-width sets over ground elements `0..32`.
//!
//! Edge sets of multigraphs and element sets of matroids share this
//! representation; both grounds are capped at 32, so a `u32` mask is enough.

use std::fmt;

/// Maximum ground size supported by [`Bits32`].
pub const MAX_GROUND: usize = 32;

/// A subset of `0..32` stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Bits32(pub u32);

/// Edge sets of a multigraph, indexed by edge label.
pub type EdgeSet = Bits32;
/// Element sets of a matroid, indexed by ground element.
pub type ElemSet = Bits32;

impl Bits32 {
    pub const EMPTY: Bits32 = Bits32(0);

    #[inline]
    pub fn empty() -> Self {
        Bits32(0)
    }

    /// The full set `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_GROUND);
        if n == 32 {
            Bits32(u32::MAX)
        } else {
            Bits32((1u32 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(i: usize) -> Self {
        Bits32(1 << i)
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Bits32(0);
        for i in iter {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << i);
    }

    #[inline]
    pub fn with(self, i: usize) -> Self {
        Bits32(self.0 | (1 << i))
    }

    #[inline]
    pub fn without(self, i: usize) -> Self {
        Bits32(self.0 & !(1 << i))
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
    pub fn union(self, other: Self) -> Self {
        Bits32(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        Bits32(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        Bits32(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_proper_subset(self, other: Self) -> bool {
        self.0 != other.0 && self.is_subset(other)
    }

    #[inline]
    pub fn intersects(self, other: Self) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest element, if any.
    #[inline]
    pub fn smallest(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    /// Lexicographic order on the increasing element sequences, so
    /// `{0,1} < {0,1,2} < {0,2}`. This is the order used when circuits are
    /// written to text files.
    #[inline]
    pub fn lex_cmp(self, other: Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        let d = self.0 ^ other.0;
        if d == 0 {
            return Ordering::Equal;
        }
        // Elements below the lowest differing element e are shared. The side
        // owning e compares as e against the other side's next element above
        // e; a side with nothing above e has ended and is a proper prefix.
        let e = d.trailing_zeros();
        if self.0 & (1 << e) != 0 {
            if (other.0 as u64) >> (e + 1) != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if (self.0 as u64) >> (e + 1) != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Renumber the elements of `self` densely within `kept`: element `i` of
    /// `self` becomes the number of kept elements below `i`. `self` must be a
    /// subset of `kept`.
    pub fn compress_into(self, kept: Self) -> Self {
        debug_assert!(self.is_subset(kept));
        let mut out = 0u32;
        let mut m = self.0;
        while m != 0 {
            let i = m.trailing_zeros();
            let below = (kept.0 & ((1u32 << i) - 1)).count_ones();
            out |= 1 << below;
            m &= m - 1;
        }
        Bits32(out)
    }
}

pub struct BitIter(u32);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

impl fmt::Debug for Bits32 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Bits32 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_matches_sequences() {
        let a = Bits32::from_iter([0, 1]);
        let b = Bits32::from_iter([0, 1, 2]);
        let c = Bits32::from_iter([0, 2]);
        assert_eq!(a.lex_cmp(b), std::cmp::Ordering::Less);
        assert_eq!(b.lex_cmp(c), std::cmp::Ordering::Less);
        assert_eq!(a.lex_cmp(a), std::cmp::Ordering::Equal);
        assert_eq!(c.lex_cmp(a), std::cmp::Ordering::Greater);
    }

    #[test]
    fn compress_renumbers_densely() {
        let kept = Bits32::from_iter([1, 3, 4, 7]);
        let s = Bits32::from_iter([3, 7]);
        assert_eq!(s.compress_into(kept), Bits32::from_iter([1, 3]));
    }

    #[test]
    fn full_set_boundaries() {
        assert_eq!(Bits32::full(0), Bits32::EMPTY);
        assert_eq!(Bits32::full(32).len(), 32);
    }
}
