//! Compact argument-index sets.
//!
//! Every framework orders its arguments canonically (lexicographic by id), so
//! a subset is just a 64-bit mask over those indices. All set algebra in the
//! engine runs on these masks; ids only appear at the API boundary.

use core::cmp::Ordering;
use core::fmt;

/// A set of argument indices relative to one framework's canonical order.
///
/// Copyable and cheap. An `ArgSet` carries no reference to the framework that
/// issued it, so mixing sets from different frameworks is a caller bug.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ArgSet(u64);

impl ArgSet {
    pub const EMPTY: ArgSet = ArgSet(0);

    pub fn singleton(i: usize) -> ArgSet {
        debug_assert!(i < 64);
        ArgSet(1 << i)
    }

    /// The set `{0, 1, .., n-1}`.
    pub fn first_n(n: usize) -> ArgSet {
        debug_assert!(n <= 64);
        if n >= 64 {
            ArgSet(u64::MAX)
        } else {
            ArgSet((1u64 << n) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> ArgSet {
        ArgSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> ArgSet {
        debug_assert!(i < 64);
        ArgSet(self.0 | 1 << i)
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < 64);
        self.0 |= 1 << i;
    }

    pub fn union(self, other: ArgSet) -> ArgSet {
        ArgSet(self.0 | other.0)
    }

    pub fn intersect(self, other: ArgSet) -> ArgSet {
        ArgSet(self.0 & other.0)
    }

    pub fn minus(self, other: ArgSet) -> ArgSet {
        ArgSet(self.0 & !other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset_of(self, other: ArgSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset_of(self, other: ArgSet) -> bool {
        self.is_subset_of(other) && self.0 != other.0
    }

    /// Ascending indices.
    pub fn iter(self) -> Indices {
        Indices(self.0)
    }

    /// Every subset of `self`, the empty set and `self` included. The
    /// iteration order is an implementation detail; sort if it matters.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            cur: self.0,
            done: false,
        }
    }

    /// Canonical order: smaller sets first, ties broken by comparing the
    /// ascending index sequences lexicographically. This is the order used
    /// for moves and enumerated extensions throughout the engine.
    pub fn canonical_cmp(self, other: ArgSet) -> Ordering {
        match self.len().cmp(&other.len()) {
            Ordering::Equal => {
                let diff = self.0 ^ other.0;
                if diff == 0 {
                    Ordering::Equal
                } else if self.0 & diff & diff.wrapping_neg() != 0 {
                    // The lowest differing index belongs to `self`, so
                    // `self`'s sequence diverges first with a smaller entry.
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            unequal => unequal,
        }
    }
}

impl fmt::Debug for ArgSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("ArgSet{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

pub struct Indices(u64);

impl Iterator for Indices {
    type Item = usize;

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

pub struct Subsets {
    mask: u64,
    cur: u64,
    done: bool,
}

impl Iterator for Subsets {
    type Item = ArgSet;

    fn next(&mut self) -> Option<ArgSet> {
        if self.done {
            return None;
        }
        let out = self.cur;
        if self.cur == 0 {
            self.done = true;
        } else {
            self.cur = (self.cur - 1) & self.mask;
        }
        Some(ArgSet(out))
    }
}
