//! Fixed-width bitsets over the edge indices of one graph.
//!
//! Up to 128 edges live inline (two words); wider graphs spill to the heap
//! through the same type, so callers never branch on the width.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::graph::EdgeId;

const WORD_BITS: usize = 64;

/// A set of edge indices stored as a little-endian bitmask.
///
/// Bit `k` is edge `e_{k+1}`. The mask is the 0/1 incidence vector of the set.
/// Ordering compares the masks as unsigned integers, so the empty set is the
/// smallest element and `{e1} < {e2} < {e1, e2} < {e3}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    width: usize,
    words: SmallVec<[u64; 2]>,
}

impl EdgeSet {
    pub fn empty(width: usize) -> Self {
        let len = width.div_ceil(WORD_BITS);
        EdgeSet {
            width,
            words: SmallVec::from_elem(0, len),
        }
    }

    pub fn full(width: usize) -> Self {
        let mut set = Self::empty(width);
        for e in 0..width {
            set.insert(EdgeId(e));
        }
        set
    }

    pub fn from_edges<I: IntoIterator<Item = EdgeId>>(width: usize, edges: I) -> Self {
        let mut set = Self::empty(width);
        for e in edges {
            set.insert(e);
        }
        set
    }

    /// Number of edge slots (the `m` of the owning graph).
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        e.0 < self.width && self.words[e.0 / WORD_BITS] >> (e.0 % WORD_BITS) & 1 == 1
    }

    pub fn insert(&mut self, e: EdgeId) {
        assert!(e.0 < self.width, "edge {} out of range {}", e.0, self.width);
        self.words[e.0 / WORD_BITS] |= 1 << (e.0 % WORD_BITS);
    }

    pub fn remove(&mut self, e: EdgeId) {
        if e.0 < self.width {
            self.words[e.0 / WORD_BITS] &= !(1 << (e.0 % WORD_BITS));
        }
    }

    pub fn toggle(&mut self, e: EdgeId) {
        assert!(e.0 < self.width, "edge {} out of range {}", e.0, self.width);
        self.words[e.0 / WORD_BITS] ^= 1 << (e.0 % WORD_BITS);
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor(&self, other: &EdgeSet) -> EdgeSet {
        self.zip_with(other, |a, b| a ^ b)
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &EdgeSet) -> EdgeSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        debug_assert_eq!(self.width, other.width);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        debug_assert_eq!(self.width, other.width);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Smallest edge in the set.
    pub fn first(&self) -> Option<EdgeId> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| EdgeId(i * WORD_BITS + w.trailing_zeros() as usize))
    }

    /// Edges in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(EdgeId(i * WORD_BITS + bit))
            })
        })
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(&self) -> Vec<EdgeSet> {
        let members: Vec<EdgeId> = self.iter().collect();
        let mut out = vec![EdgeSet::empty(self.width)];
        for e in members {
            let extended: Vec<EdgeSet> = out
                .iter()
                .map(|s| {
                    let mut t = s.clone();
                    t.insert(e);
                    t
                })
                .collect();
            out.extend(extended);
        }
        out
    }

    fn zip_with(&self, other: &EdgeSet, f: impl Fn(u64, u64) -> u64) -> EdgeSet {
        debug_assert_eq!(self.width, other.width, "edge sets of different graphs");
        EdgeSet {
            width: self.width,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl Ord for EdgeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.width.cmp(&other.width).then_with(|| {
            self.words
                .iter()
                .rev()
                .cmp(other.words.iter().rev())
        })
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|e| e.0 + 1)).finish()
    }
}
