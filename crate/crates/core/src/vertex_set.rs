//! Fixed-width bit-vector sets over vertex ids.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

const WORD: usize = 64;

/// A set of vertex ids drawn from `0..width`.
///
/// Storage is canonical: bits at or above `width` are never set, so two sets
/// over the same width are equal exactly when their words are equal.
///
/// Ordering is lexicographic on the ascending member lists, e.g.
/// `{0,1} < {0,1,5} < {0,2} < {1}`. Sets of different widths compare by
/// members first and width last.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    width: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(width: usize) -> Self {
        Self {
            width,
            words: vec![0; width.div_ceil(WORD)],
        }
    }

    /// Builds a set from member ids.
    ///
    /// Panics if any id is `>= width`.
    pub fn from_ids<I: IntoIterator<Item = usize>>(width: usize, ids: I) -> Self {
        let mut s = Self::empty(width);
        for v in ids {
            s.insert(v);
        }
        s
    }

    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.width && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Inserts `v`; returns whether it was newly added.
    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(
            v < self.width,
            "vertex {v} out of range for width {}",
            self.width
        );
        let w = &mut self.words[v / WORD];
        let mask = 1u64 << (v % WORD);
        let fresh = *w & mask == 0;
        *w |= mask;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.width {
            return false;
        }
        let w = &mut self.words[v / WORD];
        let mask = 1u64 << (v % WORD);
        let present = *w & mask != 0;
        *w &= !mask;
        present
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(other.words.iter().chain(std::iter::repeat(&0)))
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn union(&self, other: &Self) -> Self {
        assert_eq!(self.width, other.width, "width mismatch in union");
        self.zip_with(other, |a, b| a | b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn intersect_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        for a in self.words.iter_mut().skip(other.words.len()) {
            *a = 0;
        }
    }

    fn zip_with(&self, other: &Self, op: impl Fn(u64, u64) -> u64) -> Self {
        let words = self
            .words
            .iter()
            .enumerate()
            .map(|(k, &a)| op(a, other.words.get(k).copied().unwrap_or(0)))
            .collect();
        Self {
            width: self.width,
            words,
        }
    }

    /// Smallest element of the symmetric difference, if any.
    fn first_difference(&self, other: &Self) -> Option<usize> {
        let n = self.words.len().max(other.words.len());
        (0..n).find_map(|k| {
            let a = self.words.get(k).copied().unwrap_or(0);
            let b = other.words.get(k).copied().unwrap_or(0);
            let x = a ^ b;
            (x != 0).then(|| k * WORD + x.trailing_zeros() as usize)
        })
    }

    fn has_member_above(&self, v: usize) -> bool {
        let k = v / WORD;
        let shift = v % WORD;
        let head = if shift == WORD - 1 {
            0
        } else {
            self.words.get(k).copied().unwrap_or(0) >> (shift + 1)
        };
        head != 0 || self.words.iter().skip(k + 1).any(|&w| w != 0)
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.first_difference(other) {
            None => self.width.cmp(&other.width),
            // The sorted lists agree below x. The side holding x is smaller
            // unless the other side has run out of members.
            Some(x) if self.contains(x) => {
                if other.has_member_above(x) {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            Some(x) => {
                if self.has_member_above(x) {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let bit = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * WORD + bit);
            }
            self.idx += 1;
            self.cur = *self.words.get(self.idx)?;
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}
