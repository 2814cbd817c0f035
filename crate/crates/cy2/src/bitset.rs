//! Fixed-width bitsets used for subcategories and crossing tables.
//!
//! An [`IndecSet`] is a set of indecomposable-object ids of one built
//! category, stored as a bitmask. The same structure doubles internally as a
//! mask over the cells of the covering polygon model. Sets compare and sort
//! by their numeric bitmask value (low ids in low bits), which pins a single
//! deterministic output order everywhere.

use serde::{Deserialize, Serialize};
use std::fmt;

const WORD_BITS: usize = 64;

/// A set of dense ids in `0..len`, backed by `u64` words.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndecSet {
    len: usize,
    words: Vec<u64>,
}

impl IndecSet {
    pub fn empty(len: usize) -> Self {
        let nwords = len.div_ceil(WORD_BITS).max(1);
        IndecSet {
            len,
            words: vec![0; nwords],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn from_ids<I: IntoIterator<Item = usize>>(len: usize, ids: I) -> Self {
        let mut s = Self::empty(len);
        for i in ids {
            s.insert(i);
        }
        s
    }

    /// Universe size (number of addressable ids), not the cardinality.
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, id: usize) {
        assert!(id < self.len, "id {id} out of range 0..{}", self.len);
        self.words[id / WORD_BITS] |= 1u64 << (id % WORD_BITS);
    }

    pub fn remove(&mut self, id: usize) {
        assert!(id < self.len);
        self.words[id / WORD_BITS] &= !(1u64 << (id % WORD_BITS));
    }

    pub fn contains(&self, id: usize) -> bool {
        id < self.len && self.words[id / WORD_BITS] & (1u64 << (id % WORD_BITS)) != 0
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        for w in &mut out.words {
            *w = !*w;
        }
        out.trim();
        out
    }

    pub fn union_with(&mut self, other: &Self) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Ascending iterator over the member ids.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD_BITS + b)
                }
            })
        })
    }

    pub fn ids(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Restriction to ids strictly below `id`; used by the closed-set search
    /// to test canonicity of an augmentation.
    pub fn below(&self, id: usize) -> Self {
        let mut out = self.clone();
        for i in 0..out.words.len() {
            let lo = i * WORD_BITS;
            if lo >= id {
                out.words[i] = 0;
            } else if lo + WORD_BITS > id {
                out.words[i] &= (1u64 << (id - lo)) - 1;
            }
        }
        out
    }

    /// Row of '0'/'1' characters, id 0 first. The dump format for matrices.
    pub fn to_bitstring(&self) -> String {
        (0..self.len)
            .map(|i| if self.contains(i) { '1' } else { '0' })
            .collect()
    }

    fn trim(&mut self) {
        let last = self.len;
        let nwords = self.words.len();
        if nwords * WORD_BITS > last {
            let wi = last / WORD_BITS;
            if wi < nwords {
                if last.is_multiple_of(WORD_BITS) {
                    self.words[wi] = 0;
                } else {
                    self.words[wi] &= (1u64 << (last % WORD_BITS)) - 1;
                }
                for w in &mut self.words[wi + 1..] {
                    *w = 0;
                }
            }
        }
    }

    fn zip(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.len, other.len, "sets over different universes");
        IndecSet {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl PartialOrd for IndecSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Numeric order of the bitmask: compare high words first.
impl Ord for IndecSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter().rev().zip(other.words.iter().rev()) {
            match a.cmp(b) {
                std::cmp::Ordering::Equal => continue,
                ord => return ord,
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl fmt::Debug for IndecSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, id) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{id}")?;
        }
        write!(f, "}}")
    }
}
