//! Packed bit vectors.
//!
//! Truth tables, weight-class slices, ANF coefficient vectors and the rows of
//! the precomputed sign matrices are all bit strings; this module gives them a
//! single compact representation with cheap popcount-based operations.

use std::fmt;

use crate::error::{Error, Result};

/// A fixed-length bit string packed into 64-bit words.
///
/// Bit `i` lives in word `i / 64` at position `i % 64`. Bits past `len` in
/// the last word are kept at zero so popcounts never need masking.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bits {
    len: usize,
    words: Vec<u64>,
}

impl Bits {
    /// All-zero bit string of the given length.
    pub fn zeros(len: usize) -> Self {
        Bits {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    /// Builds a bit string by evaluating `f` at every index.
    pub fn from_fn(len: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut bits = Bits::zeros(len);
        for i in 0..len {
            if f(i) {
                bits.words[i / 64] |= 1 << (i % 64);
            }
        }
        bits
    }

    pub fn from_bools(values: &[bool]) -> Self {
        Bits::from_fn(values.len(), |i| values[i])
    }

    /// Wraps raw words, zeroing any bits past `len`.
    pub fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        assert_eq!(words.len(), len.div_ceil(64));
        if !len.is_multiple_of(64) {
            if let Some(last) = words.last_mut() {
                *last &= (1u64 << (len % 64)) - 1;
            }
        }
        Bits { len, words }
    }

    /// Parses a string of `0`/`1` characters, first character = bit 0.
    pub fn parse_binary(s: &str) -> Result<Self> {
        let mut bits = Bits::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits.set(i, true),
                _ => return Err(Error::Parse(format!("invalid binary digit {c:?}"))),
            }
        }
        Ok(bits)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        if value {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    /// Swaps the bits at positions `i` and `j`.
    pub fn swap(&mut self, i: usize, j: usize) {
        let (bi, bj) = (self.get(i), self.get(j));
        self.set(i, bj);
        self.set(j, bi);
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Popcount of `self & other`. Lengths must match.
    #[inline]
    pub fn and_count_ones(&self, other: &Bits) -> usize {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Hamming distance to `other`, i.e. popcount of `self ^ other`.
    #[inline]
    pub fn xor_count_ones(&self, other: &Bits) -> usize {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Indices of the one bits, in increasing order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    /// Renders as `0`/`1` characters, bit 0 first.
    pub fn to_binary_string(&self) -> String {
        self.iter().map(|b| if b { '1' } else { '0' }).collect()
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bits({})", self.to_binary_string())
    }
}
