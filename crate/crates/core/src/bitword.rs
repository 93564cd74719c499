//! Fixed-length binary words.
//!
//! A [`BitWord`] stores up to [`MAX_BITS`] symbols of GF(2). Index 0 is the
//! leftmost symbol when printed, so the string `"1001"` has bits 0 and 3 set.
//! This matches the `(b_1, ..., b_N)` reading order used for layered codewords.

use std::fmt;
use std::ops::{BitAnd, BitXor};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported word length. A 3-level Leech codeword needs 72.
pub const MAX_BITS: usize = 128;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitWord {
    len: usize,
    bits: u128,
}

fn mask(len: usize) -> u128 {
    if len == MAX_BITS {
        u128::MAX
    } else {
        (1u128 << len) - 1
    }
}

impl BitWord {
    pub fn zeros(len: usize) -> Result<Self> {
        if len > MAX_BITS {
            return Err(Error::WordTooLong(len));
        }
        Ok(BitWord { len, bits: 0 })
    }

    pub fn ones(len: usize) -> Result<Self> {
        let w = Self::zeros(len)?;
        Ok(BitWord { bits: mask(len), ..w })
    }

    /// The unit word with a single 1 at `index`.
    pub fn unit(len: usize, index: usize) -> Result<Self> {
        let mut w = Self::zeros(len)?;
        if index >= len {
            return Err(Error::DimensionMismatch { expected: len, found: index + 1 });
        }
        w.set(index, true);
        Ok(w)
    }

    /// Builds a word from raw packed bits; bits beyond `len` are discarded.
    pub fn from_raw(len: usize, bits: u128) -> Result<Self> {
        let w = Self::zeros(len)?;
        Ok(BitWord { bits: bits & mask(len), ..w })
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Result<Self> {
        let mut raw = 0u128;
        let mut len = 0;
        for b in bits {
            if len == MAX_BITS {
                return Err(Error::WordTooLong(len + 1));
            }
            if b {
                raw |= 1 << len;
            }
            len += 1;
        }
        Ok(BitWord { len, bits: raw })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn raw(&self) -> u128 {
        self.bits
    }

    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.bits >> i) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        if value {
            self.bits |= 1 << i;
        } else {
            self.bits &= !(1 << i);
        }
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        self.bits ^= 1 << i;
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Hamming weight.
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn parity(&self) -> bool {
        self.weight() % 2 == 1
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &BitWord) -> Result<bool> {
        self.check_len(other)?;
        Ok((self.bits & other.bits).count_ones() % 2 == 1)
    }

    fn check_len(&self, other: &BitWord) -> Result<()> {
        if self.len != other.len {
            return Err(Error::DimensionMismatch { expected: self.len, found: other.len });
        }
        Ok(())
    }

    /// Componentwise sum over GF(2).
    pub fn xor(&self, other: &BitWord) -> Result<BitWord> {
        self.check_len(other)?;
        Ok(BitWord { len: self.len, bits: self.bits ^ other.bits })
    }

    /// Schur (componentwise) product: `(x_1 y_1, ..., x_n y_n)`.
    pub fn schur(&self, other: &BitWord) -> Result<BitWord> {
        self.check_len(other)?;
        Ok(BitWord { len: self.len, bits: self.bits & other.bits })
    }

    /// Sub-word of `len` bits starting at `start`.
    pub fn slice(&self, start: usize, len: usize) -> Result<BitWord> {
        if start + len > self.len {
            return Err(Error::DimensionMismatch { expected: self.len, found: start + len });
        }
        BitWord::from_raw(len, self.bits >> start)
    }

    pub fn concat(parts: &[BitWord]) -> Result<BitWord> {
        let total: usize = parts.iter().map(|p| p.len).sum();
        let mut out = BitWord::zeros(total)?;
        let mut offset = 0;
        for p in parts {
            out.bits |= p.bits << offset;
            offset += p.len;
        }
        Ok(out)
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Indices of the nonzero symbols, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    /// The word as a 0/1 integer vector.
    pub fn to_ints(&self) -> Vec<i64> {
        self.bits().map(i64::from).collect()
    }
}

/// Panics on a length mismatch; use [`BitWord::xor`] for a checked sum.
impl BitXor for BitWord {
    type Output = BitWord;

    fn bitxor(self, rhs: BitWord) -> BitWord {
        assert_eq!(self.len, rhs.len, "xor of words with different lengths");
        BitWord { len: self.len, bits: self.bits ^ rhs.bits }
    }
}

/// Schur product. Panics on a length mismatch; use [`BitWord::schur`] for a checked product.
impl BitAnd for BitWord {
    type Output = BitWord;

    fn bitand(self, rhs: BitWord) -> BitWord {
        assert_eq!(self.len, rhs.len, "schur product of words with different lengths");
        BitWord { len: self.len, bits: self.bits & rhs.bits }
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord({self})")
    }
}

impl FromStr for BitWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = Vec::with_capacity(s.len());
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                _ => {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!("invalid symbol {ch:?} at position {} of {s:?}", i + 1),
                    })
                }
            }
        }
        BitWord::from_bits(bits)
    }
}

impl serde::Serialize for BitWord {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
