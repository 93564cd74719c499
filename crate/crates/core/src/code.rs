//! Binary linear codes in generator-matrix form, and layered codes of length `n * L`.
//!
//! Every code keeps its generators in reduced row-echelon form, so two codes
//! are equal exactly when their stored bases are equal. Projection codes and
//! zero-context antiprojections are computed by elimination over the
//! generator matrix and never by listing codewords.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::bitword::BitWord;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Result of row reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    pub rows: Vec<BitWord>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

fn common_length(rows: &[BitWord]) -> Result<Option<usize>> {
    let Some(first) = rows.first() else {
        return Ok(None);
    };
    for r in rows {
        if r.len() != first.len() {
            return Err(Error::DimensionMismatch { expected: first.len(), found: r.len() });
        }
    }
    Ok(Some(first.len()))
}

/// Gauss-Jordan elimination visiting columns in the given order.
///
/// Returns the nonzero reduced rows together with their pivot columns, in the
/// order the pivots were found. Every pivot column is zero in all other rows.
fn eliminate(rows: &[BitWord], columns: impl IntoIterator<Item = usize>) -> (Vec<BitWord>, Vec<usize>) {
    let mut work: Vec<BitWord> = rows.iter().copied().filter(|r| !r.is_zero()).collect();
    let mut done = 0;
    let mut pivots = Vec::new();
    for col in columns {
        if done == work.len() {
            break;
        }
        let Some(found) = (done..work.len()).find(|&r| work[r].get(col)) else {
            continue;
        };
        work.swap(done, found);
        let pivot_row = work[done];
        for (r, row) in work.iter_mut().enumerate() {
            if r != done && row.get(col) {
                *row = *row ^ pivot_row;
            }
        }
        pivots.push(col);
        done += 1;
    }
    work.truncate(done);
    (work, pivots)
}

/// Reduced row-echelon form over GF(2), pivots ascending.
pub fn rref(rows: &[BitWord]) -> Result<Echelon> {
    let Some(len) = common_length(rows)? else {
        return Ok(Echelon { rows: Vec::new(), rank: 0, pivots: Vec::new() });
    };
    let (rows, pivots) = eliminate(rows, 0..len);
    Ok(Echelon { rank: rows.len(), rows, pivots })
}

/// Binary linear code stored by a reduced generator matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearCode {
    length: usize,
    basis: Vec<BitWord>,
    pivots: Vec<usize>,
}

impl LinearCode {
    /// The code spanned by `generators`; dependent rows are allowed.
    pub fn from_generators(length: usize, generators: &[BitWord]) -> Result<Self> {
        BitWord::zeros(length)?;
        for g in generators {
            if g.len() != length {
                return Err(Error::DimensionMismatch { expected: length, found: g.len() });
            }
        }
        let e = rref(generators)?;
        Ok(LinearCode { length, basis: e.rows, pivots: e.pivots })
    }

    /// Ingests an explicit codeword list, rejecting lists that are not a linear code.
    ///
    /// The listed set must equal its span. The first failure in list order is
    /// reported: a missing zero word, or the first pair whose sum is absent.
    pub fn from_codewords(length: usize, words: &[BitWord]) -> Result<Self> {
        let code = Self::from_generators(length, words)?;
        let listed: HashSet<BitWord> = words.iter().copied().collect();
        if !listed.contains(&BitWord::zeros(length)?) {
            return Err(Error::MissingZero);
        }
        for (i, a) in words.iter().enumerate() {
            for b in &words[i + 1..] {
                let sum = *a ^ *b;
                if !listed.contains(&sum) {
                    return Err(Error::NotLinear {
                        word: sum.to_string(),
                        left: a.to_string(),
                        right: b.to_string(),
                    });
                }
            }
        }
        // closed under xor and contains zero, so the list is a subspace
        debug_assert_eq!(listed.len() as u128, 1u128 << code.rank());
        Ok(code)
    }

    pub fn trivial(length: usize) -> Result<Self> {
        Self::from_generators(length, &[])
    }

    pub fn full(length: usize) -> Result<Self> {
        let units = (0..length).map(|i| BitWord::unit(length, i)).collect::<Result<Vec<_>>>()?;
        Self::from_generators(length, &units)
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Reduced generator rows.
    pub fn generators(&self) -> &[BitWord] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `w` after clearing every pivot position; zero iff `w` is a codeword.
    pub fn reduce(&self, w: &BitWord) -> Result<BitWord> {
        if w.len() != self.length {
            return Err(Error::DimensionMismatch { expected: self.length, found: w.len() });
        }
        let mut r = *w;
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r.get(p) {
                r = r ^ *row;
            }
        }
        Ok(r)
    }

    pub fn contains(&self, w: &BitWord) -> Result<bool> {
        Ok(self.reduce(w)?.is_zero())
    }

    /// Whether every codeword of `self` lies in `other`.
    pub fn is_subcode_of(&self, other: &LinearCode) -> Result<bool> {
        for g in &self.basis {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All codewords in Gray-code order. Panics if the rank is 64 or more;
    /// gate with [`LinearCode::codewords`] when the rank is not known to be small.
    pub fn iter_codewords(&self) -> Codewords<'_> {
        assert!(self.rank() < 64, "rank {} too large to enumerate", self.rank());
        Codewords {
            basis: &self.basis,
            current: BitWord::zeros(self.length).expect("length validated at construction"),
            index: 0,
            count: 1u64 << self.rank(),
        }
    }

    /// All codewords, refusing when `2^rank` exceeds the cap.
    pub fn codewords(&self, limits: &Limits) -> Result<Vec<BitWord>> {
        self.check_enumerable(limits)?;
        Ok(self.iter_codewords().collect())
    }

    fn check_enumerable(&self, limits: &Limits) -> Result<()> {
        if !limits.allows_pow2(self.rank()) {
            return Err(Error::EnumerationCap {
                needed: format!("2^{}", self.rank()),
                cap: limits.enum_cap,
            });
        }
        Ok(())
    }

    /// Number of codewords of each weight.
    pub fn weight_distribution(&self, limits: &Limits) -> Result<BTreeMap<u32, u64>> {
        self.check_enumerable(limits)?;
        let mut dist = BTreeMap::new();
        for c in self.iter_codewords() {
            *dist.entry(c.weight()).or_insert(0) += 1;
        }
        Ok(dist)
    }

    /// Smallest nonzero weight, or `None` for the zero code.
    pub fn minimum_weight(&self, limits: &Limits) -> Result<Option<u32>> {
        Ok(self.weight_distribution(limits)?.keys().copied().find(|&w| w > 0))
    }
}

/// Gray-code enumeration of a code's words; each step adds one basis row.
pub struct Codewords<'a> {
    basis: &'a [BitWord],
    current: BitWord,
    index: u64,
    count: u64,
}

impl Iterator for Codewords<'_> {
    type Item = BitWord;

    fn next(&mut self) -> Option<BitWord> {
        if self.index == self.count {
            return None;
        }
        if self.index > 0 {
            let flip = self.index.trailing_zeros() as usize;
            self.current = self.current ^ self.basis[flip];
        }
        self.index += 1;
        Some(self.current)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.count - self.index) as usize;
        (left, Some(left))
    }
}

/// Block length `n` and level count `L` of a layered word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BlockShape {
    pub block: usize,
    pub levels: usize,
}

impl BlockShape {
    pub fn new(block: usize, levels: usize) -> Result<Self> {
        if levels == 0 || levels > 62 {
            return Err(Error::LevelCount { levels });
        }
        if block == 0 {
            return Err(Error::BlockSplit { len: 0, block, levels });
        }
        BitWord::zeros(block * levels)?;
        Ok(BlockShape { block, levels })
    }

    pub fn total(&self) -> usize {
        self.block * self.levels
    }

    /// The period `2^L`.
    pub fn modulus(&self) -> i64 {
        1i64 << self.levels
    }

    pub(crate) fn check_level(&self, level: usize) -> Result<()> {
        if level == 0 || level > self.levels {
            return Err(Error::LevelOutOfRange { level, levels: self.levels });
        }
        Ok(())
    }

    /// Bit range of 1-based `level` within a layered word.
    pub(crate) fn block_range(&self, level: usize) -> std::ops::Range<usize> {
        (level - 1) * self.block..level * self.block
    }
}

/// Splits `c` into `levels` consecutive blocks of length `block`.
pub fn split_blocks(c: &BitWord, block: usize, levels: usize) -> Result<Vec<BitWord>> {
    if block == 0 || levels == 0 || c.len() != block * levels {
        return Err(Error::BlockSplit { len: c.len(), block, levels });
    }
    (0..levels).map(|i| c.slice(i * block, block)).collect()
}

/// A linear code of length `n * L` read as `L` blocks of length `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LayeredCode {
    code: LinearCode,
    shape: BlockShape,
}

impl LayeredCode {
    pub fn new(code: LinearCode, block: usize, levels: usize) -> Result<Self> {
        let shape = BlockShape::new(block, levels)?;
        if code.length() != shape.total() {
            return Err(Error::BlockSplit { len: code.length(), block, levels });
        }
        Ok(LayeredCode { code, shape })
    }

    pub fn from_generators(block: usize, levels: usize, generators: &[BitWord]) -> Result<Self> {
        let shape = BlockShape::new(block, levels)?;
        Self::new(LinearCode::from_generators(shape.total(), generators)?, block, levels)
    }

    pub fn from_codewords(block: usize, levels: usize, words: &[BitWord]) -> Result<Self> {
        let shape = BlockShape::new(block, levels)?;
        Self::new(LinearCode::from_codewords(shape.total(), words)?, block, levels)
    }

    /// The product code `C_1 x ... x C_L`.
    pub fn product(codes: &[LinearCode]) -> Result<Self> {
        let block = codes.first().map(LinearCode::length).ok_or(Error::LevelCount { levels: 0 })?;
        let shape = BlockShape::new(block, codes.len())?;
        let mut gens = Vec::new();
        for (i, c) in codes.iter().enumerate() {
            if c.length() != block {
                return Err(Error::DimensionMismatch { expected: block, found: c.length() });
            }
            for g in c.generators() {
                let mut blocks = vec![BitWord::zeros(block)?; shape.levels];
                blocks[i] = *g;
                gens.push(BitWord::concat(&blocks)?);
            }
        }
        Self::from_generators(block, shape.levels, &gens)
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn shape(&self) -> BlockShape {
        self.shape
    }

    pub fn block_length(&self) -> usize {
        self.shape.block
    }

    pub fn levels(&self) -> usize {
        self.shape.levels
    }

    pub fn rank(&self) -> usize {
        self.code.rank()
    }

    pub fn contains(&self, w: &BitWord) -> Result<bool> {
        self.code.contains(w)
    }

    pub fn split(&self, c: &BitWord) -> Result<Vec<BitWord>> {
        split_blocks(c, self.shape.block, self.shape.levels)
    }

    pub fn join(&self, blocks: &[BitWord]) -> Result<BitWord> {
        if blocks.len() != self.shape.levels {
            return Err(Error::BlockSplit {
                len: blocks.len() * self.shape.block,
                block: self.shape.block,
                levels: self.shape.levels,
            });
        }
        for b in blocks {
            if b.len() != self.shape.block {
                return Err(Error::DimensionMismatch { expected: self.shape.block, found: b.len() });
            }
        }
        BitWord::concat(blocks)
    }

    /// Projection code `C_i` (1-based): the `i`-th blocks of all codewords.
    pub fn projection(&self, level: usize) -> Result<LinearCode> {
        self.shape.check_level(level)?;
        let start = self.shape.block_range(level).start;
        let blocks = self
            .code
            .generators()
            .iter()
            .map(|g| g.slice(start, self.shape.block))
            .collect::<Result<Vec<_>>>()?;
        LinearCode::from_generators(self.shape.block, &blocks)
    }

    pub fn projections(&self) -> Result<Vec<LinearCode>> {
        (1..=self.shape.levels).map(|i| self.projection(i)).collect()
    }

    /// Antiprojection `S_i(0, ..., 0)`: blocks `c_i` such that the word that is
    /// `c_i` at level `i` and zero elsewhere is a codeword.
    ///
    /// Eliminates over all columns outside block `i` first; the surviving rows
    /// with a pivot inside block `i` span the subcode vanishing off block `i`.
    pub fn antiprojection_zero(&self, level: usize) -> Result<LinearCode> {
        self.shape.check_level(level)?;
        let range = self.shape.block_range(level);
        let total = self.shape.total();
        let order = (0..total).filter(|c| !range.contains(c)).chain(range.clone());
        let (rows, pivots) = eliminate(self.code.generators(), order);
        let blocks = rows
            .iter()
            .zip(&pivots)
            .filter(|(_, p)| range.contains(p))
            .map(|(r, _)| r.slice(range.start, self.shape.block))
            .collect::<Result<Vec<_>>>()?;
        LinearCode::from_generators(self.shape.block, &blocks)
    }

    pub fn antiprojections(&self) -> Result<Vec<LinearCode>> {
        (1..=self.shape.levels).map(|i| self.antiprojection_zero(i)).collect()
    }

    /// Whether the code equals the product of its projection codes.
    pub fn is_product(&self) -> Result<bool> {
        let sum: usize = self.projections()?.iter().map(LinearCode::rank).sum();
        Ok(sum == self.rank())
    }

    /// Splits the generator matrix into a part whose rows are determined by
    /// their first `L - 1` blocks and a basis of `S_L(0, ..., 0)`, lifted to full words.
    pub(crate) fn head_tail_split(&self) -> (Vec<BitWord>, Vec<BitWord>) {
        let head = self.shape.total() - self.shape.block;
        let (rows, pivots) = eliminate(self.code.generators(), 0..self.shape.total());
        let mut heads = Vec::new();
        let mut tails = Vec::new();
        for (row, p) in rows.into_iter().zip(pivots) {
            if p < head {
                heads.push(row);
            } else {
                tails.push(row);
            }
        }
        (heads, tails)
    }
}
