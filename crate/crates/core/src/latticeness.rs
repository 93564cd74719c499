//! Deciding whether a multilevel constellation is a lattice.
//!
//! Three routes are provided: a brute-force closure test on explicit coset
//! sets, the Schur-closure criterion for nested Construction C families, and
//! the zero-context antiprojection criterion for Construction C* (with its
//! nesting precondition). The carry-sum formula underlying the last route is
//! exposed as [`carry_sum`].

use serde::Serialize;

use crate::bitword::BitWord;
use crate::code::{BlockShape, LayeredCode, LinearCode};
use crate::construction::{associated_construction_c, construction_c_star, Constellation, Point};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// A point written as `c_1 + 2 c_2 + ... + 2^(L-1) c_L + 2^L z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Decomposition {
    pub blocks: Vec<BitWord>,
    pub translate: Vec<i64>,
}

impl Decomposition {
    pub fn new(blocks: Vec<BitWord>, translate: Vec<i64>) -> Result<Self> {
        let n = translate.len();
        for b in &blocks {
            if b.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: b.len() });
            }
        }
        Ok(Decomposition { blocks, translate })
    }

    pub fn zero(shape: BlockShape) -> Self {
        let z = BitWord::zeros(shape.block).expect("shape validated");
        Decomposition { blocks: vec![z; shape.levels], translate: vec![0; shape.block] }
    }

    pub fn shape(&self) -> Result<BlockShape> {
        BlockShape::new(self.translate.len(), self.blocks.len())
    }

    /// The integer vector this decomposition denotes.
    pub fn reconstruct(&self) -> Point {
        let levels = self.blocks.len();
        self.translate
            .iter()
            .enumerate()
            .map(|(j, z)| {
                let digits: i64 = self.blocks.iter().enumerate().map(|(i, b)| i64::from(b.get(j)) << i).sum();
                digits + (z << levels)
            })
            .collect()
    }

    /// Concatenated blocks as one layered word.
    pub fn word(&self) -> BitWord {
        BitWord::concat(&self.blocks).expect("blocks share a length")
    }
}

/// Carry terms of a level-wise sum.
///
/// With generate `g_i = c_i * c~_i` and propagate `p_i = c_i + c~_i`:
/// `r_i^1 = p_i * g_(i-1)`, `r_i^j = p_i * r_(i-1)^(j-1)` for `2 <= j <= i - 1`,
/// and `s_i = g_i + r_i^1 + ... + r_i^(i-1)`, so `s_i` is the carry out of level `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CarryState {
    pub s: Vec<BitWord>,
    /// `r[i - 1][j - 1]` holds `r_i^j`; level `i` has `i - 1` terms.
    pub r: Vec<Vec<BitWord>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CarrySum {
    pub sum: Decomposition,
    pub state: CarryState,
}

/// Adds two decompositions level by level.
///
/// Output blocks are `(c_1 + c~_1, s_1 + c_2 + c~_2, ..., s_(L-1) + c_L + c~_L)`
/// and the translate is `s_L + z + z~`. Codeword membership is not required.
pub fn carry_sum(shape: BlockShape, a: &Decomposition, b: &Decomposition) -> Result<CarrySum> {
    for d in [a, b] {
        let s = d.shape()?;
        if s != shape {
            return Err(Error::BlockSplit { len: s.total(), block: shape.block, levels: shape.levels });
        }
    }
    let levels = shape.levels;
    let mut s: Vec<BitWord> = Vec::with_capacity(levels);
    let mut r: Vec<Vec<BitWord>> = Vec::with_capacity(levels);
    for i in 0..levels {
        let (c, ct) = (a.blocks[i], b.blocks[i]);
        let propagate = c ^ ct;
        let mut terms = Vec::with_capacity(i);
        if i > 0 {
            let g_prev = a.blocks[i - 1] & b.blocks[i - 1];
            terms.push(propagate & g_prev);
            for j in 1..i {
                terms.push(propagate & r[i - 1][j - 1]);
            }
        }
        let carry = terms.iter().fold(c & ct, |acc, t| acc ^ *t);
        s.push(carry);
        r.push(terms);
    }
    let mut blocks = Vec::with_capacity(levels);
    blocks.push(a.blocks[0] ^ b.blocks[0]);
    for i in 1..levels {
        blocks.push(s[i - 1] ^ a.blocks[i] ^ b.blocks[i]);
    }
    let translate = s[levels - 1]
        .bits()
        .zip(a.translate.iter().zip(&b.translate))
        .map(|(bit, (z, zt))| i64::from(bit) + z + zt)
        .collect();
    Ok(CarrySum { sum: Decomposition { blocks, translate }, state: CarryState { s, r } })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Theorem2,
    Theorem1,
    Bruteforce,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    /// Two members whose sum `p + q` is not a member.
    PointPair { pair: [Point; 2], sum: Point },
    /// Generators `left`, `right` of `C_(level-1)` whose Schur product escapes the target code at `level`.
    Schur { level: usize, left: BitWord, right: BitWord, product: BitWord },
    /// Failed containment `from <= into` in the precondition chain.
    Chain { from: String, into: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeVerdict {
    /// `None` when the method cannot decide.
    pub is_lattice: Option<bool>,
    pub method: Method,
    /// `None` when the method has no precondition.
    pub precondition_held: Option<bool>,
    pub witness: Option<Witness>,
    pub reason: String,
}

fn add_mod(p: &[i64], q: &[i64], m: i64) -> Point {
    p.iter().zip(q).map(|(a, b)| (a + b).rem_euclid(m)).collect()
}

/// Closure test of an explicit coset set under addition mod `2^L`.
///
/// Distinct pairs are scanned first in lexicographic order, then doubles; the
/// first failing pair is the witness. Inverses come for free in a finite group.
pub fn brute_force_is_lattice(k: &Constellation, limits: &Limits) -> Result<LatticeVerdict> {
    let cosets = k.cosets()?;
    let m = k.modulus();
    let count = cosets.len() as u128;
    if count * (count + 1) / 2 > limits.pair_budget() {
        return Err(Error::EnumerationCap {
            needed: format!("{} pairs", count * (count + 1) / 2),
            cap: limits.enum_cap,
        });
    }
    let fail = |p: &Point, q: &Point| -> Result<LatticeVerdict> {
        let sum: Point = p.iter().zip(q).map(|(a, b)| a + b).collect();
        Ok(LatticeVerdict {
            is_lattice: Some(false),
            method: Method::Bruteforce,
            precondition_held: None,
            witness: Some(Witness::PointPair { pair: [p.clone(), q.clone()], sum }),
            reason: "coset set is not closed under addition".into(),
        })
    };
    for (i, p) in cosets.iter().enumerate() {
        for q in &cosets[i + 1..] {
            if cosets.binary_search(&add_mod(p, q, m)).is_err() {
                return fail(p, q);
            }
        }
    }
    for p in cosets {
        if cosets.binary_search(&add_mod(p, p, m)).is_err() {
            return fail(p, p);
        }
    }
    Ok(LatticeVerdict {
        is_lattice: Some(true),
        method: Method::Bruteforce,
        precondition_held: None,
        witness: None,
        reason: "coset set is closed under addition".into(),
    })
}

/// First generator pair (diagonal included) of `source` whose Schur product is outside `target`.
fn schur_escape(source: &LinearCode, target: &LinearCode) -> Result<Option<(BitWord, BitWord, BitWord)>> {
    let gens = source.generators();
    for (i, g) in gens.iter().enumerate() {
        for h in &gens[i..] {
            let prod = g.schur(h)?;
            if !target.contains(&prod)? {
                return Ok(Some((*g, *h, prod)));
            }
        }
    }
    Ok(None)
}

/// Schur-closure criterion for Construction C over nested codes.
///
/// Checks `g * g'` in `C_(i+1)` for generator pairs of each `C_i`; by
/// bilinearity this covers all codeword pairs. A non-nested family yields an
/// undecided verdict with `precondition_held = false`.
pub fn theorem1_check(codes: &[LinearCode]) -> Result<LatticeVerdict> {
    let n = codes.first().map(LinearCode::length).ok_or(Error::LevelCount { levels: 0 })?;
    for c in codes {
        if c.length() != n {
            return Err(Error::DimensionMismatch { expected: n, found: c.length() });
        }
    }
    for (i, pair) in codes.windows(2).enumerate() {
        if !pair[0].is_subcode_of(&pair[1])? {
            return Ok(LatticeVerdict {
                is_lattice: None,
                method: Method::Theorem1,
                precondition_held: Some(false),
                witness: Some(Witness::Chain { from: format!("C{}", i + 1), into: format!("C{}", i + 2) }),
                reason: format!("codes are not nested: C{} is not contained in C{}", i + 1, i + 2),
            });
        }
    }
    for (i, pair) in codes.windows(2).enumerate() {
        if let Some((left, right, product)) = schur_escape(&pair[0], &pair[1])? {
            return Ok(LatticeVerdict {
                is_lattice: Some(false),
                method: Method::Theorem1,
                precondition_held: Some(true),
                witness: Some(Witness::Schur { level: i + 2, left, right, product }),
                reason: format!("C{} * C{} is not contained in C{}", i + 1, i + 1, i + 2),
            });
        }
    }
    Ok(LatticeVerdict {
        is_lattice: Some(true),
        method: Method::Theorem1,
        precondition_held: Some(true),
        witness: None,
        reason: "nested family is closed under Schur product".into(),
    })
}

/// Zero-context antiprojection criterion for `Gamma_{C*}`.
///
/// Precondition: `C_i <= S_(i+1)(0, ..., 0)` for `i = 1..L-1`. When it holds, the
/// constellation is a lattice iff `S_i(0, ..., 0)` contains the Schur product of
/// every generator pair of `C_(i-1)`, for `i = 2..L`. When it fails the verdict
/// is undecided.
pub fn theorem2_check(lc: &LayeredCode) -> Result<LatticeVerdict> {
    let projections = lc.projections()?;
    let anti = lc.antiprojections()?;
    for i in 1..lc.levels() {
        if !projections[i - 1].is_subcode_of(&anti[i])? {
            return Ok(LatticeVerdict {
                is_lattice: None,
                method: Method::Theorem2,
                precondition_held: Some(false),
                witness: Some(Witness::Chain { from: format!("C{i}"), into: format!("S{}(0)", i + 1) }),
                reason: format!("precondition fails: C{i} is not contained in S{}(0,...,0)", i + 1),
            });
        }
    }
    for i in 2..=lc.levels() {
        if let Some((left, right, product)) = schur_escape(&projections[i - 2], &anti[i - 1])? {
            return Ok(LatticeVerdict {
                is_lattice: Some(false),
                method: Method::Theorem2,
                precondition_held: Some(true),
                witness: Some(Witness::Schur { level: i, left, right, product }),
                reason: format!("S{i}(0,...,0) does not close C{} under Schur product", i - 1),
            });
        }
    }
    Ok(LatticeVerdict {
        is_lattice: Some(true),
        method: Method::Theorem2,
        precondition_held: Some(true),
        witness: None,
        reason: "precondition chain holds and every S_i(0,...,0) closes C_(i-1) under Schur product".into(),
    })
}

/// Latticeness of the associated Construction C, available once the
/// Construction C* criterion has certified a lattice under its precondition.
pub fn corollary_check(lc: &LayeredCode) -> Result<LatticeVerdict> {
    let t2 = theorem2_check(lc)?;
    if t2.precondition_held != Some(true) || t2.is_lattice != Some(true) {
        return Err(Error::Inapplicable(format!(
            "the associated Construction C criterion needs a certified C* lattice ({})",
            t2.reason
        )));
    }
    theorem1_check(&lc.projections()?)
}

/// Which route the combined entry point may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Auto,
    Theorem2,
    Bruteforce,
}

fn undecided(method: Method, precondition_held: Option<bool>, reason: String) -> LatticeVerdict {
    LatticeVerdict { is_lattice: None, method, precondition_held, witness: None, reason }
}

fn brute_on(lc: &LayeredCode, limits: &Limits) -> Result<Option<LatticeVerdict>> {
    let k = construction_c_star(lc, limits)?;
    if !k.is_explicit() {
        return Ok(None);
    }
    match brute_force_is_lattice(&k, limits) {
        Ok(v) => Ok(Some(v)),
        Err(Error::EnumerationCap { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Decides latticeness of `Gamma_{C*}`.
///
/// `Auto` runs the antiprojection criterion and falls back to brute force when
/// its precondition fails; if brute force is infeasible the verdict is undecided.
pub fn decide(lc: &LayeredCode, strategy: Strategy, limits: &Limits) -> Result<LatticeVerdict> {
    match strategy {
        Strategy::Theorem2 => theorem2_check(lc),
        Strategy::Bruteforce => Ok(brute_on(lc, limits)?.unwrap_or_else(|| {
            undecided(Method::Bruteforce, None, "enumeration exceeds the cap".into())
        })),
        Strategy::Auto => {
            let t2 = theorem2_check(lc)?;
            if t2.precondition_held == Some(true) {
                return Ok(t2);
            }
            match brute_on(lc, limits)? {
                Some(mut v) => {
                    v.precondition_held = Some(false);
                    v.reason = format!("{}; decided by brute force: {}", t2.reason, v.reason);
                    Ok(v)
                }
                None => Ok(undecided(
                    Method::Theorem2,
                    Some(false),
                    format!("{}; brute force exceeds the enumeration cap", t2.reason),
                )),
            }
        }
    }
}

/// Brute-force verdict for the associated Construction C of `lc`.
pub fn brute_force_associated(lc: &LayeredCode, limits: &Limits) -> Result<LatticeVerdict> {
    brute_force_is_lattice(&associated_construction_c(lc, limits)?, limits)
}
