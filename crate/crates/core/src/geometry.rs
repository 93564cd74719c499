//! Minimum distance and packing density of periodic constellations.
//!
//! Squared distances are exact integers. Only the density itself is a float.

use std::f64::consts::PI;

use num_integer::Integer;
use serde::Serialize;

use crate::bitword::BitWord;
use crate::code::{BlockShape, LayeredCode};
use crate::construction::{Constellation, Point};
use crate::error::{Error, Result};
use crate::latticeness::Decomposition;
use crate::limits::Limits;

/// Shortest representative of `p + 2^L Z^n`: each coordinate becomes its
/// residue of least absolute value, with `+2^(L-1)` chosen on ties.
pub fn min_representative(p: &[i64], levels: usize) -> Point {
    let m = 1i64 << levels;
    let half = m / 2;
    p.iter()
        .map(|v| {
            let r = v.rem_euclid(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect()
}

pub fn norm_sq(p: &[i64]) -> i64 {
    p.iter().map(|v| v * v).sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinDistance {
    pub d2: i64,
    /// Two members at squared distance `d2`.
    pub witness: [Point; 2],
}

/// Squared minimum distance over distinct points of an explicit constellation.
///
/// Scans ordered coset pairs in lexicographic order and also the pure
/// translate distance `2^(2L)`; the first minimizing pair is reported.
pub fn min_distance_sq(k: &Constellation, limits: &Limits) -> Result<MinDistance> {
    let cosets = k.cosets()?;
    let count = cosets.len() as u128;
    if count * count > limits.pair_budget() {
        return Err(Error::EnumerationCap { needed: format!("{} pairs", count * count), cap: limits.enum_cap });
    }
    let levels = k.levels();
    let m = k.modulus();
    let mut translate = vec![0; k.dimension()];
    translate[0] = m;
    let mut best = MinDistance { d2: m * m, witness: [vec![0; k.dimension()], translate] };
    for p in cosets {
        for q in cosets {
            if p == q {
                continue;
            }
            let diff: Point = q.iter().zip(p).map(|(a, b)| a - b).collect();
            let d2 = norm_sq(&min_representative(&diff, levels));
            if d2 < best.d2 {
                best = MinDistance { d2, witness: [p.clone(), q.clone()] };
            }
        }
    }
    Ok(best)
}

/// Volume of the unit ball in `R^n`, via `V_n = 2 pi / n * V_(n-2)`.
pub fn ball_volume(n: usize) -> f64 {
    let mut v = if n.is_multiple_of(2) { 1.0 } else { 2.0 };
    let mut k = if n.is_multiple_of(2) { 2 } else { 3 };
    while k <= n {
        v *= 2.0 * PI / k as f64;
        k += 2;
    }
    v
}

/// Closed form of [`ball_volume`] as text.
pub fn ball_volume_formula(n: usize) -> String {
    let pow = |base: &str, e: usize| match e {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{e}"),
    };
    match n {
        0 => "1".into(),
        1 => "2".into(),
        2 => "pi".into(),
        _ if n.is_multiple_of(2) => format!("{}/{}!", pow("pi", n / 2), n / 2),
        _ => format!("{} {}/{}!!", pow("2", n.div_ceil(2)), pow("pi", n / 2), n),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityReport {
    pub dimension: usize,
    pub levels: usize,
    /// Points per period cube `[0, 2^L)^n`.
    pub points_per_period: u128,
    pub min_distance_sq: i64,
    /// `(sqrt(d2) / 2)^n * M / 2^(nL)`.
    pub center_density: f64,
    /// Exact center density, when the integers involved fit in 128 bits.
    pub center_density_exact: Option<String>,
    pub ball_volume: f64,
    pub ball_volume_formula: String,
    pub packing_density: f64,
}

impl DensityReport {
    pub fn new(dimension: usize, levels: usize, points_per_period: u128, min_distance_sq: i64) -> Self {
        let exact = exact_center_density(dimension, levels, points_per_period, min_distance_sq);
        let center_density = match exact {
            Some((num, den)) if dimension.is_multiple_of(2) => num as f64 / den as f64,
            Some((num, den)) => num as f64 / den as f64 * (min_distance_sq as f64).sqrt(),
            None => {
                let n = dimension as f64;
                let radius = (min_distance_sq as f64).sqrt() / 2.0;
                (n * radius.log2() + (points_per_period as f64).log2() - n * levels as f64).exp2()
            }
        };
        let ball_volume = ball_volume(dimension);
        DensityReport {
            dimension,
            levels,
            points_per_period,
            min_distance_sq,
            center_density,
            center_density_exact: exact.map(|(num, den)| {
                let frac = if den == 1 { num.to_string() } else { format!("{num}/{den}") };
                if dimension % 2 == 1 {
                    format!("{frac}*sqrt({min_distance_sq})")
                } else {
                    frac
                }
            }),
            ball_volume,
            ball_volume_formula: ball_volume_formula(dimension),
            packing_density: ball_volume * center_density,
        }
    }

    /// Exact center density as `(num, den)` for even dimensions.
    pub fn center_fraction(&self) -> Option<(u128, u128)> {
        if self.dimension % 2 == 1 {
            return None;
        }
        exact_center_density(self.dimension, self.levels, self.points_per_period, self.min_distance_sq)
    }
}

/// `d2^(n/2) M / 2^(n + nL)` as a reduced fraction; for odd `n` the true
/// center density is this times `sqrt(d2)`.
fn exact_center_density(n: usize, levels: usize, m: u128, d2: i64) -> Option<(u128, u128)> {
    let d2 = u128::try_from(d2).ok()?;
    let num = d2.checked_pow(u32::try_from(n / 2).ok()?)?.checked_mul(m)?;
    let shift = u32::try_from(n.checked_mul(levels + 1)?).ok()?;
    let den = 1u128.checked_shl(shift).filter(|_| shift < 128)?;
    let g = num.gcd(&den);
    Some((num / g, den / g))
}

/// Density report of an explicit constellation.
pub fn packing_density(k: &Constellation, limits: &Limits) -> Result<DensityReport> {
    let md = min_distance_sq(k, limits)?;
    Ok(DensityReport::new(k.dimension(), k.levels(), k.points_per_period(), md.d2))
}

/// Squared length of the shortest lift of coordinate value `v` modulo `2^L`.
pub fn coordinate_cost(v: i64, levels: usize) -> i64 {
    let m = 1i64 << levels;
    let r = v.rem_euclid(m);
    let a = r.min(m - r);
    a * a
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum TailSpace {
    Full,
    EvenParity,
    Listed(Vec<BitWord>),
}

/// Exact minimum-norm search for `Gamma_{C*}` that enumerates only the first
/// `L - 1` blocks.
///
/// For a fixed head `(c_1, ..., c_(L-1))` the admissible last blocks form a
/// coset `t + S_L(0, ..., 0)`, and the cost separates over coordinates. When
/// `S_L` is the whole space or the even-weight code the coset minimum is found
/// coordinatewise, repairing parity with the cheapest single flip; otherwise
/// `S_L` is enumerated.
#[derive(Debug, Clone)]
pub struct LevelSearch {
    shape: BlockShape,
    heads: Vec<BitWord>,
    tail_space: TailSpace,
    tail_min_weight: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinNorm {
    pub d2: i64,
    pub witness: Decomposition,
}

impl LevelSearch {
    pub fn new(lc: &LayeredCode, limits: &Limits) -> Result<Self> {
        let shape = lc.shape();
        let (heads, tails) = lc.head_tail_split();
        if !limits.allows_pow2(heads.len()) {
            return Err(Error::EnumerationCap { needed: format!("2^{} heads", heads.len()), cap: limits.enum_cap });
        }
        let n = shape.block;
        let tail_code = lc.antiprojection_zero(shape.levels)?;
        debug_assert_eq!(tail_code.rank(), tails.len());
        let all_even = tail_code.generators().iter().all(|g| !g.parity());
        let (tail_space, tail_min_weight) = if tail_code.rank() == n {
            (TailSpace::Full, Some(1))
        } else if n >= 2 && tail_code.rank() + 1 == n && all_even {
            (TailSpace::EvenParity, Some(2))
        } else if limits.allows_pow2(tail_code.rank()) {
            let words = tail_code.iter_codewords().collect::<Vec<_>>();
            let min = words.iter().map(BitWord::weight).filter(|&w| w > 0).min();
            (TailSpace::Listed(words), min)
        } else {
            return Err(Error::Unsupported(format!(
                "last-level space of rank {} is neither full nor even-parity and exceeds the cap",
                tail_code.rank()
            )));
        };
        Ok(LevelSearch { shape, heads, tail_space, tail_min_weight })
    }

    pub fn head_rank(&self) -> usize {
        self.heads.len()
    }

    /// The codeword obtained by adding the head rows selected by `mask`.
    pub fn head_word(&self, mask: u64) -> BitWord {
        let mut w = BitWord::zeros(self.shape.total()).expect("shape validated");
        for (j, h) in self.heads.iter().enumerate() {
            if (mask >> j) & 1 == 1 {
                w = w ^ *h;
            }
        }
        w
    }

    fn head_values(&self, word: &BitWord) -> Vec<i64> {
        let n = self.shape.block;
        (0..n)
            .map(|j| (0..self.shape.levels - 1).map(|i| i64::from(word.get(i * n + j)) << i).sum())
            .collect()
    }

    /// Cheapest admissible last block for the head of codeword `word`, and its cost.
    pub fn best_completion(&self, word: &BitWord) -> (i64, BitWord) {
        let n = self.shape.block;
        let levels = self.shape.levels;
        let top = 1i64 << (levels - 1);
        let base = self.head_values(word);
        let offset = word.slice(self.shape.total() - n, n).expect("in range");
        let cost0: Vec<i64> = base.iter().map(|&b| coordinate_cost(b, levels)).collect();
        let cost1: Vec<i64> = base.iter().map(|&b| coordinate_cost(b + top, levels)).collect();
        match &self.tail_space {
            TailSpace::Full | TailSpace::EvenParity => {
                let mut tail = BitWord::zeros(n).expect("n validated");
                let mut cost = 0;
                for j in 0..n {
                    if cost1[j] < cost0[j] {
                        tail.set(j, true);
                        cost += cost1[j];
                    } else {
                        cost += cost0[j];
                    }
                }
                if self.tail_space == TailSpace::EvenParity && tail.parity() != offset.parity() {
                    let j = (0..n)
                        .min_by_key(|&j| (cost1[j] - cost0[j]).abs())
                        .expect("n is positive");
                    tail.flip(j);
                    cost += (cost1[j] - cost0[j]).abs();
                }
                (cost, tail)
            }
            TailSpace::Listed(words) => words
                .iter()
                .map(|s| {
                    let tail = offset ^ *s;
                    let cost = (0..n).map(|j| if tail.get(j) { cost1[j] } else { cost0[j] }).sum();
                    (cost, tail)
                })
                .min_by_key(|(c, _)| *c)
                .expect("tail space contains zero"),
        }
    }

    fn decomposition(&self, word: &BitWord, tail: BitWord) -> Decomposition {
        let n = self.shape.block;
        let levels = self.shape.levels;
        let m = 1i64 << levels;
        let mut blocks: Vec<BitWord> = (0..levels - 1).map(|i| word.slice(i * n, n).expect("in range")).collect();
        blocks.push(tail);
        let digits = Decomposition { blocks: blocks.clone(), translate: vec![0; n] }.reconstruct();
        let translate = digits.iter().map(|&v| if v > m / 2 { -1 } else { 0 }).collect();
        Decomposition { blocks, translate }
    }

    /// Exact minimum nonzero squared norm with a witness.
    pub fn min_norm(&self) -> MinNorm {
        let n = self.shape.block;
        let levels = self.shape.levels;
        let zero = BitWord::zeros(n).expect("n validated");
        let mut translate = vec![0; n];
        translate[0] = 1;
        let mut best = MinNorm {
            d2: 1i64 << (2 * levels),
            witness: Decomposition { blocks: vec![zero; levels], translate },
        };
        // zero head: a nonzero word of S_L placed at the top level
        if let Some(wt) = self.tail_min_weight {
            let d2 = i64::from(wt) << (2 * (levels - 1));
            if d2 < best.d2 {
                let tail = match &self.tail_space {
                    TailSpace::Full => BitWord::unit(n, 0).expect("n positive"),
                    TailSpace::EvenParity => {
                        BitWord::unit(n, 0).expect("n positive") ^ BitWord::unit(n, 1).expect("n >= 2")
                    }
                    TailSpace::Listed(words) => *words.iter().find(|w| w.weight() == wt).expect("weight present"),
                };
                best = MinNorm { d2, witness: self.decomposition(&BitWord::zeros(self.shape.total()).unwrap(), tail) };
            }
        }
        let mut word = BitWord::zeros(self.shape.total()).expect("shape validated");
        for step in 1u64..(1u64 << self.heads.len()) {
            word = word ^ self.heads[step.trailing_zeros() as usize];
            let (cost, tail) = self.best_completion(&word);
            if cost < best.d2 {
                best = MinNorm { d2: cost, witness: self.decomposition(&word, tail) };
            }
        }
        best
    }
}

/// Exact minimum nonzero squared norm of `Gamma_{C*}` without listing the code.
pub fn structured_min_norm(lc: &LayeredCode, limits: &Limits) -> Result<MinNorm> {
    Ok(LevelSearch::new(lc, limits)?.min_norm())
}

/// Minimum squared norm of the 3-level Leech constellation.
pub fn leech_min_norm() -> MinNorm {
    structured_min_norm(&crate::leech::build_leech_layered_code(), &Limits::default())
        .expect("Leech code has 13 head rows and an even-parity top level")
}

/// Density report from the structured minimum norm; works for implicit constellations.
pub fn structured_density(lc: &LayeredCode, limits: &Limits) -> Result<DensityReport> {
    let mn = structured_min_norm(lc, limits)?;
    Ok(DensityReport::new(lc.block_length(), lc.levels(), 1u128 << lc.rank(), mn.d2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::{associated_construction_c, construction_a, construction_c_star};
    use crate::code::LinearCode;

    fn layered(n: usize, l: usize, list: &[&str]) -> LayeredCode {
        let words: Vec<BitWord> = list.iter().map(|s| s.parse().unwrap()).collect();
        LayeredCode::from_codewords(n, l, &words).unwrap()
    }

    fn ex2() -> LayeredCode {
        layered(2, 2, &["0000", "0010", "1001", "1011"])
    }

    fn ex5() -> LayeredCode {
        layered(2, 3, &["000000", "101101", "001011", "100110", "000010", "001001", "100100", "101111"])
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn min_representative_examples() {
        assert_eq!(min_representative(&[3, 0], 2), vec![-1, 0]);
        assert_eq!(norm_sq(&min_representative(&[3, 0], 2)), 1);
        assert_eq!(min_representative(&[2, 2], 2), vec![2, 2]);
        assert_eq!(min_representative(&[-2, 6], 2), vec![2, 2]);
        assert_eq!(min_representative(&[7, 6], 3), vec![-1, -2]);
        assert_eq!(norm_sq(&min_representative(&[7, 6], 3)), 5);
    }

    #[test]
    fn min_distance_examples() {
        let k = construction_c_star(&ex2(), &lim()).unwrap();
        let md = min_distance_sq(&k, &lim()).unwrap();
        assert_eq!(md.d2, 4);
        assert_eq!(md.witness, [vec![0, 0], vec![2, 0]]);
        let assoc = associated_construction_c(&ex2(), &lim()).unwrap();
        assert_eq!(min_distance_sq(&assoc, &lim()).unwrap().d2, 1);
        let k5 = construction_c_star(&ex5(), &lim()).unwrap();
        let md5 = min_distance_sq(&k5, &lim()).unwrap();
        assert_eq!((md5.d2, md5.witness.clone()), (5, [vec![0, 0], vec![1, 2]]));
    }

    #[test]
    fn ball_volumes() {
        assert_eq!(ball_volume(0), 1.0);
        assert_eq!(ball_volume(1), 2.0);
        assert_eq!(ball_volume(2), PI);
        assert!((ball_volume(3) - 4.0 * PI / 3.0).abs() < 1e-15);
        let v24 = PI.powi(12) / 479_001_600.0;
        assert!((ball_volume(24) - v24).abs() / v24 < 1e-14);
        assert_eq!(ball_volume_formula(24), "pi^12/12!");
        assert_eq!(ball_volume_formula(3), "2^2 pi/3!!");
        assert_eq!(ball_volume_formula(2), "pi");
        assert_eq!(ball_volume_formula(4), "pi^2/2!");
    }

    #[test]
    fn example_two_densities() {
        let star = packing_density(&construction_c_star(&ex2(), &lim()).unwrap(), &lim()).unwrap();
        assert!((star.packing_density - PI / 4.0).abs() < 1e-15);
        assert_eq!(star.center_density_exact.as_deref(), Some("1/4"));
        let assoc = packing_density(&associated_construction_c(&ex2(), &lim()).unwrap(), &lim()).unwrap();
        assert!((assoc.packing_density - PI / 8.0).abs() < 1e-15);
        assert_eq!(star.packing_density / assoc.packing_density, 2.0);
    }

    #[test]
    fn construction_a_checkerboard_density() {
        let c = LinearCode::from_generators(2, &[BitWord::ones(2).unwrap()]).unwrap();
        let r = packing_density(&construction_a(&c, &lim()).unwrap(), &lim()).unwrap();
        assert_eq!(r.min_distance_sq, 2);
        assert!((r.packing_density - PI / 4.0).abs() < 1e-15);
    }

    #[test]
    fn leech_density_from_report() {
        let r = DensityReport::new(24, 3, 1 << 36, 32);
        let expect = PI.powi(12) / 479_001_600.0;
        assert!((r.packing_density - expect).abs() < 1e-15);
        assert_eq!(r.center_density, 1.0);
        assert_eq!(r.center_density_exact.as_deref(), Some("1"));
    }

    #[test]
    fn structured_search_matches_explicit_on_examples() {
        for lc in [ex2(), ex5()] {
            let explicit = min_distance_sq(&construction_c_star(&lc, &lim()).unwrap(), &lim()).unwrap();
            let mn = structured_min_norm(&lc, &lim()).unwrap();
            assert_eq!(mn.d2, explicit.d2);
            assert_eq!(norm_sq(&mn.witness.reconstruct()), mn.d2);
            assert!(lc.contains(&mn.witness.word()).unwrap());
        }
    }

    #[test]
    fn coordinate_costs() {
        assert_eq!(coordinate_cost(5, 3), 9);
        assert_eq!(coordinate_cost(4, 3), 16);
        assert_eq!(coordinate_cost(-1, 3), 1);
    }
}
