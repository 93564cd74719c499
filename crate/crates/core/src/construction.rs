//! Periodic constellations built from binary codes.
//!
//! A constellation is a subset of `Z^n` invariant under translation by
//! `2^L Z^n`, stored either as its explicit coset representatives in
//! `[0, 2^L)^n` (sorted lexicographically) or implicitly by the codes that
//! generate it. A layered word `(c_1, ..., c_L)` maps to the coset of
//! `c_1 + 2 c_2 + ... + 2^(L-1) c_L`; this digit map is a bijection between
//! layered words and `[0, 2^L)^n`.

use serde::Serialize;

use crate::bitword::BitWord;
use crate::code::{BlockShape, LayeredCode, LinearCode};
use crate::error::{Error, Result};
use crate::limits::Limits;

pub type Point = Vec<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    ConstructionA,
    ConstructionC,
    ConstructionCStar,
    AssociatedC,
    ConstructionD,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CosetSet {
    Explicit(Vec<Point>),
    /// `Gamma_{C*}` of a layered code.
    Layered(LayeredCode),
    /// `C_1 + 2 C_2 + ... + 2^(L-1) C_L` with independent levels.
    Product(Vec<LinearCode>),
    Nested(NestedFamily),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constellation {
    shape: BlockShape,
    cosets: CosetSet,
    source: Source,
}

/// Integer point `sum_i 2^(i-1) c_i` for blocks `c_1, ..., c_L`.
pub fn digits_to_point(blocks: &[BitWord]) -> Point {
    let n = blocks.first().map_or(0, BitWord::len);
    (0..n)
        .map(|j| {
            blocks
                .iter()
                .enumerate()
                .map(|(i, b)| i64::from(b.get(j)) << i)
                .sum()
        })
        .collect()
}

/// Reduces `p` into `[0, 2^L)^n`.
pub fn reduce_point(p: &[i64], levels: usize) -> Point {
    let m = 1i64 << levels;
    p.iter().map(|v| v.rem_euclid(m)).collect()
}

/// Binary digits of `p mod 2^L`: block `i` holds bit `i - 1` of every coordinate.
pub fn point_to_digits(p: &[i64], levels: usize) -> Result<Vec<BitWord>> {
    let r = reduce_point(p, levels);
    (0..levels)
        .map(|i| BitWord::from_bits(r.iter().map(|v| (v >> i) & 1 == 1)))
        .collect()
}

fn sorted(mut points: Vec<Point>) -> Vec<Point> {
    points.sort_unstable();
    points.dedup();
    points
}

fn check_common_length(codes: &[LinearCode]) -> Result<usize> {
    let n = codes.first().map(LinearCode::length).ok_or(Error::LevelCount { levels: 0 })?;
    for c in codes {
        if c.length() != n {
            return Err(Error::DimensionMismatch { expected: n, found: c.length() });
        }
    }
    Ok(n)
}

impl Constellation {
    pub fn dimension(&self) -> usize {
        self.shape.block
    }

    pub fn levels(&self) -> usize {
        self.shape.levels
    }

    pub fn shape(&self) -> BlockShape {
        self.shape
    }

    pub fn modulus(&self) -> i64 {
        self.shape.modulus()
    }

    pub fn source(&self) -> Source {
        self.source
    }

    pub fn coset_set(&self) -> &CosetSet {
        &self.cosets
    }

    pub fn is_explicit(&self) -> bool {
        matches!(self.cosets, CosetSet::Explicit(_))
    }

    /// Sorted coset representatives, or [`Error::ImplicitMode`].
    pub fn cosets(&self) -> Result<&[Point]> {
        match &self.cosets {
            CosetSet::Explicit(points) => Ok(points),
            _ => Err(Error::ImplicitMode),
        }
    }

    /// Number of points per period cube `[0, 2^L)^n`.
    pub fn points_per_period(&self) -> u128 {
        let log2: usize = match &self.cosets {
            CosetSet::Explicit(points) => return points.len() as u128,
            CosetSet::Layered(lc) => lc.rank(),
            CosetSet::Product(codes) => codes.iter().map(LinearCode::rank).sum(),
            CosetSet::Nested(family) => family.codes.iter().map(LinearCode::rank).sum(),
        };
        1u128 << log2
    }

    pub fn contains_point(&self, p: &[i64]) -> Result<bool> {
        if p.len() != self.dimension() {
            return Err(Error::DimensionMismatch { expected: self.dimension(), found: p.len() });
        }
        match &self.cosets {
            CosetSet::Explicit(points) => {
                Ok(points.binary_search(&reduce_point(p, self.levels())).is_ok())
            }
            CosetSet::Layered(lc) => lc.contains(&BitWord::concat(&point_to_digits(p, self.levels())?)?),
            CosetSet::Product(codes) => {
                let digits = point_to_digits(p, self.levels())?;
                for (c, d) in codes.iter().zip(&digits) {
                    if !c.contains(d)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            CosetSet::Nested(family) => family.contains_point(p),
        }
    }

    /// All points with every coordinate in `[-radius, radius]`, sorted.
    pub fn points_in_box(&self, radius: i64, limits: &Limits) -> Result<Vec<Point>> {
        let radius = radius.max(0);
        let reps = self.cosets()?;
        let m = self.modulus();
        let side = 2 * radius as u128 + 1;
        let n = self.dimension() as u32;
        let bound = side.checked_pow(n).unwrap_or(u128::MAX);
        if !limits.allows(bound) {
            return Err(Error::EnumerationCap { needed: format!("{side}^{n}"), cap: limits.enum_cap });
        }
        let mut out = Vec::new();
        for rep in reps {
            // lifts of each coordinate that land inside the box
            let lifts: Vec<Vec<i64>> = rep
                .iter()
                .map(|&v| {
                    let lo = -(radius + v).div_euclid(m);
                    let hi = (radius - v).div_euclid(m);
                    (lo..=hi).map(|k| v + k * m).collect()
                })
                .collect();
            if lifts.iter().all(|l| !l.is_empty()) {
                push_cartesian(&lifts, &mut out);
            }
        }
        Ok(sorted(out))
    }
}

fn push_cartesian(choices: &[Vec<i64>], out: &mut Vec<Point>) {
    let mut idx = vec![0usize; choices.len()];
    'next: loop {
        out.push(idx.iter().zip(choices).map(|(&i, c)| c[i]).collect());
        for k in (0..choices.len()).rev() {
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                continue 'next;
            }
            idx[k] = 0;
        }
        return;
    }
}

/// `Lambda_A = C + 2 Z^n`.
pub fn construction_a(code: &LinearCode, limits: &Limits) -> Result<Constellation> {
    let shape = BlockShape::new(code.length(), 1)?;
    let cosets = if limits.allows_pow2(code.rank()) {
        CosetSet::Explicit(sorted(code.iter_codewords().map(|c| c.to_ints()).collect()))
    } else {
        CosetSet::Product(vec![code.clone()])
    };
    Ok(Constellation { shape, cosets, source: Source::ConstructionA })
}

/// `Gamma_C = C_1 + 2 C_2 + ... + 2^(L-1) C_L + 2^L Z^n` with independent levels.
pub fn construction_c(codes: &[LinearCode], limits: &Limits) -> Result<Constellation> {
    build_construction_c(codes, limits, Source::ConstructionC)
}

fn build_construction_c(codes: &[LinearCode], limits: &Limits, source: Source) -> Result<Constellation> {
    let n = check_common_length(codes)?;
    let shape = BlockShape::new(n, codes.len())?;
    let total_rank: usize = codes.iter().map(LinearCode::rank).sum();
    let cosets = if limits.allows_pow2(total_rank) {
        let mut partial: Vec<Point> = vec![vec![0; n]];
        for (i, code) in codes.iter().enumerate() {
            let words: Vec<Point> = code.iter_codewords().map(|c| c.to_ints()).collect();
            partial = partial
                .iter()
                .flat_map(|p| {
                    words.iter().map(move |w| p.iter().zip(w).map(|(a, b)| a + (b << i)).collect())
                })
                .collect();
        }
        CosetSet::Explicit(sorted(partial))
    } else {
        CosetSet::Product(codes.to_vec())
    };
    Ok(Constellation { shape, cosets, source })
}

/// `Gamma_{C*}`: points `c_1 + 2 c_2 + ... + 2^(L-1) c_L + 2^L z` with `(c_1, ..., c_L)` in the layered code.
pub fn construction_c_star(lc: &LayeredCode, limits: &Limits) -> Result<Constellation> {
    let cosets = if limits.allows_pow2(lc.rank()) {
        let points = lc
            .code()
            .iter_codewords()
            .map(|c| Ok(digits_to_point(&lc.split(&c)?)))
            .collect::<Result<Vec<_>>>()?;
        CosetSet::Explicit(sorted(points))
    } else {
        CosetSet::Layered(lc.clone())
    };
    Ok(Constellation { shape: lc.shape(), cosets, source: Source::ConstructionCStar })
}

/// Construction C over the projection codes of `lc`; always contains `Gamma_{C*}`.
pub fn associated_construction_c(lc: &LayeredCode, limits: &Limits) -> Result<Constellation> {
    build_construction_c(&lc.projections()?, limits, Source::AssociatedC)
}

/// Solves `w = sum alpha_j b_j` over a fixed independent list `b_1, ..., b_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct CoordinateSolver {
    rows: Vec<(BitWord, u128, usize)>,
}

impl CoordinateSolver {
    fn new(basis: &[BitWord]) -> Self {
        let mut rows: Vec<(BitWord, u128, usize)> = Vec::new();
        for (j, b) in basis.iter().enumerate() {
            let mut w = *b;
            let mut mask = 1u128 << j;
            for (r, m, p) in &rows {
                if w.get(*p) {
                    w = w ^ *r;
                    mask ^= m;
                }
            }
            let p = w.support().next().expect("basis vectors are independent");
            for (r, m, _) in rows.iter_mut() {
                if r.get(p) {
                    *r = *r ^ w;
                    *m ^= mask;
                }
            }
            rows.push((w, mask, p));
        }
        CoordinateSolver { rows }
    }

    fn solve(&self, w: &BitWord) -> Option<u128> {
        let mut w = *w;
        let mut mask = 0;
        for (r, m, p) in &self.rows {
            if w.get(*p) {
                w = w ^ *r;
                mask ^= m;
            }
        }
        w.is_zero().then_some(mask)
    }
}

/// Nested codes `C_1 <= C_2 <= ... <= C_L` with a basis adapted to the chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestedFamily {
    codes: Vec<LinearCode>,
    basis: Vec<BitWord>,
    dims: Vec<usize>,
    solvers: Vec<CoordinateSolver>,
}

impl NestedFamily {
    /// Verifies containment of consecutive codes and extends a basis along the chain.
    pub fn new(codes: Vec<LinearCode>) -> Result<Self> {
        check_common_length(&codes)?;
        BlockShape::new(codes[0].length(), codes.len())?;
        for (i, pair) in codes.windows(2).enumerate() {
            if !pair[0].is_subcode_of(&pair[1])? {
                return Err(Error::NotNested { level: i + 1 });
            }
        }
        let mut basis: Vec<BitWord> = Vec::new();
        let mut dims = Vec::new();
        for code in &codes {
            for g in code.generators() {
                let span = LinearCode::from_generators(code.length(), &basis)?;
                if !span.contains(g)? {
                    basis.push(*g);
                }
            }
            dims.push(basis.len());
        }
        let solvers = dims.iter().map(|&k| CoordinateSolver::new(&basis[..k])).collect();
        Ok(NestedFamily { codes, basis, dims, solvers })
    }

    pub fn codes(&self) -> &[LinearCode] {
        &self.codes
    }

    /// Basis `b_1, ..., b_{k_L}` whose first `k_i` vectors span `C_i`.
    pub fn basis(&self) -> &[BitWord] {
        &self.basis
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Membership in `Lambda_D` by peeling one binary digit per level.
    fn contains_point(&self, p: &[i64]) -> Result<bool> {
        let levels = self.codes.len();
        let mut x = reduce_point(p, levels);
        for solver in &self.solvers {
            let low = BitWord::from_bits(x.iter().map(|v| v & 1 == 1))?;
            let Some(alpha) = solver.solve(&low) else {
                return Ok(false);
            };
            for (j, b) in self.basis.iter().enumerate() {
                if (alpha >> j) & 1 == 1 {
                    for (xi, bit) in x.iter_mut().zip(b.bits()) {
                        *xi -= i64::from(bit);
                    }
                }
            }
            for xi in x.iter_mut() {
                debug_assert_eq!(xi.rem_euclid(2), 0);
                *xi = xi.div_euclid(2);
            }
        }
        Ok(true)
    }
}

/// `Lambda_D`: all `sum_i 2^(i-1) sum_{j <= k_i} alpha_ij b_j + 2^L z` with integer sums.
pub fn construction_d(family: &NestedFamily, limits: &Limits) -> Result<Constellation> {
    let n = family.codes[0].length();
    let shape = BlockShape::new(n, family.codes.len())?;
    // (level, basis vector) pairs, one per alpha coefficient
    let terms: Vec<(usize, &BitWord)> = family
        .dims
        .iter()
        .enumerate()
        .flat_map(|(i, &k)| family.basis[..k].iter().map(move |b| (i, b)))
        .collect();
    let cosets = if limits.allows_pow2(terms.len()) {
        let m = shape.modulus();
        let scaled: Vec<Point> = terms
            .iter()
            .map(|(i, b)| b.bits().map(|bit| i64::from(bit) << i).collect())
            .collect();
        let mut points = Vec::with_capacity(1 << terms.len());
        let mut current = vec![0i64; n];
        points.push(current.clone());
        for step in 1u64..(1u64 << terms.len()) {
            let k = step.trailing_zeros() as usize;
            // Gray code: term k toggles on when bit k of the Gray index becomes set
            let gray = step ^ (step >> 1);
            let sign = if (gray >> k) & 1 == 1 { 1 } else { -1 };
            for (c, s) in current.iter_mut().zip(&scaled[k]) {
                *c += sign * s;
            }
            points.push(current.iter().map(|v| v.rem_euclid(m)).collect());
        }
        CosetSet::Explicit(sorted(points))
    } else {
        CosetSet::Nested(family.clone())
    };
    Ok(Constellation { shape, cosets, source: Source::ConstructionD })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BitWord {
        s.parse().unwrap()
    }

    fn code(n: usize, gens: &[&str]) -> LinearCode {
        let g: Vec<BitWord> = gens.iter().map(|s| w(s)).collect();
        LinearCode::from_generators(n, &g).unwrap()
    }

    fn layered(n: usize, l: usize, list: &[&str]) -> LayeredCode {
        let words: Vec<BitWord> = list.iter().map(|s| w(s)).collect();
        LayeredCode::from_codewords(n, l, &words).unwrap()
    }

    fn pts(list: &[[i64; 2]]) -> Vec<Point> {
        let mut v: Vec<Point> = list.iter().map(|p| p.to_vec()).collect();
        v.sort();
        v
    }

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn construction_a_examples() {
        let k = construction_a(&code(2, &["11"]), &lim()).unwrap();
        assert_eq!(k.cosets().unwrap(), pts(&[[0, 0], [1, 1]]));
        let zero = construction_a(&LinearCode::trivial(2).unwrap(), &lim()).unwrap();
        assert_eq!(zero.cosets().unwrap(), pts(&[[0, 0]]));
        let full = construction_a(&LinearCode::full(2).unwrap(), &lim()).unwrap();
        assert_eq!(full.cosets().unwrap(), pts(&[[0, 0], [0, 1], [1, 0], [1, 1]]));
    }

    #[test]
    fn construction_d_examples() {
        let c = code(2, &["11"]);
        let one = NestedFamily::new(vec![c.clone()]).unwrap();
        assert_eq!(
            construction_d(&one, &lim()).unwrap().cosets().unwrap(),
            construction_a(&c, &lim()).unwrap().cosets().unwrap()
        );
        let two = NestedFamily::new(vec![c.clone(), c]).unwrap();
        assert_eq!(
            construction_d(&two, &lim()).unwrap().cosets().unwrap(),
            pts(&[[0, 0], [1, 1], [2, 2], [3, 3]])
        );
        let doubled = NestedFamily::new(vec![LinearCode::trivial(2).unwrap(), LinearCode::full(2).unwrap()]).unwrap();
        assert_eq!(
            construction_d(&doubled, &lim()).unwrap().cosets().unwrap(),
            pts(&[[0, 0], [2, 0], [0, 2], [2, 2]])
        );
    }

    #[test]
    fn non_nested_family_is_rejected() {
        let err = NestedFamily::new(vec![code(2, &["10"]), code(2, &["01"])]).unwrap_err();
        assert_eq!(err, Error::NotNested { level: 1 });
    }

    #[test]
    fn construction_c_of_example_projections() {
        let c1 = code(2, &["10"]);
        let c2 = LinearCode::full(2).unwrap();
        let k = construction_c(&[c1, c2], &lim()).unwrap();
        assert_eq!(
            k.cosets().unwrap(),
            pts(&[[0, 0], [2, 0], [0, 2], [2, 2], [1, 0], [3, 0], [1, 2], [3, 2]])
        );
        let single = construction_c(&[code(2, &["11"])], &lim()).unwrap();
        assert_eq!(single.cosets().unwrap(), pts(&[[0, 0], [1, 1]]));
    }

    #[test]
    fn construction_c_star_examples() {
        let ex1 = layered(2, 2, &["0000", "1001", "1010", "0011"]);
        let k = construction_c_star(&ex1, &lim()).unwrap();
        assert_eq!(k.cosets().unwrap(), pts(&[[0, 0], [1, 2], [3, 0], [2, 2]]));
        assert!(!k.contains_point(&[4, 2]).unwrap());
        assert!(k.contains_point(&[-3, 6]).unwrap());

        let ex2 = layered(2, 2, &["0000", "0010", "1001", "1011"]);
        let k2 = construction_c_star(&ex2, &lim()).unwrap();
        assert_eq!(k2.cosets().unwrap(), pts(&[[0, 0], [2, 0], [1, 2], [3, 2]]));
        let assoc = associated_construction_c(&ex2, &lim()).unwrap();
        assert_eq!(assoc.points_per_period(), 8);
        for p in k2.cosets().unwrap() {
            assert!(assoc.contains_point(p).unwrap());
        }
        assert!(assoc.contains_point(&[1, 0]).unwrap() && !k2.contains_point(&[1, 0]).unwrap());
    }

    #[test]
    fn example_five_cosets_and_membership() {
        let ex5 = layered(
            2,
            3,
            &["000000", "101101", "001011", "100110", "000010", "001001", "100100", "101111"],
        );
        let k = construction_c_star(&ex5, &lim()).unwrap();
        assert_eq!(
            k.cosets().unwrap(),
            pts(&[[0, 0], [1, 2], [2, 4], [3, 6], [4, 0], [5, 2], [6, 4], [7, 6]])
        );
        assert!(k.contains_point(&[13, -6]).unwrap());
        assert!(k.contains_point(&[8, -16]).unwrap());
        assert!(matches!(k.contains_point(&[1]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn implicit_modes_agree_with_explicit() {
        let ex2 = layered(2, 2, &["0000", "0010", "1001", "1011"]);
        let tiny = Limits::new(1);
        let explicit = construction_c_star(&ex2, &lim()).unwrap();
        let implicit = construction_c_star(&ex2, &tiny).unwrap();
        assert!(!implicit.is_explicit());
        assert_eq!(implicit.cosets(), Err(Error::ImplicitMode));
        let assoc_e = associated_construction_c(&ex2, &lim()).unwrap();
        let assoc_i = associated_construction_c(&ex2, &tiny).unwrap();
        let c = code(3, &["110", "011"]);
        let fam = NestedFamily::new(vec![code(3, &["110"]), c.clone(), LinearCode::full(3).unwrap()]).unwrap();
        let d_e = construction_d(&fam, &lim()).unwrap();
        let d_i = construction_d(&fam, &tiny).unwrap();
        assert_eq!(d_i.points_per_period(), d_e.points_per_period());
        for a in -4..12 {
            for b in -4..12 {
                let p = [a, b];
                assert_eq!(explicit.contains_point(&p), implicit.contains_point(&p));
                assert_eq!(assoc_e.contains_point(&p), assoc_i.contains_point(&p));
                for c3 in 0..8 {
                    let q = [a, b, c3];
                    assert_eq!(d_e.contains_point(&q), d_i.contains_point(&q), "{q:?}");
                }
            }
        }
    }

    #[test]
    fn box_enumeration() {
        let ex2 = layered(2, 2, &["0000", "0010", "1001", "1011"]);
        let k = construction_c_star(&ex2, &lim()).unwrap();
        let pts4 = k.points_in_box(4, &lim()).unwrap();
        for p in [[0, 0], [1, 2], [2, 0], [3, 2], [4, 0], [-4, 0]] {
            assert!(pts4.contains(&p.to_vec()), "{p:?}");
        }
        assert!(!pts4.contains(&vec![1, 0]));
        assert_eq!(k.points_in_box(0, &lim()).unwrap(), vec![vec![0, 0]]);
        assert!(pts4.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn digits_round_trip() {
        let p = vec![13, -6, 0];
        let d = point_to_digits(&p, 3).unwrap();
        assert_eq!(digits_to_point(&d), reduce_point(&p, 3));
    }
}
