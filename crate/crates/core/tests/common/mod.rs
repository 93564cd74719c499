//! Independent oracles shared by the integration tests. Nothing here calls the
//! library's enumeration, reduction, or checking code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use latcc::{BitWord, LayeredCode, LinearCode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Pt = Vec<i64>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_word<R: Rng>(rng: &mut R, len: usize) -> BitWord {
    BitWord::from_bits((0..len).map(|_| rng.gen_bool(0.5))).unwrap()
}

pub fn random_layered<R: Rng>(rng: &mut R, n: usize, levels: usize, gens: usize) -> LayeredCode {
    let rows: Vec<BitWord> = (0..gens).map(|_| random_word(rng, n * levels)).collect();
    LayeredCode::from_generators(n, levels, &rows).unwrap()
}

/// Every XOR-combination of `gens`, by plain subset iteration.
pub fn span(len: usize, gens: &[BitWord]) -> BTreeSet<BitWord> {
    assert!(gens.len() < 24);
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << gens.len()) {
        let mut w = BitWord::zeros(len).unwrap();
        for (j, g) in gens.iter().enumerate() {
            if mask >> j & 1 == 1 {
                w = w ^ *g;
            }
        }
        out.insert(w);
    }
    out
}

pub fn codewords(lc: &LayeredCode) -> BTreeSet<BitWord> {
    span(lc.block_length() * lc.levels(), lc.code().generators())
}

/// Natural labeling: coordinate `j` is `sum_i 2^(i-1) c_i[j]`.
pub fn label(word: &BitWord, n: usize, levels: usize) -> Pt {
    (0..n)
        .map(|j| (0..levels).map(|i| if word.get(i * n + j) { 1i64 << i } else { 0 }).sum())
        .collect()
}

pub fn cosets_of_words(words: &BTreeSet<BitWord>, n: usize, levels: usize) -> BTreeSet<Pt> {
    words.iter().map(|w| label(w, n, levels)).collect()
}

/// Cosets of Construction C*: labels of all codewords.
pub fn star_cosets(lc: &LayeredCode) -> BTreeSet<Pt> {
    cosets_of_words(&codewords(lc), lc.block_length(), lc.levels())
}

/// Cosets of Construction C over per-level codes: all sums `c_1 + 2 c_2 + ...`.
pub fn c_cosets(levels: &[BTreeSet<BitWord>], n: usize) -> BTreeSet<Pt> {
    let mut acc: BTreeSet<Pt> = BTreeSet::from([vec![0; n]]);
    for (i, code) in levels.iter().enumerate() {
        let mut next = BTreeSet::new();
        for p in &acc {
            for c in code {
                next.insert(p.iter().enumerate().map(|(j, v)| v + if c.get(j) { 1 << i } else { 0 }).collect());
            }
        }
        acc = next;
    }
    acc
}

pub fn block(w: &BitWord, n: usize, i: usize) -> BitWord {
    BitWord::from_bits((0..n).map(|j| w.get(i * n + j))).unwrap()
}

/// Projection code at 1-based `level`, by scanning codewords.
pub fn projection_scan(lc: &LayeredCode, level: usize) -> BTreeSet<BitWord> {
    codewords(lc).iter().map(|w| block(w, lc.block_length(), level - 1)).collect()
}

/// Antiprojection `S_level(0, ..., 0)`, by scanning codewords.
pub fn antiprojection_scan(lc: &LayeredCode, level: usize) -> BTreeSet<BitWord> {
    let n = lc.block_length();
    codewords(lc)
        .iter()
        .filter(|w| (0..lc.levels()).all(|i| i + 1 == level || block(w, n, i).is_zero()))
        .map(|w| block(w, n, level - 1))
        .collect()
}

pub fn set_of(code: &LinearCode) -> BTreeSet<BitWord> {
    span(code.length(), code.generators())
}

/// Closure of a coset set under addition modulo `m`.
pub fn closed(set: &BTreeSet<Pt>, m: i64) -> bool {
    set.iter().all(|p| {
        set.iter().all(|q| {
            let s: Pt = p.iter().zip(q).map(|(a, b)| (a + b).rem_euclid(m)).collect();
            set.contains(&s)
        })
    })
}

/// Minimum over `z` in `{-1, 0, 1}^n` of `|p + m z|^2`.
pub fn min_norm_offsets(p: &[i64], m: i64) -> i64 {
    let n = p.len();
    let mut best = i64::MAX;
    for code in 0..3usize.pow(n as u32) {
        let mut c = code;
        let mut total = 0;
        for &v in p {
            let z = (c % 3) as i64 - 1;
            c /= 3;
            let x = v + m * z;
            total += x * x;
        }
        best = best.min(total);
    }
    best
}

/// Minimum distance of a periodic set by single-point norms of differences.
pub fn min_distance_oracle(set: &BTreeSet<Pt>, levels: usize) -> i64 {
    let m = 1i64 << levels;
    let mut best = m * m;
    for p in set {
        for q in set {
            if p != q {
                let diff: Pt = p.iter().zip(q).map(|(a, b)| (a - b).rem_euclid(m)).collect();
                best = best.min(min_norm_offsets(&diff, m));
            }
        }
    }
    best
}

/// All subspaces of `F_2^len` (`len <= 5`), each as a generator list in reduced form.
pub fn all_subspaces(len: usize, max_rank: usize) -> Vec<LinearCode> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let vectors: Vec<BitWord> = (1u128..(1 << len)).map(|b| BitWord::from_raw(len, b).unwrap()).collect();
    let mut stack: Vec<Vec<usize>> = vec![vec![]];
    while let Some(chosen) = stack.pop() {
        let rows: Vec<BitWord> = chosen.iter().map(|&i| vectors[i]).collect();
        let code = LinearCode::from_generators(len, &rows).unwrap();
        if code.rank() < chosen.len() {
            continue;
        }
        let key: Vec<BitWord> = code.generators().to_vec();
        if seen.insert(key) {
            out.push(code);
        }
        if chosen.len() < max_rank {
            let start = chosen.last().map_or(0, |&l| l + 1);
            for i in start..vectors.len() {
                let mut next = chosen.clone();
                next.push(i);
                stack.push(next);
            }
        }
    }
    out
}

/// Random layered code biased toward satisfying the nesting precondition:
/// a few cross-level rows plus rows supported on a single block.
pub fn biased_code<R: Rng>(r: &mut R, n: usize, levels: usize) -> LayeredCode {
    let mut rows = Vec::new();
    let zero = BitWord::zeros(n).unwrap();
    for _ in 0..r.gen_range(0..=2) {
        rows.push(random_word(r, n * levels));
    }
    for i in 0..levels {
        for _ in 0..r.gen_range(0..=2) {
            let mut blocks = vec![zero; levels];
            blocks[i] = random_word(r, n);
            rows.push(BitWord::concat(&blocks).unwrap());
        }
    }
    LayeredCode::from_generators(n, levels, &rows).unwrap()
}

/// Product of a random nested family, sometimes with one extra cross-level row.
pub fn nested_product<R: Rng>(r: &mut R, n: usize, levels: usize) -> LayeredCode {
    let mut rows: Vec<BitWord> = (0..2).map(|_| random_word(r, n)).collect();
    let mut codes = vec![LinearCode::from_generators(n, &rows).unwrap()];
    for _ in 1..levels {
        if r.gen_bool(0.3) {
            rows.push(random_word(r, n));
        }
        codes.push(LinearCode::from_generators(n, &rows).unwrap());
    }
    let product = LayeredCode::product(&codes).unwrap();
    let mut rows = product.code().generators().to_vec();
    if r.gen_bool(0.5) {
        rows.push(random_word(r, n * levels));
    }
    LayeredCode::from_generators(n, levels, &rows).unwrap()
}

/// Nested family whose higher levels absorb all Schur products of the level below.
pub fn schur_closed_family<R: Rng>(r: &mut R, n: usize, levels: usize) -> Vec<LinearCode> {
    let mut rows: Vec<BitWord> = (0..r.gen_range(0..=2)).map(|_| random_word(r, n)).collect();
    let mut codes = vec![LinearCode::from_generators(n, &rows).unwrap()];
    for _ in 1..levels {
        let gens = codes.last().unwrap().generators().to_vec();
        for (i, g) in gens.iter().enumerate() {
            for h in &gens[i + 1..] {
                rows.push(*g & *h);
            }
        }
        for _ in 0..r.gen_range(0..=1) {
            rows.push(random_word(r, n));
        }
        codes.push(LinearCode::from_generators(n, &rows).unwrap());
    }
    codes
}

pub fn nested_family<R: Rng>(r: &mut R, n: usize, levels: usize) -> Vec<LinearCode> {
    let mut rows = Vec::new();
    (0..levels)
        .map(|_| {
            for _ in 0..r.gen_range(0..=2) {
                rows.push(random_word(r, n));
            }
            LinearCode::from_generators(n, &rows).unwrap()
        })
        .collect()
}

