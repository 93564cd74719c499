//! Named binary codes: repetition, even-parity, and the extended Golay code.

use std::str::FromStr;

use crate::bitword::BitWord;
use crate::code::LinearCode;
use crate::error::{Error, Result};

/// Right half of the Golay generator `(I | B)`, row by row.
///
/// The matrix is symmetric, so `(I | B)` and the column form `(I over B)`
/// describe the same code; the parity-check matrix is `(B | I)`.
pub const GOLAY_B: [[u8; 12]; 12] = [
    [1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 1],
    [1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1],
    [0, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 1],
    [1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1],
    [1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1],
    [1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1],
    [0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 1],
    [0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 1],
    [0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 1],
    [1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1],
    [0, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0],
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeName {
    Repetition,
    EvenParity,
    Golay24,
}

impl FromStr for CodeName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "repetition" => Ok(CodeName::Repetition),
            "even_parity" => Ok(CodeName::EvenParity),
            "golay24" => Ok(CodeName::Golay24),
            other => Err(Error::UnknownCode(other.to_string())),
        }
    }
}

/// Looks up a named code of length `n`.
pub fn code_library(name: CodeName, n: usize) -> Result<LinearCode> {
    match name {
        CodeName::Repetition => repetition(n),
        CodeName::EvenParity => even_parity(n),
        CodeName::Golay24 if n == 24 => Ok(golay24()),
        CodeName::Golay24 => Err(Error::GolayLength(n)),
    }
}

/// `{0, 1^n}`.
pub fn repetition(n: usize) -> Result<LinearCode> {
    LinearCode::from_generators(n, &[BitWord::ones(n)?])
}

/// Words of even weight, spanned by `e_i + e_{i+1}`.
pub fn even_parity(n: usize) -> Result<LinearCode> {
    let gens = (0..n.saturating_sub(1))
        .map(|i| Ok(BitWord::unit(n, i)? ^ BitWord::unit(n, i + 1)?))
        .collect::<Result<Vec<_>>>()?;
    LinearCode::from_generators(n, &gens)
}

fn b_row(i: usize) -> impl Iterator<Item = bool> {
    GOLAY_B[i].iter().map(|&b| b == 1)
}

/// The twelve rows `(e_j | B_j)` of the Golay generator matrix.
pub fn golay_generator_rows() -> Vec<BitWord> {
    (0..12)
        .map(|j| {
            let bits = (0..12).map(|k| k == j).chain(b_row(j));
            BitWord::from_bits(bits).expect("24 bits")
        })
        .collect()
}

/// Rows of the parity-check matrix `H = (B | I)`.
pub fn golay_parity_check_rows() -> Vec<BitWord> {
    (0..12)
        .map(|j| {
            let bits = b_row(j).chain((0..12).map(|k| k == j));
            BitWord::from_bits(bits).expect("24 bits")
        })
        .collect()
}

/// The extended binary Golay code `[24, 12, 8]`.
pub fn golay24() -> LinearCode {
    LinearCode::from_generators(24, &golay_generator_rows()).expect("valid Golay generator")
}

/// `H * w^T` over GF(2), as a 12-bit syndrome.
pub fn golay_syndrome(w: &BitWord) -> Result<BitWord> {
    let rows = golay_parity_check_rows();
    let bits = rows.iter().map(|h| h.dot(w)).collect::<Result<Vec<_>>>()?;
    BitWord::from_bits(bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limits::Limits;

    #[test]
    fn b_is_symmetric() {
        for (i, row) in GOLAY_B.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(v, GOLAY_B[j][i], "B[{i}][{j}]");
            }
        }
        assert_eq!(GOLAY_B[11], [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0]);
    }

    #[test]
    fn golay_rank_and_min_weight() {
        let g = golay24();
        assert_eq!(g.rank(), 12);
        assert_eq!(g.minimum_weight(&Limits::default()).unwrap(), Some(8));
    }

    #[test]
    fn all_ones_has_zero_syndrome() {
        let ones = BitWord::ones(24).unwrap();
        assert!(golay_syndrome(&ones).unwrap().is_zero());
        assert!(golay24().contains(&ones).unwrap());
    }

    #[test]
    fn generators_satisfy_parity_checks_and_are_self_orthogonal() {
        let rows = golay_generator_rows();
        for g in &rows {
            assert!(golay_syndrome(g).unwrap().is_zero());
            for h in &rows {
                assert!(!g.dot(h).unwrap());
            }
        }
    }

    #[test]
    fn even_parity_rank_and_weights() {
        let p = even_parity(24).unwrap();
        assert_eq!(p.rank(), 23);
        assert!(p.generators().iter().all(|g| !g.parity()));
        let small = even_parity(3).unwrap();
        assert!(small.iter_codewords().all(|c| c.weight() % 2 == 0));
        assert_eq!(even_parity(1).unwrap().rank(), 0);
    }

    #[test]
    fn library_lookup() {
        assert_eq!(code_library("repetition".parse().unwrap(), 5).unwrap().rank(), 1);
        assert_eq!(code_library(CodeName::Golay24, 23), Err(Error::GolayLength(23)));
        assert!(matches!("hamming".parse::<CodeName>(), Err(Error::UnknownCode(_))));
    }
}
