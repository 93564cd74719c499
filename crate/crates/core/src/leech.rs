//! The Leech lattice as a 3-level Construction C* over repetition, Golay and
//! parity codes, scaled so that its minimum squared norm is 32.
//!
//! A codeword is `(c_1, c_2, c_3)` with `c_1` in `{0, 1^24}`, `c_2` in the
//! Golay code and `c_3` of parity equal to the bit of `c_1`.

use serde::Serialize;

use crate::bitword::BitWord;
use crate::code::{LayeredCode, LinearCode};
use crate::error::{Error, Result};
use crate::geometry::{leech_min_norm, structured_density, DensityReport, MinNorm};
use crate::latticeness::{theorem2_check, LatticeVerdict};
use crate::library::{even_parity, golay24, golay_generator_rows, golay_syndrome, repetition};
use crate::limits::Limits;

pub const N: usize = 24;

/// Published density of the 3-level constellation (rounded).
pub const PUBLISHED_DENSITY: f64 = 0.001929;
/// Absolute tolerance for comparing against [`PUBLISHED_DENSITY`].
pub const PUBLISHED_DENSITY_TOL: f64 = 1e-5;
/// Published density of the associated Construction C; not reproduced by the
/// standard density formula (see [`AssociatedDensity`]).
pub const PUBLISHED_ASSOCIATED_DENSITY: f64 = 0.00012;

/// Builds the 72-bit layered code using `e_1` as the odd-parity coset leader.
pub fn build_leech_layered_code() -> LayeredCode {
    let leader = BitWord::unit(N, 0).expect("24 bits");
    leech_layered_code_with_leader(&leader).expect("e_1 has odd weight")
}

/// Same code with any odd-weight `leader` coupling `c_1 = 1^24` to odd parity at level 3.
pub fn leech_layered_code_with_leader(leader: &BitWord) -> Result<LayeredCode> {
    if leader.len() != N {
        return Err(Error::DimensionMismatch { expected: N, found: leader.len() });
    }
    if !leader.parity() {
        return Err(Error::Inapplicable(format!("coset leader {leader} has even weight")));
    }
    let zero = BitWord::zeros(N)?;
    let mut gens = vec![BitWord::concat(&[BitWord::ones(N)?, zero, *leader])?];
    for g in golay_generator_rows() {
        gens.push(BitWord::concat(&[zero, g, zero])?);
    }
    for p in even_parity(N)?.generators() {
        gens.push(BitWord::concat(&[zero, zero, *p])?);
    }
    LayeredCode::from_generators(N, 3, &gens)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub passed: bool,
}

impl CheckEntry {
    fn new(name: impl Into<String>, passed: bool) -> Self {
        CheckEntry { name: name.into(), passed }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SchurCheck {
    /// Target level `i`: products of `C_(i-1)` generators must land in `S_i(0, ..., 0)`.
    pub level: usize,
    pub passed: bool,
    pub pairs_checked: usize,
    pub counterexample: Option<[BitWord; 3]>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AssociatedDensity {
    pub density: DensityReport,
    pub published: f64,
    pub discrepancy: bool,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LeechReport {
    pub chain_checks: Vec<CheckEntry>,
    pub schur_checks: Vec<SchurCheck>,
    pub theorem2: LatticeVerdict,
    pub min_norm_sq: i64,
    pub min_norm_witness: MinNorm,
    pub density: DensityReport,
    pub published_density: f64,
    pub density_matches_published: bool,
    pub associated: AssociatedDensity,
    pub verdict: bool,
}

fn schur_pairs(level: usize, source: &LinearCode, target: &LinearCode) -> Result<SchurCheck> {
    let gens = source.generators();
    let mut pairs = 0;
    for (i, g) in gens.iter().enumerate() {
        for h in &gens[i..] {
            pairs += 1;
            let prod = g.schur(h)?;
            if !target.contains(&prod)? {
                return Ok(SchurCheck { level, passed: false, pairs_checked: pairs, counterexample: Some([*g, *h, prod]) });
            }
        }
    }
    Ok(SchurCheck { level, passed: true, pairs_checked: pairs, counterexample: None })
}

/// Runs the full verification pipeline on [`build_leech_layered_code`].
pub fn leech_verify() -> Result<LeechReport> {
    let lc = build_leech_layered_code();
    let golay = golay24();
    let c = lc.projections()?;
    let s = lc.antiprojections()?;
    let ones = BitWord::ones(N)?;

    let mut chain = vec![
        CheckEntry::new("rank(C) = 36", lc.rank() == 36),
        CheckEntry::new("C1 = {0, 1^24}", c[0] == repetition(N)?),
        CheckEntry::new("C2 = Golay code", c[1] == golay),
        CheckEntry::new("C3 = F2^24", c[2] == LinearCode::full(N)?),
        CheckEntry::new("H * 1^T = 0 (all-ones word is a Golay codeword)", golay_syndrome(&ones)?.is_zero()),
    ];
    let mut parity_ok = true;
    for g in golay.generators() {
        parity_ok &= golay_syndrome(g)?.is_zero();
    }
    chain.push(CheckEntry::new("H * g^T = 0 for every Golay generator", parity_ok));
    chain.push(CheckEntry::new(
        "every Golay generator has even weight",
        golay_generator_rows().iter().all(|g| !g.parity()),
    ));
    chain.push(CheckEntry::new("S2(0,...,0) = C2", s[1] == c[1]));
    chain.push(CheckEntry::new("S3(0,...,0) = even-weight code", s[2] == even_parity(N)?));
    chain.push(CheckEntry::new("C1 <= S2(0,...,0)", c[0].is_subcode_of(&s[1])?));
    chain.push(CheckEntry::new("S2(0,...,0) <= C2", s[1].is_subcode_of(&c[1])?));
    chain.push(CheckEntry::new("C2 <= S3(0,...,0)", c[1].is_subcode_of(&s[2])?));
    chain.push(CheckEntry::new("S3(0,...,0) <= C3", s[2].is_subcode_of(&c[2])?));

    let schur = vec![schur_pairs(2, &c[0], &s[1])?, schur_pairs(3, &golay, &s[2])?];
    let theorem2 = theorem2_check(&lc)?;

    let min_norm = leech_min_norm();
    let density = DensityReport::new(N, 3, 1u128 << lc.rank(), min_norm.d2);
    let density_matches_published = (density.packing_density - PUBLISHED_DENSITY).abs() <= PUBLISHED_DENSITY_TOL;

    let product = LayeredCode::product(&c)?;
    let assoc = structured_density(&product, &Limits::default())?;
    let discrepancy = (assoc.packing_density - PUBLISHED_ASSOCIATED_DENSITY).abs() > 0.1 * PUBLISHED_ASSOCIATED_DENSITY;
    let note = format!(
        "associated Construction C: d^2 = {}, M = 2^{}, density {:.4e} by V_n (d/2)^n M / 2^(nL); \
         this differs from the published figure {} and the published figure is not reproduced",
        assoc.min_distance_sq,
        product.rank(),
        assoc.packing_density,
        PUBLISHED_ASSOCIATED_DENSITY
    );
    let associated = AssociatedDensity { density: assoc, published: PUBLISHED_ASSOCIATED_DENSITY, discrepancy, note };

    let verdict = chain.iter().all(|c| c.passed) && schur.iter().all(|s| s.passed) && theorem2.is_lattice == Some(true);
    Ok(LeechReport {
        chain_checks: chain,
        schur_checks: schur,
        theorem2,
        min_norm_sq: min_norm.d2,
        min_norm_witness: min_norm,
        density,
        published_density: PUBLISHED_DENSITY,
        density_matches_published,
        associated,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_and_rank() {
        let lc = build_leech_layered_code();
        assert_eq!((lc.block_length(), lc.levels(), lc.rank()), (24, 3, 36));
    }

    #[test]
    fn projections_and_antiprojections() {
        let lc = build_leech_layered_code();
        assert_eq!(lc.projection(1).unwrap(), repetition(24).unwrap());
        assert_eq!(lc.projection(2).unwrap(), golay24());
        assert_eq!(lc.projection(3).unwrap(), LinearCode::full(24).unwrap());
        assert_eq!(lc.antiprojection_zero(2).unwrap(), golay24());
        let s3 = lc.antiprojection_zero(3).unwrap();
        assert_eq!(s3, even_parity(24).unwrap());
        assert_eq!(s3.rank(), 23);
    }

    #[test]
    fn leader_choice_does_not_matter() {
        let a = build_leech_layered_code();
        let leader: BitWord = "111000000000000000000000".parse().unwrap();
        let b = leech_layered_code_with_leader(&leader).unwrap();
        assert_eq!(a, b);
        let even: BitWord = "110000000000000000000000".parse().unwrap();
        assert!(leech_layered_code_with_leader(&even).is_err());
    }

    #[test]
    fn not_a_product_code() {
        let lc = build_leech_layered_code();
        assert!(!lc.is_product().unwrap());
        let e1 = BitWord::unit(24, 0).unwrap();
        let z = BitWord::zeros(24).unwrap();
        let w = lc.join(&[z, z, e1]).unwrap();
        assert!(!lc.contains(&w).unwrap());
        let product = LayeredCode::product(&lc.projections().unwrap()).unwrap();
        assert!(product.contains(&w).unwrap());
    }

    #[test]
    fn full_pipeline() {
        let r = leech_verify().unwrap();
        assert!(r.chain_checks.iter().all(|c| c.passed), "{:?}", r.chain_checks);
        assert_eq!(r.schur_checks[1].pairs_checked, 78);
        assert!(r.schur_checks.iter().all(|s| s.passed));
        assert_eq!(r.theorem2.is_lattice, Some(true));
        assert_eq!(r.min_norm_sq, 32);
        assert!(r.density_matches_published);
        assert!(r.associated.discrepancy);
        assert_eq!(r.associated.density.min_distance_sq, 16);
        assert!(r.verdict);
    }
}
