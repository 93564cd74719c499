use std::env;

/// Environment variable overriding [`Limits::enum_cap`].
pub const ENUM_CAP_ENV: &str = "LATCC_ENUM_CAP";

pub const DEFAULT_ENUM_CAP: u64 = 1 << 24;

/// Budget for operations that materialize sets.
///
/// `enum_cap` bounds the number of codewords or coset points that may be
/// listed. Pairwise scans (brute-force closure, minimum distance) are allowed
/// `PAIR_FACTOR * enum_cap` pair visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub enum_cap: u64,
}

const PAIR_FACTOR: u64 = 64;

impl Default for Limits {
    fn default() -> Self {
        Limits { enum_cap: DEFAULT_ENUM_CAP }
    }
}

impl Limits {
    pub fn new(enum_cap: u64) -> Self {
        Limits { enum_cap }
    }

    /// Reads `LATCC_ENUM_CAP` (decimal, or `2^k`), falling back to the default.
    pub fn from_env() -> Self {
        env::var(ENUM_CAP_ENV)
            .ok()
            .and_then(|v| parse_cap(&v))
            .map(Limits::new)
            .unwrap_or_default()
    }

    /// Whether `2^log2` items fit under the cap.
    pub fn allows_pow2(&self, log2: usize) -> bool {
        log2 < 64 && (1u64 << log2) <= self.enum_cap
    }

    pub fn allows(&self, count: u128) -> bool {
        count <= u128::from(self.enum_cap)
    }

    pub fn pair_budget(&self) -> u128 {
        u128::from(self.enum_cap) * u128::from(PAIR_FACTOR)
    }
}

pub(crate) fn parse_cap(v: &str) -> Option<u64> {
    let v = v.trim();
    if let Some(exp) = v.strip_prefix("2^") {
        let e: u32 = exp.trim().parse().ok()?;
        return 1u64.checked_shl(e).filter(|_| e < 64);
    }
    v.parse().ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_parsing() {
        assert_eq!(parse_cap("4096"), Some(4096));
        assert_eq!(parse_cap("2^10"), Some(1024));
        assert_eq!(parse_cap("2^64"), None);
        assert_eq!(parse_cap("lots"), None);
    }

    #[test]
    fn pow2_gate() {
        let l = Limits::default();
        assert!(l.allows_pow2(24));
        assert!(!l.allows_pow2(25));
        assert!(!l.allows_pow2(80));
    }
}
