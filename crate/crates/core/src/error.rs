use thiserror::Error;

/// Errors raised by the code, construction, and checking routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("word length {0} exceeds the supported maximum of {max}", max = crate::bitword::MAX_BITS)]
    WordTooLong(usize),

    #[error("word of length {len} cannot be split into {levels} blocks of length {block}")]
    BlockSplit { len: usize, block: usize, levels: usize },

    #[error("level {level} out of range 1..={levels}")]
    LevelOutOfRange { level: usize, levels: usize },

    #[error("{levels} levels is unsupported (coordinates must fit 2^L in i64; allowed 1..=62)")]
    LevelCount { levels: usize },

    #[error("listed words do not form a linear code: {word} (= {left} xor {right}) is missing")]
    NotLinear { word: String, left: String, right: String },

    #[error("listed words do not form a linear code: the zero word is missing")]
    MissingZero,

    #[error("unknown code name `{0}`")]
    UnknownCode(String),

    #[error("golay24 has length 24, requested {0}")]
    GolayLength(usize),

    #[error("enumeration of {needed} items exceeds the cap of {cap}")]
    EnumerationCap { needed: String, cap: u64 },

    #[error("operation requires an explicit coset set; this constellation is implicit")]
    ImplicitMode,

    #[error("codes are not nested: C_{level} is not contained in C_{next}", next = level + 1)]
    NotNested { level: usize },

    #[error("not applicable: {0}")]
    Inapplicable(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
