//! Built-in codes for reproducing the worked examples without input files.

use std::fmt;
use std::str::FromStr;

use crate::code::LayeredCode;
use crate::codefile::CodeFile;
use crate::error::{Error, Result};
use crate::leech::build_leech_layered_code;
use crate::library::golay24;

/// Two-level code whose C* constellation is not closed under addition.
pub const EX1: &str = "\
# n = L = 2; Gamma_C* is not a lattice, its associated Construction C is
n=2 L=2
mode=list
0000
1001
1010
0011
";

/// Two-level code with a lattice C* strictly inside a lattice Construction C.
pub const EX2: &str = "\
# n = L = 2; both Gamma_C* and the associated Construction C are lattices
n=2 L=2
mode=list
0000
0010
1001
1011
";

/// Three-level lattice that violates the nesting precondition.
pub const EX5: &str = "\
# n = 2, L = 3; lattice although C1 is not inside S2(0,0,0,0)
n=2 L=3
mode=list
000000
101101
001011
100110
000010
001001
100100
101111
";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    Ex1,
    Ex2,
    Ex5,
    Leech,
    Golay24,
}

impl Builtin {
    pub const ALL: [Builtin; 5] = [Builtin::Ex1, Builtin::Ex2, Builtin::Ex5, Builtin::Leech, Builtin::Golay24];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Ex1 => "ex1",
            Builtin::Ex2 => "ex2",
            Builtin::Ex5 => "ex5",
            Builtin::Leech => "leech",
            Builtin::Golay24 => "golay24",
        }
    }

    /// The code as layered code; `golay24` is a single level of length 24.
    pub fn layered(self) -> LayeredCode {
        match self {
            Builtin::Ex1 => parse(EX1),
            Builtin::Ex2 => parse(EX2),
            Builtin::Ex5 => parse(EX5),
            Builtin::Leech => build_leech_layered_code(),
            Builtin::Golay24 => LayeredCode::new(golay24(), 24, 1).expect("length 24"),
        }
    }

    /// Code-file text for the builtin.
    pub fn code_file(self) -> String {
        match self {
            Builtin::Ex1 => EX1.to_string(),
            Builtin::Ex2 => EX2.to_string(),
            Builtin::Ex5 => EX5.to_string(),
            other => CodeFile::from_layered(&other.layered()).render(),
        }
    }
}

fn parse(text: &str) -> LayeredCode {
    CodeFile::parse(text).and_then(|f| f.to_layered()).expect("builtin code file is valid")
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Builtin::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::UnknownCode(s.to_string()))
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
