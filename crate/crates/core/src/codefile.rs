//! Text format for layered codes.
//!
//! ```text
//! # Construction C* example: n = 2, L = 2
//! n=2 L=2
//! mode=list
//! 0000
//! 1001
//! 1010
//! 0011
//! ```
//!
//! Lines starting with `#` and blank lines are ignored. In `list` mode the
//! words must form a linear code; in `gen` mode they are generators and may be
//! dependent.

use std::fmt::Write as _;
use std::path::Path;

use crate::bitword::BitWord;
use crate::code::{BlockShape, LayeredCode};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    List,
    Gen,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeFile {
    pub block: usize,
    pub levels: usize,
    pub mode: Mode,
    pub words: Vec<BitWord>,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_header(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut n = None;
    let mut l = None;
    for tok in line.split_whitespace() {
        let (key, value) = tok.split_once('=').ok_or_else(|| perr(line_no, format!("expected key=value, got {tok:?}")))?;
        let v: usize = value.parse().map_err(|_| perr(line_no, format!("invalid integer {value:?} for {key}")))?;
        match key {
            "n" => n = Some(v),
            "L" => l = Some(v),
            _ => return Err(perr(line_no, format!("unknown header key {key:?}"))),
        }
    }
    match (n, l) {
        (Some(n), Some(l)) => Ok((n, l)),
        _ => Err(perr(line_no, "header must give both n=<int> and L=<int>")),
    }
}

impl CodeFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hl, header) = lines.next().ok_or_else(|| perr(1, "missing header line `n=<int> L=<int>`"))?;
        let (block, levels) = parse_header(hl, header)?;
        BlockShape::new(block, levels).map_err(|e| perr(hl, e.to_string()))?;

        let (ml, mode_line) = lines.next().ok_or_else(|| perr(hl + 1, "missing mode line `mode=list|gen`"))?;
        let mode = match mode_line.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["mode=list"] => Mode::List,
            ["mode=gen"] => Mode::Gen,
            _ => return Err(perr(ml, format!("expected mode=list or mode=gen, got {mode_line:?}"))),
        };

        let mut words = Vec::new();
        for (no, line) in lines {
            let w: BitWord = line.parse().map_err(|e| match e {
                Error::Parse { msg, .. } => perr(no, msg),
                other => perr(no, other.to_string()),
            })?;
            if w.len() != block * levels {
                return Err(perr(no, format!("word has length {}, expected n*L = {}", w.len(), block * levels)));
            }
            words.push(w);
        }
        Ok(CodeFile { block, levels, mode, words })
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn to_layered(&self) -> Result<LayeredCode> {
        match self.mode {
            Mode::List => LayeredCode::from_codewords(self.block, self.levels, &self.words),
            Mode::Gen => LayeredCode::from_generators(self.block, self.levels, &self.words),
        }
    }

    /// Generator-mode file for an existing code.
    pub fn from_layered(lc: &LayeredCode) -> Self {
        CodeFile {
            block: lc.block_length(),
            levels: lc.levels(),
            mode: Mode::Gen,
            words: lc.code().generators().to_vec(),
        }
    }

    pub fn render(&self) -> String {
        let mut out = format!("n={} L={}\n", self.block, self.levels);
        out.push_str(match self.mode {
            Mode::List => "mode=list\n",
            Mode::Gen => "mode=gen\n",
        });
        for w in &self.words {
            let _ = writeln!(out, "{w}");
        }
        out
    }
}
