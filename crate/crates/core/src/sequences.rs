//! Skolem, Langford and extended Skolem sequences.
//!
//! A Langford sequence of order `m` and defect `d` is a list of `2m` symbols
//! in which every `k` in `[d, d+m-1]` occurs exactly twice, the two copies
//! being exactly `k` positions apart. Defect 1 gives the Skolem sequences.
//! An extended Skolem sequence has `2m+1` slots and one extra `0`; it is
//! *hooked* when the zero sits in the second to last slot and *trivial* when
//! it sits at either end.
//!
//! Positions are 1-based throughout, both in the API and in error payloads.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

/// Why a list of symbols is not a valid sequence.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "error", content = "detail")]
pub enum SequenceError {
    #[error("empty sequence")]
    Empty,
    #[error("length {len} has the wrong parity")]
    WrongLength { len: usize },
    #[error("symbol {symbol} at position {position} is outside [{low}, {high}]")]
    BadSymbol {
        symbol: u32,
        position: usize,
        low: u32,
        high: u32,
    },
    #[error("symbol {symbol} occurs {count} times instead of twice")]
    BadMultiplicity { symbol: u32, count: usize },
    #[error(
        "symbol {symbol} occurs at positions {first} and {second}, which are not {symbol} apart"
    )]
    BadGap {
        symbol: u32,
        first: usize,
        second: usize,
    },
    #[error("found {count} zeros, expected exactly one")]
    ZeroCount { count: usize },
    #[error("defect must be positive")]
    BadDefect,
    #[error("cannot parse {token:?} as a symbol")]
    Parse { token: String },
}

/// A validated Langford sequence (a Skolem sequence when the defect is 1).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LangfordSeq {
    values: Vec<u32>,
    defect: u32,
}

impl LangfordSeq {
    /// Number of distinct symbols.
    pub fn order(&self) -> usize {
        self.values.len() / 2
    }

    pub fn defect(&self) -> u32 {
        self.defect
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn into_values(self) -> Vec<u32> {
        self.values
    }

    pub fn is_skolem(&self) -> bool {
        self.defect == 1
    }

    /// The two 1-based positions holding `symbol`, if it belongs to the sequence.
    pub fn positions(&self, symbol: u32) -> Option<(usize, usize)> {
        pair_positions(&self.values, symbol)
    }

    /// The sequence read backwards, which is again a Langford sequence.
    pub fn reversed(&self) -> LangfordSeq {
        let mut values = self.values.clone();
        values.reverse();
        LangfordSeq {
            values,
            defect: self.defect,
        }
    }

    pub(crate) fn from_trusted(values: Vec<u32>, defect: u32) -> Self {
        debug_assert!(validate_langford(&values, defect).is_ok());
        LangfordSeq { values, defect }
    }
}

impl fmt::Display for LangfordSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_symbols(f, &self.values)
    }
}

/// A validated extended Skolem sequence; hooked sequences are the special
/// case `zero_pos == 2m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtendedSkolemSeq {
    values: Vec<u32>,
    zero_pos: usize,
}

impl ExtendedSkolemSeq {
    pub fn order(&self) -> usize {
        (self.values.len() - 1) / 2
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn into_values(self) -> Vec<u32> {
        self.values
    }

    /// 1-based position of the zero.
    pub fn zero_pos(&self) -> usize {
        self.zero_pos
    }

    pub fn is_hooked(&self) -> bool {
        self.zero_pos == 2 * self.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.zero_pos == 1 || self.zero_pos == self.values.len()
    }

    pub fn positions(&self, symbol: u32) -> Option<(usize, usize)> {
        if symbol == 0 {
            return None;
        }
        pair_positions(&self.values, symbol)
    }

    pub(crate) fn from_trusted(values: Vec<u32>) -> Self {
        debug_assert!(validate_extended(&values).is_ok());
        let zero_pos = values.iter().position(|&v| v == 0).map_or(0, |p| p + 1);
        ExtendedSkolemSeq { values, zero_pos }
    }
}

impl fmt::Display for ExtendedSkolemSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_symbols(f, &self.values)
    }
}

/// Either kind of sequence, as produced by the matching decoder.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Sequence {
    Langford(LangfordSeq),
    Extended(ExtendedSkolemSeq),
}

impl Sequence {
    pub fn values(&self) -> &[u32] {
        match self {
            Sequence::Langford(s) => s.values(),
            Sequence::Extended(s) => s.values(),
        }
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_symbols(f, self.values())
    }
}

fn write_symbols(f: &mut fmt::Formatter<'_>, values: &[u32]) -> fmt::Result {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

fn pair_positions(values: &[u32], symbol: u32) -> Option<(usize, usize)> {
    let mut it = values
        .iter()
        .enumerate()
        .filter(|(_, &v)| v == symbol)
        .map(|(i, _)| i + 1);
    match (it.next(), it.next()) {
        (Some(a), Some(b)) => Some((a, b)),
        _ => None,
    }
}

/// Checks that every symbol of `[low, high]` sits in exactly two slots that
/// are `symbol` apart. Range and zero handling is done by the callers.
fn check_pairs(values: &[u32], low: u32, high: u32) -> Result<(), SequenceError> {
    let span = (high - low + 1) as usize;
    let mut first = vec![0usize; span];
    let mut second = vec![0usize; span];
    let mut count = vec![0usize; span];
    for (i, &v) in values.iter().enumerate() {
        if v == 0 {
            continue;
        }
        let slot = (v - low) as usize;
        match count[slot] {
            0 => first[slot] = i + 1,
            1 => second[slot] = i + 1,
            _ => {}
        }
        count[slot] += 1;
    }
    if let Some(slot) = count.iter().position(|&c| c != 2) {
        return Err(SequenceError::BadMultiplicity {
            symbol: low + slot as u32,
            count: count[slot],
        });
    }
    for slot in 0..span {
        let symbol = low + slot as u32;
        if second[slot] - first[slot] != symbol as usize {
            return Err(SequenceError::BadGap {
                symbol,
                first: first[slot],
                second: second[slot],
            });
        }
    }
    Ok(())
}

/// Validates a Langford sequence of defect `d`; the order is taken from the
/// length.
pub fn validate_langford(values: &[u32], d: u32) -> Result<LangfordSeq, SequenceError> {
    if values.is_empty() {
        return Err(SequenceError::Empty);
    }
    if !values.len().is_multiple_of(2) {
        return Err(SequenceError::WrongLength { len: values.len() });
    }
    if d == 0 {
        return Err(SequenceError::BadDefect);
    }
    let m = (values.len() / 2) as u32;
    let (low, high) = (d, d + m - 1);
    if let Some((i, &v)) = values
        .iter()
        .enumerate()
        .find(|(_, &v)| v < low || v > high)
    {
        return Err(SequenceError::BadSymbol {
            symbol: v,
            position: i + 1,
            low,
            high,
        });
    }
    check_pairs(values, low, high)?;
    Ok(LangfordSeq {
        values: values.to_vec(),
        defect: d,
    })
}

/// Validates an extended (possibly hooked or trivial) Skolem sequence.
pub fn validate_extended(values: &[u32]) -> Result<ExtendedSkolemSeq, SequenceError> {
    if values.is_empty() {
        return Err(SequenceError::Empty);
    }
    if values.len() % 2 != 1 || values.len() < 3 {
        return Err(SequenceError::WrongLength { len: values.len() });
    }
    let m = ((values.len() - 1) / 2) as u32;
    if let Some((i, &v)) = values.iter().enumerate().find(|(_, &v)| v > m) {
        return Err(SequenceError::BadSymbol {
            symbol: v,
            position: i + 1,
            low: 0,
            high: m,
        });
    }
    let zeros: Vec<usize> = values
        .iter()
        .enumerate()
        .filter(|(_, &v)| v == 0)
        .map(|(i, _)| i + 1)
        .collect();
    if zeros.len() != 1 {
        return Err(SequenceError::ZeroCount { count: zeros.len() });
    }
    check_pairs(values, 1, m)?;
    Ok(ExtendedSkolemSeq {
        values: values.to_vec(),
        zero_pos: zeros[0],
    })
}

/// Parses one line of the comma-separated text format. A single trailing
/// newline (LF or CRLF) is accepted; blanks and signs are not.
pub fn parse_symbols(line: &str) -> Result<Vec<u32>, SequenceError> {
    let line = line
        .strip_suffix('\n')
        .map(|l| l.strip_suffix('\r').unwrap_or(l))
        .unwrap_or(line);
    if line.is_empty() {
        return Err(SequenceError::Empty);
    }
    line.split(',')
        .map(|tok| {
            if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                return Err(SequenceError::Parse {
                    token: tok.to_string(),
                });
            }
            tok.parse::<u32>().map_err(|_| SequenceError::Parse {
                token: tok.to_string(),
            })
        })
        .collect()
}

impl FromStr for ExtendedSkolemSeq {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        validate_extended(&parse_symbols(s)?)
    }
}

/// Langford sequences of order `m` and defect `d` exist iff `m >= 2d-1` and
/// `m` is 0 or 1 mod 4 for odd `d`, 0 or 3 mod 4 for even `d`.
pub fn langford_exists(m: u64, d: u64) -> bool {
    if m == 0 || d == 0 || m + 1 < 2 * d {
        return false;
    }
    let r = m % 4;
    if d % 2 == 1 {
        r == 0 || r == 1
    } else {
        r == 0 || r == 3
    }
}

pub fn skolem_exists(m: u64) -> bool {
    langford_exists(m, 1)
}
