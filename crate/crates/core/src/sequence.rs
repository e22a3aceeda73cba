use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// Symbols of the nucleotide alphabet.
pub const DNA: &[u8] = b"ACGT";

/// An ordered string of single-byte symbols.
///
/// Positions are 0-based when a sequence is indexed directly. The DP tables
/// use 1-based positions, so table row `i` corresponds to `seq[i - 1]`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Sequence(Vec<u8>);

impl Sequence {
    pub fn new(symbols: impl Into<Vec<u8>>) -> Self {
        Sequence(symbols.into())
    }

    pub fn empty() -> Self {
        Sequence(Vec::new())
    }

    /// Build a sequence, rejecting any symbol outside `{A, C, G, T}`.
    pub fn dna(symbols: impl Into<Vec<u8>>) -> Result<Self> {
        let seq = Sequence(symbols.into());
        seq.validate_dna()?;
        Ok(seq)
    }

    /// Report the first symbol outside `{A, C, G, T}`.
    pub fn validate_dna(&self) -> Result<()> {
        match self.0.iter().position(|b| !DNA.contains(b)) {
            Some(offset) => Err(Error::Alphabet {
                byte: self.0[offset] as char,
                offset,
            }),
            None => Ok(()),
        }
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.0
    }

    /// Append one symbol, returning the extended sequence.
    pub fn with_appended(&self, symbol: u8) -> Self {
        let mut v = self.0.clone();
        v.push(symbol);
        Sequence(v)
    }
}

impl Deref for Sequence {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl From<&str> for Sequence {
    fn from(s: &str) -> Self {
        Sequence(s.as_bytes().to_vec())
    }
}

impl From<&[u8]> for Sequence {
    fn from(s: &[u8]) -> Self {
        Sequence(s.to_vec())
    }
}

impl From<Vec<u8>> for Sequence {
    fn from(v: Vec<u8>) -> Self {
        Sequence(v)
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&String::from_utf8_lossy(&self.0))
    }
}
