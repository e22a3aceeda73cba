//! Loading and generating input sequences.

use std::fs;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::sequence::Sequence;

/// Recorded in benchmark output so inputs can be regenerated elsewhere.
pub const GENERATOR_NAME: &str = "ChaCha8Rng (rand_chacha 0.3) seeded via seed_from_u64; \
     symbol = alphabet[gen_range(0u32..len)]";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    /// Raw bytes; ASCII whitespace is dropped.
    Plain,
    /// `>`-headed records; only the first record is read.
    Fasta,
}

impl InputFormat {
    /// `.fa` / `.fasta` (any case) mean FASTA, anything else is plain.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("fa") || e.eq_ignore_ascii_case("fasta") => {
                InputFormat::Fasta
            }
            _ => InputFormat::Plain,
        }
    }
}

/// Read a sequence file. Letters are uppercased; an empty file yields the
/// empty sequence.
pub fn load_sequence(path: &Path, format: InputFormat, validate_dna: bool) -> Result<Sequence> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    let seq = match format {
        InputFormat::Plain => parse_plain(&bytes),
        InputFormat::Fasta => parse_fasta(&bytes)?,
    };
    if validate_dna {
        seq.validate_dna()?;
    }
    Ok(seq)
}

pub fn parse_plain(bytes: &[u8]) -> Sequence {
    bytes
        .iter()
        .filter(|b| !b.is_ascii_whitespace())
        .map(u8::to_ascii_uppercase)
        .collect::<Vec<_>>()
        .into()
}

/// Concatenated, uppercased sequence lines of the first FASTA record.
pub fn parse_fasta(bytes: &[u8]) -> Result<Sequence> {
    let mut seq = Vec::new();
    let mut in_first = false;
    for (lineno, line) in bytes.split(|&b| b == b'\n').enumerate() {
        if line.first() == Some(&b'>') {
            if in_first {
                break;
            }
            in_first = true;
            continue;
        }
        let data = line.iter().filter(|b| !b.is_ascii_whitespace());
        if !in_first {
            if data.clone().next().is_some() {
                return Err(Error::MalformedFasta(format!(
                    "sequence data on line {} before any '>' header",
                    lineno + 1
                )));
            }
            continue;
        }
        if line.contains(&b'>') {
            return Err(Error::MalformedFasta(format!(
                "'>' inside sequence data on line {}",
                lineno + 1
            )));
        }
        seq.extend(data.map(u8::to_ascii_uppercase));
    }
    Ok(seq.into())
}

/// `len` symbols drawn uniformly from `alphabet`, reproducible from `seed`.
pub fn generate_random(len: usize, alphabet: &[u8], seed: u64) -> Result<Sequence> {
    if alphabet.is_empty() {
        return Err(Error::EmptyAlphabet);
    }
    let k = u32::try_from(alphabet.len())
        .map_err(|_| Error::Config("alphabet too large".into()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..len)
        .map(|_| alphabet[rng.gen_range(0..k) as usize])
        .collect::<Vec<_>>()
        .into())
}
