use std::path::PathBuf;

/// Everything that can go wrong in this crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("tables for a {rows}x{cols} fill need {required} bytes, over the {budget}-byte memory budget")]
    Capacity {
        rows: usize,
        cols: usize,
        required: u64,
        budget: u64,
    },

    #[error("traceback index ({i}, {j}) outside table of {rows}x{cols} cells")]
    IndexOutOfRange {
        i: usize,
        j: usize,
        rows: usize,
        cols: usize,
    },

    #[error("brute-force oracle limited to a shorter input of {limit} symbols, got {len}")]
    OracleGuard { len: usize, limit: usize },

    #[error("contract violation: {0}")]
    Contract(String),

    /// Command-line parse failure, already formatted for the terminal.
    #[error("{0}")]
    Usage(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("symbol {byte:?} at offset {offset} is not one of A, C, G, T")]
    Alphabet { byte: char, offset: usize },

    #[error("malformed FASTA input: {0}")]
    MalformedFasta(String),

    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(
        "serial and parallel fills disagree for M={m}, N={n}, workers={workers}, \
         block_size={block_size}: {detail}"
    )]
    Equivalence {
        m: usize,
        n: usize,
        workers: usize,
        block_size: usize,
        detail: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
