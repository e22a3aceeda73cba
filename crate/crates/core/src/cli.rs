//! `lcs` command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::{self, DEFAULT_REPETITIONS};
use crate::error::{Error, Result};
use crate::io::{generate_random, load_sequence, InputFormat};
use crate::lcs::LcsResult;
use crate::parallel::{default_workers, ParallelConfig, WavefrontFiller, DEFAULT_BLOCK_SIZE};

#[derive(Debug, Parser)]
#[command(name = "lcs", version, about = "Longest common subsequence with a parallel wavefront fill")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compare a parent and a child sequence.
    Compute(ComputeArgs),
    /// Time serial and parallel fills over a grid of sizes and write CSV.
    Bench(BenchArgs),
    /// Write a random sequence.
    Gen(GenArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Plain,
    Fasta,
}

impl From<FormatArg> for InputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Plain => InputFormat::Plain,
            FormatArg::Fasta => InputFormat::Fasta,
        }
    }
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(long)]
    pub parent: PathBuf,
    #[arg(long)]
    pub child: PathBuf,
    /// Worker threads (default: hardware concurrency).
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_BLOCK_SIZE)]
    pub block_size: usize,
    /// Also print the reconstructed subsequence.
    #[arg(long)]
    pub traceback: bool,
    /// Input format (default: inferred from the file extension).
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
    /// Reject symbols outside A, C, G, T.
    #[arg(long)]
    pub validate_dna: bool,
}

/// `MxN` problem size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Size(pub usize, pub usize);

impl FromStr for Size {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (m, n) = s
            .split_once(['x', 'X'])
            .ok_or_else(|| format!("expected MxN, got {s:?}"))?;
        let parse = |v: &str| v.trim().parse::<usize>().map_err(|e| format!("{v:?}: {e}"));
        Ok(Size(parse(m)?, parse(n)?))
    }
}

#[derive(Debug, Args)]
#[command(group = clap::ArgGroup::new("grid").required(true).args(["table1", "sizes"]))]
pub struct BenchArgs {
    /// Run the thirteen reference sizes from 10x5 to 10000x1500.
    #[arg(long)]
    pub table1: bool,
    /// Comma-separated sizes, e.g. 100x10,500x80.
    #[arg(long, value_delimiter = ',')]
    pub sizes: Vec<Size>,
    /// Comma-separated worker counts (default: hardware concurrency).
    #[arg(long, value_delimiter = ',')]
    pub workers: Vec<usize>,
    #[arg(long, default_value_t = DEFAULT_BLOCK_SIZE)]
    pub block_size: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_REPETITIONS)]
    pub repetitions: usize,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub length: usize,
    #[arg(long, default_value = "ACGT")]
    pub alphabet: String,
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
}

/// Parse `args` (including the program name) and run the command,
/// writing the report to `out`.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> Result<()>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help / --version
            return write!(out, "{e}").map_err(console);
        }
        Err(e) => return Err(Error::Usage(e.render().to_string())),
    };
    dispatch(cli.command, out)
}

pub fn dispatch(command: Command, out: &mut dyn Write) -> Result<()> {
    match command {
        Command::Compute(a) => cmd_compute(&a, out),
        Command::Bench(a) => cmd_bench(&a, out),
        Command::Gen(a) => cmd_gen(&a),
    }
}

fn console(e: std::io::Error) -> Error {
    Error::io("<stdout>", e)
}

pub fn cmd_compute(a: &ComputeArgs, out: &mut dyn Write) -> Result<()> {
    let load = |p: &Path| {
        let format = a.format.map_or_else(|| InputFormat::from_path(p), Into::into);
        load_sequence(p, format, a.validate_dna)
    };
    let parent = load(&a.parent)?;
    let child = load(&a.child)?;
    let cfg = ParallelConfig {
        workers: a.workers.unwrap_or_else(default_workers),
        block_size: a.block_size,
        ..Default::default()
    };
    let (dp, bt, elapsed) = WavefrontFiller::new(cfg)?.fill(&parent, &child)?;
    let result = LcsResult::from_tables(&parent, &child, &dp, &bt, elapsed)?;

    (|| {
        writeln!(out, "parent_length: {}", parent.len())?;
        writeln!(out, "child_length: {}", child.len())?;
        writeln!(out, "lcs_length: {}", result.length)?;
        writeln!(out, "similarity_percent: {:.2}", result.similarity_percent)?;
        writeln!(out, "elapsed_seconds: {:.6}", result.elapsed_seconds)?;
        if a.traceback {
            writeln!(out, "subsequence: {}", result.subsequence)?;
        }
        Ok(())
    })()
    .map_err(console)
}

pub fn cmd_bench(a: &BenchArgs, out: &mut dyn Write) -> Result<()> {
    let workers = if a.workers.is_empty() {
        vec![default_workers()]
    } else {
        a.workers.clone()
    };
    let cases = if a.table1 {
        bench::table1_cases(&workers, a.block_size, a.seed, a.repetitions)
    } else {
        let sizes: Vec<_> = a.sizes.iter().map(|s| (s.0, s.1)).collect();
        bench::grid_cases(&sizes, &workers, a.block_size, a.seed, a.repetitions)
    };
    let report = bench::run_benchmark(&cases)?;
    bench::write_csv(&report.records, &a.out)?;
    write!(out, "{}", bench::format_summary(&report.records)).map_err(console)?;
    writeln!(out, "wrote {} rows to {}", report.records.len(), a.out.display()).map_err(console)?;

    if let Some((case, err)) = report.failures.first() {
        let rest = report.failures.len() - 1;
        return Err(Error::Config(format!(
            "case {}x{} (workers={}) failed: {err}{}",
            case.m,
            case.n,
            case.workers,
            if rest > 0 { format!(" (and {rest} more)") } else { String::new() }
        )));
    }
    Ok(())
}

pub fn cmd_gen(a: &GenArgs) -> Result<()> {
    let seq = generate_random(a.length, a.alphabet.as_bytes(), a.seed)?;
    std::fs::write(&a.out, seq.as_bytes()).map_err(|e| Error::io(&a.out, e))
}
