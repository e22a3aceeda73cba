//! Longest common subsequence of two sequences.
//!
//! The length and arrow tables are filled either serially in row-major
//! order ([`lcs_fill_serial`]) or in parallel by square tiles scheduled
//! along anti-diagonal waves ([`lcs_fill_parallel`]). Both fills apply the
//! same cell rule with the same tie-break, so their tables are identical
//! and [`traceback`] reconstructs the same subsequence from either.
//!
//! ```
//! use lcs_core::{lcs_fill_parallel, traceback, ParallelConfig};
//!
//! let (x, y) = (b"ABCBDAB", b"BDCABA");
//! let (dp, bt, _secs) = lcs_fill_parallel(x, y, &ParallelConfig::new(2, 2)).unwrap();
//! assert_eq!(dp.lcs_length(), 4);
//! assert_eq!(traceback(&bt, x, 7, 6).unwrap().as_bytes(), b"BDAB");
//! ```

pub mod bench;
pub mod cli;
mod error;
pub mod io;
pub mod lcs;
pub mod parallel;
mod sequence;

pub use error::{Error, Result};
pub use lcs::{
    brute_force_lcs, is_subsequence, lcs_cell, lcs_fill_serial, lcs_length, similarity_percent,
    traceback, Arrow, BacktrackTable, DpTable, LcsResult, MemoryBudget,
};
pub use parallel::{
    lcs_fill_parallel, partition_blocks, wavefront_schedule, BlockCoord, BlockFill, BlockGrid,
    ParallelConfig, WaveSchedule, WavefrontFiller,
};
pub use sequence::{Sequence, DNA};

/// Fill in parallel, then trace back and score.
pub fn compute_lcs(x: &[u8], y: &[u8], cfg: &ParallelConfig) -> Result<LcsResult> {
    let (dp, bt, elapsed) = lcs_fill_parallel(x, y, cfg)?;
    LcsResult::from_tables(x, y, &dp, &bt, elapsed)
}
