//! Serial longest-common-subsequence machinery.
//!
//! The length table has `M + 1` rows and `N + 1` columns; row 0 and column 0
//! are the empty-prefix boundary and stay zero. The arrow table covers the
//! `M x N` interior. Both tables are addressed with 1-based interior
//! coordinates: cell `(i, j)` compares `x[i - 1]` with `y[j - 1]`.

mod oracle;
mod tables;

pub use oracle::{brute_force_lcs, is_subsequence, BRUTE_FORCE_LIMIT};
pub use tables::{Arrow, BacktrackTable, DpTable, MemoryBudget};

use crate::error::{Error, Result};
use crate::sequence::Sequence;

/// One step of the recurrence.
///
/// `diag`, `up` and `left` are the finished neighbours `(i-1, j-1)`,
/// `(i-1, j)` and `(i, j-1)`. A tie between `up` and `left` resolves to
/// [`Arrow::Left`]; the serial and parallel fills both route through here,
/// so their tracebacks agree symbol for symbol.
#[inline(always)]
pub fn lcs_cell(x_i: u8, y_j: u8, diag: u32, up: u32, left: u32) -> (u32, Arrow) {
    if x_i == y_j {
        (diag + 1, Arrow::Diag)
    } else if up > left {
        (up, Arrow::Up)
    } else {
        (left, Arrow::Left)
    }
}

/// Fill one interior row segment.
///
/// `prev` holds `c[i-1][j0 ..= j0 + w]`, `left` is `c[i][j0]`, and `cur` /
/// `arrows` receive `c[i][j0+1 ..= j0+w]` / `b[i][j0+1 ..= j0+w]`.
#[inline]
pub(crate) fn fill_row_segment(
    x_i: u8,
    y_seg: &[u8],
    prev: &[u32],
    mut left: u32,
    cur: &mut [u32],
    arrows: &mut [Arrow],
) {
    debug_assert_eq!(prev.len(), y_seg.len() + 1);
    debug_assert_eq!(cur.len(), y_seg.len());
    debug_assert_eq!(arrows.len(), y_seg.len());
    let mut diag = prev[0];
    for (k, &y_j) in y_seg.iter().enumerate() {
        let up = prev[k + 1];
        let (v, a) = lcs_cell(x_i, y_j, diag, up, left);
        cur[k] = v;
        arrows[k] = a;
        diag = up;
        left = v;
    }
}

/// Zeroed length and arrow tables for an `m x n` problem.
pub fn tables_for(m: usize, n: usize, budget: MemoryBudget) -> Result<(DpTable, BacktrackTable)> {
    tables::allocate(m, n, budget)
}

/// Row-major serial fill under the default memory budget.
pub fn lcs_fill_serial(x: &[u8], y: &[u8]) -> Result<(DpTable, BacktrackTable)> {
    lcs_fill_serial_with_budget(x, y, MemoryBudget::default())
}

pub fn lcs_fill_serial_with_budget(
    x: &[u8],
    y: &[u8],
    budget: MemoryBudget,
) -> Result<(DpTable, BacktrackTable)> {
    let (mut dp, mut bt) = tables::allocate(x.len(), y.len(), budget)?;
    let cols = y.len() + 1;
    let cells = dp.cells_mut();
    for (i, &x_i) in x.iter().enumerate() {
        // rows i and i+1 of the length table
        let (above, below) = cells[i * cols..(i + 2) * cols].split_at_mut(cols);
        fill_row_segment(x_i, y, above, 0, &mut below[1..], bt.row_mut(i + 1));
    }
    Ok((dp, bt))
}

/// Length of an LCS of `x` and `y`.
pub fn lcs_length(x: &[u8], y: &[u8]) -> Result<u32> {
    Ok(lcs_fill_serial(x, y)?.0.lcs_length())
}

/// Walk the arrow table back from `(i, j)` and return the LCS of the
/// prefixes `x[..i]` and `y[..j]` in forward order.
pub fn traceback(b: &BacktrackTable, x: &[u8], i: usize, j: usize) -> Result<Sequence> {
    if x.len() != b.rows() {
        return Err(Error::Contract(format!(
            "arrow table has {} rows but the parent sequence has {} symbols",
            b.rows(),
            x.len()
        )));
    }
    if i > b.rows() || j > b.cols() {
        return Err(Error::IndexOutOfRange {
            i,
            j,
            rows: b.rows(),
            cols: b.cols(),
        });
    }
    let (mut i, mut j) = (i, j);
    let mut rev = Vec::new();
    while i > 0 && j > 0 {
        match b.get(i, j) {
            Arrow::Diag => {
                rev.push(x[i - 1]);
                i -= 1;
                j -= 1;
            }
            Arrow::Up => i -= 1,
            Arrow::Left => j -= 1,
        }
    }
    rev.reverse();
    Ok(Sequence::new(rev))
}

/// Share of the child sequence covered by the LCS, in percent.
///
/// An empty child is fully matched by an empty LCS.
pub fn similarity_percent(lcs_len: usize, parent_len: usize, child_len: usize) -> Result<f64> {
    if lcs_len > parent_len.min(child_len) {
        return Err(Error::Contract(format!(
            "LCS length {lcs_len} exceeds min({parent_len}, {child_len})"
        )));
    }
    if child_len == 0 {
        return Ok(100.0);
    }
    Ok(100.0 * lcs_len as f64 / child_len as f64)
}

/// Outcome of a full LCS computation.
#[derive(Debug, Clone, PartialEq)]
pub struct LcsResult {
    pub length: u32,
    pub subsequence: Sequence,
    pub similarity_percent: f64,
    /// Wall time of the table fill alone.
    pub elapsed_seconds: f64,
}

impl LcsResult {
    /// Assemble a result from filled tables.
    pub fn from_tables(
        x: &[u8],
        y: &[u8],
        dp: &DpTable,
        bt: &BacktrackTable,
        elapsed_seconds: f64,
    ) -> Result<Self> {
        let length = dp.lcs_length();
        let subsequence = traceback(bt, x, x.len(), y.len())?;
        debug_assert_eq!(subsequence.len(), length as usize);
        Ok(LcsResult {
            length,
            subsequence,
            similarity_percent: similarity_percent(length as usize, x.len(), y.len())?,
            elapsed_seconds,
        })
    }
}
