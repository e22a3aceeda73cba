//! Blocked anti-diagonal wavefront fill.
//!
//! The interior of the length table is cut into `B x B` tiles. Tile `(r, c)`
//! depends only on tiles `(r-1, c)`, `(r, c-1)` and `(r-1, c-1)`, so every
//! tile on anti-diagonal `r + c = d` can run concurrently once wave `d - 1`
//! has finished. Each wave is one parallel region; returning from it is the
//! barrier before the next.

use std::marker::PhantomData;
use std::ops::RangeInclusive;
use std::sync::atomic::{AtomicU8, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lcs::{fill_row_segment, Arrow, BacktrackTable, DpTable, MemoryBudget};

pub const DEFAULT_BLOCK_SIZE: usize = 64;

/// Small blocks are handed to workers in batches of at least this many cells.
const MIN_CELLS_PER_TASK: usize = 4096;

/// Hardware concurrency, or 1 when it cannot be determined.
pub fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Tile coordinates: `row` indexes tiles down the parent, `col` across the child.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockCoord {
    pub row: usize,
    pub col: usize,
}

impl BlockCoord {
    pub const fn new(row: usize, col: usize) -> Self {
        BlockCoord { row, col }
    }
}

impl From<(usize, usize)> for BlockCoord {
    fn from((row, col): (usize, usize)) -> Self {
        BlockCoord { row, col }
    }
}

/// Tiling of the `M x N` interior into `ceil(M/B) x ceil(N/B)` blocks.
/// The last block row and column absorb the remainder.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockGrid {
    m: usize,
    n: usize,
    block_size: usize,
    block_rows: usize,
    block_cols: usize,
}

impl BlockGrid {
    pub fn block_rows(&self) -> usize {
        self.block_rows
    }

    pub fn block_cols(&self) -> usize {
        self.block_cols
    }

    pub fn block_size(&self) -> usize {
        self.block_size
    }

    pub fn block_count(&self) -> usize {
        self.block_rows * self.block_cols
    }

    pub fn is_empty(&self) -> bool {
        self.block_count() == 0
    }

    pub fn contains(&self, b: BlockCoord) -> bool {
        b.row < self.block_rows && b.col < self.block_cols
    }

    /// Table rows covered by block row `r` (1-based, inclusive).
    pub fn rows_of(&self, r: usize) -> RangeInclusive<usize> {
        r * self.block_size + 1..=((r + 1) * self.block_size).min(self.m)
    }

    /// Table columns covered by block column `c` (1-based, inclusive).
    pub fn cols_of(&self, c: usize) -> RangeInclusive<usize> {
        c * self.block_size + 1..=((c + 1) * self.block_size).min(self.n)
    }

    /// Block owning interior cell `(i, j)`.
    pub fn block_of(&self, i: usize, j: usize) -> BlockCoord {
        debug_assert!((1..=self.m).contains(&i) && (1..=self.n).contains(&j));
        BlockCoord::new((i - 1) / self.block_size, (j - 1) / self.block_size)
    }

    fn index(&self, b: BlockCoord) -> usize {
        b.row * self.block_cols + b.col
    }
}

/// Cut an `m x n` interior into square tiles of side `block_size`.
pub fn partition_blocks(m: usize, n: usize, block_size: usize) -> Result<BlockGrid> {
    if block_size == 0 {
        return Err(Error::Config("block size must be at least 1".into()));
    }
    Ok(BlockGrid {
        m,
        n,
        block_size,
        block_rows: m.div_ceil(block_size),
        block_cols: n.div_ceil(block_size),
    })
}

/// Blocks grouped by anti-diagonal `d = row + col`, in increasing `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WaveSchedule {
    waves: Vec<Vec<BlockCoord>>,
}

impl WaveSchedule {
    pub fn waves(&self) -> &[Vec<BlockCoord>] {
        &self.waves
    }

    pub fn len(&self) -> usize {
        self.waves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.waves.is_empty()
    }

    pub fn peak_width(&self) -> usize {
        self.waves.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn block_count(&self) -> usize {
        self.waves.iter().map(Vec::len).sum()
    }
}

/// Order the blocks of `grid` into dependency-free waves.
pub fn wavefront_schedule(grid: &BlockGrid) -> WaveSchedule {
    let (br, bc) = (grid.block_rows, grid.block_cols);
    if br == 0 || bc == 0 {
        return WaveSchedule { waves: Vec::new() };
    }
    let waves = (0..br + bc - 1)
        .map(|d| {
            let lo = d.saturating_sub(bc - 1);
            let hi = d.min(br - 1);
            (lo..=hi).rev().map(|r| BlockCoord::new(r, d - r)).collect()
        })
        .collect();
    WaveSchedule { waves }
}

/// Worker count and tile size of a parallel fill.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParallelConfig {
    pub workers: usize,
    pub block_size: usize,
    pub memory_budget: MemoryBudget,
}

impl Default for ParallelConfig {
    fn default() -> Self {
        ParallelConfig {
            workers: default_workers(),
            block_size: DEFAULT_BLOCK_SIZE,
            memory_budget: MemoryBudget::default(),
        }
    }
}

impl ParallelConfig {
    pub fn new(workers: usize, block_size: usize) -> Self {
        ParallelConfig {
            workers,
            block_size,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.workers == 0 {
            return Err(Error::Config("worker count must be at least 1".into()));
        }
        if self.block_size == 0 {
            return Err(Error::Config("block size must be at least 1".into()));
        }
        Ok(())
    }
}

const PENDING: u8 = 0;
const RUNNING: u8 = 1;
const DONE: u8 = 2;

/// Shared view of a table pair that hands out blocks one at a time.
///
/// Each block may be computed once, and only after its north, west and
/// north-west neighbours are done. Both rules are enforced with a per-block
/// state word, so out-of-order or repeated calls return
/// [`Error::Contract`] instead of racing.
pub struct BlockFill<'t> {
    x: &'t [u8],
    y: &'t [u8],
    grid: BlockGrid,
    cols: usize,
    dp: *mut u32,
    arrows: *mut Arrow,
    state: Vec<AtomicU8>,
    _tables: PhantomData<(&'t mut DpTable, &'t mut BacktrackTable)>,
}

// SAFETY: the raw pointers come from exclusive borrows held for 't. Writers
// only touch the region of a block they claimed through `state`, and readers
// only touch regions of blocks already marked DONE (or the zero boundary,
// which is never written).
unsafe impl Send for BlockFill<'_> {}
unsafe impl Sync for BlockFill<'_> {}

impl<'t> BlockFill<'t> {
    pub fn new(
        x: &'t [u8],
        y: &'t [u8],
        block_size: usize,
        dp: &'t mut DpTable,
        bt: &'t mut BacktrackTable,
    ) -> Result<Self> {
        let grid = partition_blocks(x.len(), y.len(), block_size)?;
        if dp.rows() != x.len() + 1 || dp.cols() != y.len() + 1 {
            return Err(Error::Contract(format!(
                "length table is {}x{}, expected {}x{}",
                dp.rows(),
                dp.cols(),
                x.len() + 1,
                y.len() + 1
            )));
        }
        if bt.rows() != x.len() || bt.cols() != y.len() {
            return Err(Error::Contract(format!(
                "arrow table is {}x{}, expected {}x{}",
                bt.rows(),
                bt.cols(),
                x.len(),
                y.len()
            )));
        }
        let boundary_zero =
            dp.row(0).iter().all(|&v| v == 0) && (0..dp.rows()).all(|i| dp.get(i, 0) == 0);
        if !boundary_zero {
            return Err(Error::Contract("row 0 and column 0 must be zero".into()));
        }
        let state = (0..grid.block_count()).map(|_| AtomicU8::new(PENDING)).collect();
        Ok(BlockFill {
            x,
            y,
            grid,
            cols: dp.cols(),
            dp: dp.cells_mut().as_mut_ptr(),
            arrows: bt.cells_mut().as_mut_ptr(),
            state,
            _tables: PhantomData,
        })
    }

    pub fn grid(&self) -> &BlockGrid {
        &self.grid
    }

    pub fn is_done(&self, b: BlockCoord) -> bool {
        self.grid.contains(b) && self.state[self.grid.index(b)].load(Ordering::Acquire) == DONE
    }

    pub fn all_done(&self) -> bool {
        self.state.iter().all(|s| s.load(Ordering::Acquire) == DONE)
    }

    /// Number of interior cells written so far.
    pub fn cells_done(&self) -> usize {
        (0..self.grid.block_rows)
            .flat_map(|r| (0..self.grid.block_cols).map(move |c| BlockCoord::new(r, c)))
            .filter(|&b| self.is_done(b))
            .map(|b| self.grid.rows_of(b.row).count() * self.grid.cols_of(b.col).count())
            .sum()
    }

    fn done_at(&self, idx: usize) -> bool {
        self.state[idx].load(Ordering::Acquire) == DONE
    }

    /// Fill every cell of block `b` in row-major order.
    pub fn compute_block(&self, b: BlockCoord) -> Result<()> {
        if !self.grid.contains(b) {
            return Err(Error::Contract(format!(
                "block ({}, {}) outside a {}x{} grid",
                b.row, b.col, self.grid.block_rows, self.grid.block_cols
            )));
        }
        let idx = self.grid.index(b);
        // DONE is final and a block only becomes DONE after its own north and
        // west neighbours were, so checking those two covers the north-west.
        let north_ready = b.row == 0 || self.done_at(idx - self.grid.block_cols);
        let west_ready = b.col == 0 || self.done_at(idx - 1);
        if !(north_ready && west_ready) {
            return Err(Error::Contract(format!(
                "block ({}, {}) scheduled before its {} neighbour",
                b.row,
                b.col,
                if north_ready { "west" } else { "north" }
            )));
        }
        if self.state[idx]
            .compare_exchange(PENDING, RUNNING, Ordering::Acquire, Ordering::Relaxed)
            .is_err()
        {
            return Err(Error::Contract(format!(
                "block ({}, {}) computed twice",
                b.row, b.col
            )));
        }

        let bs = self.grid.block_size;
        let i0 = b.row * bs;
        let j0 = b.col * bs;
        let i1 = (i0 + bs).min(self.grid.m);
        let w = (j0 + bs).min(self.grid.n) - j0;
        let y_seg = &self.y[j0..j0 + w];
        let arrow_cols = self.cols - 1;
        for (i, &x_i) in (i0 + 1..=i1).zip(&self.x[i0..i1]) {
            // SAFETY: row i-1 over columns j0..=j0+w and cell (i, j0) belong to
            // finished neighbours, the zero boundary, or this block's previous
            // row. Columns j0+1..=j0+w of row i belong to this block, which we
            // hold exclusively after the compare_exchange above.
            unsafe {
                let row = self.dp.add(i * self.cols + j0);
                let prev = std::slice::from_raw_parts(row.sub(self.cols), w + 1);
                let left = *row;
                let cur = std::slice::from_raw_parts_mut(row.add(1), w);
                let arrows =
                    std::slice::from_raw_parts_mut(self.arrows.add((i - 1) * arrow_cols + j0), w);
                fill_row_segment(x_i, y_seg, prev, left, cur, arrows);
            }
        }
        self.state[idx].store(DONE, Ordering::Release);
        Ok(())
    }
}

/// A parallel filler bound to a fixed worker pool.
pub struct WavefrontFiller {
    cfg: ParallelConfig,
    pool: rayon::ThreadPool,
}

impl WavefrontFiller {
    pub fn new(cfg: ParallelConfig) -> Result<Self> {
        cfg.validate()?;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .thread_name(|k| format!("lcs-wave-{k}"))
            .build()
            .map_err(|e| Error::Config(format!("cannot start worker pool: {e}")))?;
        Ok(WavefrontFiller { cfg, pool })
    }

    pub fn config(&self) -> &ParallelConfig {
        &self.cfg
    }

    /// Allocate and fill both tables, returning them with the fill's wall time.
    pub fn fill(&self, x: &[u8], y: &[u8]) -> Result<(DpTable, BacktrackTable, f64)> {
        let start = Instant::now();
        let (mut dp, mut bt) = crate::lcs::tables_for(x.len(), y.len(), self.cfg.memory_budget)?;
        self.fill_into(x, y, &mut dp, &mut bt)?;
        Ok((dp, bt, start.elapsed().as_secs_f64()))
    }

    /// Fill zero-initialised tables in place.
    pub fn fill_into(
        &self,
        x: &[u8],
        y: &[u8],
        dp: &mut DpTable,
        bt: &mut BacktrackTable,
    ) -> Result<()> {
        let fill = BlockFill::new(x, y, self.cfg.block_size, dp, bt)?;
        let schedule = wavefront_schedule(fill.grid());
        for wave in schedule.waves() {
            if wave.len() == 1 || self.cfg.workers == 1 {
                wave.iter().try_for_each(|&b| fill.compute_block(b))?;
            } else {
                let min_len = MIN_CELLS_PER_TASK.div_ceil(self.cfg.block_size * self.cfg.block_size);
                self.pool.install(|| {
                    wave.par_iter()
                        .with_min_len(min_len)
                        .try_for_each(|&b| fill.compute_block(b))
                })?;
            }
        }
        debug_assert!(fill.all_done());
        Ok(())
    }
}

/// One-shot parallel fill; builds a worker pool for the call.
pub fn lcs_fill_parallel(
    x: &[u8],
    y: &[u8],
    cfg: &ParallelConfig,
) -> Result<(DpTable, BacktrackTable, f64)> {
    WavefrontFiller::new(*cfg)?.fill(x, y)
}
