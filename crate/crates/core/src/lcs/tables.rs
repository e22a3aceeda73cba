use crate::error::{Error, Result};

/// Which recurrence case produced a cell.
#[repr(u8)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Arrow {
    /// `x_i == y_j`; the symbol belongs to the LCS.
    Diag = 0,
    Up = 1,
    Left = 2,
}

impl Arrow {
    pub fn symbol(self) -> char {
        match self {
            Arrow::Diag => '\\',
            Arrow::Up => '^',
            Arrow::Left => '<',
        }
    }
}

/// Upper bound on the bytes a pair of tables may occupy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MemoryBudget(u64);

impl MemoryBudget {
    pub const DEFAULT_BYTES: u64 = 2 << 30;

    pub const fn bytes(n: u64) -> Self {
        MemoryBudget(n)
    }

    pub const fn unlimited() -> Self {
        MemoryBudget(u64::MAX)
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// Bytes needed for the length and arrow tables of an `m x n` problem,
    /// or `None` on overflow.
    pub fn required(m: usize, n: usize) -> Option<u64> {
        let (m, n) = (m as u64, n as u64);
        let lengths = m.checked_add(1)?.checked_mul(n.checked_add(1)?)?.checked_mul(4)?;
        let arrows = m.checked_mul(n)?;
        lengths.checked_add(arrows)
    }
}

impl Default for MemoryBudget {
    fn default() -> Self {
        MemoryBudget(Self::DEFAULT_BYTES)
    }
}

/// `(M+1) x (N+1)` table of prefix LCS lengths, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpTable {
    rows: usize,
    cols: usize,
    cells: Vec<u32>,
}

impl DpTable {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// `c[i][j]` for `0 <= i <= M`, `0 <= j <= N`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        assert!(i < self.rows && j < self.cols, "cell ({i}, {j}) out of range");
        self.cells[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.cells[i * self.cols..(i + 1) * self.cols]
    }

    /// `c[M][N]`.
    pub fn lcs_length(&self) -> u32 {
        *self.cells.last().expect("table always has the (0, 0) cell")
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.cells
    }

    pub(crate) fn cells_mut(&mut self) -> &mut [u32] {
        &mut self.cells
    }
}

/// `M x N` arrow table, addressed with 1-based coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BacktrackTable {
    rows: usize,
    cols: usize,
    cells: Vec<Arrow>,
}

impl BacktrackTable {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// `b[i][j]` for `1 <= i <= M`, `1 <= j <= N`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Arrow {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "arrow ({i}, {j}) out of range"
        );
        self.cells[(i - 1) * self.cols + (j - 1)]
    }

    pub fn as_slice(&self) -> &[Arrow] {
        &self.cells
    }

    /// Interior row `i` (1-based).
    pub(crate) fn row_mut(&mut self, i: usize) -> &mut [Arrow] {
        &mut self.cells[(i - 1) * self.cols..i * self.cols]
    }

    pub(crate) fn cells_mut(&mut self) -> &mut [Arrow] {
        &mut self.cells
    }
}

/// Zeroed tables for an `m x n` problem, or a capacity error.
pub(crate) fn allocate(m: usize, n: usize, budget: MemoryBudget) -> Result<(DpTable, BacktrackTable)> {
    let required = MemoryBudget::required(m, n);
    let fits_u32 = m <= u32::MAX as usize && n <= u32::MAX as usize;
    match required {
        Some(bytes) if bytes <= budget.get() && fits_u32 => {}
        _ => {
            return Err(Error::Capacity {
                rows: m + 1,
                cols: n + 1,
                required: required.unwrap_or(u64::MAX),
                budget: budget.get(),
            })
        }
    }
    let dp = DpTable {
        rows: m + 1,
        cols: n + 1,
        cells: vec![0; (m + 1) * (n + 1)],
    };
    let bt = BacktrackTable {
        rows: m,
        cols: n,
        cells: vec![Arrow::Left; m * n],
    };
    Ok((dp, bt))
}
