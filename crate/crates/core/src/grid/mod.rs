//! Two-dimensional lexicographically earliest arrays: the Nim-sum table, the
//! quarter-plane "Sudoku" array filled along upward antidiagonals, and the
//! counterclockwise spiral array. Line extraction and independent constraint
//! audits live here too.

mod audit;
mod lines;
mod spiral;

use std::fmt;

pub use audit::{audit_quarter_plane, audit_spiral, Violation};
pub use lines::{extract_line, Direction, LineKind, LineView, Window};
pub use spiral::{spiral_array, spiral_order, SpiralArray};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GridError {
    #[error("origin {0:?} lies outside the stored window")]
    OutOfWindow((i64, i64)),
    #[error("{0} lines are not defined for this array")]
    Unsupported(&'static str),
}

/// Dense window `T(m, n)`, `0 <= m < rows`, `0 <= n < cols`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuarterPlaneArray {
    rows: usize,
    cols: usize,
    cells: Vec<u32>,
}

impl QuarterPlaneArray {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, m: usize, n: usize) -> u32 {
        self.cells[m * self.cols + n]
    }

    pub fn row(&self, m: usize) -> &[u32] {
        &self.cells[m * self.cols..(m + 1) * self.cols]
    }

    /// Top-left `rows x cols` sub-window.
    pub fn window(&self, rows: usize, cols: usize) -> QuarterPlaneArray {
        assert!(rows <= self.rows && cols <= self.cols);
        let cells = (0..rows).flat_map(|m| self.row(m)[..cols].to_vec()).collect();
        QuarterPlaneArray { rows, cols, cells }
    }

    /// Reads complete upward antidiagonals `d = 0, 1, ...` (each from
    /// `(d, 0)` up to `(0, d)`) that fit inside the window.
    pub fn antidiagonals(&self) -> Vec<u32> {
        let full = self.rows.min(self.cols);
        let mut out = Vec::with_capacity(full * (full + 1) / 2);
        for d in 0..full {
            for n in 0..=d {
                out.push(self.get(d - n, n));
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(u32) -> u32) -> QuarterPlaneArray {
        QuarterPlaneArray { rows: self.rows, cols: self.cols, cells: self.cells.iter().map(|&v| f(v)).collect() }
    }

    fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> u32) -> Self {
        let cells = (0..rows).flat_map(|m| (0..cols).map(move |n| (m, n))).map(|(m, n)| f(m, n)).collect();
        Self { rows, cols, cells }
    }
}

impl fmt::Display for QuarterPlaneArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for m in 0..self.rows {
            let row: Vec<String> = self.row(m).iter().map(u32::to_string).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// `T(m, n) = m XOR n`.
pub fn nim_sum_table(rows: usize, cols: usize) -> QuarterPlaneArray {
    QuarterPlaneArray::from_fn(rows, cols, |m, n| (m ^ n) as u32)
}

/// Growable bitset of values already present on one line.
#[derive(Debug, Clone, Default)]
struct ValueSet(Vec<u64>);

impl ValueSet {
    fn insert(&mut self, v: u32) {
        let (w, b) = (v as usize / 64, v % 64);
        if w >= self.0.len() {
            self.0.resize(w + 1, 0);
        }
        self.0[w] |= 1 << b;
    }

    fn word(&self, w: usize) -> u64 {
        self.0.get(w).copied().unwrap_or(0)
    }
}

/// Smallest value `>= start` absent from every set.
fn mex(sets: &[&ValueSet], start: u32) -> u32 {
    let mut w = start as usize / 64;
    let mut mask = !0u64 << (start % 64);
    loop {
        let taken = sets.iter().fold(0u64, |acc, s| acc | s.word(w));
        let free = !taken & mask;
        if free != 0 {
            return (w * 64) as u32 + free.trailing_zeros();
        }
        w += 1;
        mask = !0;
    }
}

/// Greedy fill of the window where each cell is the mex (from 0) of the row
/// to its left and the column above it, scanning upward antidiagonals.
fn mex_fill(rows: usize, cols: usize) -> QuarterPlaneArray {
    let mut row_sets = vec![ValueSet::default(); rows];
    let mut col_sets = vec![ValueSet::default(); cols];
    let mut cells = vec![0u32; rows * cols];
    for d in 0..rows + cols - 1 {
        for n in 0..=d.min(cols - 1) {
            let m = d - n;
            if m >= rows {
                continue;
            }
            let v = mex(&[&row_sets[m], &col_sets[n]], 0);
            cells[m * cols + n] = v;
            row_sets[m].insert(v);
            col_sets[n].insert(v);
        }
    }
    QuarterPlaneArray { rows, cols, cells }
}

/// True iff the row/column mex fill reproduces the XOR table on the window.
pub fn mex_fill_equivalence(rows: usize, cols: usize) -> bool {
    mex_fill(rows, cols) == nim_sum_table(rows, cols)
}

/// The array in which every cell holds the smallest positive integer not
/// already in its row, column, diagonal or antidiagonal, filling upward
/// antidiagonals from the corner.
///
/// Every line constraint only reaches cells with smaller column index, so
/// the window is determined by the cells `n < cols`, `m + n <= rows + cols - 2`;
/// exactly those are filled.
pub fn sudoku_array(rows: usize, cols: usize) -> QuarterPlaneArray {
    assert!(rows >= 1 && cols >= 1);
    let max_d = rows + cols - 2;
    let height = max_d + 1;
    let mut row_sets = vec![ValueSet::default(); height];
    let mut col_sets = vec![ValueSet::default(); cols];
    // Diagonal m - n + cols - 1, antidiagonal m + n.
    let mut diag_sets = vec![ValueSet::default(); height + cols];
    let mut anti_sets = vec![ValueSet::default(); max_d + 1];
    let mut cells = vec![0u32; rows * cols];
    for d in 0..=max_d {
        // Upward: from (d, 0) to (0, d).
        for n in 0..=d.min(cols - 1) {
            let m = d - n;
            let di = m + cols - 1 - n;
            let v = mex(&[&row_sets[m], &col_sets[n], &diag_sets[di], &anti_sets[d]], 1);
            row_sets[m].insert(v);
            col_sets[n].insert(v);
            diag_sets[di].insert(v);
            anti_sets[d].insert(v);
            if m < rows {
                cells[m * cols + n] = v;
            }
        }
    }
    QuarterPlaneArray { rows, cols, cells }
}

/// `T(k, k)` of the Sudoku array for `k < n`.
pub fn sudoku_main_diagonal(n: usize) -> Vec<u32> {
    if n == 0 {
        return Vec::new();
    }
    let a = sudoku_array(n, n);
    (0..n).map(|k| a.get(k, k)).collect()
}

/// Sprague–Grundy values of the game in which a token at `(m, n)` moves any
/// positive distance left along its row, up its column, up-left along its
/// diagonal, or down-left along its antidiagonal. Computed by memoized
/// recursion over the move graph rather than by the antidiagonal sweep, so
/// it serves as an independent check of [`sudoku_array`] minus one.
pub fn four_line_grundy(rows: usize, cols: usize) -> QuarterPlaneArray {
    let height = rows + cols;
    let mut memo: Vec<Option<u32>> = vec![None; height * cols];
    fn grundy(m: usize, n: usize, cols: usize, memo: &mut Vec<Option<u32>>) -> u32 {
        if let Some(v) = memo[m * cols + n] {
            return v;
        }
        let mut options = Vec::new();
        for k in 1..=n {
            options.push((m, n - k));
            options.push((m + k, n - k));
        }
        for k in 1..=m {
            options.push((m - k, n));
            if k <= n {
                options.push((m - k, n - k));
            }
        }
        let mut seen: Vec<u32> = options.into_iter().map(|(a, b)| grundy(a, b, cols, memo)).collect();
        seen.sort_unstable();
        seen.dedup();
        let v = seen.iter().enumerate().find(|(i, &x)| *i as u32 != x).map_or(seen.len() as u32, |(i, _)| i as u32);
        memo[m * cols + n] = Some(v);
        v
    }
    let mut cells = Vec::with_capacity(rows * cols);
    for m in 0..rows {
        for n in 0..cols {
            cells.push(grundy(m, n, cols, &mut memo));
        }
    }
    QuarterPlaneArray { rows, cols, cells }
}
