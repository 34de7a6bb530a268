//! Peaceable queens: `m` white and `m` black queens on an `n x n` board with
//! no queen attacking one of the other colour.
//!
//! Both the exact solver and the large-board construction work with line
//! colourings: give every row, column, diagonal and antidiagonal a colour;
//! a cell may hold a white queen when its four lines are all white and a
//! black queen when they are all black. Any such placement is peaceable,
//! and every peaceable placement arises this way (colour each line after a
//! queen on it, or arbitrarily if it is empty), so maximizing over
//! colourings is exact.

mod render;
mod solve;

use std::collections::BTreeSet;

pub use render::{parse_ascii, render_ascii, render_svg, RenderFormat};
pub use solve::{jubin_construction, solve_exact, QueensResult, EXACT_MAX_N};

pub type Cell = (usize, usize);

/// Known values of the maximal army size for `n = 1..=13`.
pub const KNOWN_VALUES: [u64; 13] = [0, 0, 1, 2, 4, 5, 7, 9, 12, 14, 17, 21, 24];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QueensError {
    #[error("cell {0:?} is off the board")]
    CellOutOfRange(Cell),
    #[error("cell {0:?} holds queens of both colours")]
    Overlap(Cell),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// White and black queen cells `(row, col)` on an `n x n` board.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Placement {
    n: usize,
    white: BTreeSet<Cell>,
    black: BTreeSet<Cell>,
}

impl Placement {
    pub fn new(n: usize, white: impl IntoIterator<Item = Cell>, black: impl IntoIterator<Item = Cell>) -> Result<Self, QueensError> {
        let white: BTreeSet<Cell> = white.into_iter().collect();
        let black: BTreeSet<Cell> = black.into_iter().collect();
        for &c in white.iter().chain(&black) {
            if c.0 >= n || c.1 >= n {
                return Err(QueensError::CellOutOfRange(c));
            }
        }
        if let Some(&c) = white.intersection(&black).next() {
            return Err(QueensError::Overlap(c));
        }
        Ok(Self { n, white, black })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, white: BTreeSet::new(), black: BTreeSet::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn white(&self) -> &BTreeSet<Cell> {
        &self.white
    }

    pub fn black(&self) -> &BTreeSet<Cell> {
        &self.black
    }

    /// Army size that counts: the smaller of the two colours.
    pub fn m(&self) -> usize {
        self.white.len().min(self.black.len())
    }

    /// Image under one of the eight board symmetries (`k` in `0..8`: a
    /// rotation by `k % 4` quarter turns, preceded by a transpose if `k >= 4`).
    pub fn transformed(&self, k: usize) -> Self {
        let n = self.n;
        let map = |(r, c): Cell| {
            let (mut r, mut c) = if k >= 4 { (c, r) } else { (r, c) };
            for _ in 0..k % 4 {
                (r, c) = (c, n - 1 - r);
            }
            (r, c)
        };
        Self { n, white: self.white.iter().copied().map(map).collect(), black: self.black.iter().copied().map(map).collect() }
    }

    pub fn colours_swapped(&self) -> Self {
        Self { n: self.n, white: self.black.clone(), black: self.white.clone() }
    }
}

fn attacks(a: Cell, b: Cell) -> bool {
    let (r1, c1) = (a.0 as i64, a.1 as i64);
    let (r2, c2) = (b.0 as i64, b.1 as i64);
    r1 == r2 || c1 == c2 || r1 - c1 == r2 - c2 || r1 + c1 == r2 + c2
}

/// True iff no white queen shares a row, column or diagonal with a black
/// queen. Pieces in between do not block an attack. Equal army sizes are
/// not required here; see [`Placement::m`].
pub fn verify(p: &Placement) -> bool {
    p.white.iter().all(|&w| p.black.iter().all(|&b| !attacks(w, b)))
}

/// `floor(7 n^2 / 48)`.
pub fn lower_bound(n: u64) -> u64 {
    7 * n * n / 48
}
