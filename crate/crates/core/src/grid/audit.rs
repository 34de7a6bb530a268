//! Independent re-scans of finished arrays: every row, column and diagonal
//! is walked on its own and checked for repeated values, without using any
//! of the bookkeeping the fill routines keep.

use std::collections::HashSet;

use rayon::prelude::*;

use super::lines::{extract_line, LineKind, Window};
use super::{QuarterPlaneArray, SpiralArray};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: LineKind,
    /// First cell of the offending line.
    pub origin: (i64, i64),
    pub value: u32,
}

fn first_repeat(values: &[u32]) -> Option<u32> {
    let mut seen = HashSet::with_capacity(values.len());
    values.iter().copied().find(|v| !seen.insert(*v))
}

fn scan<W: Window + Sync>(array: &W, lines: Vec<(LineKind, (i64, i64))>) -> Result<(), Violation> {
    let found = lines
        .into_par_iter()
        .filter_map(|(kind, origin)| {
            let view = extract_line(array, kind, origin).ok()?;
            first_repeat(&view.values).map(|value| Violation { kind, origin, value })
        })
        .min_by_key(|v| (v.origin, format!("{:?}", v.kind)));
    found.map_or(Ok(()), Err)
}

/// Checks rows, columns, diagonals and antidiagonals of the window.
pub fn audit_quarter_plane(a: &QuarterPlaneArray) -> Result<(), Violation> {
    let (rows, cols) = (a.rows() as i64, a.cols() as i64);
    let mut lines = Vec::new();
    for m in 0..rows {
        lines.push((LineKind::Row, (m, 0)));
        lines.push((LineKind::Diagonal, (m, 0)));
        lines.push((LineKind::Antidiagonal, (m, 0)));
    }
    for n in 0..cols {
        lines.push((LineKind::Column, (0, n)));
        if n > 0 {
            lines.push((LineKind::Diagonal, (0, n)));
            lines.push((LineKind::Antidiagonal, (rows - 1, n)));
        }
    }
    scan(a, lines)
}

/// Same for the square window of a spiral array; diagonals of both slopes.
pub fn audit_spiral(s: &SpiralArray) -> Result<(), Violation> {
    let r = s.radius() as i64;
    let mut lines = Vec::new();
    for k in -r..=r {
        lines.push((LineKind::Row, (-r, k)));
        lines.push((LineKind::Column, (k, -r)));
        lines.push((LineKind::Diagonal, (-r, k)));
        lines.push((LineKind::Diagonal, (k, -r)));
        lines.push((LineKind::Antidiagonal, (-r, k)));
        lines.push((LineKind::Antidiagonal, (k, r)));
    }
    scan(s, lines)
}
