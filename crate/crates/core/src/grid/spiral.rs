use super::{mex, ValueSet};

/// Square `[-r, r]^2` of the spiral array, stored row by row from `y = -r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpiralArray {
    radius: usize,
    cells: Vec<u32>,
}

impl SpiralArray {
    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn contains(&self, x: i64, y: i64) -> bool {
        let r = self.radius as i64;
        (-r..=r).contains(&x) && (-r..=r).contains(&y)
    }

    /// Value at `(x, y)`; `y` grows northward.
    pub fn get(&self, x: i64, y: i64) -> Option<u32> {
        if !self.contains(x, y) {
            return None;
        }
        let r = self.radius as i64;
        let side = 2 * r + 1;
        Some(self.cells[((y + r) * side + (x + r)) as usize])
    }
}

/// Cells of `[-r, r]^2` in counterclockwise spiral order from the origin:
/// east 1, north 1, west 2, south 2, east 3, north 3, ...
pub fn spiral_order(radius: usize) -> Vec<(i64, i64)> {
    let total = (2 * radius + 1).pow(2);
    let mut out = Vec::with_capacity(total);
    let (mut x, mut y) = (0i64, 0i64);
    out.push((x, y));
    let dirs = [(1, 0), (0, 1), (-1, 0), (0, -1)];
    let mut leg = 1;
    let mut d = 0;
    while out.len() < total {
        for _ in 0..2 {
            let (dx, dy) = dirs[d % 4];
            for _ in 0..leg {
                x += dx;
                y += dy;
                if out.len() < total {
                    out.push((x, y));
                }
            }
            d += 1;
        }
        leg += 1;
    }
    out
}

/// Fills the spiral: each cell gets the smallest positive integer absent
/// from every earlier cell on its row, column and both diagonals. Cells are
/// placed in spiral order, so a later placement never invalidates an earlier
/// one and growing the radius keeps the inner square unchanged.
pub fn spiral_array(radius: usize) -> SpiralArray {
    let r = radius as i64;
    let side = (2 * r + 1) as usize;
    let lines = 4 * radius + 1;
    let mut rows = vec![ValueSet::default(); side];
    let mut cols = vec![ValueSet::default(); side];
    let mut diag = vec![ValueSet::default(); lines];
    let mut anti = vec![ValueSet::default(); lines];
    let mut cells = vec![0u32; side * side];
    for (x, y) in spiral_order(radius) {
        let (xi, yi) = ((x + r) as usize, (y + r) as usize);
        let (di, ai) = ((x - y + 2 * r) as usize, (x + y + 2 * r) as usize);
        let v = mex(&[&rows[yi], &cols[xi], &diag[di], &anti[ai]], 1);
        rows[yi].insert(v);
        cols[xi].insert(v);
        diag[di].insert(v);
        anti[ai].insert(v);
        cells[yi * side + xi] = v;
    }
    SpiralArray { radius, cells }
}
