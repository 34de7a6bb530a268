use super::{GridError, QuarterPlaneArray, SpiralArray};

/// Compass direction for spokes of the spiral array (north = increasing `y`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    E,
    NE,
    N,
    NW,
    W,
    SW,
    S,
    SE,
}

impl Direction {
    pub const ALL: [Direction; 8] = [
        Direction::E,
        Direction::NE,
        Direction::N,
        Direction::NW,
        Direction::W,
        Direction::SW,
        Direction::S,
        Direction::SE,
    ];

    pub fn step(self) -> (i64, i64) {
        match self {
            Direction::E => (1, 0),
            Direction::NE => (1, 1),
            Direction::N => (0, 1),
            Direction::NW => (-1, 1),
            Direction::W => (-1, 0),
            Direction::SW => (-1, -1),
            Direction::S => (0, -1),
            Direction::SE => (1, -1),
        }
    }
}

/// Which line through the origin cell to read.
///
/// For a quarter-plane array coordinates are `(m, n)` = (row, column):
/// rows run along increasing `n`, columns along increasing `m`, diagonals
/// go down-right and antidiagonals go up-right. For the spiral array
/// coordinates are `(x, y)`: rows run east, columns north, diagonals
/// north-east and antidiagonals south-east. A spoke starts at the origin
/// and runs outward in one direction only.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineKind {
    Row,
    Column,
    Diagonal,
    Antidiagonal,
    Spoke(Direction),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineView {
    pub kind: LineKind,
    pub origin: (i64, i64),
    pub values: Vec<u32>,
}

/// Window access shared by both array shapes.
pub trait Window {
    fn at(&self, a: i64, b: i64) -> Option<u32>;
    /// Step vector for a full line of the given kind.
    fn line_step(&self, kind: LineKind) -> Result<(i64, i64), GridError>;
}

impl Window for QuarterPlaneArray {
    fn at(&self, m: i64, n: i64) -> Option<u32> {
        let ok = m >= 0 && n >= 0 && (m as usize) < self.rows() && (n as usize) < self.cols();
        ok.then(|| self.get(m as usize, n as usize))
    }

    fn line_step(&self, kind: LineKind) -> Result<(i64, i64), GridError> {
        Ok(match kind {
            LineKind::Row => (0, 1),
            LineKind::Column => (1, 0),
            LineKind::Diagonal => (1, 1),
            LineKind::Antidiagonal => (-1, 1),
            LineKind::Spoke(_) => return Err(GridError::Unsupported("spoke")),
        })
    }
}

impl Window for SpiralArray {
    fn at(&self, x: i64, y: i64) -> Option<u32> {
        self.get(x, y)
    }

    fn line_step(&self, kind: LineKind) -> Result<(i64, i64), GridError> {
        Ok(match kind {
            LineKind::Row => (1, 0),
            LineKind::Column => (0, 1),
            LineKind::Diagonal => (1, 1),
            LineKind::Antidiagonal => (1, -1),
            LineKind::Spoke(d) => d.step(),
        })
    }
}

/// Values along a line through `origin`, in increasing order along the
/// line's step vector. Full lines are read edge to edge of the window;
/// spokes start at the origin itself.
pub fn extract_line<W: Window>(array: &W, kind: LineKind, origin: (i64, i64)) -> Result<LineView, GridError> {
    if array.at(origin.0, origin.1).is_none() {
        return Err(GridError::OutOfWindow(origin));
    }
    let (da, db) = array.line_step(kind)?;
    let (mut a, mut b) = origin;
    if !matches!(kind, LineKind::Spoke(_)) {
        while array.at(a - da, b - db).is_some() {
            a -= da;
            b -= db;
        }
    }
    let mut values = Vec::new();
    while let Some(v) = array.at(a, b) {
        values.push(v);
        a += da;
        b += db;
    }
    Ok(LineView { kind, origin, values })
}
