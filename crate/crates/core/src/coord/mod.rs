//! Coordination sequences: the number of vertices at each graph distance
//! from a base vertex, on translation-periodic graphs (built lazily, one
//! unit cell at a time) and on explicit finite patches.

mod patch;

use std::collections::{HashMap, VecDeque};

pub use patch::{load_patch, parse_patch, patch_coordination, PatchGraph};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoordError {
    #[error("invalid periodic graph: {0}")]
    InvalidGraph(String),
    #[error("no vertex named {0:?}")]
    UnknownVertex(String),
    #[error("base vertex reaches nothing at distance {0}; the graph is disconnected there")]
    Disconnected(usize),
    #[error("patch line {line}: {message}")]
    Patch { line: usize, message: String },
    #[error("requested distance {requested} exceeds the patch's valid radius {valid}")]
    BeyondRadius { requested: usize, valid: usize },
    #[error("cannot read patch: {0}")]
    Io(String),
}

/// Shell counts `a(0), a(1), ...` around one base vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordSeq {
    pub base: String,
    pub terms: Vec<u64>,
}

/// Edge from vertex `from` in cell `c` to vertex `to` in cell `c + offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicEdge {
    pub from: usize,
    pub to: usize,
    pub offset: [i64; 3],
}

/// A graph invariant under a lattice of translations, given by the vertices
/// of one unit cell and offset edges. Edge lists are stored symmetrically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicGraph {
    dim: usize,
    labels: Vec<String>,
    edges: Vec<PeriodicEdge>,
    adjacency: Vec<Vec<(usize, [i64; 3])>>,
}

impl PeriodicGraph {
    /// Builds the graph, adding the reverse of every listed edge that is not
    /// already present. Offsets beyond `dim` coordinates must be zero.
    pub fn new(dim: usize, labels: Vec<String>, edges: Vec<PeriodicEdge>) -> Result<Self, CoordError> {
        if !(2..=3).contains(&dim) {
            return Err(CoordError::InvalidGraph(format!("dimension must be 2 or 3, got {dim}")));
        }
        let v = labels.len();
        let mut all: Vec<PeriodicEdge> = Vec::new();
        for e in edges {
            if e.from >= v || e.to >= v {
                return Err(CoordError::InvalidGraph(format!("edge {e:?} names a missing vertex")));
            }
            if e.offset[dim..].iter().any(|&x| x != 0) {
                return Err(CoordError::InvalidGraph(format!("edge {e:?} has an offset outside {dim} dimensions")));
            }
            if e.from == e.to && e.offset == [0; 3] {
                return Err(CoordError::InvalidGraph(format!("loop at vertex {}", labels[e.from])));
            }
            let back = PeriodicEdge { from: e.to, to: e.from, offset: e.offset.map(|x| -x) };
            for x in [e, back] {
                if !all.contains(&x) {
                    all.push(x);
                }
            }
        }
        let mut adjacency = vec![Vec::new(); v];
        for e in &all {
            adjacency[e.from].push((e.to, e.offset));
        }
        if let Some(i) = adjacency.iter().position(Vec::is_empty) {
            return Err(CoordError::InvalidGraph(format!("vertex {} has no edges", labels[i])));
        }
        Ok(Self { dim, labels, edges: all, adjacency })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> &[PeriodicEdge] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn vertex(&self, label: &str) -> Result<usize, CoordError> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| CoordError::UnknownVertex(label.to_string()))
    }

    /// Largest coordinate of any edge offset.
    fn max_offset(&self) -> i64 {
        self.edges.iter().flat_map(|e| e.offset).map(i64::abs).max().unwrap_or(0)
    }
}

/// The square grid `Z^2`, one vertex per cell.
pub fn square_grid() -> PeriodicGraph {
    let edges = vec![PeriodicEdge { from: 0, to: 0, offset: [1, 0, 0] }, PeriodicEdge { from: 0, to: 0, offset: [0, 1, 0] }];
    PeriodicGraph::new(2, vec!["v".into()], edges).expect("square grid is valid")
}

/// The Cairo pentagonal tiling. Tetravalent vertices sit at the integer
/// points of a square grid; each unit square holds a pair of adjacent
/// trivalent vertices, the pair lying along the square's horizontal
/// midline when `i + j` is even and along its vertical one otherwise. Each
/// trivalent vertex joins its partner and the two corners on its side. The
/// translation lattice is spanned by `(1, 1)` and `(1, -1)`, so a unit cell
/// holds two tetravalent vertices `Q0, Q1`, four trivalent ones
/// `T00, T01, T10, T11`, and four pentagons.
pub fn cairo_graph() -> PeriodicGraph {
    let labels = ["Q0", "Q1", "T00", "T01", "T10", "T11"].map(String::from).to_vec();
    let e = |from, to, a, b| PeriodicEdge { from, to, offset: [a, b, 0] };
    let edges = vec![
        e(2, 3, 0, 0),
        e(4, 5, 0, 0),
        e(0, 2, 0, 0),
        e(0, 4, -1, -1),
        e(0, 5, -1, 0),
        e(0, 3, -1, 0),
        e(1, 4, 0, 0),
        e(1, 3, 0, 0),
        e(1, 2, 0, 1),
        e(1, 5, -1, 0),
    ];
    PeriodicGraph::new(2, labels, edges).expect("Cairo graph is valid")
}

/// Cells further than this from the base cell are never materialized; the
/// default margin of 2 is ample since `n` hops move at most
/// `n * max_offset` cells.
pub const DEFAULT_MARGIN: i64 = 2;

/// Shell counts around `base` through distance `n_max`.
pub fn coordination_sequence(g: &PeriodicGraph, base: usize, n_max: usize) -> Result<CoordSeq, CoordError> {
    coordination_sequence_with_margin(g, base, n_max, DEFAULT_MARGIN)
}

/// As [`coordination_sequence`], with an explicit materialization margin
/// in cells beyond the `n_max * max_offset` reach of the search.
pub fn coordination_sequence_with_margin(g: &PeriodicGraph, base: usize, n_max: usize, margin: i64) -> Result<CoordSeq, CoordError> {
    if base >= g.labels.len() {
        return Err(CoordError::UnknownVertex(base.to_string()));
    }
    let limit = n_max as i64 * g.max_offset() + margin.max(0);
    let mut dist: HashMap<([i64; 3], usize), usize> = HashMap::new();
    let mut queue = VecDeque::new();
    let mut terms = vec![0u64; n_max + 1];
    dist.insert(([0; 3], base), 0);
    queue.push_back(([0i64; 3], base));
    while let Some((cell, v)) = queue.pop_front() {
        let d = dist[&(cell, v)];
        terms[d] += 1;
        if d == n_max {
            continue;
        }
        for &(w, off) in &g.adjacency[v] {
            let next = [cell[0] + off[0], cell[1] + off[1], cell[2] + off[2]];
            if next.iter().any(|x| x.abs() > limit) {
                continue;
            }
            dist.entry((next, w)).or_insert_with(|| {
                queue.push_back((next, w));
                d + 1
            });
        }
    }
    if let Some(k) = terms.iter().position(|&t| t == 0) {
        return Err(CoordError::Disconnected(k));
    }
    Ok(CoordSeq { base: g.labels[base].clone(), terms })
}

/// Closed form for a trivalent Cairo vertex: 1, 3, 8, then for `n >= 3`
/// `4n` if `n` is odd, `4n - 1` if `n = 0 mod 4` and `4n + 1` if `n = 2 mod 4`.
pub fn trivalent_formula(n: u64) -> u64 {
    match n {
        0 => 1,
        1 => 3,
        2 => 8,
        _ if n % 2 == 1 => 4 * n,
        _ if n.is_multiple_of(4) => 4 * n - 1,
        _ => 4 * n + 1,
    }
}

/// Closed form for a tetravalent Cairo vertex: 1, then `4n`.
pub fn tetravalent_formula(n: u64) -> u64 {
    if n == 0 {
        1
    } else {
        4 * n
    }
}
