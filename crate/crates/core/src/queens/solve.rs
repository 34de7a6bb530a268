use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::{verify, Cell, Placement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QueensResult {
    pub n: usize,
    pub m: usize,
    pub witness: Placement,
    /// True when the search ran to completion, proving `m` maximal.
    pub optimal: bool,
}

/// Largest board the exact solver accepts.
pub const EXACT_MAX_N: usize = 11;

/// Exact maximum by branch and bound over line colourings.
///
/// Rows and columns are enumerated outright (row 0 is white, by colour
/// symmetry), diagonals by depth-first search with the bound
/// `min(reachable white, reachable black)`, and the antidiagonals last by an
/// exact knapsack: each antidiagonal independently contributes either its
/// white or its black candidates. The search starts from the
/// [`jubin_construction`] value and stops early at `budget`, in which case
/// the best placement found is returned with `optimal = false`.
///
/// The witness is deterministic: the first optimal colouring in enumeration
/// order.
pub fn solve_exact(n: usize, budget: Duration) -> QueensResult {
    assert!(n <= EXACT_MAX_N, "exact search is limited to n <= {EXACT_MAX_N}");
    let start = jubin_construction(n);
    if n <= 2 {
        return QueensResult { n, m: 0, witness: Placement::empty(n), optimal: true };
    }
    let deadline = Instant::now() + budget;
    let global = AtomicUsize::new(start.m());
    let timed_out = AtomicBool::new(false);
    let rows: Vec<u32> = (0..1u32 << n).filter(|r| r & 1 == 1).collect();
    let found: Vec<Option<(usize, Placement)>> = rows
        .par_iter()
        .map(|&rmask| {
            let mut search = Search::new(n, &global, deadline, &timed_out);
            for cmask in 0..1u32 << n {
                if search.expired() {
                    break;
                }
                search.colour_pair(rmask, cmask);
            }
            search.best
        })
        .collect();
    let optimal = !timed_out.load(Ordering::Relaxed);
    let best = found.into_iter().flatten().fold(None::<(usize, Placement)>, |acc, (m, p)| match acc {
        Some((am, _)) if am >= m => acc,
        _ => Some((m, p)),
    });
    let (m, witness) = match best {
        Some((m, p)) if m >= start.m() => (m, p),
        _ => (start.m(), start),
    };
    debug_assert!(verify(&witness));
    QueensResult { n, m, witness, optimal }
}

struct Search<'a> {
    n: usize,
    global: &'a AtomicUsize,
    deadline: Instant,
    timed_out: &'a AtomicBool,
    best: Option<(usize, Placement)>,
    /// Per diagonal: antidiagonal indices of white and black candidate cells.
    diag_white: Vec<Vec<usize>>,
    diag_black: Vec<Vec<usize>>,
    anti_white: Vec<usize>,
    anti_black: Vec<usize>,
    choice: Vec<bool>,
    rmask: u32,
    cmask: u32,
    nodes: u64,
}

impl<'a> Search<'a> {
    fn new(n: usize, global: &'a AtomicUsize, deadline: Instant, timed_out: &'a AtomicBool) -> Self {
        let lines = 2 * n - 1;
        Self {
            n,
            global,
            deadline,
            timed_out,
            best: None,
            diag_white: vec![Vec::new(); lines],
            diag_black: vec![Vec::new(); lines],
            anti_white: vec![0; lines],
            anti_black: vec![0; lines],
            choice: vec![false; lines],
            rmask: 0,
            cmask: 0,
            nodes: 0,
        }
    }

    fn expired(&self) -> bool {
        if self.timed_out.load(Ordering::Relaxed) {
            return true;
        }
        if Instant::now() >= self.deadline {
            self.timed_out.store(true, Ordering::Relaxed);
            return true;
        }
        false
    }

    /// Smallest value worth reaching: anything below the global best is
    /// useless, and within this task only strict improvements matter. Ties
    /// with the global best are kept so every task reports its first optimum.
    fn threshold(&self) -> usize {
        let local = self.best.as_ref().map_or(0, |b| b.0 + 1);
        self.global.load(Ordering::Relaxed).max(local)
    }

    fn colour_pair(&mut self, rmask: u32, cmask: u32) {
        let n = self.n;
        let (rw, cw) = ((rmask.count_ones()) as usize, (cmask.count_ones()) as usize);
        let whites = rw * cw;
        let blacks = (n - rw) * (n - cw);
        if whites.min(blacks) < self.threshold() {
            return;
        }
        for d in 0..2 * n - 1 {
            self.diag_white[d].clear();
            self.diag_black[d].clear();
        }
        for r in 0..n {
            for c in 0..n {
                let (wr, wc) = (rmask >> r & 1 == 1, cmask >> c & 1 == 1);
                let d = c + n - 1 - r;
                if wr && wc {
                    self.diag_white[d].push(r + c);
                } else if !wr && !wc {
                    self.diag_black[d].push(r + c);
                }
            }
        }
        self.rmask = rmask;
        self.cmask = cmask;
        self.anti_white.iter_mut().for_each(|x| *x = 0);
        self.anti_black.iter_mut().for_each(|x| *x = 0);
        let rest_white: usize = self.diag_white.iter().map(Vec::len).sum();
        let rest_black: usize = self.diag_black.iter().map(Vec::len).sum();
        self.diagonals(0, 0, 0, rest_white, rest_black);
    }

    fn diagonals(&mut self, d: usize, white: usize, black: usize, rest_white: usize, rest_black: usize) {
        if (white + rest_white).min(black + rest_black) < self.threshold() {
            return;
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) && self.expired() {
            return;
        }
        if d == 2 * self.n - 1 {
            self.leaf();
            return;
        }
        let (dw, db) = (self.diag_white[d].len(), self.diag_black[d].len());
        let (rest_white, rest_black) = (rest_white - dw, rest_black - db);
        // White first, so the enumeration order is fixed.
        for colour in [true, false] {
            let cells = if colour { &self.diag_white[d] } else { &self.diag_black[d] };
            let counts = if colour { &mut self.anti_white } else { &mut self.anti_black };
            for &a in cells {
                counts[a] += 1;
            }
            self.choice[d] = colour;
            let (w, b) = if colour { (white + dw, black) } else { (white, black + db) };
            self.diagonals(d + 1, w, b, rest_white, rest_black);
            let cells = if colour { &self.diag_white[d] } else { &self.diag_black[d] };
            let counts = if colour { &mut self.anti_white } else { &mut self.anti_black };
            for &a in cells {
                counts[a] -= 1;
            }
        }
    }

    /// Knapsack over antidiagonals: `best_black[w]` is the most black
    /// queens compatible with exactly `w` white ones.
    fn leaf(&mut self) {
        let lines = self.anti_white.len();
        let total: usize = self.anti_white.iter().sum();
        let mut table = vec![vec![None::<usize>; total + 1]; lines + 1];
        table[0][0] = Some(0);
        for a in 0..lines {
            let (aw, ab) = (self.anti_white[a], self.anti_black[a]);
            for w in 0..=total {
                if let Some(b) = table[a][w] {
                    let keep = &mut table[a + 1][w];
                    *keep = Some(keep.map_or(b + ab, |x| x.max(b + ab)));
                    if w + aw <= total {
                        let take = &mut table[a + 1][w + aw];
                        *take = Some(take.map_or(b, |x| x.max(b)));
                    }
                }
            }
        }
        let (mut best_w, mut best_m) = (0, 0);
        for w in 0..=total {
            if let Some(b) = table[lines][w] {
                if w.min(b) > best_m {
                    best_m = w.min(b);
                    best_w = w;
                }
            }
        }
        if best_m < self.threshold() {
            return;
        }
        // Walk back to recover which antidiagonals are white.
        let mut anti_is_white = vec![false; lines];
        let mut w = best_w;
        let mut b = table[lines][w].unwrap();
        for a in (0..lines).rev() {
            let (aw, ab) = (self.anti_white[a], self.anti_black[a]);
            if w >= aw && table[a][w - aw] == Some(b) {
                anti_is_white[a] = true;
                w -= aw;
            } else {
                debug_assert!(table[a][w] == Some(b - ab));
                b -= ab;
            }
        }
        let placement = self.materialize(&anti_is_white);
        let m = placement.m();
        debug_assert_eq!(m, best_m);
        self.global.fetch_max(m, Ordering::Relaxed);
        self.best = Some((m, placement));
    }

    fn materialize(&self, anti_is_white: &[bool]) -> Placement {
        let n = self.n;
        let (mut white, mut black) = (Vec::new(), Vec::new());
        for r in 0..n {
            for c in 0..n {
                let colours = [self.rmask >> r & 1 == 1, self.cmask >> c & 1 == 1, self.choice[c + n - 1 - r], anti_is_white[r + c]];
                if colours.iter().all(|&x| x) {
                    white.push((r, c));
                } else if colours.iter().all(|&x| !x) {
                    black.push((r, c));
                }
            }
        }
        Placement::new(n, white, black).expect("cells are on the board")
    }
}

/// Threshold line colouring. With `t = col - row`, the white lines are
/// rows `r < r1` or `r2 <= r < r3`; columns `c < c1`; antidiagonals
/// `r + c < s`; diagonals `t < t1` or `t2 <= t < t3`. Every other line is
/// black. Scaled to the unit square, the choice `r = 1/4, 1/2, 3/4`,
/// `c = 1/2`, `s = 1`, `t = -1/3, 0, 1/3` gives white and black regions of
/// area exactly `7/48` each.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Thresholds {
    r1: i64,
    r2: i64,
    r3: i64,
    c1: i64,
    s: i64,
    t1: i64,
    t2: i64,
    t3: i64,
}

impl Thresholds {
    fn base(n: i64) -> [i64; 8] {
        // Nearest integer to n * num / den, halves rounded up.
        let scale = |num: i64, den: i64| (2 * num * n + den).div_euclid(2 * den);
        [scale(1, 4), scale(1, 2), scale(3, 4), scale(1, 2), n - 1, -scale(1, 3), 0, scale(1, 3)]
    }

    fn from(v: [i64; 8]) -> Self {
        Self { r1: v[0], r2: v[1], r3: v[2], c1: v[3], s: v[4], t1: v[5], t2: v[6], t3: v[7] }
    }

    fn row_white(&self, r: i64) -> bool {
        r < self.r1 || (self.r2 <= r && r < self.r3)
    }

    fn is_white(&self, r: i64, c: i64) -> bool {
        let t = c - r;
        self.row_white(r) && c < self.c1 && r + c < self.s && (t < self.t1 || (self.t2 <= t && t < self.t3))
    }

    fn is_black(&self, r: i64, c: i64) -> bool {
        let t = c - r;
        !self.row_white(r) && c >= self.c1 && r + c >= self.s && (self.t1 <= t && t < self.t2 || t >= self.t3)
    }

    /// White and black candidate counts, one interval computation per row.
    fn counts(&self, n: i64) -> (i64, i64) {
        // Cells of [lo, hi) on the board, and of the union of two such
        // intervals (perturbed thresholds may leave them overlapping).
        let span = |lo: i64, hi: i64| (hi.min(n) - lo.max(0)).max(0);
        let union = |a: (i64, i64), b: (i64, i64)| span(a.0, a.1) + span(b.0, b.1) - span(a.0.max(b.0), a.1.min(b.1));
        let (mut white, mut black) = (0, 0);
        for r in 0..n {
            if self.row_white(r) {
                let hi = self.c1.min(self.s - r);
                white += union((0, hi.min(self.t1 + r)), (self.t2 + r, hi.min(self.t3 + r)));
            } else {
                let lo = self.c1.max(self.s - r);
                black += union((lo.max(self.t1 + r), self.t2 + r), (lo.max(self.t3 + r), n));
            }
        }
        (white, black)
    }
}

/// Peaceable placement for any `n` from the threshold colouring above,
/// tuning each of the eight thresholds within one of its scaled value to
/// absorb rounding. It meets `floor(7 n^2 / 48)` on every board size
/// checked by the tests; in general it is a lower bound only.
pub fn jubin_construction(n: usize) -> Placement {
    let ni = n as i64;
    let base = Thresholds::base(ni);
    let mut best: Option<(i64, Thresholds)> = None;
    for code in 0..3usize.pow(8) {
        let mut v = base;
        let mut k = code;
        for x in v.iter_mut() {
            *x += (k % 3) as i64 - 1;
            k /= 3;
        }
        let t = Thresholds::from(v);
        let (w, b) = t.counts(ni);
        let m = w.min(b);
        if best.is_none_or(|(bm, _)| m > bm) {
            best = Some((m, t));
        }
    }
    let (_, t) = best.expect("search space is nonempty");
    let cells = |pred: &dyn Fn(i64, i64) -> bool| -> Vec<Cell> {
        (0..ni).flat_map(|r| (0..ni).map(move |c| (r, c))).filter(|&(r, c)| pred(r, c)).map(|(r, c)| (r as usize, c as usize)).collect()
    };
    let white = cells(&|r, c| t.is_white(r, c));
    let black = cells(&|r, c| t.is_black(r, c));
    // Trim the larger army so both colours have exactly m queens.
    let m = white.len().min(black.len());
    let p = Placement::new(n, white.into_iter().take(m), black.into_iter().take(m)).expect("cells are on the board");
    debug_assert!(verify(&p));
    p
}
