//! Tag systems: read the first symbol, append its appendant, delete the
//! first `P` symbols. Post's system (`0 -> 00`, `1 -> 1101`, `P = 3`) is the
//! main case. Trajectories are classified as dying (reaching the empty
//! word), cycling, or unresolved within a budget.

mod accel;
mod checkpoint;
mod word;

use rayon::prelude::*;

pub use accel::accelerated_trajectory;
pub use checkpoint::{LongRun, LongRunStatus};
pub use word::TagWord;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TagError {
    #[error("the empty word has no successor")]
    EmptyWord,
    #[error("invalid rules: {0}")]
    Rules(String),
    #[error("the accelerated stepper needs a binary alphabet and appendants of length at least P - 1")]
    Unsupported,
    #[error("trajectory of a length-{len} word unresolved within the budget")]
    Unresolved { len: usize },
    #[error("checkpoint: {0}")]
    Checkpoint(String),
}

/// Alphabet size `M`, deletion number `P`, and one appendant per symbol.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TagRules {
    alphabet: u32,
    deletion: usize,
    appendants: Vec<Vec<u8>>,
}

impl TagRules {
    pub fn new(alphabet: u32, deletion: usize, appendants: Vec<Vec<u8>>) -> Result<Self, TagError> {
        if !(2..=256).contains(&alphabet) {
            return Err(TagError::Rules(format!("alphabet size {alphabet} not in 2..=256")));
        }
        if deletion == 0 {
            return Err(TagError::Rules("deletion number must be positive".into()));
        }
        if appendants.len() != alphabet as usize {
            return Err(TagError::Rules(format!("{} appendants for {alphabet} symbols", appendants.len())));
        }
        if appendants.iter().flatten().any(|&s| s as u32 >= alphabet) {
            return Err(TagError::Rules("appendant symbol outside the alphabet".into()));
        }
        Ok(Self { alphabet, deletion, appendants })
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    pub fn deletion(&self) -> usize {
        self.deletion
    }

    pub fn appendant(&self, symbol: u8) -> &[u8] {
        &self.appendants[symbol as usize]
    }

    /// Stable 64-bit FNV-1a digest of the rules, stored in checkpoints.
    pub fn fingerprint(&self) -> u64 {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut eat = |b: u8| {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        };
        self.alphabet.to_le_bytes().into_iter().for_each(&mut eat);
        (self.deletion as u64).to_le_bytes().into_iter().for_each(&mut eat);
        for a in &self.appendants {
            (a.len() as u64).to_le_bytes().into_iter().for_each(&mut eat);
            a.iter().copied().for_each(&mut eat);
        }
        h
    }
}

/// Post's rules: `M = 2`, `P = 3`, `0 -> 00`, `1 -> 1101`.
pub fn post_rules() -> TagRules {
    TagRules::new(2, 3, vec![vec![0, 0], vec![1, 1, 0, 1]]).expect("valid rules")
}

/// Appends the appendant of the first symbol, then deletes
/// `min(P, length)` leading symbols.
pub fn step(w: &TagWord, rules: &TagRules) -> Result<TagWord, TagError> {
    let mut next = w.clone();
    step_in_place(&mut next, rules)?;
    Ok(next)
}

pub(crate) fn step_in_place(w: &mut TagWord, rules: &TagRules) -> Result<(), TagError> {
    let first = w.first().ok_or(TagError::EmptyWord)?;
    for &s in rules.appendant(first) {
        w.push(s);
    }
    w.drop_front(rules.deletion);
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TagStatus {
    Dies,
    Cycles,
    Unresolved,
}

/// Limits on one trajectory.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TagBudget {
    /// A trajectory resolves only if it dies or closes its cycle within this
    /// many steps.
    pub max_steps: u64,
    /// ... and never holds a word longer than this.
    pub max_word_len: usize,
}

impl Default for TagBudget {
    fn default() -> Self {
        Self { max_steps: 50_000_000, max_word_len: 1 << 20 }
    }
}

/// Classification of one trajectory `x0, x1, ...`.
///
/// For a word that dies at `x_D = ε`: `words = D + 1` (the empty word
/// counted), `cycle_len = 1`, `steps = D`. For a word whose first repeated
/// word is `x_mu = x_(mu+lambda)`: `words = mu` (words before the cycle),
/// `cycle_len = lambda`, `steps = mu + lambda`. `max_length` is the longest
/// word among those counted.
///
/// Unresolved outcomes report `words = cycle_len = 0`; `steps` is the first
/// index whose word exceeds the length cap, or `max_steps` if none within
/// reach, and `max_length` is the longest word in `x0 ..= x_steps`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TagOutcome {
    pub status: TagStatus,
    pub words: u64,
    pub cycle_len: u64,
    pub max_length: u64,
    pub steps: u64,
}

impl TagOutcome {
    /// Number of distinct words in the trajectory.
    pub fn distinct_words(&self) -> u64 {
        match self.status {
            TagStatus::Dies => self.words,
            TagStatus::Cycles => self.words + self.cycle_len,
            TagStatus::Unresolved => 0,
        }
    }
}

/// What a cycle/death search found, before the budget is applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Detection {
    Dies { at: u64 },
    Cycle { mu: u64, lambda: u64 },
    /// Search limit hit or a word longer than the cap appeared.
    Aborted,
}

/// Longest word and first over-long word among `x0 ..= x_last`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct LengthScan {
    pub max_len: u64,
    pub first_violation: Option<u64>,
}

/// Turns a detection into the budgeted outcome. `scan(last)` must report
/// on `x0 ..= x_last`.
pub(crate) fn finish(det: Detection, budget: &TagBudget, mut scan: impl FnMut(u64) -> LengthScan) -> TagOutcome {
    let resolved = match det {
        Detection::Dies { at } => Some((TagStatus::Dies, at + 1, 1, at)),
        Detection::Cycle { mu, lambda } => Some((TagStatus::Cycles, mu, lambda, mu + lambda)),
        Detection::Aborted => None,
    };
    if let Some((status, words, cycle_len, steps)) = resolved {
        if steps <= budget.max_steps {
            let s = scan(steps);
            if s.first_violation.is_none() {
                return TagOutcome { status, words, cycle_len, max_length: s.max_len, steps };
            }
        }
    }
    let bound = match resolved {
        Some((_, _, _, steps)) if steps < budget.max_steps => steps,
        _ => budget.max_steps,
    };
    let s = scan(bound);
    let steps = s.first_violation.unwrap_or(bound);
    let max_length = if steps == bound { s.max_len } else { scan(steps).max_len };
    TagOutcome { status: TagStatus::Unresolved, words: 0, cycle_len: 0, max_length, steps }
}

/// Plain single-step trajectory with Brent's cycle detection. Words are
/// compared exactly, so a reported cycle is never a hash coincidence.
pub fn trajectory(start: &TagWord, rules: &TagRules, budget: &TagBudget) -> TagOutcome {
    let det = brent_single(start, rules, budget);
    finish(det, budget, |last| scan_single(start, rules, last, budget.max_word_len))
}

fn brent_single(start: &TagWord, rules: &TagRules, budget: &TagBudget) -> Detection {
    if start.is_empty() {
        return Detection::Dies { at: 0 };
    }
    let limit = budget.max_steps.saturating_mul(4).saturating_add(4);
    let cap = budget.max_word_len;
    if start.len() > cap {
        return Detection::Aborted;
    }
    let mut tortoise = start.clone();
    let mut hare = start.clone();
    let mut hare_index = 0u64;
    let (mut power, mut lambda) = (1u64, 0u64);
    loop {
        if power == lambda {
            tortoise = hare.clone();
            power *= 2;
            lambda = 0;
        }
        step_in_place(&mut hare, rules).expect("nonempty");
        hare_index += 1;
        lambda += 1;
        if hare.is_empty() {
            return Detection::Dies { at: hare_index };
        }
        if hare.len() > cap || hare_index > limit {
            return Detection::Aborted;
        }
        if hare == tortoise {
            break;
        }
    }
    // Cycle length is `lambda`; find the first repeated index.
    let mut a = start.clone();
    let mut b = start.clone();
    for _ in 0..lambda {
        step_in_place(&mut b, rules).expect("cycling words are nonempty");
    }
    let mut mu = 0;
    while a != b {
        step_in_place(&mut a, rules).expect("nonempty");
        step_in_place(&mut b, rules).expect("nonempty");
        mu += 1;
    }
    Detection::Cycle { mu, lambda }
}

fn scan_single(start: &TagWord, rules: &TagRules, last: u64, cap: usize) -> LengthScan {
    let mut w = start.clone();
    let mut max_len = w.len() as u64;
    let mut first_violation = (w.len() > cap).then_some(0);
    for i in 1..=last {
        if w.is_empty() {
            break;
        }
        step_in_place(&mut w, rules).expect("nonempty");
        max_len = max_len.max(w.len() as u64);
        if first_violation.is_none() && w.len() > cap {
            first_violation = Some(i);
        }
    }
    LengthScan { max_len, first_violation }
}

/// Every word from `start` up to and including `x_steps` (or the empty
/// word, whichever comes first).
pub fn trajectory_words(start: &TagWord, rules: &TagRules, steps: usize) -> Vec<TagWord> {
    let mut out = vec![start.clone()];
    let mut w = start.clone();
    while out.len() <= steps && !w.is_empty() {
        step_in_place(&mut w, rules).expect("nonempty");
        out.push(w.clone());
    }
    out
}

/// `(100)^n`.
pub fn sigma(n: usize) -> TagWord {
    let symbols: Vec<u8> = std::iter::repeat_n([1, 0, 0], n).flatten().collect();
    TagWord::from_symbols(2, &symbols)
}

/// One row of the table over `sigma(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SigmaRow {
    pub n: usize,
    pub outcome: TagOutcome,
}

impl SigmaRow {
    /// Words before the cycle or death, in the OEIS convention.
    pub fn words(&self) -> u64 {
        self.outcome.words
    }

    /// Cycle length, 1 for words that die.
    pub fn cycle_len(&self) -> u64 {
        self.outcome.cycle_len
    }

    pub fn dies(&self) -> bool {
        self.outcome.status == TagStatus::Dies
    }
}

/// Classifies `sigma(1) ..= sigma(n_max)` under Post's rules with the
/// accelerated stepper, in parallel; rows come back ordered by `n`.
pub fn classify_sigma_range(n_max: usize, budget: &TagBudget) -> Vec<SigmaRow> {
    let rules = post_rules();
    (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let outcome = accelerated_trajectory(&sigma(n), &rules, budget).expect("Post's rules are supported");
            SigmaRow { n, outcome }
        })
        .collect()
}

/// Largest number of distinct words in the trajectory of any binary word of
/// length `n` under Post's rules, by exhausting all `2^n` starts.
pub fn max_words_over_length(n: usize, budget: &TagBudget) -> Result<u64, TagError> {
    assert!(n <= 30, "exhaustive enumeration is limited to n <= 30");
    let rules = post_rules();
    (0u64..1 << n)
        .into_par_iter()
        .map(|bits| {
            let symbols: Vec<u8> = (0..n).map(|i| ((bits >> (n - 1 - i)) & 1) as u8).collect();
            let out = accelerated_trajectory(&TagWord::from_symbols(2, &symbols), &rules, budget)?;
            match out.status {
                TagStatus::Unresolved => Err(TagError::Unresolved { len: n }),
                _ => Ok(out.distinct_words()),
            }
        })
        .try_reduce(|| 0, |a, b| Ok(a.max(b)))
}
