//! Pass-based stepping for binary tag systems. A pass of `k = ceil(len/P)`
//! steps only ever reads the symbols at positions `0, P, 2P, ...` of the
//! current word, so those can be pulled out of packed 64-bit chunks and
//! their appendants emitted in bulk. Cycle detection runs Brent's method on
//! whole passes, then pins the exact cycle entry and length step by step.

use super::{finish, step_in_place, Detection, LengthScan, TagBudget, TagError, TagOutcome, TagRules, TagWord};

pub(crate) struct Fast {
    p: u64,
    /// Packed appendant (first symbol in the lowest bit) and its length.
    app: [(u64, u32); 2],
}

/// Running length statistics over the steps a pass performs.
pub(crate) struct Track {
    pub index: u64,
    pub len: u64,
    pub max_len: u64,
    pub cap: u64,
    pub first_violation: Option<u64>,
}

impl Track {
    pub(crate) fn new(start_len: u64, cap: u64) -> Self {
        let first_violation = (start_len > cap).then_some(0);
        Self { index: 0, len: start_len, max_len: start_len, cap, first_violation }
    }
}

impl Fast {
    pub(crate) fn new(rules: &TagRules) -> Result<Self, TagError> {
        let p = rules.deletion() as u64;
        if rules.alphabet() != 2 {
            return Err(TagError::Unsupported);
        }
        let mut app = [(0u64, 0u32); 2];
        for s in 0..2u8 {
            let a = rules.appendant(s);
            // Appending before deleting keeps every step a plain shift of the
            // symbol stream only when a word plus its appendant has at least
            // P symbols.
            if (a.len() as u64) + 1 < p || a.len() > 64 {
                return Err(TagError::Unsupported);
            }
            let bits = a.iter().enumerate().fold(0u64, |acc, (i, &b)| acc | (b as u64) << i);
            app[s as usize] = (bits, a.len() as u32);
        }
        Ok(Self { p, app })
    }

    /// Steps that one full pass over `w` performs.
    pub(crate) fn pass_len(&self, w: &TagWord) -> u64 {
        (w.len() as u64).div_ceil(self.p)
    }

    /// Advances `w` by `k <= pass_len(w)` steps.
    pub(crate) fn advance(&self, w: &mut TagWord, k: u64, track: &mut Track) {
        debug_assert!(k <= self.pass_len(w));
        let p = self.p;
        let per_chunk = 63 / p + 1;
        let (mut acc, mut acc_len) = (0u128, 0u32);
        let mut pending: Vec<(u64, u32)> = Vec::with_capacity(8);
        let mut i = 0;
        while i < k {
            let chunk = w.bits_at(i * p);
            let n = per_chunk.min(k - i);
            for j in 0..n {
                let s = ((chunk >> (j * p)) & 1) as usize;
                let (bits, len) = self.app[s];
                acc |= (bits as u128) << acc_len;
                acc_len += len;
                if acc_len >= 64 {
                    pending.push((acc as u64, 64));
                    acc >>= 64;
                    acc_len -= 64;
                }
                track.index += 1;
                track.len = (track.len + len as u64).saturating_sub(p);
                if track.len > track.max_len {
                    track.max_len = track.len;
                    if track.first_violation.is_none() && track.len > track.cap {
                        track.first_violation = Some(track.index);
                    }
                }
            }
            // Appends never disturb the bits still to be read, which all lie
            // inside the word as it was when the pass began.
            for (bits, len) in pending.drain(..) {
                w.append_bits(bits, len);
            }
            i += n;
        }
        w.append_bits(acc as u64, acc_len);
        w.drop_front((k * p) as usize);
    }

    /// Advances exactly `steps` steps (or until the word dies).
    pub(crate) fn advance_by(&self, w: &mut TagWord, mut steps: u64, track: &mut Track) {
        while steps > 0 && !w.is_empty() {
            let k = self.pass_len(w).min(steps);
            self.advance(w, k, track);
            steps -= k;
        }
    }
}

fn brent_passes(fast: &Fast, start: &TagWord, rules: &TagRules, budget: &TagBudget) -> Detection {
    if start.is_empty() {
        return Detection::Dies { at: 0 };
    }
    let cap = budget.max_word_len as u64;
    let step_limit = budget.max_steps.saturating_mul(4).saturating_add(4);
    let mut track = Track::new(start.len() as u64, cap);
    if track.first_violation.is_some() {
        return Detection::Aborted;
    }
    let mut tortoise = start.clone();
    let mut hare = start.clone();
    let (mut power, mut lambda) = (1u64, 0u64);
    loop {
        if power == lambda {
            tortoise = hare.clone();
            power *= 2;
            lambda = 0;
        }
        let k = fast.pass_len(&hare);
        fast.advance(&mut hare, k, &mut track);
        lambda += 1;
        if hare.is_empty() {
            return Detection::Dies { at: track.index };
        }
        if track.first_violation.is_some() {
            return Detection::Aborted;
        }
        if track.index > step_limit {
            return late_cycle(fast, start, rules, budget);
        }
        if hare == tortoise {
            break;
        }
    }
    // `hare` lies on the cycle; measure it one step at a time.
    let entry = hare;
    let mut w = entry.clone();
    let mut cycle = 0u64;
    loop {
        step_in_place(&mut w, rules).expect("cycling words are nonempty");
        cycle += 1;
        if w == entry {
            break;
        }
    }
    Detection::Cycle { mu: cycle_entry(fast, start, rules, cycle), lambda: cycle }
}

/// Passes can take many more steps than the budget to line up. By then the
/// word has outlived `max_steps`, so it can only resolve as a cycle with
/// `mu + lambda <= max_steps`; then `x_M` (`M = max_steps`) lies on a cycle
/// of length at most `M`. Check that directly, comparing words only when
/// their lengths agree.
fn late_cycle(fast: &Fast, start: &TagWord, rules: &TagRules, budget: &TagBudget) -> Detection {
    let m = budget.max_steps;
    let mut anchor = start.clone();
    let mut track = Track::new(start.len() as u64, budget.max_word_len as u64);
    fast.advance_by(&mut anchor, m, &mut track);
    if track.first_violation.is_some() || anchor.is_empty() {
        return Detection::Aborted;
    }
    let mut w = anchor.clone();
    for k in 1..=m {
        step_in_place(&mut w, rules).expect("the word outlives the budget");
        if w.len() == anchor.len() && w == anchor {
            return Detection::Cycle { mu: cycle_entry(fast, start, rules, k), lambda: k };
        }
    }
    Detection::Aborted
}

/// Smallest `mu` with `x_mu = x_(mu+cycle)`. The predicate is monotone in
/// `mu`, so both words move in bulk and only the chunk where it flips is
/// replayed step by step.
fn cycle_entry(fast: &Fast, start: &TagWord, rules: &TagRules, cycle: u64) -> u64 {
    let mut scratch = Track::new(0, u64::MAX);
    let mut a = start.clone();
    let mut b = start.clone();
    fast.advance_by(&mut b, cycle, &mut scratch);
    let mut mu = 0;
    while a != b {
        let k = fast.pass_len(&a).min(fast.pass_len(&b));
        let (a0, b0) = (a.clone(), b.clone());
        fast.advance(&mut a, k, &mut scratch);
        fast.advance(&mut b, k, &mut scratch);
        if a == b {
            a = a0;
            b = b0;
            while a != b {
                step_in_place(&mut a, rules).expect("nonempty");
                step_in_place(&mut b, rules).expect("nonempty");
                mu += 1;
            }
            break;
        }
        mu += k;
    }
    mu
}

pub(crate) fn scan_fast(fast: &Fast, start: &TagWord, last: u64, cap: u64) -> LengthScan {
    let mut w = start.clone();
    let mut track = Track::new(w.len() as u64, cap);
    fast.advance_by(&mut w, last, &mut track);
    LengthScan { max_len: track.max_len, first_violation: track.first_violation }
}

/// Same classification as [`super::trajectory`], computed pass by pass.
/// Requires a binary alphabet and appendants of length at least `P - 1`
/// (true of Post's rules).
pub fn accelerated_trajectory(start: &TagWord, rules: &TagRules, budget: &TagBudget) -> Result<TagOutcome, TagError> {
    let fast = Fast::new(rules)?;
    let det = brent_passes(&fast, start, rules, budget);
    Ok(finish(det, budget, |last| scan_fast(&fast, start, last, budget.max_word_len as u64)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tag::{post_rules, sigma, trajectory};
    use rand::{Rng, SeedableRng};

    #[test]
    fn passes_match_single_steps() {
        let rules = post_rules();
        let fast = Fast::new(&rules).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..300 {
            let len = rng.gen_range(1..200);
            let symbols: Vec<u8> = (0..len).map(|_| rng.gen_range(0..2)).collect();
            let start = TagWord::from_symbols(2, &symbols);
            let mut bulk = start.clone();
            let k = fast.pass_len(&bulk);
            let mut track = Track::new(len as u64, u64::MAX);
            fast.advance(&mut bulk, k, &mut track);
            let mut single = start.clone();
            let mut max_len = len as u64;
            for _ in 0..k {
                step_in_place(&mut single, &rules).unwrap();
                max_len = max_len.max(single.len() as u64);
            }
            assert_eq!(bulk, single);
            assert_eq!(track.max_len, max_len);
            assert_eq!(track.len, single.len() as u64);
        }
    }

    #[test]
    fn agrees_with_plain_stepper() {
        let rules = post_rules();
        let budget = TagBudget::default();
        for n in 1..=15 {
            let w = sigma(n);
            assert_eq!(accelerated_trajectory(&w, &rules, &budget).unwrap(), trajectory(&w, &rules, &budget), "n={n}");
        }
        for tight in [TagBudget { max_steps: 100, max_word_len: 1000 }, TagBudget { max_steps: 10_000, max_word_len: 40 }] {
            for n in [2, 5, 7, 10] {
                let w = sigma(n);
                assert_eq!(accelerated_trajectory(&w, &rules, &tight).unwrap(), trajectory(&w, &rules, &tight));
            }
        }
    }
}
