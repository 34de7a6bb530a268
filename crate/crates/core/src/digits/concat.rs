use std::ops::RangeInclusive;

use num_bigint::BigUint;

use crate::arith::{self, primes_below};

/// The two concatenation families searched for primes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConcatKind {
    /// `1 2 ... n (n-1) ... 1`.
    Memorable,
    /// `1 2 ... n`.
    Smarandache,
}

/// Decimal concatenation of `1, 2, ..., n, n-1, ..., 1`.
pub fn memorable_concat(n: u64) -> BigUint {
    assert!(n >= 1);
    let parts: Vec<u64> = (1..=n).chain((1..n).rev()).collect();
    arith::concat_digits_u64(&parts, 10)
}

/// Decimal concatenation of `1, 2, ..., n`.
pub fn smarandache(n: u64) -> BigUint {
    assert!(n >= 1);
    let parts: Vec<u64> = (1..=n).collect();
    arith::concat_digits_u64(&parts, 10)
}

fn build(kind: ConcatKind, n: u64) -> BigUint {
    match kind {
        ConcatKind::Memorable => memorable_concat(n),
        ConcatKind::Smarandache => smarandache(n),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PrimeSearchReport {
    /// `n` whose value passed the probable-prime test.
    pub primes: Vec<u64>,
    /// `n` ruled out by a small prime divisor, with that divisor.
    pub excluded: Vec<(u64, u32)>,
    /// `n` that reached the probable-prime test and failed it.
    pub composite: Vec<u64>,
}

/// Bound on the primes used to sieve before running probable-prime tests.
const SIEVE_BOUND: u32 = 2000;

/// Residues of the concatenation values modulo one small prime, advanced one
/// `n` at a time without building the big numbers.
struct Residues {
    p: u64,
    /// `1 2 ... n` mod p.
    left: u64,
    /// `(n-1) ... 1` mod p.
    right: u64,
    /// `10^len(right)` mod p.
    right_shift: u64,
}

fn dec_len(n: u64) -> u32 {
    n.checked_ilog10().map_or(1, |l| l + 1)
}

fn ten_pow_mod(k: u32, p: u64) -> u64 {
    arith::prime::pow_mod(10, k as u64, p)
}

impl Residues {
    fn new(p: u32) -> Self {
        Self { p: p as u64, left: 0, right: 0, right_shift: 1 % p as u64 }
    }

    /// Moves from `n - 1` to `n`.
    fn advance(&mut self, n: u64) {
        let p = self.p;
        let len = dec_len(n);
        if n >= 2 {
            // right gains n-1 at its front.
            let prev = n - 1;
            self.right = (prev % p * self.right_shift + self.right) % p;
            let prev_len = dec_len(prev);
            self.right_shift = self.right_shift * ten_pow_mod(prev_len, p) % p;
        }
        self.left = (self.left * ten_pow_mod(len, p) + n % p) % p;
    }

    fn value(&self, kind: ConcatKind) -> u64 {
        match kind {
            ConcatKind::Smarandache => self.left,
            ConcatKind::Memorable => (self.left * self.right_shift + self.right) % self.p,
        }
    }
}

/// Scans `range` for `n` whose concatenation value is a probable prime.
/// Each value is first sieved by the primes below 2000 using incrementally
/// maintained residues; survivors get a base-2 strong test and, if they
/// pass it, `prp_rounds` further rounds.
pub fn search_first_prime(kind: ConcatKind, range: RangeInclusive<u64>, prp_rounds: u32) -> PrimeSearchReport {
    let mut residues: Vec<Residues> = primes_below(SIEVE_BOUND).iter().map(|&p| Residues::new(p)).collect();
    let mut report = PrimeSearchReport::default();
    let (start, end) = (*range.start(), *range.end());
    for n in 1..=end {
        for r in residues.iter_mut() {
            r.advance(n);
        }
        if n < start.max(1) {
            continue;
        }
        let value = build(kind, n);
        let small = value < BigUint::from(SIEVE_BOUND as u64 * SIEVE_BOUND as u64);
        let divisor = residues.iter().find(|r| r.value(kind) == 0 && !(small && value == BigUint::from(r.p)));
        if let Some(r) = divisor {
            report.excluded.push((n, r.p as u32));
        } else if value > BigUint::from(1u32)
            && arith::prime::is_base2_strong_probable_prime(&value)
            && arith::is_prime_with_rounds(&value, prp_rounds).is_prime_like()
        {
            report.primes.push(n);
        } else {
            report.composite.push(n);
        }
    }
    report
}
