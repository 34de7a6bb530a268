use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use super::sieve::primes_below;

/// Default number of strong-probable-prime rounds above 2^64.
pub const DEFAULT_PRP_ROUNDS: u32 = 64;

/// Bases that make Miller-Rabin deterministic for every n < 2^64.
const U64_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimeStatus {
    Prime,
    Composite,
    ProbablePrime,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimalityVerdict {
    pub status: PrimeStatus,
    /// For composites: a small divisor or a Miller-Rabin witness base.
    pub witness: Option<u64>,
}

impl PrimalityVerdict {
    fn prime() -> Self {
        Self { status: PrimeStatus::Prime, witness: None }
    }

    fn composite(witness: Option<u64>) -> Self {
        Self { status: PrimeStatus::Composite, witness }
    }

    /// True for both proven and probable primes.
    pub fn is_prime_like(&self) -> bool {
        self.status != PrimeStatus::Composite
    }
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn strong_probable_prime_u64(n: u64, a: u64) -> bool {
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    let mut x = pow_mod(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Deterministic primality for machine words.
pub fn is_prime_u64(n: u64) -> bool {
    verdict_u64(n).status == PrimeStatus::Prime
}

fn verdict_u64(n: u64) -> PrimalityVerdict {
    if n < 2 {
        return PrimalityVerdict::composite(None);
    }
    for &p in &U64_BASES {
        if n == p {
            return PrimalityVerdict::prime();
        }
        if n.is_multiple_of(p) {
            return PrimalityVerdict::composite(Some(p));
        }
    }
    for &a in &U64_BASES {
        if !strong_probable_prime_u64(n, a) {
            return PrimalityVerdict::composite(Some(a));
        }
    }
    PrimalityVerdict::prime()
}

/// SplitMix64, used to draw reproducible Miller-Rabin bases.
pub(crate) fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn strong_probable_prime(n: &BigUint, n_minus_1: &BigUint, d: &BigUint, s: u64, a: &BigUint) -> bool {
    let mut x = a.modpow(d, n);
    if x.is_one() || &x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if &x == n_minus_1 {
            return true;
        }
    }
    false
}

/// Primality with the default round count.
pub fn is_prime(n: &BigUint) -> PrimalityVerdict {
    is_prime_with_rounds(n, DEFAULT_PRP_ROUNDS)
}

/// Deterministic below 2^64; above that, small-prime trial division followed
/// by `rounds` strong-probable-prime tests (base 2 first, then bases drawn
/// from a fixed-seed generator).
pub fn is_prime_with_rounds(n: &BigUint, rounds: u32) -> PrimalityVerdict {
    if let Some(small) = n.to_u64() {
        return verdict_u64(small);
    }
    for &p in primes_below(2000) {
        if (n % p).is_zero() {
            return PrimalityVerdict::composite(Some(p as u64));
        }
    }
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let two = BigUint::from(2u32);
    if !strong_probable_prime(n, &n_minus_1, &d, s, &two) {
        return PrimalityVerdict::composite(Some(2));
    }
    let n_minus_3 = n - 3u32;
    let mut state = 0x0005_EED0_FA11_u64;
    for _ in 1..rounds {
        let raw = splitmix(&mut state);
        let a = BigUint::from(raw) % &n_minus_3 + &two;
        if !strong_probable_prime(n, &n_minus_1, &d, s, &a) {
            return PrimalityVerdict::composite(Some(raw));
        }
    }
    PrimalityVerdict { status: PrimeStatus::ProbablePrime, witness: None }
}

/// Single base-2 strong test; a fast composite filter for very large inputs.
pub fn is_base2_strong_probable_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if !n.bit(0) {
        return false;
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    strong_probable_prime(n, &n_minus_1, &d, s, &BigUint::from(2u32))
}
