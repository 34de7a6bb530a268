//! Digit-function iterations: prime-factor concatenation in bases 10 and 2,
//! home primes, power trains, and the concatenation-prime families.

mod climb;
mod concat;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{self, concat_digits, FactorBudget, FactorError};

pub use climb::{climb, f_sequence, f_terms, home_prime, ClimbBudget, ClimbOutcome, ClimbStatus, FTerm};
pub use concat::{memorable_concat, search_first_prime, smarandache, ConcatKind, PrimeSearchReport};

/// The iterated maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MapKind {
    /// `p1 e1 p2 e2 ...` in decimal, exponents 1 omitted.
    FactorConcat10,
    /// The same written and read in binary.
    FactorConcat2,
    /// All prime factors with multiplicity, ascending, in decimal.
    HomePrime,
    /// `d1^d2 * d3^d4 * ...` over the decimal digits.
    PowerTrain,
}

impl MapKind {
    pub fn needs_factoring(self) -> bool {
        self != MapKind::PowerTrain
    }
}

/// `f(n)` or `f_2(n)`: concatenation of each prime and its exponent (the
/// exponent omitted when it is 1), primes ascending, in the given base.
pub fn f_factor_concat(n: &BigUint, base: u32, budget: &FactorBudget) -> Result<BigUint, FactorError> {
    assert!(base == 2 || base == 10, "base must be 2 or 10");
    let f = arith::factor_with(n, budget)?;
    let mut parts = Vec::with_capacity(2 * f.factors().len());
    for (p, e) in f.factors() {
        parts.push(p.clone());
        if *e > 1 {
            parts.push(BigUint::from(*e));
        }
    }
    Ok(concat_digits(&parts, base))
}

/// Decimal concatenation of the prime factors of `n` with multiplicity.
pub fn home_prime_step(n: &BigUint, budget: &FactorBudget) -> Result<BigUint, FactorError> {
    let f = arith::factor_with(n, budget)?;
    let parts: Vec<BigUint> = f.primes_with_multiplicity().cloned().collect();
    Ok(concat_digits(&parts, 10))
}

/// `d1^d2 * d3^d4 * ...` over the decimal digits of `n`, a trailing unpaired
/// digit multiplying in as itself, and `0^0 = 1`.
pub fn power_train(n: &BigUint) -> BigUint {
    let d = arith::digits(n, 10);
    let mut acc = BigUint::one();
    for pair in d.chunks(2) {
        match *pair {
            [b, e] => acc *= arith::pow(b as u32, e as u32),
            [b] => acc *= BigUint::from(b),
            _ => unreachable!(),
        }
        if acc.is_zero() {
            break;
        }
    }
    acc
}

pub fn power_train_u64(n: u64) -> BigUint {
    power_train(&BigUint::from(n))
}

/// All `n <= limit` with `power_train(n) = n`, ascending.
pub fn power_train_fixed_points(limit: u64) -> Vec<u64> {
    (1..=limit)
        .filter(|&n| power_train_u64(n).to_u64() == Some(n))
        .collect()
}

/// The eleven power-train fixed points known: 1..9, 2592 and
/// `2^46 3^6 5^10 7^2`.
pub fn known_power_train_fixed_points() -> Vec<BigUint> {
    let mut out: Vec<BigUint> = (1u32..=9).map(BigUint::from).collect();
    out.push(BigUint::from(2592u32));
    out.push("24547284284866560000000000".parse().unwrap());
    out
}

/// One application of `kind`.
pub fn apply(kind: MapKind, n: &BigUint, budget: &FactorBudget) -> Result<BigUint, FactorError> {
    match kind {
        MapKind::FactorConcat10 => f_factor_concat(n, 10, budget),
        MapKind::FactorConcat2 => f_factor_concat(n, 2, budget),
        MapKind::HomePrime => home_prime_step(n, budget),
        MapKind::PowerTrain => Ok(power_train(n)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(n: u64, base: u32) -> u64 {
        f_factor_concat(&BigUint::from(n), base, &FactorBudget::default()).unwrap().to_u64().unwrap()
    }

    #[test]
    fn base_ten_table() {
        let printed = [2, 3, 22, 5, 23, 7, 23, 32, 25, 11, 223, 13, 27, 35, 24, 17, 232];
        let got: Vec<u64> = (2..=18).map(|n| f(n, 10)).collect();
        assert_eq!(got, printed);
    }

    #[test]
    fn base_two_table() {
        let printed = [2, 3, 10, 5, 11, 7, 11, 14, 21, 11, 43, 13, 23, 29, 20, 17, 46];
        let got: Vec<u64> = (2..=18).map(|n| f(n, 2)).collect();
        assert_eq!(got, printed);
    }

    #[test]
    fn primes_are_fixed() {
        for p in [2u64, 7, 97, 2213, 1_000_003] {
            assert_eq!(f(p, 10), p);
            assert_eq!(f(p, 2), p);
        }
    }

    #[test]
    fn composite_fixed_points() {
        assert_eq!(f(13_532_385_396_179, 10), 13_532_385_396_179);
        assert_eq!(f(255_987, 2), 255_987);
    }

    #[test]
    fn home_prime_steps() {
        let b = FactorBudget::default();
        let step = |n: u64| home_prime_step(&BigUint::from(n), &b).unwrap().to_u64().unwrap();
        assert_eq!(step(8), 222);
        assert_eq!(step(9), 33);
        assert_eq!(step(13), 13);
    }

    #[test]
    fn power_trains() {
        assert_eq!(power_train_u64(39), BigUint::from(19683u32));
        assert_eq!(power_train_u64(623), BigUint::from(108u32));
        assert_eq!(power_train_u64(2592), BigUint::from(2592u32));
        assert_eq!(power_train_u64(7), BigUint::from(7u32));
        assert_eq!(power_train_u64(0), BigUint::zero());
        assert_eq!(power_train_u64(100), BigUint::zero());
        assert_eq!(power_train_u64(1000), BigUint::one());
    }

    #[test]
    fn power_train_fixed_set() {
        let mut expected: Vec<u64> = (1..=9).collect();
        assert_eq!(power_train_fixed_points(9), expected);
        expected.push(2592);
        assert_eq!(power_train_fixed_points(10_000), expected);
        for n in known_power_train_fixed_points() {
            assert_eq!(power_train(&n), n);
        }
    }
}
