//! Digit strings, concatenation and the `0^0 = 1` power convention.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Digits of `n` in `base`, most significant first; `[0]` for zero.
pub fn digits(n: &BigUint, base: u32) -> Vec<u8> {
    assert!((2..=36).contains(&base), "unsupported base {base}");
    if n.is_zero() {
        return vec![0];
    }
    n.to_radix_be(base)
}

pub fn digit_len(n: &BigUint, base: u32) -> usize {
    match base {
        2 => n.bits().max(1) as usize,
        _ => digits(n, base).len(),
    }
}

/// Reads the base-`base` numerals of `parts` left to right as one numeral.
/// A zero part contributes the single digit `0`.
pub fn concat_digits(parts: &[BigUint], base: u32) -> BigUint {
    let mut acc = BigUint::zero();
    for part in parts {
        let width = digit_len(part, base) as u32;
        acc = acc * BigUint::from(base).pow(width) + part;
    }
    acc
}

pub fn concat_digits_u64(parts: &[u64], base: u32) -> BigUint {
    let parts: Vec<BigUint> = parts.iter().map(|&p| BigUint::from(p)).collect();
    concat_digits(&parts, base)
}

/// `base^exp` with `0^0 = 1`.
pub fn pow(base: u32, exp: u32) -> BigUint {
    if exp == 0 {
        return BigUint::one();
    }
    BigUint::from(base).pow(exp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn concatenation_examples() {
        assert_eq!(concat_digits_u64(&[2, 5], 10), BigUint::from(25u32));
        assert_eq!(concat_digits_u64(&[2, 3], 2), BigUint::from(11u32));
        assert_eq!(concat_digits_u64(&[7], 10), BigUint::from(7u32));
        assert_eq!(concat_digits_u64(&[7], 2), BigUint::from(7u32));
        assert_eq!(concat_digits_u64(&[10, 0, 3], 10), BigUint::from(1003u32));
    }

    #[test]
    fn concatenation_is_associative() {
        let a = concat_digits_u64(&[12, 345], 10);
        let whole = concat_digits_u64(&[12, 345, 6789], 10);
        assert_eq!(concat_digits(&[a, BigUint::from(6789u32)], 10), whole);
    }

    #[test]
    fn zero_to_the_zero() {
        assert_eq!(pow(0, 0), BigUint::one());
        assert_eq!(pow(0, 3), BigUint::zero());
        assert_eq!(pow(3, 9), BigUint::from(19683u32));
    }

    #[test]
    fn digit_lengths() {
        assert_eq!(digit_len(&BigUint::zero(), 10), 1);
        assert_eq!(digit_len(&BigUint::from(1000u32), 10), 4);
        assert_eq!(digit_len(&BigUint::from(8u32), 2), 4);
        assert_eq!(digits(&BigUint::from(2592u32), 10), vec![2, 5, 9, 2]);
    }
}
