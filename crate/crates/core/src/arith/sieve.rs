use std::sync::OnceLock;

/// Upper end of the shared prime table. Covers trial division to 10^6 and
/// the default second-stage bound of the elliptic-curve method.
pub const TABLE_LIMIT: u32 = 1 << 23;

/// Primes `<= limit` by the sieve of Eratosthenes (odd-only bitmap).
pub fn primes_up_to(limit: u32) -> Vec<u32> {
    if limit < 2 {
        return Vec::new();
    }
    let half = (limit as usize - 1) / 2; // index i <-> 2i+1, i >= 1
    let mut composite = vec![false; half + 1];
    let mut i = 1;
    while (2 * i + 1) * (2 * i + 1) <= limit as usize {
        if !composite[i] {
            let p = 2 * i + 1;
            let mut j = (p * p - 1) / 2;
            while j <= half {
                composite[j] = true;
                j += p;
            }
        }
        i += 1;
    }
    let mut out = Vec::with_capacity(limit as usize / 10 + 8);
    out.push(2);
    out.extend(
        (1..=half)
            .filter(|&i| !composite[i])
            .map(|i| (2 * i + 1) as u32),
    );
    out
}

/// Shared table of all primes up to [`TABLE_LIMIT`].
pub fn prime_table() -> &'static [u32] {
    static TABLE: OnceLock<Vec<u32>> = OnceLock::new();
    TABLE.get_or_init(|| primes_up_to(TABLE_LIMIT))
}

/// Primes `<= limit`, borrowed from the shared table when it is large enough.
pub fn primes_below(limit: u32) -> &'static [u32] {
    let table = prime_table();
    let end = table.partition_point(|&p| p <= limit);
    &table[..end]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_tables() {
        assert!(primes_up_to(1).is_empty());
        assert_eq!(primes_up_to(2), vec![2]);
        assert_eq!(primes_up_to(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn pi_of_million() {
        assert_eq!(primes_below(1_000_000).len(), 78_498);
    }
}
