//! Greedy "lexicographically earliest" permutations of the positive integers.
//!
//! Each generator keeps a [`GreedyState`]: a bitmap of used values, the
//! smallest missing value, and for every modulus `d` that has been queried a
//! pointer below which all multiples of `d` are used. The pointers make the
//! divisibility-driven steps amortized near-constant.

use std::collections::HashMap;

use num_integer::Integer;

use crate::arith::is_prime_u64;

/// Smallest-prime-factor table that grows on demand.
#[derive(Debug, Default, Clone)]
pub struct Spf {
    table: Vec<u32>,
}

impl Spf {
    pub fn new() -> Self {
        Self::default()
    }

    fn ensure(&mut self, n: u64) {
        if (n as usize) < self.table.len() {
            return;
        }
        let limit = (n as usize + 1).max(2 * self.table.len()).max(1024);
        let mut table = vec![0u32; limit];
        for i in 2..limit {
            if table[i] == 0 {
                let mut j = i;
                while j < limit {
                    if table[j] == 0 {
                        table[j] = i as u32;
                    }
                    j += i;
                }
            }
        }
        self.table = table;
    }

    /// Distinct prime factors of `n`, ascending.
    pub fn primes(&mut self, mut n: u64) -> Vec<u64> {
        self.ensure(n);
        let mut out = Vec::new();
        while n > 1 {
            let p = self.table[n as usize] as u64;
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        out
    }
}

/// Used-value set plus the indexes that make greedy searches fast.
#[derive(Debug, Clone)]
pub struct GreedyState {
    used: Vec<bool>,
    smallest_missing: u64,
    /// d -> k with every multiple j*d, 1 <= j < k, already used.
    multiple_ptr: HashMap<u64, u64>,
    emitted: Vec<u64>,
}

impl Default for GreedyState {
    fn default() -> Self {
        Self::new()
    }
}

impl GreedyState {
    pub fn new() -> Self {
        Self { used: vec![true], smallest_missing: 1, multiple_ptr: HashMap::new(), emitted: Vec::new() }
    }

    pub fn is_used(&self, v: u64) -> bool {
        self.used.get(v as usize).copied().unwrap_or(false)
    }

    pub fn smallest_missing(&self) -> u64 {
        self.smallest_missing
    }

    pub fn emitted(&self) -> &[u64] {
        &self.emitted
    }

    pub fn into_terms(self) -> Vec<u64> {
        self.emitted
    }

    /// Records `v` as the next term. Panics if `v` was already used, which
    /// would mean a generator bug.
    pub fn push(&mut self, v: u64) {
        assert!(v >= 1 && !self.is_used(v), "value {v} emitted twice");
        if v as usize >= self.used.len() {
            let len = (v as usize + 1).max(2 * self.used.len());
            self.used.resize(len, false);
        }
        self.used[v as usize] = true;
        while self.is_used(self.smallest_missing) {
            self.smallest_missing += 1;
        }
        self.emitted.push(v);
    }

    /// Smallest unused multiple of `d` passing `accept`.
    pub fn smallest_unused_multiple(&mut self, d: u64, mut accept: impl FnMut(u64) -> bool) -> u64 {
        let mut k = *self.multiple_ptr.get(&d).unwrap_or(&1);
        while self.is_used(k * d) {
            k += 1;
        }
        self.multiple_ptr.insert(d, k);
        loop {
            let m = k * d;
            if !self.is_used(m) && accept(m) {
                return m;
            }
            k += 1;
        }
    }

    /// Smallest unused value passing `accept`.
    pub fn smallest_unused(&self, mut accept: impl FnMut(u64) -> bool) -> u64 {
        let mut m = self.smallest_missing;
        loop {
            if !self.is_used(m) && accept(m) {
                return m;
            }
            m += 1;
        }
    }

    fn last(&self, back: usize) -> u64 {
        self.emitted[self.emitted.len() - back]
    }
}

fn seeded(seeds: &[u64], n: usize) -> Option<GreedyState> {
    let mut st = GreedyState::new();
    for &s in seeds.iter().take(n) {
        st.push(s);
    }
    (n > seeds.len()).then_some(st)
}

/// EKG sequence: `gcd(a(n-1), a(n)) > 1` for `n >= 3`, seeds 1, 2.
pub fn ekg(n: usize) -> Vec<u64> {
    let Some(mut st) = seeded(&[1, 2], n) else {
        return [1, 2][..n].to_vec();
    };
    let mut spf = Spf::new();
    while st.emitted().len() < n {
        let prev = st.last(1);
        let next = spf
            .primes(prev)
            .into_iter()
            .map(|p| st.smallest_unused_multiple(p, |_| true))
            .min()
            .unwrap();
        st.push(next);
    }
    st.into_terms()
}

/// Yellowstone permutation: `gcd(a(n-2), a(n)) > 1` and
/// `gcd(a(n-1), a(n)) = 1` for `n > 3`, seeds 1, 2, 3.
pub fn yellowstone(n: usize) -> Vec<u64> {
    let Some(mut st) = seeded(&[1, 2, 3], n) else {
        return [1, 2, 3][..n].to_vec();
    };
    let mut spf = Spf::new();
    while st.emitted().len() < n {
        let (prev2, prev) = (st.last(2), st.last(1));
        let mut best = u64::MAX;
        for p in spf.primes(prev2) {
            if prev % p == 0 {
                continue;
            }
            let m = st.smallest_unused_multiple(p, |m| m.gcd(&prev) == 1);
            best = best.min(m);
        }
        st.push(best);
    }
    st.into_terms()
}

/// `gcd(a(n-1), a(n)) != gcd(a(n-2), a(n-1))` for `n >= 3`, seeds 1, 2.
pub fn quet(n: usize) -> Vec<u64> {
    let Some(mut st) = seeded(&[1, 2], n) else {
        return [1, 2][..n].to_vec();
    };
    let mut spf = Spf::new();
    while st.emitted().len() < n {
        let (prev2, prev) = (st.last(2), st.last(1));
        let g = prev2.gcd(&prev);
        let next = if g == 1 {
            // Needs a common factor with prev: the EKG step.
            spf.primes(prev)
                .into_iter()
                .map(|p| st.smallest_unused_multiple(p, |_| true))
                .min()
                .unwrap()
        } else {
            st.smallest_unused(|m| m.gcd(&prev) != g)
        };
        st.push(next);
    }
    st.into_terms()
}

/// A prime dividing `a(n)` divides exactly one of `a(n-1)` and `a(n+1)`
/// (`n >= 2`), seed 1.
///
/// The next term must be divisible by every prime of `a(n)` absent from
/// `a(n-1)` and by no prime the two share. Primes new to the next term only
/// constrain the term after it, which can always be met by a large enough
/// unused multiple, so the plain greedy choice never paints itself into a
/// corner and no lookahead is required.
pub fn sigrist(n: usize) -> Vec<u64> {
    let Some(mut st) = seeded(&[1], n) else {
        return [1][..n].to_vec();
    };
    let mut spf = Spf::new();
    let mut prev2 = 0u64; // a(0) does not exist; 0 has no listed primes
    while st.emitted().len() < n {
        let prev = st.last(1);
        let mut required = 1u64;
        let mut forbidden = Vec::new();
        for p in spf.primes(prev) {
            if prev2 != 0 && prev2.is_multiple_of(p) {
                forbidden.push(p);
            } else {
                required *= p;
            }
        }
        let ok = |m: u64| forbidden.iter().all(|&p| !m.is_multiple_of(p));
        let next = if required == 1 {
            st.smallest_unused(ok)
        } else {
            st.smallest_unused_multiple(required, ok)
        };
        prev2 = prev;
        st.push(next);
    }
    st.into_terms()
}

/// `a(n-1) + a(n)` is prime for `n >= 2`, seed 1.
pub fn bottomley(n: usize) -> Vec<u64> {
    let Some(mut st) = seeded(&[1], n) else {
        return [1][..n].to_vec();
    };
    while st.emitted().len() < n {
        let prev = st.last(1);
        let next = st.smallest_unused(|m| is_prime_u64(prev + m));
        st.push(next);
    }
    st.into_terms()
}

/// The two permutations attributed to Erdős, Freud and Hegyvári.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErdosKind {
    /// `a(2n)` = smallest missing number, `a(2n+1) = 2 a(2n)`; `a(1) = 1`.
    A036552,
    /// `a(2n+2)` = smallest missing number, `a(2n+1) = a(2n) a(2n+2)`;
    /// `a(1) = 1`, `a(2) = 2`.
    A064736,
}

pub fn erdos_variant(kind: ErdosKind, n: usize) -> Vec<u64> {
    let mut st = GreedyState::new();
    match kind {
        ErdosKind::A036552 => {
            if n >= 1 {
                st.push(1);
            }
            while st.emitted().len() < n {
                let m = st.smallest_missing();
                st.push(m);
                if st.emitted().len() < n {
                    st.push(2 * m);
                }
            }
        }
        ErdosKind::A064736 => {
            for &s in [1, 2].iter().take(n) {
                st.push(s);
            }
            while st.emitted().len() < n {
                // a(2n+2) is the smallest missing m whose product with a(2n)
                // is still unused, so both new terms stay distinct.
                let even = st.last(1);
                let m = st.smallest_unused(|m| !st.is_used(even * m));
                st.push(even * m);
                if st.emitted().len() < n {
                    st.push(m);
                }
            }
        }
    }
    st.into_terms()
}
