//! Integer factorization: trial division, Pollard rho (Brent's variant) and
//! the elliptic-curve method on Montgomery curves, all under an explicit work
//! budget. When the budget runs out the surviving composite is returned as a
//! typed failure instead of looping.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use super::mont::{Limbs, MontCtx};
use super::prime::{is_prime_with_rounds, splitmix, DEFAULT_PRP_ROUNDS};
use super::sieve::primes_below;

/// One elliptic-curve stage: `curves` curves with bounds `b1` and `b2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EcmStage {
    pub b1: u64,
    pub b2: u64,
    pub curves: u32,
}

/// Work bounds for [`factor_with`]. The defaults find every factor of up to
/// roughly 20 digits with high probability and give up on harder inputs after
/// a few seconds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorBudget {
    /// Trial division by every prime up to this bound.
    pub trial_limit: u32,
    /// Rho iterations per composite before switching to elliptic curves.
    pub rho_iterations: u64,
    pub ecm: Vec<EcmStage>,
    pub prp_rounds: u32,
}

impl Default for FactorBudget {
    fn default() -> Self {
        Self {
            trial_limit: 1_000_000,
            rho_iterations: 200_000,
            ecm: vec![
                EcmStage { b1: 2_000, b2: 150_000, curves: 25 },
                EcmStage { b1: 11_000, b2: 1_100_000, curves: 90 },
            ],
            prp_rounds: DEFAULT_PRP_ROUNDS,
        }
    }
}

impl FactorBudget {
    /// Trial division and rho only; no elliptic curves.
    pub fn rho_only(rho_iterations: u64) -> Self {
        Self { rho_iterations, ecm: Vec::new(), ..Self::default() }
    }
}

/// `n = p1^e1 * p2^e2 * ...` with strictly increasing primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(BigUint, u32)>,
}

impl Factorization {
    fn from_unsorted(mut primes: Vec<(BigUint, u32)>) -> Self {
        primes.sort();
        let mut factors: Vec<(BigUint, u32)> = Vec::with_capacity(primes.len());
        for (p, e) in primes {
            match factors.last_mut() {
                Some((q, f)) if *q == p => *f += e,
                _ => factors.push((p, e)),
            }
        }
        Self { factors }
    }

    pub fn factors(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    pub fn into_factors(self) -> Vec<(BigUint, u32)> {
        self.factors
    }

    /// All prime factors with multiplicity, ascending.
    pub fn primes_with_multiplicity(&self) -> impl Iterator<Item = &BigUint> {
        self.factors
            .iter()
            .flat_map(|(p, e)| std::iter::repeat_n(p, *e as usize))
    }

    pub fn product(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(*e))
    }

    pub fn is_prime(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FactorError {
    #[error("cannot factor {0}: input must be at least 2")]
    TooSmall(BigUint),
    #[error("budget exhausted with a {}-digit composite cofactor", .cofactor.to_string().len())]
    Unfactored {
        /// Prime powers split off before the budget ran out.
        found: Vec<(BigUint, u32)>,
        cofactor: BigUint,
    },
}

/// Factor with the default budget.
pub fn factor(n: &BigUint) -> Result<Factorization, FactorError> {
    factor_with(n, &FactorBudget::default())
}

pub fn factor_u64(n: u64) -> Result<Factorization, FactorError> {
    factor(&BigUint::from(n))
}

pub fn factor_with(n: &BigUint, budget: &FactorBudget) -> Result<Factorization, FactorError> {
    if *n < BigUint::from(2u32) {
        return Err(FactorError::TooSmall(n.clone()));
    }
    let (mut found, rest) = trial_divide(n, budget.trial_limit);
    if rest.is_one() {
        return Ok(Factorization::from_unsorted(found));
    }
    let limit = budget.trial_limit as u64;
    let limit_sq = BigUint::from(limit) * limit;
    if rest < limit_sq {
        // No factor up to the trial bound, so the remainder is prime.
        found.push((rest, 1));
        return Ok(Factorization::from_unsorted(found));
    }

    // Composite work list of (value, multiplicity).
    let mut pending = vec![(rest, 1u32)];
    let mut stuck: Option<BigUint> = None;
    while let Some((m, mult)) = pending.pop() {
        if is_prime_with_rounds(&m, budget.prp_rounds).is_prime_like() {
            found.push((m, mult));
            continue;
        }
        if let Some((root, k)) = perfect_power(&m, budget.trial_limit) {
            pending.push((root, mult * k));
            continue;
        }
        match find_factor(&m, budget) {
            Some(d) => {
                let other = &m / &d;
                pending.push((d, mult));
                pending.push((other, mult));
            }
            None => {
                let piece = m.pow(mult);
                stuck = Some(match stuck {
                    Some(s) => s * piece,
                    None => piece,
                });
            }
        }
    }
    match stuck {
        None => Ok(Factorization::from_unsorted(found)),
        Some(cofactor) => Err(FactorError::Unfactored {
            found: Factorization::from_unsorted(found).into_factors(),
            cofactor,
        }),
    }
}

/// Remainder of a little-endian limb vector modulo a 32-bit divisor.
fn rem_u32(limbs: &[u64], p: u32) -> u32 {
    let p = p as u64;
    let mut r = 0u64;
    for &limb in limbs.iter().rev() {
        r = ((r << 32) | (limb >> 32)) % p;
        r = ((r << 32) | (limb & 0xFFFF_FFFF)) % p;
    }
    r as u32
}

fn trial_divide(n: &BigUint, limit: u32) -> (Vec<(BigUint, u32)>, BigUint) {
    let mut found = Vec::new();
    let mut rest = n.clone();
    let mut limbs = rest.to_u64_digits();
    for &p in primes_below(limit) {
        if let Some(small) = rest.to_u64() {
            if (p as u64) * (p as u64) > small {
                break;
            }
        }
        if rem_u32(&limbs, p) != 0 {
            continue;
        }
        let mut e = 0;
        while rem_u32(&limbs, p) == 0 {
            rest /= p;
            limbs = rest.to_u64_digits();
            e += 1;
        }
        found.push((BigUint::from(p), e));
    }
    if let Some(small) = rest.to_u64() {
        if small > 1 && small < (limit as u64) * (limit as u64) {
            found.push((rest, 1));
            return (found, BigUint::one());
        }
    }
    (found, rest)
}

/// If `m = r^k` for some prime `k > 1`, returns `(r, k)`. All prime factors
/// of `m` exceed `floor` so only small exponents need checking.
fn perfect_power(m: &BigUint, floor: u32) -> Option<(BigUint, u32)> {
    let max_k = (m.bits() as f64 / (floor.max(2) as f64).log2()).floor() as u32;
    for &k in primes_below(max_k.max(1)) {
        let r = m.nth_root(k);
        if &r.pow(k) == m {
            return Some((r, k));
        }
    }
    None
}

macro_rules! with_width {
    ($n:expr, $func:ident($($arg:expr),*)) => {{
        match $n.to_u64_digits().len() {
            1 => $func::<1>($($arg),*),
            2 => $func::<2>($($arg),*),
            3 => $func::<3>($($arg),*),
            4 => $func::<4>($($arg),*),
            5 => $func::<5>($($arg),*),
            6 => $func::<6>($($arg),*),
            7..=8 => $func::<8>($($arg),*),
            9..=12 => $func::<12>($($arg),*),
            13..=16 => $func::<16>($($arg),*),
            17..=24 => $func::<24>($($arg),*),
            25..=32 => $func::<32>($($arg),*),
            33..=48 => $func::<48>($($arg),*),
            49..=64 => $func::<64>($($arg),*),
            _ => None,
        }
    }};
}

/// A nontrivial divisor of the odd composite `m`, or `None` within budget.
fn find_factor(m: &BigUint, budget: &FactorBudget) -> Option<BigUint> {
    if !m.bit(0) {
        return Some(BigUint::from(2u32));
    }
    if let Some(d) = with_width!(m, rho_brent(m, budget.rho_iterations)) {
        return Some(d);
    }
    for (stage_index, stage) in budget.ecm.iter().enumerate() {
        if let Some(d) = with_width!(m, ecm(m, stage, stage_index as u64)) {
            return Some(d);
        }
    }
    None
}

fn nontrivial_gcd<const L: usize>(acc: &Limbs<L>, ctx: &MontCtx<L>, n: &BigUint) -> Option<BigUint> {
    let g = ctx.value(acc).gcd(n);
    if g.is_one() {
        None
    } else {
        Some(g)
    }
}

/// Brent's cycle-finding rho with batched gcds; retries with a new constant
/// when a batch collapses to `n`.
fn rho_brent<const L: usize>(n: &BigUint, max_iterations: u64) -> Option<BigUint> {
    const BATCH: u64 = 128;
    let ctx = MontCtx::<L>::new(n)?;
    let mut spent = 0u64;
    let mut seed = 0x0123_4567_89AB_CDEFu64;
    while spent < max_iterations {
        let c = ctx.from_u64(splitmix(&mut seed) % 1_000_003 + 1);
        let f = |x: &Limbs<L>| ctx.add(&ctx.sqr(x), &c);
        let mut y = ctx.from_u64(splitmix(&mut seed) % 1_000_003 + 2);
        let mut x = y;
        let mut ys = y;
        let mut q = ctx.one();
        let mut r: u64 = 1;
        let mut g: Option<BigUint> = None;
        'outer: while spent < max_iterations {
            x = y;
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r {
                ys = y;
                let steps = BATCH.min(r - k);
                for _ in 0..steps {
                    y = f(&y);
                    q = ctx.mul(&q, &ctx.sub(&x, &y));
                }
                spent += steps;
                k += steps;
                if MontCtx::<L>::is_zero(&q) {
                    g = Some(n.clone());
                    break 'outer;
                }
                if let Some(d) = nontrivial_gcd(&q, &ctx, n) {
                    g = Some(d);
                    break 'outer;
                }
                if spent >= max_iterations {
                    break 'outer;
                }
            }
            r *= 2;
        }
        match g {
            Some(d) if &d != n => return Some(d),
            Some(_) => {
                // Collapsed batch: step one at a time from the saved point.
                loop {
                    ys = f(&ys);
                    let d = ctx.value(&ctx.sub(&x, &ys)).gcd(n);
                    if !d.is_one() {
                        if &d != n {
                            return Some(d);
                        }
                        break;
                    }
                }
            }
            None => return None,
        }
    }
    None
}

/// Projective x-only point on a Montgomery curve.
#[derive(Clone, Copy)]
struct Point<const L: usize> {
    x: Limbs<L>,
    z: Limbs<L>,
}

struct Curve<'a, const L: usize> {
    ctx: &'a MontCtx<L>,
    /// (A + 2) / 4 as a fraction, kept projective to avoid inversions.
    a24_num: Limbs<L>,
    a24_den: Limbs<L>,
}

impl<const L: usize> Curve<'_, L> {
    fn double(&self, p: &Point<L>) -> Point<L> {
        let c = self.ctx;
        let s = c.sqr(&c.add(&p.x, &p.z));
        let d = c.sqr(&c.sub(&p.x, &p.z));
        let t = c.sub(&s, &d); // 4xz
        let d_den = c.mul(&d, &self.a24_den);
        Point {
            x: c.mul(&s, &d_den),
            z: c.mul(&t, &c.add(&d_den, &c.mul(&t, &self.a24_num))),
        }
    }

    /// p + q given diff = p - q.
    fn add(&self, p: &Point<L>, q: &Point<L>, diff: &Point<L>) -> Point<L> {
        let c = self.ctx;
        let u = c.mul(&c.sub(&p.x, &p.z), &c.add(&q.x, &q.z));
        let v = c.mul(&c.add(&p.x, &p.z), &c.sub(&q.x, &q.z));
        Point {
            x: c.mul(&diff.z, &c.sqr(&c.add(&u, &v))),
            z: c.mul(&diff.x, &c.sqr(&c.sub(&u, &v))),
        }
    }

    /// Montgomery ladder for `k * p`, `k >= 1`.
    fn multiply(&self, p: &Point<L>, k: u64) -> Point<L> {
        if k == 1 {
            return *p;
        }
        let mut r0 = *p;
        let mut r1 = self.double(p);
        for bit in (0..63 - k.leading_zeros()).rev() {
            if (k >> bit) & 1 == 1 {
                r0 = self.add(&r1, &r0, p);
                r1 = self.double(&r1);
            } else {
                r1 = self.add(&r1, &r0, p);
                r0 = self.double(&r0);
            }
        }
        r0
    }
}

/// Runs one stage of the elliptic-curve method. Curves use Suyama's
/// parametrization with deterministic sigma values; the factor reported is
/// the one from the lowest-indexed successful curve.
fn ecm<const L: usize>(n: &BigUint, stage: &EcmStage, stage_index: u64) -> Option<BigUint> {
    let ctx = MontCtx::<L>::new(n)?;
    (0..stage.curves as u64)
        .into_par_iter()
        .find_map_first(|i| ecm_curve(&ctx, n, stage, 11 + 1000 * stage_index + i))
}

fn ecm_curve<const L: usize>(ctx: &MontCtx<L>, n: &BigUint, stage: &EcmStage, sigma: u64) -> Option<BigUint> {
    let s = ctx.from_u64(sigma);
    let u = ctx.sub(&ctx.sqr(&s), &ctx.from_u64(5));
    let v = ctx.add(&ctx.add(&s, &s), &ctx.add(&s, &s));
    let u3 = ctx.mul(&ctx.sqr(&u), &u);
    let v3 = ctx.mul(&ctx.sqr(&v), &v);
    let vmu = ctx.sub(&v, &u);
    let vmu3 = ctx.mul(&ctx.sqr(&vmu), &vmu);
    let three_u_plus_v = ctx.add(&ctx.add(&ctx.add(&u, &u), &u), &v);
    let curve = Curve {
        ctx,
        a24_num: ctx.mul(&vmu3, &three_u_plus_v),
        a24_den: ctx.mul(&ctx.from_u64(16), &ctx.mul(&u3, &v)),
    };
    if let Some(g) = nontrivial_gcd(&curve.a24_den, ctx, n) {
        return (&g != n).then_some(g);
    }

    // Stage 1: multiply by every prime power up to b1.
    let mut q = Point { x: u3, z: v3 };
    for &p in primes_below(stage.b1 as u32) {
        let p = p as u64;
        let mut pk = p;
        while pk * p <= stage.b1 {
            pk *= p;
        }
        // Multiply by p repeatedly rather than by pk to keep ladders short.
        let mut e = pk;
        while e > 1 {
            q = curve.multiply(&q, p);
            e /= p;
        }
    }
    if let Some(g) = nontrivial_gcd(&q.z, ctx, n) {
        return (&g != n).then_some(g);
    }
    if stage.b2 <= stage.b1 {
        return None;
    }

    // Stage 2: standard continuation, primes b1 < p <= b2 written as m*D +- j.
    const D: u64 = 2310;
    let half = D / 2;
    let q2 = curve.double(&q);
    let mut baby: Vec<Option<Point<L>>> = vec![None; half as usize + 1];
    let mut prev = q; // (j - 2) Q
    let mut cur = curve.add(&q2, &q, &q); // 3Q
    baby[1] = Some(q);
    let mut j = 3;
    while j <= half {
        if j.gcd(&D) == 1 {
            baby[j as usize] = Some(cur);
        }
        let next = curve.add(&cur, &q2, &prev);
        prev = cur;
        cur = next;
        j += 2;
    }

    let step = curve.multiply(&q, D);
    let m_start = (stage.b1 / D).max(1);
    let mut r_prev = if m_start == 1 { None } else { Some(curve.multiply(&q, (m_start - 1) * D)) };
    let mut r = curve.multiply(&q, m_start * D);
    let mut acc = ctx.one();
    let primes = primes_below(stage.b2.min(u32::MAX as u64) as u32);
    let first = primes.partition_point(|&p| (p as u64) <= stage.b1);
    let mut idx = first;
    let mut m = m_start;
    while idx < primes.len() {
        let hi = m * D + half;
        while idx < primes.len() && (primes[idx] as u64) <= hi {
            let p = primes[idx] as u64;
            let j = (p as i64 - (m * D) as i64).unsigned_abs();
            if let Some(b) = &baby[j as usize] {
                let cross = ctx.sub(&ctx.mul(&r.x, &b.z), &ctx.mul(&b.x, &r.z));
                acc = ctx.mul(&acc, &cross);
            }
            idx += 1;
        }
        let next = match &r_prev {
            Some(rp) => curve.add(&r, &step, rp),
            None => curve.double(&r),
        };
        r_prev = Some(r);
        r = next;
        m += 1;
    }
    let g = nontrivial_gcd(&acc, ctx, n)?;
    (&g != n).then_some(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::prime::is_prime;

    fn big(s: &str) -> BigUint {
        s.parse().unwrap()
    }

    fn pairs(f: &Factorization) -> Vec<(String, u32)> {
        f.factors().iter().map(|(p, e)| (p.to_string(), *e)).collect()
    }

    #[test]
    fn small_forced_cases() {
        assert_eq!(pairs(&factor_u64(8).unwrap()), vec![("2".into(), 3)]);
        assert_eq!(pairs(&factor_u64(96179).unwrap()), vec![("96179".into(), 1)]);
        assert!(matches!(factor_u64(1), Err(FactorError::TooSmall(_))));
    }

    #[test]
    fn composite_fixed_point_factorization() {
        let f = factor_u64(13_532_385_396_179).unwrap();
        assert_eq!(
            pairs(&f),
            vec![("13".into(), 1), ("53".into(), 2), ("3853".into(), 1), ("96179".into(), 1)]
        );
        assert_eq!(f.to_string(), "13 * 53^2 * 3853 * 96179");
    }

    #[test]
    fn products_and_primality_below_1e5() {
        for n in 2u64..100_000 {
            let f = factor_u64(n).unwrap();
            assert_eq!(f.product(), BigUint::from(n));
            for (p, e) in f.factors() {
                assert!(*e >= 1);
                assert!(is_prime(p).is_prime_like());
            }
            assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
        }
    }

    #[test]
    fn rho_splits_a_64_bit_semiprime() {
        // 4294967291 * 4294967279, both primes just below 2^32.
        let n = BigUint::from(4_294_967_291u64) * 4_294_967_279u64;
        let f = factor(&n).unwrap();
        assert_eq!(pairs(&f), vec![("4294967279".into(), 1), ("4294967291".into(), 1)]);
    }

    #[test]
    fn ecm_splits_two_mid_sized_primes() {
        let p = big("189228453169878879431");
        let q = big("106601239770763867");
        let f = factor(&(&p * &q)).unwrap();
        assert_eq!(f.factors(), &[(q, 1), (p, 1)][..]);
    }

    #[test]
    fn perfect_powers_of_large_primes() {
        let p = big("1000000000000000000117");
        let f = factor(&p.pow(3)).unwrap();
        assert_eq!(f.factors(), &[(p, 3)][..]);
    }

    #[test]
    fn budget_exhaustion_is_typed() {
        let p = big("1000000000000000000117");
        let q = big("100000000000000000039");
        let n = BigUint::from(12u32) * &p * &q;
        match factor_with(&n, &FactorBudget::rho_only(1000)) {
            Err(FactorError::Unfactored { found, cofactor }) => {
                assert_eq!(cofactor, &p * &q);
                assert_eq!(
                    found,
                    vec![(BigUint::from(2u32), 2), (BigUint::from(3u32), 1)]
                );
            }
            other => panic!("expected unfactored, got {other:?}"),
        }
    }

    #[test]
    fn large_prime_times_small() {
        let m127 = (BigUint::one() << 127) - 1u32;
        let f = factor(&(&m127 * 1_000_003u32 * 7u32)).unwrap();
        assert_eq!(f.factors().len(), 3);
        assert_eq!(f.factors()[2].0, m127);
        assert!(!f.is_prime());
        assert!(factor(&m127).unwrap().is_prime());
    }
}
