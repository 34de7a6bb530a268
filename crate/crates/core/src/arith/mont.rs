//! Fixed-width Montgomery arithmetic modulo an odd multi-limb integer.
//!
//! Residues are little-endian `[u64; L]` arrays kept fully reduced below the
//! modulus. The modulus must be odd and satisfy `n < 2^(64 L)`.

use num_bigint::BigUint;

pub(crate) type Limbs<const L: usize> = [u64; L];

#[derive(Clone, Debug)]
pub(crate) struct MontCtx<const L: usize> {
    n: Limbs<L>,
    /// -n^{-1} mod 2^64
    n_neg_inv: u64,
    r2: Limbs<L>,
    one: Limbs<L>,
}

pub(crate) fn to_limbs<const L: usize>(x: &BigUint) -> Option<Limbs<L>> {
    let digits = x.to_u64_digits();
    if digits.len() > L {
        return None;
    }
    let mut out = [0u64; L];
    out[..digits.len()].copy_from_slice(&digits);
    Some(out)
}

pub(crate) fn from_limbs<const L: usize>(x: &Limbs<L>) -> BigUint {
    let mut bytes = Vec::with_capacity(8 * L);
    for limb in x {
        bytes.extend_from_slice(&limb.to_le_bytes());
    }
    BigUint::from_bytes_le(&bytes)
}

#[inline]
fn geq<const L: usize>(a: &Limbs<L>, b: &Limbs<L>) -> bool {
    for i in (0..L).rev() {
        if a[i] != b[i] {
            return a[i] > b[i];
        }
    }
    true
}

#[inline]
fn sub_in_place<const L: usize>(a: &mut Limbs<L>, b: &Limbs<L>) -> bool {
    let mut borrow = false;
    for i in 0..L {
        let (d1, b1) = a[i].overflowing_sub(b[i]);
        let (d2, b2) = d1.overflowing_sub(borrow as u64);
        a[i] = d2;
        borrow = b1 || b2;
    }
    borrow
}

#[inline]
fn add_in_place<const L: usize>(a: &mut Limbs<L>, b: &Limbs<L>) -> bool {
    let mut carry = false;
    for i in 0..L {
        let (s1, c1) = a[i].overflowing_add(b[i]);
        let (s2, c2) = s1.overflowing_add(carry as u64);
        a[i] = s2;
        carry = c1 || c2;
    }
    carry
}

impl<const L: usize> MontCtx<L> {
    /// Returns `None` when `n` is even, below 3, or too wide for `L` limbs.
    pub fn new(n: &BigUint) -> Option<Self> {
        if !n.bit(0) || n.bits() < 2 {
            return None;
        }
        let limbs = to_limbs::<L>(n)?;
        // Newton iteration for n^{-1} mod 2^64.
        let mut inv: u64 = 1;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(limbs[0].wrapping_mul(inv)));
        }
        let r = BigUint::from(1u32) << (64 * L);
        let r_mod = &r % n;
        let r2 = (&r_mod * &r_mod) % n;
        Some(Self {
            n: limbs,
            n_neg_inv: inv.wrapping_neg(),
            r2: to_limbs(&r2)?,
            one: to_limbs(&r_mod)?,
        })
    }

    pub fn modulus(&self) -> BigUint {
        from_limbs(&self.n)
    }

    /// Montgomery product a * b * R^{-1} mod n (CIOS).
    #[inline]
    pub fn mul(&self, a: &Limbs<L>, b: &Limbs<L>) -> Limbs<L> {
        // t has L + 2 limbs; stored as L limbs plus two overflow words.
        let mut t = [0u64; L];
        let mut t_hi: u64 = 0;
        let mut t_hi2: u64;
        for &bi in b.iter() {
            let mut carry: u128 = 0;
            for j in 0..L {
                let s = t[j] as u128 + (a[j] as u128) * (bi as u128) + carry;
                t[j] = s as u64;
                carry = s >> 64;
            }
            let s = t_hi as u128 + carry;
            t_hi = s as u64;
            t_hi2 = (s >> 64) as u64;

            let m = t[0].wrapping_mul(self.n_neg_inv);
            let s = t[0] as u128 + (m as u128) * (self.n[0] as u128);
            let mut carry: u128 = s >> 64;
            for j in 1..L {
                let s = t[j] as u128 + (m as u128) * (self.n[j] as u128) + carry;
                t[j - 1] = s as u64;
                carry = s >> 64;
            }
            let s = t_hi as u128 + carry;
            t[L - 1] = s as u64;
            t_hi = t_hi2 + (s >> 64) as u64;
        }
        if t_hi != 0 || geq(&t, &self.n) {
            sub_in_place(&mut t, &self.n);
        }
        t
    }

    #[inline]
    pub fn sqr(&self, a: &Limbs<L>) -> Limbs<L> {
        self.mul(a, a)
    }

    #[inline]
    pub fn add(&self, a: &Limbs<L>, b: &Limbs<L>) -> Limbs<L> {
        let mut s = *a;
        let carry = add_in_place(&mut s, b);
        if carry || geq(&s, &self.n) {
            sub_in_place(&mut s, &self.n);
        }
        s
    }

    #[inline]
    pub fn sub(&self, a: &Limbs<L>, b: &Limbs<L>) -> Limbs<L> {
        let mut d = *a;
        if sub_in_place(&mut d, b) {
            add_in_place(&mut d, &self.n);
        }
        d
    }

    pub fn one(&self) -> Limbs<L> {
        self.one
    }

    pub fn to_mont(&self, x: &BigUint) -> Limbs<L> {
        let reduced = x % self.modulus();
        let limbs = to_limbs::<L>(&reduced).expect("reduced residue fits");
        self.mul(&limbs, &self.r2)
    }

    pub fn from_u64(&self, x: u64) -> Limbs<L> {
        self.to_mont(&BigUint::from(x))
    }

    /// Leaves Montgomery form.
    pub fn value(&self, a: &Limbs<L>) -> BigUint {
        let mut plain_one = [0u64; L];
        plain_one[0] = 1;
        from_limbs(&self.mul(a, &plain_one))
    }

    pub fn is_zero(a: &Limbs<L>) -> bool {
        a.iter().all(|&x| x == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check<const L: usize>(n: &BigUint, a: &BigUint, b: &BigUint) {
        let ctx = MontCtx::<L>::new(n).unwrap();
        let am = ctx.to_mont(a);
        let bm = ctx.to_mont(b);
        assert_eq!(ctx.value(&ctx.mul(&am, &bm)), (a * b) % n);
        assert_eq!(ctx.value(&ctx.add(&am, &bm)), (a + b) % n);
        assert_eq!(ctx.value(&ctx.sub(&am, &bm)), ((a + n) - (b % n)) % n);
    }

    #[test]
    fn products_match_bigint() {
        let n: BigUint = "340282366920938463463374607431768211297".parse().unwrap();
        let a: BigUint = "123456789012345678901234567890123".parse().unwrap();
        let b: BigUint = "340282366920938463463374607431768211000".parse().unwrap();
        check::<2>(&n, &a, &b);
        check::<3>(&n, &a, &b);
        // modulus using the top bit of its last limb
        let wide = (BigUint::from(1u32) << 192) - 237u32;
        check::<3>(&wide, &a, &(&wide - 5u32));
        check::<1>(&BigUint::from(1_000_000_007u64), &BigUint::from(999u32), &BigUint::from(1_000_000_006u64));
    }

    #[test]
    fn rejects_even_or_too_wide() {
        assert!(MontCtx::<2>::new(&BigUint::from(10u32)).is_none());
        assert!(MontCtx::<1>::new(&((BigUint::from(1u32) << 64) + 1u32)).is_none());
    }
}
