//! Fixed-width Montgomery arithmetic used by the dense elimination kernel.
//!
//! Values are four little-endian 64-bit limbs in Montgomery form (x·R mod p,
//! R = 2^256). Only odd moduli below 2^254 are supported; everything else
//! falls back to big-integer arithmetic at the call site.

use num_bigint::BigUint;

pub(crate) const LIMBS: usize = 4;

pub(crate) type Limbs = [u64; LIMBS];

#[derive(Clone, Debug)]
pub(crate) struct MontCtx {
    modulus: Limbs,
    /// -p^{-1} mod 2^64
    n0_inv: u64,
    /// R^2 mod p, for conversion into Montgomery form
    r2: Limbs,
    /// R mod p, the Montgomery form of 1
    one: Limbs,
    /// p - 2 as limbs, the Fermat inversion exponent
    inv_exp: Limbs,
}

#[inline(always)]
fn mac(a: u64, b: u64, c: u64, carry: u64) -> (u64, u64) {
    let t = a as u128 + (b as u128) * (c as u128) + carry as u128;
    (t as u64, (t >> 64) as u64)
}

#[inline(always)]
fn adc(a: u64, b: u64, carry: u64) -> (u64, u64) {
    let t = a as u128 + b as u128 + carry as u128;
    (t as u64, (t >> 64) as u64)
}

#[inline(always)]
fn sbb(a: u64, b: u64, borrow: u64) -> (u64, u64) {
    let t = (a as u128).wrapping_sub(b as u128 + borrow as u128);
    (t as u64, ((t >> 64) as u64) & 1)
}

#[inline(always)]
fn geq(a: &Limbs, b: &Limbs) -> bool {
    for i in (0..LIMBS).rev() {
        if a[i] != b[i] {
            return a[i] > b[i];
        }
    }
    true
}

#[inline(always)]
fn sub_assign(a: &mut Limbs, b: &Limbs) {
    let mut borrow = 0;
    for i in 0..LIMBS {
        let (r, br) = sbb(a[i], b[i], borrow);
        a[i] = r;
        borrow = br;
    }
}

fn to_limbs(v: &BigUint) -> Option<Limbs> {
    let digits = v.to_u64_digits();
    if digits.len() > LIMBS {
        return None;
    }
    let mut out = [0u64; LIMBS];
    out[..digits.len()].copy_from_slice(&digits);
    Some(out)
}

pub(crate) fn limbs_to_biguint(l: &Limbs) -> BigUint {
    BigUint::from_slice(
        &l.iter()
            .flat_map(|&x| [x as u32, (x >> 32) as u32])
            .collect::<Vec<_>>(),
    )
}

impl MontCtx {
    /// Builds a context for an odd modulus below 2^254; `None` otherwise.
    pub(crate) fn new(modulus: &BigUint) -> Option<MontCtx> {
        if modulus.bit(0) == false || modulus.bits() > 254 {
            return None;
        }
        let m = to_limbs(modulus)?;

        // Newton iteration for p^{-1} mod 2^64.
        let mut inv = m[0];
        for _ in 0..5 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(m[0].wrapping_mul(inv)));
        }
        let n0_inv = inv.wrapping_neg();

        let r = BigUint::from(1u8) << 256;
        let r2 = to_limbs(&((&r * &r) % modulus))?;
        let one = to_limbs(&(&r % modulus))?;
        let inv_exp = to_limbs(&(modulus - 2u8))?;

        Some(MontCtx {
            modulus: m,
            n0_inv,
            r2,
            one,
            inv_exp,
        })
    }

    #[inline]
    pub(crate) fn zero(&self) -> Limbs {
        [0; LIMBS]
    }

    #[inline]
    pub(crate) fn one(&self) -> Limbs {
        self.one
    }

    #[inline]
    pub(crate) fn is_zero(&self, a: &Limbs) -> bool {
        a.iter().all(|&x| x == 0)
    }

    pub(crate) fn from_biguint(&self, v: &BigUint) -> Limbs {
        let raw = to_limbs(v).expect("value exceeds modulus width");
        self.mul(&raw, &self.r2)
    }

    pub(crate) fn to_biguint(&self, a: &Limbs) -> BigUint {
        let raw = self.mul(a, &[1, 0, 0, 0]);
        limbs_to_biguint(&raw)
    }

    /// CIOS Montgomery multiplication.
    #[inline]
    pub(crate) fn mul(&self, a: &Limbs, b: &Limbs) -> Limbs {
        let mut t = [0u64; LIMBS + 2];
        for i in 0..LIMBS {
            let mut carry = 0;
            for j in 0..LIMBS {
                let (lo, c) = mac(t[j], a[i], b[j], carry);
                t[j] = lo;
                carry = c;
            }
            let (t4, c4) = adc(t[LIMBS], carry, 0);
            t[LIMBS] = t4;
            t[LIMBS + 1] = c4;

            let m = t[0].wrapping_mul(self.n0_inv);
            let (_, mut carry) = mac(t[0], m, self.modulus[0], 0);
            for j in 1..LIMBS {
                let (lo, c) = mac(t[j], m, self.modulus[j], carry);
                t[j - 1] = lo;
                carry = c;
            }
            let (lo, c) = adc(t[LIMBS], carry, 0);
            t[LIMBS - 1] = lo;
            t[LIMBS] = t[LIMBS + 1] + c;
            t[LIMBS + 1] = 0;
        }
        let mut r = [t[0], t[1], t[2], t[3]];
        if t[LIMBS] != 0 || geq(&r, &self.modulus) {
            sub_assign(&mut r, &self.modulus);
        }
        r
    }

    #[inline]
    pub(crate) fn add(&self, a: &Limbs, b: &Limbs) -> Limbs {
        let mut r = [0u64; LIMBS];
        let mut carry = 0;
        for i in 0..LIMBS {
            let (x, c) = adc(a[i], b[i], carry);
            r[i] = x;
            carry = c;
        }
        if carry != 0 || geq(&r, &self.modulus) {
            sub_assign(&mut r, &self.modulus);
        }
        r
    }

    #[inline]
    pub(crate) fn sub(&self, a: &Limbs, b: &Limbs) -> Limbs {
        let mut r = *a;
        let mut borrow = 0;
        for i in 0..LIMBS {
            let (x, br) = sbb(r[i], b[i], borrow);
            r[i] = x;
            borrow = br;
        }
        if borrow != 0 {
            let mut carry = 0;
            for i in 0..LIMBS {
                let (x, c) = adc(r[i], self.modulus[i], carry);
                r[i] = x;
                carry = c;
            }
        }
        r
    }

    #[inline]
    pub(crate) fn neg(&self, a: &Limbs) -> Limbs {
        if self.is_zero(a) {
            return *a;
        }
        let mut r = self.modulus;
        sub_assign(&mut r, a);
        r
    }

    /// Fermat inversion a^{p-2}; the caller guarantees a != 0.
    pub(crate) fn inv(&self, a: &Limbs) -> Limbs {
        debug_assert!(!self.is_zero(a));
        let mut result = self.one;
        let mut started = false;
        for i in (0..LIMBS).rev() {
            for bit in (0..64).rev() {
                if started {
                    result = self.mul(&result, &result);
                }
                if (self.inv_exp[i] >> bit) & 1 == 1 {
                    if started {
                        result = self.mul(&result, a);
                    } else {
                        result = self.mul(&self.one, a);
                        started = true;
                    }
                }
            }
        }
        result
    }
}
