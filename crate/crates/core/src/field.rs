//! Arbitrary-precision prime field arithmetic F_p.

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{Num, One, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Decimal string of the BN254 scalar field order, the default modulus.
pub const BN254_MODULUS: &str =
    "21888242871839275222246405745257275088548364400416034343698204186575808495617";

/// A probabilistically verified prime modulus.
#[derive(Debug)]
pub struct Prime {
    value: BigUint,
}

impl PartialEq for Prime {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}
impl Eq for Prime {}

impl Prime {
    /// Checks primality with 64 Miller-Rabin rounds before accepting.
    pub fn new(value: BigUint) -> Result<Arc<Prime>> {
        if !is_probable_prime(&value, 64) {
            return Err(Error::NotPrime(value.to_string()));
        }
        Ok(Arc::new(Prime { value }))
    }

    pub fn from_u64(value: u64) -> Result<Arc<Prime>> {
        Prime::new(BigUint::from(value))
    }

    pub fn from_decimal(s: &str) -> Result<Arc<Prime>> {
        let v = BigUint::from_str_radix(s.trim(), 10)
            .map_err(|e| Error::Usage(format!("bad prime literal {s:?}: {e}")))?;
        Prime::new(v)
    }

    /// The BN254 scalar-field prime used when no modulus is specified.
    pub fn bn254() -> Arc<Prime> {
        static CACHE: OnceLock<Arc<Prime>> = OnceLock::new();
        CACHE
            .get_or_init(|| Prime::from_decimal(BN254_MODULUS).expect("BN254 modulus is prime"))
            .clone()
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn bits(&self) -> u64 {
        self.value.bits()
    }

    pub fn to_u64(&self) -> Option<u64> {
        let d = self.value.to_u64_digits();
        match d.len() {
            0 => Some(0),
            1 => Some(d[0]),
            _ => None,
        }
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// A canonical residue modulo a shared [`Prime`].
#[derive(Clone)]
pub struct FieldElement {
    residue: BigUint,
    prime: Arc<Prime>,
}

impl FieldElement {
    pub fn new(value: BigUint, prime: Arc<Prime>) -> FieldElement {
        FieldElement {
            residue: value % prime.value(),
            prime,
        }
    }

    pub fn from_u64(value: u64, prime: Arc<Prime>) -> FieldElement {
        FieldElement::new(BigUint::from(value), prime)
    }

    /// Negative values wrap to their additive complement.
    pub fn from_i64(value: i64, prime: Arc<Prime>) -> FieldElement {
        if value >= 0 {
            FieldElement::from_u64(value as u64, prime)
        } else {
            FieldElement::from_u64(value.unsigned_abs(), prime).neg()
        }
    }

    /// Little-endian byte decoding reduced mod p; total for any length.
    pub fn parse_le_bytes(bytes: &[u8], prime: Arc<Prime>) -> FieldElement {
        FieldElement::new(BigUint::from_bytes_le(bytes), prime)
    }

    pub fn zero(prime: Arc<Prime>) -> FieldElement {
        FieldElement {
            residue: BigUint::ZERO,
            prime,
        }
    }

    pub fn one(prime: Arc<Prime>) -> FieldElement {
        FieldElement::from_u64(1, prime)
    }

    pub fn residue(&self) -> &BigUint {
        &self.residue
    }

    pub fn prime(&self) -> &Arc<Prime> {
        &self.prime
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.residue.is_one()
    }

    fn check_same_prime(&self, other: &FieldElement) {
        assert_eq!(
            self.prime, other.prime,
            "field elements have mismatched moduli"
        );
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.check_same_prime(other);
        FieldElement::new(&self.residue + &other.residue, self.prime.clone())
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.check_same_prime(other);
        FieldElement::new(
            &self.residue + self.prime.value() - &other.residue,
            self.prime.clone(),
        )
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        self.check_same_prime(other);
        FieldElement::new(&self.residue * &other.residue, self.prime.clone())
    }

    pub fn neg(&self) -> FieldElement {
        if self.is_zero() {
            self.clone()
        } else {
            FieldElement {
                residue: self.prime.value() - &self.residue,
                prime: self.prime.clone(),
            }
        }
    }

    /// Multiplicative inverse; zero is an error so callers must route zero
    /// pivots through the assumption ledger instead of absorbing them.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let exp = self.prime.value() - 2u8;
        Ok(self.pow(&exp))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, exp: &BigUint) -> FieldElement {
        FieldElement {
            residue: self.residue.modpow(exp, self.prime.value()),
            prime: self.prime.clone(),
        }
    }

    pub fn pow_u64(&self, exp: u64) -> FieldElement {
        self.pow(&BigUint::from(exp))
    }

    /// Square root via Tonelli-Shanks; `None` when no root exists.
    pub fn sqrt(&self) -> Option<FieldElement> {
        let p = self.prime.value();
        if self.is_zero() || p == &BigUint::from(2u8) {
            return Some(self.clone());
        }
        let one = BigUint::one();
        let exp_legendre = (p - &one) >> 1;
        let legendre = self.residue.modpow(&exp_legendre, p);
        if legendre != one {
            return None;
        }
        if p % 4u8 == BigUint::from(3u8) {
            let r = self.residue.modpow(&((p + &one) >> 2), p);
            return Some(FieldElement::new(r, self.prime.clone()));
        }
        // Tonelli-Shanks for p = 1 (mod 4).
        let mut q = p - &one;
        let mut s = 0u64;
        while q.is_even() {
            q >>= 1;
            s += 1;
        }
        let mut z = BigUint::from(2u8);
        while z.modpow(&exp_legendre, p) == one {
            z += 1u8;
        }
        let mut m = s;
        let mut c = z.modpow(&q, p);
        let mut t = self.residue.modpow(&q, p);
        let mut r = self.residue.modpow(&((&q + &one) >> 1), p);
        while t != one {
            let mut i = 0u64;
            let mut t2 = t.clone();
            while t2 != one {
                t2 = (&t2 * &t2) % p;
                i += 1;
                if i == m {
                    return None;
                }
            }
            let mut b = c.clone();
            for _ in 0..(m - i - 1) {
                b = (&b * &b) % p;
            }
            m = i;
            c = (&b * &b) % p;
            t = (&t * &c) % p;
            r = (&r * &b) % p;
        }
        Some(FieldElement::new(r, self.prime.clone()))
    }

    pub fn to_u64(&self) -> Option<u64> {
        let d = self.residue.to_u64_digits();
        match d.len() {
            0 => Some(0),
            1 => Some(d[0]),
            _ => None,
        }
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.residue == other.residue && self.prime == other.prime
    }
}
impl Eq for FieldElement {}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders residues numerically; meaningful only within one field.
impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.residue.cmp(&other.residue)
    }
}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.residue.hash(state);
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

impl std::ops::Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::add(self, rhs)
    }
}

impl std::ops::Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::sub(self, rhs)
    }
}

impl std::ops::Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        FieldElement::mul(self, rhs)
    }
}

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}

fn random_biguint_below(rng: &mut impl Rng, bound: &BigUint) -> BigUint {
    // Rejection-free: oversample by 64 bits and reduce.
    let limbs = (bound.bits() as usize + 63) / 64 + 1;
    let digits: Vec<u32> = (0..limbs)
        .flat_map(|_| {
            let x: u64 = rng.random();
            [x as u32, (x >> 32) as u32]
        })
        .collect();
    BigUint::new(digits) % bound
}

fn is_probable_prime(n: &BigUint, rounds: u32) -> bool {
    let two = BigUint::from(2u8);
    let three = BigUint::from(3u8);
    if n < &two {
        return false;
    }
    if n == &two || n == &three {
        return true;
    }
    if n.is_even() {
        return false;
    }
    for small in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let s = BigUint::from(small);
        if n == &s {
            return true;
        }
        if (n % &s).is_zero() {
            return false;
        }
    }

    let one = BigUint::one();
    let n_minus_one = n - &one;
    let mut d = n_minus_one.clone();
    let mut s = 0u64;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }

    let mut rng = rand::rng();
    let span = n - 4u8;
    'witness: for _ in 0..rounds {
        let a = random_biguint_below(&mut rng, &span) + &two;
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 0..s.saturating_sub(1) {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
