//! Dense univariate helpers: division, gcd, and root finding over F_p.
//!
//! This is the only factorization machinery in the crate; the checker needs
//! roots of single-variable coefficient polynomials, nothing more.

use std::sync::Arc;

use num_bigint::BigUint;


use crate::field::{FieldElement, Prime};

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::VarId;

/// Coefficients ascending by degree, trailing zeros trimmed.
pub type Coeffs = Vec<FieldElement>;

fn trim(mut c: Coeffs) -> Coeffs {
    while c.last().map(FieldElement::is_zero).unwrap_or(false) {
        c.pop();
    }
    c
}

pub fn degree(c: &Coeffs) -> usize {
    c.len().saturating_sub(1)
}

/// Interprets a multivariate polynomial as univariate when it involves at
/// most one variable. Constants come back with a `None`-like zero-var guard
/// handled by the caller; here a constant maps to `None`.
pub fn as_univariate(p: &Polynomial) -> Option<(VarId, Coeffs)> {
    let vars = p.vars();
    if vars.len() != 1 {
        return None;
    }
    let v = *vars.iter().next().unwrap();
    let deg = p.degree_of(v) as usize;
    let mut coeffs = vec![FieldElement::zero(p.prime().clone()); deg + 1];
    for (m, c) in p.terms() {
        coeffs[m.exponent_of(v) as usize] = c.clone();
    }
    Some((v, trim(coeffs)))
}

pub fn to_poly(v: VarId, coeffs: &Coeffs, prime: &Arc<Prime>) -> Polynomial {
    let mut p = Polynomial::zero(prime.clone());
    for (e, c) in coeffs.iter().enumerate() {
        p.add_term(Monomial::from_exps([(v, e as u32)]), c);
    }
    p
}

pub fn eval(coeffs: &Coeffs, x: &FieldElement) -> FieldElement {
    let mut acc = FieldElement::zero(x.prime().clone());
    for c in coeffs.iter().rev() {
        acc = acc.mul(x).add(c);
    }
    acc
}

/// Schoolbook polynomial division; panics if the divisor is zero.
pub fn div_rem(num: &Coeffs, den: &Coeffs) -> (Coeffs, Coeffs) {
    assert!(!den.is_empty(), "division by the zero polynomial");
    let prime = den[0].prime().clone();
    if num.len() < den.len() {
        return (Vec::new(), num.clone());
    }
    let lead_inv = den.last().unwrap().inv().expect("nonzero leading coeff");
    let mut rem = num.clone();
    let mut quot = vec![FieldElement::zero(prime.clone()); num.len() - den.len() + 1];
    for i in (0..quot.len()).rev() {
        let q = rem[i + den.len() - 1].mul(&lead_inv);
        if q.is_zero() {
            continue;
        }
        quot[i] = q.clone();
        for (j, d) in den.iter().enumerate() {
            rem[i + j] = rem[i + j].sub(&q.mul(d));
        }
    }
    (trim(quot), trim(rem))
}

fn make_monic(c: Coeffs) -> Coeffs {
    match c.last() {
        None => c,
        Some(lc) if lc.is_one() => c,
        Some(lc) => {
            let inv = lc.inv().expect("nonzero leading coeff");
            c.iter().map(|x| x.mul(&inv)).collect()
        }
    }
}

pub fn gcd(a: &Coeffs, b: &Coeffs) -> Coeffs {
    let mut x = trim(a.clone());
    let mut y = trim(b.clone());
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    make_monic(x)
}

fn mul_mod(a: &Coeffs, b: &Coeffs, modulus: &Coeffs, prime: &Arc<Prime>) -> Coeffs {
    let mut prod = vec![FieldElement::zero(prime.clone()); a.len() + b.len()];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            prod[i + j] = prod[i + j].add(&x.mul(y));
        }
    }
    let (_, r) = div_rem(&trim(prod), modulus);
    r
}

/// x^e mod `modulus`, square-and-multiply over the exponent bits.
fn pow_x_mod(e: &BigUint, modulus: &Coeffs, prime: &Arc<Prime>) -> Coeffs {
    let x = vec![
        FieldElement::zero(prime.clone()),
        FieldElement::one(prime.clone()),
    ];
    let (_, mut base) = div_rem(&x, modulus);
    let mut acc = {
        let one = vec![FieldElement::one(prime.clone())];
        let (_, r) = div_rem(&one, modulus);
        r
    };
    let bits = e.bits();
    for i in 0..bits {
        if e.bit(i) {
            acc = mul_mod(&acc, &base, modulus, prime);
        }
        if i + 1 < bits {
            base = mul_mod(&base, &base, modulus, prime);
        }
    }
    acc
}

/// All roots of `c` in F_p, or `None` when this solver cannot produce them.
///
/// For p <= 2^16 the distinct-root part gcd(c, x^p - x) is computed and its
/// roots recovered by scanning the field. For larger p only linear and
/// quadratic polynomials are solved (the latter via Tonelli-Shanks), with
/// every root verified by substitution.
pub fn roots(coeffs: &Coeffs, prime: &Arc<Prime>) -> Option<Vec<FieldElement>> {
    let c = trim(coeffs.clone());
    match c.len() {
        0 => return None, // zero polynomial: every value; callers skip it
        1 => return Some(Vec::new()),
        _ => {}
    }
    if let Some(pv) = prime.to_u64().filter(|&pv| pv <= 1 << 16) {
        // Distinct-root polynomial g = gcd(c, x^p - x).
        let xp = pow_x_mod(prime.value(), &c, prime);
        let mut xp_minus_x = xp;
        while xp_minus_x.len() < 2 {
            xp_minus_x.push(FieldElement::zero(prime.clone()));
        }
        xp_minus_x[1] = xp_minus_x[1].sub(&FieldElement::one(prime.clone()));
        let g = gcd(&c, &trim(xp_minus_x));
        let n_roots = degree(&g);
        let mut found = Vec::with_capacity(n_roots);
        for x in 0..pv {
            let fx = FieldElement::from_u64(x, prime.clone());
            if eval(&g, &fx).is_zero() {
                found.push(fx);
                if found.len() == n_roots {
                    break;
                }
            }
        }
        debug_assert_eq!(found.len(), n_roots);
        return Some(found);
    }
    match degree(&c) {
        1 => {
            let root = c[0].neg().div(&c[1]).expect("nonzero leading coeff");
            debug_assert!(eval(&c, &root).is_zero());
            Some(vec![root])
        }
        2 => {
            // x = (-b +- sqrt(b^2 - 4ac)) / 2a
            let (a, b, c0) = (&c[2], &c[1], &c[0]);
            let two = FieldElement::from_u64(2, prime.clone());
            let four = FieldElement::from_u64(4, prime.clone());
            if prime.value() == &BigUint::from(2u8) {
                // Characteristic two has no quadratic formula; scan both values.
                let mut out = Vec::new();
                for x in 0..2u64 {
                    let fx = FieldElement::from_u64(x, prime.clone());
                    if eval(&c, &fx).is_zero() {
                        out.push(fx);
                    }
                }
                return Some(out);
            }
            let disc = b.mul(b).sub(&four.mul(a).mul(c0));
            let mut out = Vec::new();
            if let Some(s) = disc.sqrt() {
                let denom_inv = two.mul(a).inv().expect("2a nonzero");
                let r1 = b.neg().add(&s).mul(&denom_inv);
                out.push(r1.clone());
                if !s.is_zero() {
                    out.push(b.neg().sub(&s).mul(&denom_inv));
                }
                out.sort();
                for r in &out {
                    debug_assert!(eval(&c, r).is_zero());
                }
            }
            Some(out)
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::super::VarKind;
    use super::*;

    fn p(v: u64) -> Arc<Prime> {
        Prime::from_u64(v).unwrap()
    }

    fn coeffs(vals: &[i64], prime: &Arc<Prime>) -> Coeffs {
        trim(
            vals.iter()
                .map(|&v| FieldElement::from_i64(v, prime.clone()))
                .collect(),
        )
    }

    #[test]
    fn division_and_gcd() {
        let p7 = p(7);
        // (x^2 - 1) / (x - 1) = x + 1
        let num = coeffs(&[-1, 0, 1], &p7);
        let den = coeffs(&[-1, 1], &p7);
        let (q, r) = div_rem(&num, &den);
        assert_eq!(q, coeffs(&[1, 1], &p7));
        assert!(r.is_empty());

        let g = gcd(&num, &den);
        assert_eq!(g, coeffs(&[-1, 1], &p7));
    }

    #[test]
    fn small_prime_roots_are_exhaustive() {
        let p7 = p(7);
        // x^2 - 1 has roots 1 and 6
        let r = roots(&coeffs(&[-1, 0, 1], &p7), &p7).unwrap();
        assert_eq!(
            r,
            vec![
                FieldElement::from_u64(1, p7.clone()),
                FieldElement::from_u64(6, p7.clone())
            ]
        );
        // x^2 + 1 has none mod 7
        assert!(roots(&coeffs(&[1, 0, 1], &p7), &p7).unwrap().is_empty());
        // x^3 - x has roots 0, 1, 6
        assert_eq!(roots(&coeffs(&[0, -1, 0, 1], &p7), &p7).unwrap().len(), 3);
    }

    #[test]
    fn big_prime_quadratics() {
        let bn = Prime::bn254();
        // (x - 3)(x - 5) = x^2 - 8x + 15
        let c = coeffs(&[15, -8, 1], &bn);
        let r = roots(&c, &bn).unwrap();
        assert_eq!(r.len(), 2);
        for root in &r {
            assert!(eval(&c, root).is_zero());
        }
        // degree 3 is not solved over big primes
        assert!(roots(&coeffs(&[1, 0, 0, 1], &bn), &bn).is_none());
    }

    #[test]
    fn poly_round_trip() {
        let p7 = p(7);
        let v = VarId::new(0, VarKind::Known);
        let c = coeffs(&[3, 0, 2], &p7);
        let poly = to_poly(v, &c, &p7);
        let (v2, c2) = as_univariate(&poly).unwrap();
        assert_eq!(v, v2);
        assert_eq!(c, c2);
    }
}
