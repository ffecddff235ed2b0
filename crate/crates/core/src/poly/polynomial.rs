//! Sparse multivariate polynomial arithmetic.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::field::{FieldElement, Prime};

use super::monomial::{Monomial, MonomialOrder};
use super::{VarId, VarKind};

/// A polynomial stored as a map from monomial to nonzero coefficient.
/// The empty map is the zero polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    prime: Arc<Prime>,
    terms: BTreeMap<Monomial, FieldElement>,
}

impl Polynomial {
    pub fn zero(prime: Arc<Prime>) -> Polynomial {
        Polynomial {
            prime,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: FieldElement) -> Polynomial {
        let mut p = Polynomial::zero(c.prime().clone());
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn from_u64(value: u64, prime: Arc<Prime>) -> Polynomial {
        Polynomial::constant(FieldElement::from_u64(value, prime))
    }

    pub fn from_i64(value: i64, prime: Arc<Prime>) -> Polynomial {
        Polynomial::constant(FieldElement::from_i64(value, prime))
    }

    pub fn var(v: VarId, prime: Arc<Prime>) -> Polynomial {
        let one = FieldElement::one(prime.clone());
        let mut p = Polynomial::zero(prime);
        p.terms.insert(Monomial::var(v), one);
        p
    }

    pub fn term(mono: Monomial, coeff: FieldElement) -> Polynomial {
        let mut p = Polynomial::zero(coeff.prime().clone());
        if !coeff.is_zero() {
            p.terms.insert(mono, coeff);
        }
        p
    }

    pub fn prime(&self) -> &Arc<Prime> {
        &self.prime
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    /// `Some(c)` when the polynomial is the constant `c` (zero included).
    pub fn as_constant(&self) -> Option<FieldElement> {
        match self.terms.len() {
            0 => Some(FieldElement::zero(self.prime.clone())),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                if m.is_one() {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn coefficient_of(&self, m: &Monomial) -> FieldElement {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| FieldElement::zero(self.prime.clone()))
    }

    fn check_same_prime(&self, other: &Polynomial) {
        assert_eq!(
            self.prime, other.prime,
            "polynomials have mismatched moduli"
        );
    }

    pub(crate) fn add_term(&mut self, mono: Monomial, coeff: &FieldElement) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(coeff);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_same_prime(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.check_same_prime(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &c.neg());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            prime: self.prime.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_same_prime(other);
        let mut out = Polynomial::zero(self.prime.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &ca.mul(cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.prime.clone());
        }
        Polynomial {
            prime: self.prime.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.mul(c)))
                .collect(),
        }
    }

    /// Multiplies by a single term `coeff * mono`.
    pub fn mul_term(&self, mono: &Monomial, coeff: &FieldElement) -> Polynomial {
        if coeff.is_zero() {
            return Polynomial::zero(self.prime.clone());
        }
        Polynomial {
            prime: self.prime.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.mul(mono), k.mul(coeff)))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut result = Polynomial::constant(FieldElement::one(self.prime.clone()));
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Max total degree over terms; 0 for constants and the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Max degree counting only exponents of variables with matching kinds.
    pub fn degree_in(&self, kinds: &[VarKind]) -> u32 {
        self.degree_where(|k| kinds.contains(&k))
    }

    pub fn degree_where(&self, pred: impl Fn(VarKind) -> bool + Copy) -> u32 {
        self.terms
            .keys()
            .map(|m| m.degree_where(pred))
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in_unknowns(&self) -> u32 {
        self.degree_where(VarKind::is_unknown)
    }

    /// Degree in a single variable.
    pub fn degree_of(&self, v: VarId) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponent_of(v))
            .max()
            .unwrap_or(0)
    }

    pub fn vars(&self) -> BTreeSet<VarId> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    pub fn contains_kind(&self, pred: impl Fn(VarKind) -> bool + Copy) -> bool {
        self.terms
            .keys()
            .any(|m| m.vars().any(|v| pred(v.kind)))
    }

    /// Rewrites `p` as a sum of unknown-monomials times known-coefficient
    /// polynomials. The constant monomial key collects the known-only part.
    pub fn collect_by_unknowns(&self) -> BTreeMap<Monomial, Polynomial> {
        let mut out: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (u_part, k_part) = m.split_where(VarKind::is_unknown);
            out.entry(u_part)
                .or_insert_with(|| Polynomial::zero(self.prime.clone()))
                .add_term(k_part, c);
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    /// Evaluation homomorphism: bound variables are replaced by their
    /// values, unbound variables remain symbolic.
    pub fn substitute(&self, binding: &BTreeMap<VarId, FieldElement>) -> Polynomial {
        if binding.is_empty() {
            return self.clone();
        }
        let mut out = Polynomial::zero(self.prime.clone());
        for (m, c) in &self.terms {
            let mut value = c.clone();
            let mut rest = Vec::new();
            for &(v, e) in m.exps() {
                match binding.get(&v) {
                    Some(x) => value = value.mul(&x.pow_u64(e as u64)),
                    None => rest.push((v, e)),
                }
            }
            out.add_term(Monomial::from_exps(rest), &value);
        }
        out
    }

    /// Full evaluation; every variable of the polynomial must be bound.
    pub fn eval(&self, binding: &BTreeMap<VarId, FieldElement>) -> FieldElement {
        self.substitute(binding)
            .as_constant()
            .expect("eval binding must cover every variable")
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &FieldElement)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
    }

    /// Terms in descending order under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &FieldElement)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        v
    }

    pub fn display_with(&self, name: &dyn Fn(VarId) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (m, c) in self.sorted_terms(&MonomialOrder::GrevLex) {
            let part = if m.is_one() {
                c.to_string()
            } else if c.is_one() {
                m.display_with(name)
            } else {
                format!("{}*{}", c, m.display_with(name))
            };
            parts.push(part);
        }
        parts.join(" + ")
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display_with(&|v| v.to_string()))
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn p7() -> Arc<Prime> {
        Prime::from_u64(7).unwrap()
    }

    fn x() -> VarId {
        VarId::new(0, VarKind::Output)
    }

    fn y() -> VarId {
        VarId::new(1, VarKind::Output)
    }

    #[test]
    fn difference_of_squares() {
        let p = p7();
        let xp = Polynomial::var(x(), p.clone());
        let one = Polynomial::from_u64(1, p.clone());
        let prod = xp.add(&one).mul(&xp.sub(&one));
        // x^2 + 6 over F_7
        let mut expect = Polynomial::zero(p.clone());
        expect.add_term(
            Monomial::from_exps([(x(), 2)]),
            &FieldElement::from_u64(1, p.clone()),
        );
        expect.add_term(Monomial::one(), &FieldElement::from_u64(6, p.clone()));
        assert_eq!(prod, expect);
    }

    #[test]
    fn mul_by_zero() {
        let p = p7();
        let xp = Polynomial::var(x(), p.clone());
        assert!(xp.mul(&Polynomial::zero(p.clone())).is_zero());
    }

    #[test]
    fn booleanity_expansion() {
        // b * (b - 1) = b^2 - b
        let p = p7();
        let b = Polynomial::var(x(), p.clone());
        let prod = b.mul(&b.sub(&Polynomial::from_u64(1, p.clone())));
        let mut expect = Polynomial::zero(p.clone());
        expect.add_term(
            Monomial::from_exps([(x(), 2)]),
            &FieldElement::from_u64(1, p.clone()),
        );
        expect.add_term(Monomial::var(x()), &FieldElement::from_i64(-1, p.clone()));
        assert_eq!(prod, expect);
        assert_eq!(prod.total_degree(), 2);
    }

    #[test]
    fn degrees() {
        let p = p7();
        let zero = Polynomial::zero(p.clone());
        assert_eq!(zero.total_degree(), 0);

        let inp = VarId::new(2, VarKind::Known);
        let out0 = VarId::new(0, VarKind::Output);
        // out0 * inp
        let c = Polynomial::var(out0, p.clone()).mul(&Polynomial::var(inp, p.clone()));
        assert_eq!(c.total_degree(), 2);
        assert_eq!(c.degree_in(&[VarKind::Temp, VarKind::Output]), 1);

        let b = Polynomial::var(out0, p.clone());
        let bb = b.mul(&b.sub(&Polynomial::from_u64(1, p.clone())));
        assert_eq!(bb.degree_in(&[VarKind::Temp, VarKind::Output]), 2);

        // 3*inp^2 + 5 has no unknowns
        let k2 = Polynomial::var(inp, p.clone()).pow(2).scale(&FieldElement::from_u64(3, p.clone()));
        let k = k2.add(&Polynomial::from_u64(5, p.clone()));
        assert_eq!(k.degree_in(&[VarKind::Temp, VarKind::Output]), 0);
    }

    #[test]
    fn collect_by_unknowns_examples() {
        let p = p7();
        let inp = VarId::new(2, VarKind::Known);
        let out0 = VarId::new(0, VarKind::Output);
        let out1 = VarId::new(1, VarKind::Output);
        let success = VarId::new(3, VarKind::Output);

        // out0 * inp -> { out0 -> inp }
        let c0 = Polynomial::var(out0, p.clone()).mul(&Polynomial::var(inp, p.clone()));
        let m0 = c0.collect_by_unknowns();
        assert_eq!(m0.len(), 1);
        assert_eq!(m0[&Monomial::var(out0)], Polynomial::var(inp, p.clone()));

        // out1 * (inp - 1) -> { out1 -> inp - 1 }
        let c1 = Polynomial::var(out1, p.clone()).mul(
            &Polynomial::var(inp, p.clone()).sub(&Polynomial::from_u64(1, p.clone())),
        );
        let m1 = c1.collect_by_unknowns();
        assert_eq!(m1.len(), 1);
        assert_eq!(
            m1[&Monomial::var(out1)],
            Polynomial::var(inp, p.clone()).sub(&Polynomial::from_u64(1, p.clone()))
        );

        // success^2 - success -> { success^2 -> 1, success -> -1 }
        let s = Polynomial::var(success, p.clone());
        let c2 = s.mul(&s).sub(&s);
        let m2 = c2.collect_by_unknowns();
        assert_eq!(m2.len(), 2);
        assert_eq!(
            m2[&Monomial::from_exps([(success, 2)])],
            Polynomial::from_u64(1, p.clone())
        );
        assert_eq!(
            m2[&Monomial::var(success)],
            Polynomial::from_i64(-1, p.clone())
        );
    }

    #[test]
    fn substitute_examples() {
        let p = p7();
        let inp = VarId::new(2, VarKind::Known);
        let out0 = VarId::new(0, VarKind::Output);
        let out1 = VarId::new(1, VarKind::Output);

        let zero_binding: BTreeMap<VarId, FieldElement> =
            [(inp, FieldElement::zero(p.clone()))].into_iter().collect();

        let c0 = Polynomial::var(out0, p.clone()).mul(&Polynomial::var(inp, p.clone()));
        assert!(c0.substitute(&zero_binding).is_zero());

        let c1 = Polynomial::var(out1, p.clone()).mul(
            &Polynomial::var(inp, p.clone()).sub(&Polynomial::from_u64(1, p.clone())),
        );
        assert_eq!(
            c1.substitute(&zero_binding),
            Polynomial::var(out1, p.clone()).neg()
        );

        let xy = Polynomial::var(out0, p.clone()).add(&Polynomial::var(out1, p.clone()));
        assert_eq!(xy.substitute(&BTreeMap::new()), xy);
    }

    fn random_poly(
        rng: &mut impl Rng,
        prime: &Arc<Prime>,
        vars: &[VarId],
        max_deg: u32,
        terms: usize,
    ) -> Polynomial {
        let mut p = Polynomial::zero(prime.clone());
        for _ in 0..terms {
            let exps: Vec<(VarId, u32)> = vars
                .iter()
                .map(|v| (*v, rng.random_range(0..=max_deg)))
                .collect();
            let c = FieldElement::from_u64(rng.random_range(0..100), prime.clone());
            p.add_term(Monomial::from_exps(exps), &c);
        }
        p
    }

    /// Ring laws checked by evaluation at every point of F_p^3.
    #[test]
    fn ring_laws_by_exhaustive_evaluation() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for pv in [5u64, 7, 13] {
            let prime = Prime::from_u64(pv).unwrap();
            let vars = [
                VarId::new(0, VarKind::Output),
                VarId::new(1, VarKind::Temp),
                VarId::new(2, VarKind::Known),
            ];
            for _ in 0..4 {
                let a = random_poly(&mut rng, &prime, &vars, 3, 3);
                let b = random_poly(&mut rng, &prime, &vars, 3, 3);
                let c = random_poly(&mut rng, &prime, &vars, 3, 3);
                let sum = a.add(&b);
                let prod = a.mul(&b);
                let dist = a.mul(&b.add(&c));
                let dist2 = a.mul(&b).add(&a.mul(&c));
                for x0 in 0..pv {
                    for x1 in 0..pv {
                        for x2 in 0..pv {
                            let binding: BTreeMap<VarId, FieldElement> = vars
                                .iter()
                                .zip([x0, x1, x2])
                                .map(|(v, x)| (*v, FieldElement::from_u64(x, prime.clone())))
                                .collect();
                            let (ea, eb) = (a.eval(&binding), b.eval(&binding));
                            assert_eq!(sum.eval(&binding), ea.add(&eb));
                            assert_eq!(prod.eval(&binding), ea.mul(&eb));
                            assert_eq!(dist.eval(&binding), dist2.eval(&binding));
                        }
                    }
                }
            }
        }
    }

    /// collect_by_unknowns is a partition: re-expanding reproduces the input.
    #[test]
    fn collect_reexpands_exactly() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(6);
        let prime = Prime::from_u64(13).unwrap();
        let vars = [
            VarId::new(0, VarKind::Output),
            VarId::new(1, VarKind::Known),
            VarId::new(2, VarKind::Temp),
            VarId::new(3, VarKind::Known),
        ];
        for _ in 0..50 {
            let p = random_poly(&mut rng, &prime, &vars, 3, 6);
            let collected = p.collect_by_unknowns();
            let mut rebuilt = Polynomial::zero(prime.clone());
            for (m, coeff) in &collected {
                rebuilt = rebuilt.add(&coeff.mul_term(m, &FieldElement::one(prime.clone())));
            }
            assert_eq!(rebuilt, p);
            for coeff in collected.values() {
                assert!(!coeff.contains_kind(|k| k.is_unknown()));
            }
        }
    }

    /// substitute commutes with evaluation on disjoint domains.
    #[test]
    fn substitute_commutes_with_eval() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let prime = Prime::from_u64(11).unwrap();
        let vars = [
            VarId::new(0, VarKind::Output),
            VarId::new(1, VarKind::Known),
            VarId::new(2, VarKind::Temp),
        ];
        for _ in 0..30 {
            let p = random_poly(&mut rng, &prime, &vars, 2, 5);
            let b1: BTreeMap<VarId, FieldElement> = [(
                vars[1],
                FieldElement::from_u64(rng.random_range(0..11), prime.clone()),
            )]
            .into_iter()
            .collect();
            let b2: BTreeMap<VarId, FieldElement> = [vars[0], vars[2]]
                .iter()
                .map(|v| {
                    (
                        *v,
                        FieldElement::from_u64(rng.random_range(0..11), prime.clone()),
                    )
                })
                .collect();
            let mut all = b1.clone();
            all.extend(b2.clone());
            assert_eq!(p.substitute(&b1).eval(&b2), p.eval(&all));
        }
    }
}
