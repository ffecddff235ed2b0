//! Quotients of polynomials, the entry type of parametric matrices.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldElement, Prime};

use super::polynomial::Polynomial;
use super::univariate;
use super::VarKind;

/// `num / den` with a nonzero denominator containing only known variables.
///
/// Normalization is best effort: constant denominators are folded into the
/// numerator, and a common univariate factor is cancelled when both parts
/// are univariate in the same variable. Equality goes through
/// cross-multiplication, so unnormalized-but-equal values still compare equal.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn from_poly(num: Polynomial) -> RationalFunction {
        let den = Polynomial::from_u64(1, num.prime().clone());
        RationalFunction { num, den }
    }

    pub fn from_ratio(num: Polynomial, den: Polynomial) -> Result<RationalFunction> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        debug_assert!(
            !den.contains_kind(VarKind::is_unknown),
            "rational denominators must be known-only"
        );
        let mut r = RationalFunction { num, den };
        r.reduce();
        Ok(r)
    }

    pub fn constant(c: FieldElement) -> RationalFunction {
        RationalFunction::from_poly(Polynomial::constant(c))
    }

    pub fn zero(prime: Arc<Prime>) -> RationalFunction {
        RationalFunction::from_poly(Polynomial::zero(prime))
    }

    pub fn one(prime: Arc<Prime>) -> RationalFunction {
        RationalFunction::from_poly(Polynomial::from_u64(1, prime))
    }

    pub fn prime(&self) -> &Arc<Prime> {
        self.num.prime()
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `Some(c)` when both parts are constants.
    pub fn as_constant(&self) -> Option<FieldElement> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n.div(&d).expect("denominator is nonzero"))
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Polynomial::from_u64(1, self.num.prime().clone());
            return;
        }
        if let Some(c) = self.den.as_constant() {
            if !c.is_one() {
                let inv = c.inv().expect("denominator is nonzero");
                self.num = self.num.scale(&inv);
                self.den = Polynomial::from_u64(1, self.num.prime().clone());
            }
            return;
        }
        // Univariate cancellation when both parts share one variable.
        if let (Some((vn, n)), Some((vd, d))) = (
            univariate::as_univariate(&self.num),
            univariate::as_univariate(&self.den),
        ) {
            if vn == vd {
                let g = univariate::gcd(&n, &d);
                if univariate::degree(&g) > 0 {
                    let (qn, rn) = univariate::div_rem(&n, &g);
                    let (qd, rd) = univariate::div_rem(&d, &g);
                    debug_assert!(rn.iter().all(FieldElement::is_zero));
                    debug_assert!(rd.iter().all(FieldElement::is_zero));
                    self.num = univariate::to_poly(vn, &qn, self.num.prime());
                    self.den = univariate::to_poly(vd, &qd, self.num.prime());
                    self.reduce();
                    return;
                }
            }
        }
        // Monic denominator for a more canonical display.
        if let Some((_, lc)) = self
            .den
            .leading_term(&super::MonomialOrder::GrevLex)
            .map(|(m, c)| (m.clone(), c.clone()))
        {
            if !lc.is_one() {
                let inv = lc.inv().expect("leading coefficient nonzero");
                self.num = self.num.scale(&inv);
                self.den = self.den.scale(&inv);
            }
        }
    }

    pub fn add(&self, other: &RationalFunction) -> RationalFunction {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        RationalFunction::from_ratio(num, den).expect("product of nonzero denominators")
    }

    pub fn sub(&self, other: &RationalFunction) -> RationalFunction {
        let num = self.num.mul(&other.den).sub(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        RationalFunction::from_ratio(num, den).expect("product of nonzero denominators")
    }

    pub fn mul(&self, other: &RationalFunction) -> RationalFunction {
        RationalFunction::from_ratio(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("product of nonzero denominators")
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    /// Reciprocal; the numerator must be a nonzero known-only polynomial
    /// (pivot inversion is where assumption ledgers get their entries).
    pub fn inv(&self) -> Result<RationalFunction> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RationalFunction::from_ratio(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &RationalFunction) -> Result<RationalFunction> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn display_with(&self, name: &dyn Fn(super::VarId) -> String) -> String {
        if self.den.as_constant().map(|c| c.is_one()).unwrap_or(false) {
            self.num.display_with(name)
        } else {
            format!(
                "({}) / ({})",
                self.num.display_with(name),
                self.den.display_with(name)
            )
        }
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}
impl Eq for RationalFunction {}

impl std::fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display_with(&|v| v.to_string()))
    }
}
