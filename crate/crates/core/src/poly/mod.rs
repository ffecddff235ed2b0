//! Sparse multivariate polynomials and rational functions over F_p.

pub mod monomial;
pub mod polynomial;
pub mod rational;
pub mod univariate;

pub use monomial::{Monomial, MonomialOrder};
pub use polynomial::Polynomial;
pub use rational::RationalFunction;

/// What role a variable plays in the constraint system.
///
/// `Known` inputs are the K of the system; `Temp`, `Output` and `Aux`
/// together form the unknowns U. `Aux` marks variables introduced by degree
/// reduction and is treated like `Temp` everywhere downstream.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VarKind {
    Known,
    Temp,
    Output,
    Aux,
}

impl VarKind {
    pub fn is_unknown(self) -> bool {
        !matches!(self, VarKind::Known)
    }
}

/// A variable: an index unique within its system plus its kind.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct VarId {
    pub index: u32,
    pub kind: VarKind,
}

impl VarId {
    pub fn new(index: u32, kind: VarKind) -> VarId {
        VarId { index, kind }
    }

    pub fn is_unknown(self) -> bool {
        self.kind.is_unknown()
    }
}

impl PartialOrd for VarId {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VarId {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.index
            .cmp(&other.index)
            .then(self.kind.cmp(&other.kind))
    }
}

impl std::fmt::Display for VarId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = match self.kind {
            VarKind::Known => 'k',
            VarKind::Temp => 't',
            VarKind::Output => 'o',
            VarKind::Aux => 'a',
        };
        write!(f, "{tag}{}", self.index)
    }
}
