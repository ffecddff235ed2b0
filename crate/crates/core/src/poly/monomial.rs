//! Monomials (sparse exponent maps) and monomial orders.

use std::cmp::Ordering;

use super::{VarId, VarKind};

/// A product of variable powers, stored as a sorted sparse exponent list.
/// Zero exponents are never stored; the empty list is the monomial 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    exps: Vec<(VarId, u32)>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: VarId) -> Monomial {
        Monomial { exps: vec![(v, 1)] }
    }

    pub fn from_exps(exps: impl IntoIterator<Item = (VarId, u32)>) -> Monomial {
        let mut map: Vec<(VarId, u32)> = Vec::new();
        for (v, e) in exps {
            if e == 0 {
                continue;
            }
            match map.binary_search_by(|(w, _)| w.cmp(&v)) {
                Ok(i) => map[i].1 += e,
                Err(i) => map.insert(i, (v, e)),
            }
        }
        Monomial { exps: map }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exps(&self) -> &[(VarId, u32)] {
        &self.exps
    }

    pub fn vars(&self) -> impl Iterator<Item = VarId> + '_ {
        self.exps.iter().map(|(v, _)| *v)
    }

    pub fn exponent_of(&self, v: VarId) -> u32 {
        self.exps
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|(_, e)| e).sum()
    }

    /// Total degree counting only variables whose kind matches.
    pub fn degree_where(&self, pred: impl Fn(VarKind) -> bool) -> u32 {
        self.exps
            .iter()
            .filter(|(v, _)| pred(v.kind))
            .map(|(_, e)| e)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                Ordering::Less => {
                    out.push(self.exps[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.exps[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.exps[i].0, self.exps[i].1 + other.exps[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Monomial { exps: out }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .all(|(v, e)| other.exponent_of(*v) >= *e)
    }

    /// `self / divisor` when divisible.
    pub fn try_div(&self, divisor: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.exps.len());
        for (v, e) in &self.exps {
            let d = divisor.exponent_of(*v);
            if d > *e {
                return None;
            }
            if d < *e {
                out.push((*v, e - d));
            }
        }
        if divisor.exps.iter().any(|(v, _)| self.exponent_of(*v) == 0) {
            return None;
        }
        Some(Monomial { exps: out })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                Ordering::Less => {
                    out.push(self.exps[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.exps[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.exps[i].0, self.exps[i].1.max(other.exps[j].1)));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Monomial { exps: out }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .all(|(v, _)| other.exponent_of(*v) == 0)
    }

    /// Splits into the part whose variable kinds match and the rest.
    pub fn split_where(&self, pred: impl Fn(VarKind) -> bool) -> (Monomial, Monomial) {
        let (hit, miss) = self.exps.iter().partition(|(v, _)| pred(v.kind));
        (Monomial { exps: hit }, Monomial { exps: miss })
    }

    pub fn display_with(&self, name: &dyn Fn(VarId) -> String) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.exps
            .iter()
            .map(|(v, e)| {
                if *e == 1 {
                    name(*v)
                } else {
                    format!("{}^{}", name(*v), e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl std::fmt::Display for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.display_with(&|v| v.to_string()))
    }
}

/// A total multiplicative order on monomials with 1 minimal.
///
/// `GrevLex` grades by total degree with reverse-lexicographic tie break.
/// `Lex` compares variables in the given priority order (earlier entries are
/// more significant); variables missing from the list rank after it, by
/// ascending index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MonomialOrder {
    GrevLex,
    Lex(Vec<VarId>),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::GrevLex => grevlex_cmp(a, b),
            MonomialOrder::Lex(priority) => lex_cmp(a, b, priority),
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

fn grevlex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    let deg = a.total_degree().cmp(&b.total_degree());
    if deg != Ordering::Equal {
        return deg;
    }
    // Walk from the least significant (largest) variable down; the first
    // exponent difference decides, with the smaller exponent winning.
    let (ea, eb) = (a.exps(), b.exps());
    let (mut i, mut j) = (ea.len(), eb.len());
    while i > 0 || j > 0 {
        let va = if i > 0 { Some(ea[i - 1].0) } else { None };
        let vb = if j > 0 { Some(eb[j - 1].0) } else { None };
        match (va, vb) {
            (Some(x), Some(y)) => match x.cmp(&y) {
                Ordering::Greater => {
                    // a has the larger trailing variable: a's exponent there
                    // is positive, b's is zero, so a is smaller.
                    return Ordering::Less;
                }
                Ordering::Less => return Ordering::Greater,
                Ordering::Equal => {
                    match ea[i - 1].1.cmp(&eb[j - 1].1) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => {}
                    }
                    i -= 1;
                    j -= 1;
                }
            },
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
            (None, None) => unreachable!(),
        }
    }
    Ordering::Equal
}

fn lex_cmp(a: &Monomial, b: &Monomial, priority: &[VarId]) -> Ordering {
    for v in priority {
        match a.exponent_of(*v).cmp(&b.exponent_of(*v)) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    // Remaining variables, ascending index.
    let mut rest: Vec<VarId> = a
        .vars()
        .chain(b.vars())
        .filter(|v| !priority.contains(v))
        .collect();
    rest.sort();
    rest.dedup();
    for v in rest {
        match a.exponent_of(v).cmp(&b.exponent_of(v)) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    Ordering::Equal
}
