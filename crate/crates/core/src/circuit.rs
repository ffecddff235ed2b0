//! The constraint-system model: variables partitioned into known inputs,
//! temporaries and outputs, plus the polynomial constraints over them.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldElement, Prime};
use crate::poly::{Monomial, Polynomial, VarId, VarKind};

#[derive(Clone, Debug)]
pub struct VarInfo {
    pub id: VarId,
    pub name: String,
}

/// The tuple of variables and constraints that the checkers consume.
/// Every constraint polynomial is interpreted as `= 0`.
#[derive(Clone, Debug)]
pub struct ConstraintSystem {
    prime: Arc<Prime>,
    vars: Vec<VarInfo>,
    constraints: Vec<Polynomial>,
}

/// How a single constraint uses the unknowns.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConstraintClass {
    /// Linear in the unknowns with constant coefficients throughout.
    PreciselyLinear,
    /// Linear in the unknowns, at least one coefficient a nonconstant
    /// polynomial in the known inputs.
    KCoefficientLinear,
    /// Degree two or more in the unknowns.
    HigherOrder,
}

/// The circuit-level classification that picks the solver pipeline.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize)]
pub enum CircuitClass {
    PreciselyLinear,
    KCoefficient,
    HigherOrder,
}

impl std::fmt::Display for CircuitClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            CircuitClass::PreciselyLinear => "precisely-linear",
            CircuitClass::KCoefficient => "k-coefficient",
            CircuitClass::HigherOrder => "higher-order",
        };
        write!(f, "{s}")
    }
}

/// Incremental constructor used by the frontends and by tests.
pub struct SystemBuilder {
    prime: Arc<Prime>,
    vars: Vec<VarInfo>,
    by_name: BTreeMap<String, VarId>,
    constraints: Vec<Polynomial>,
}

impl SystemBuilder {
    pub fn new(prime: Arc<Prime>) -> SystemBuilder {
        SystemBuilder {
            prime,
            vars: Vec::new(),
            by_name: BTreeMap::new(),
            constraints: Vec::new(),
        }
    }

    pub fn prime(&self) -> &Arc<Prime> {
        &self.prime
    }

    pub fn add_var(&mut self, name: &str, kind: VarKind) -> Result<VarId> {
        if self.by_name.contains_key(name) {
            return Err(Error::Usage(format!("duplicate variable {name:?}")));
        }
        let id = VarId::new(self.vars.len() as u32, kind);
        self.vars.push(VarInfo {
            id,
            name: name.to_string(),
        });
        self.by_name.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn lookup(&self, name: &str) -> Option<VarId> {
        self.by_name.get(name).copied()
    }

    pub fn push_constraint(&mut self, constraint: Polynomial) {
        self.constraints.push(constraint);
    }

    pub fn build(self) -> ConstraintSystem {
        ConstraintSystem {
            prime: self.prime,
            vars: self.vars,
            constraints: self.constraints,
        }
    }
}

impl ConstraintSystem {
    pub fn prime(&self) -> &Arc<Prime> {
        &self.prime
    }

    pub fn constraints(&self) -> &[Polynomial] {
        &self.constraints
    }

    pub fn vars(&self) -> &[VarInfo] {
        &self.vars
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_name(&self, v: VarId) -> String {
        self.vars
            .get(v.index as usize)
            .map(|i| i.name.clone())
            .unwrap_or_else(|| v.to_string())
    }

    pub fn find_var(&self, name: &str) -> Option<VarId> {
        self.vars.iter().find(|i| i.name == name).map(|i| i.id)
    }

    fn ids_of(&self, pred: impl Fn(VarKind) -> bool) -> Vec<VarId> {
        self.vars
            .iter()
            .filter(|i| pred(i.id.kind))
            .map(|i| i.id)
            .collect()
    }

    pub fn knowns(&self) -> Vec<VarId> {
        self.ids_of(|k| k == VarKind::Known)
    }

    pub fn outputs(&self) -> Vec<VarId> {
        self.ids_of(|k| k == VarKind::Output)
    }

    pub fn temps(&self) -> Vec<VarId> {
        self.ids_of(|k| k == VarKind::Temp)
    }

    /// All unknowns (temporaries, outputs and degree-reduction auxiliaries),
    /// in index order; this is the fixed matrix column enumeration.
    pub fn unknowns(&self) -> Vec<VarId> {
        self.ids_of(VarKind::is_unknown)
    }

    /// Same variable universe, different constraint list.
    pub fn with_constraints(&self, constraints: Vec<Polynomial>) -> ConstraintSystem {
        ConstraintSystem {
            prime: self.prime.clone(),
            vars: self.vars.clone(),
            constraints,
        }
    }

    pub fn render_poly(&self, p: &Polynomial) -> String {
        p.display_with(&|v| self.var_name(v))
    }

    fn fresh_aux(&mut self) -> VarId {
        let mut n = 0;
        let name = loop {
            let candidate = format!("_aux{n}");
            if self.vars.iter().all(|v| v.name != candidate) {
                break candidate;
            }
            n += 1;
        };
        let id = VarId::new(self.vars.len() as u32, VarKind::Aux);
        self.vars.push(VarInfo { id, name });
        id
    }

    /// Classifies one constraint. Linearity is measured in the unknowns;
    /// a constraint is precise only when every collected coefficient,
    /// including the known-only part, is a field constant.
    pub fn classify_constraint(&self, p: &Polynomial) -> ConstraintClass {
        if p.degree_in_unknowns() >= 2 {
            return ConstraintClass::HigherOrder;
        }
        let all_constant = p
            .collect_by_unknowns()
            .values()
            .all(Polynomial::is_constant);
        if all_constant {
            ConstraintClass::PreciselyLinear
        } else {
            ConstraintClass::KCoefficientLinear
        }
    }

    /// Classifies the whole system; errors on an empty constraint list.
    pub fn classify(&self) -> Result<CircuitClass> {
        if self.constraints.is_empty() {
            return Err(Error::EmptySystem);
        }
        let mut class = CircuitClass::PreciselyLinear;
        for c in &self.constraints {
            match self.classify_constraint(c) {
                ConstraintClass::HigherOrder => return Ok(CircuitClass::HigherOrder),
                ConstraintClass::KCoefficientLinear => class = CircuitClass::KCoefficient,
                ConstraintClass::PreciselyLinear => {}
            }
        }
        Ok(class)
    }

    /// Substitutes a partial binding into every constraint.
    pub fn substitute(&self, binding: &BTreeMap<VarId, FieldElement>) -> Vec<Polynomial> {
        self.constraints
            .iter()
            .map(|c| c.substitute(binding))
            .collect()
    }
}

fn substitute_square(p: &Polynomial, v: VarId, aux: VarId) -> Polynomial {
    let mut out = Polynomial::zero(p.prime().clone());
    for (m, c) in p.terms() {
        let e = m.exponent_of(v);
        if e < 2 {
            out.add_term(m.clone(), c);
            continue;
        }
        let mut exps: Vec<(VarId, u32)> = m
            .exps()
            .iter()
            .filter(|(w, _)| *w != v)
            .copied()
            .collect();
        if e % 2 == 1 {
            exps.push((v, 1));
        }
        exps.push((aux, e / 2));
        out.add_term(Monomial::from_exps(exps), c);
    }
    out
}

fn substitute_pair(p: &Polynomial, u: VarId, v: VarId, aux: VarId) -> Polynomial {
    let mut out = Polynomial::zero(p.prime().clone());
    for (m, c) in p.terms() {
        let (eu, ev) = (m.exponent_of(u), m.exponent_of(v));
        let t = eu.min(ev);
        if t == 0 {
            out.add_term(m.clone(), c);
            continue;
        }
        let mut exps: Vec<(VarId, u32)> = m
            .exps()
            .iter()
            .filter(|(w, _)| *w != u && *w != v)
            .copied()
            .collect();
        if eu > t {
            exps.push((u, eu - t));
        }
        if ev > t {
            exps.push((v, ev - t));
        }
        exps.push((aux, t));
        out.add_term(Monomial::from_exps(exps), c);
    }
    out
}

/// Rewrites the system so every constraint has degree at most two in the
/// unknowns, introducing fresh auxiliary variables. The solution set,
/// projected back onto the original variables, is unchanged.
pub fn reduce_degree(sys: &ConstraintSystem) -> ConstraintSystem {
    reduce_degree_capped(sys, usize::MAX).expect("uncapped reduction cannot overflow")
}

/// Degree reduction with a round cap, for frontends guarding against
/// pathological input degrees.
pub fn reduce_degree_capped(sys: &ConstraintSystem, max_rounds: usize) -> Result<ConstraintSystem> {
    let mut sys = sys.clone();
    let mut rounds = 0usize;
    loop {
        // The target: the structurally-first monomial of maximal unknown-degree.
        let mut worst: Option<(u32, Monomial)> = None;
        for c in &sys.constraints {
            for (m, _) in c.terms() {
                let d = m.degree_where(VarKind::is_unknown);
                if d <= 2 {
                    continue;
                }
                let better = match &worst {
                    None => true,
                    Some((wd, wm)) => d > *wd || (d == *wd && m < wm),
                };
                if better {
                    worst = Some((d, m.clone()));
                }
            }
        }
        let Some((_, target)) = worst else {
            return Ok(sys);
        };
        if rounds >= max_rounds {
            return Err(Error::Usage(format!(
                "degree reduction did not converge within {max_rounds} rounds"
            )));
        }
        rounds += 1;

        // Prefer splitting off a square of the most-repeated unknown;
        // squarefree monomials fall back to splitting a variable pair.
        let square_var = target
            .exps()
            .iter()
            .filter(|(v, e)| v.is_unknown() && *e >= 2)
            .max_by_key(|(v, e)| (*e, std::cmp::Reverse(*v)))
            .map(|(v, _)| *v);
        let aux = sys.fresh_aux();
        let prime = sys.prime.clone();
        match square_var {
            Some(v) => {
                for c in &mut sys.constraints {
                    *c = substitute_square(c, v, aux);
                }
                // v^2 - aux = 0
                let def = Polynomial::term(
                    Monomial::from_exps([(v, 2)]),
                    FieldElement::one(prime.clone()),
                )
                .sub(&Polynomial::var(aux, prime.clone()));
                sys.constraints.push(def);
            }
            None => {
                let mut unknowns = target.vars().filter(|v| v.is_unknown());
                let u = unknowns.next().expect("degree > 2 implies unknowns");
                let v = unknowns.next().expect("squarefree with degree > 2");
                for c in &mut sys.constraints {
                    *c = substitute_pair(c, u, v, aux);
                }
                // u*v - aux = 0
                let def = Polynomial::term(
                    Monomial::from_exps([(u, 1), (v, 1)]),
                    FieldElement::one(prime.clone()),
                )
                .sub(&Polynomial::var(aux, prime));
                sys.constraints.push(def);
            }
        }
    }
}

/// Role assigned to each wire of a compiled circuit.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WireRole {
    /// The constant-one wire; folded into coefficients, never a variable.
    Constant,
    Var(VarKind),
}

/// Header counts from a compiled artifact, in wire order: the constant wire,
/// public outputs, public inputs, private inputs, then internal wires.
#[derive(Clone, Copy, Debug)]
pub struct WireMeta {
    pub n_wires: u32,
    pub n_pub_out: u32,
    pub n_pub_in: u32,
    pub n_prv_in: u32,
}

/// Splits wires into outputs, knowns (all inputs, public and private) and
/// temporaries. Wire 0 is the constant and joins none of the three sets.
pub fn partition_variables(meta: &WireMeta) -> Result<Vec<WireRole>> {
    let declared = 1u64 + meta.n_pub_out as u64 + meta.n_pub_in as u64 + meta.n_prv_in as u64;
    if declared > meta.n_wires as u64 {
        return Err(Error::format(
            "r1cs",
            "header",
            format!(
                "declared wires overlap: 1 + {} outputs + {} + {} inputs exceed {} wires",
                meta.n_pub_out, meta.n_pub_in, meta.n_prv_in, meta.n_wires
            ),
        ));
    }
    let mut roles = Vec::with_capacity(meta.n_wires as usize);
    for w in 0..meta.n_wires {
        let role = if w == 0 {
            WireRole::Constant
        } else if w <= meta.n_pub_out {
            WireRole::Var(VarKind::Output)
        } else if w <= meta.n_pub_out + meta.n_pub_in + meta.n_prv_in {
            WireRole::Var(VarKind::Known)
        } else {
            WireRole::Var(VarKind::Temp)
        };
        roles.push(role);
    }
    Ok(roles)
}
