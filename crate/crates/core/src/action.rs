//! Associative and Lie actions, the induced Lie action and semidirect products.

use crate::algebra::{Algebra, Flavor};
use crate::error::{Error, Result};
use crate::linspace::{BilMap, LinMap, Space, Vector};
use crate::report::{Axiom, ValidationReport};

/// A pair `(*₁, *₂)` of bilinear maps `N × M → M` and `M × N → M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocAction {
    actor: Algebra,
    module: Algebra,
    left: BilMap,
    right: BilMap,
}

impl AssocAction {
    /// Shape-checked but unvalidated. Use [`AssocAction::new`] for a validated action.
    pub fn from_parts(actor: Algebra, module: Algebra, left: BilMap, right: BilMap) -> Result<AssocAction> {
        actor.space().check_shape(left.left(), "left action: actor")?;
        module.space().check_shape(left.right(), "left action: module")?;
        module.space().check_shape(left.codomain(), "left action: codomain")?;
        module.space().check_shape(right.left(), "right action: module")?;
        actor.space().check_shape(right.right(), "right action: actor")?;
        module.space().check_shape(right.codomain(), "right action: codomain")?;
        let left = left.with_spaces(actor.space().clone(), module.space().clone(), module.space().clone())?;
        let right = right.with_spaces(module.space().clone(), actor.space().clone(), module.space().clone())?;
        Ok(AssocAction { actor, module, left, right })
    }

    pub fn new(actor: Algebra, module: Algebra, left: BilMap, right: BilMap) -> Result<AssocAction> {
        let a = AssocAction::from_parts(actor, module, left, right)?;
        let report = assoc_action_report(&a, "action");
        if !report.passed() {
            return Err(Error::InvalidAction(Box::new(report)));
        }
        Ok(a)
    }

    /// `(*, *)`: an associative algebra acting on itself by multiplication.
    pub fn self_action(a: &Algebra) -> Result<AssocAction> {
        a.require(Flavor::Assoc)?;
        Ok(AssocAction { actor: a.clone(), module: a.clone(), left: a.mult().clone(), right: a.mult().clone() })
    }

    pub fn zero(actor: &Algebra, module: &Algebra) -> AssocAction {
        AssocAction {
            actor: actor.clone(),
            module: module.clone(),
            left: BilMap::zero(actor.space(), module.space(), module.space()),
            right: BilMap::zero(module.space(), actor.space(), module.space()),
        }
    }

    pub fn actor(&self) -> &Algebra {
        &self.actor
    }

    pub fn module(&self) -> &Algebra {
        &self.module
    }

    pub fn left(&self) -> &BilMap {
        &self.left
    }

    pub fn right(&self) -> &BilMap {
        &self.right
    }

    /// `n *₁ m`
    pub fn act_left(&self, n: &Vector, m: &Vector) -> Vector {
        self.left.apply(n, m)
    }

    /// `m *₂ n`
    pub fn act_right(&self, m: &Vector, n: &Vector) -> Vector {
        self.right.apply(m, n)
    }

    /// `[n, m]_* = n *₁ m - m *₂ n`
    pub fn bracket(&self, n: &Vector, m: &Vector) -> Vector {
        &self.act_left(n, m) - &self.act_right(m, n)
    }
}

/// A bilinear map `N × M → M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAction {
    actor: Algebra,
    module: Algebra,
    dot: BilMap,
}

impl LieAction {
    pub fn from_parts(actor: Algebra, module: Algebra, dot: BilMap) -> Result<LieAction> {
        actor.space().check_shape(dot.left(), "Lie action: actor")?;
        module.space().check_shape(dot.right(), "Lie action: module")?;
        module.space().check_shape(dot.codomain(), "Lie action: codomain")?;
        let dot = dot.with_spaces(actor.space().clone(), module.space().clone(), module.space().clone())?;
        Ok(LieAction { actor, module, dot })
    }

    pub fn new(actor: Algebra, module: Algebra, dot: BilMap) -> Result<LieAction> {
        let a = LieAction::from_parts(actor, module, dot)?;
        let report = lie_action_report(&a, "action");
        if !report.passed() {
            return Err(Error::InvalidAction(Box::new(report)));
        }
        Ok(a)
    }

    /// `Ad`: a Lie algebra acting on itself by its bracket.
    pub fn adjoint(l: &Algebra) -> Result<LieAction> {
        l.require(Flavor::Lie)?;
        Ok(LieAction { actor: l.clone(), module: l.clone(), dot: l.mult().clone() })
    }

    pub fn zero(actor: &Algebra, module: &Algebra) -> LieAction {
        LieAction {
            actor: actor.clone(),
            module: module.clone(),
            dot: BilMap::zero(actor.space(), module.space(), module.space()),
        }
    }

    pub fn actor(&self) -> &Algebra {
        &self.actor
    }

    pub fn module(&self) -> &Algebra {
        &self.module
    }

    pub fn dot(&self) -> &BilMap {
        &self.dot
    }

    pub fn act(&self, n: &Vector, m: &Vector) -> Vector {
        self.dot.apply(n, m)
    }
}

/// AAs1–AAs6 on basis triples.
pub fn validate_assoc_action(a: &AssocAction) -> ValidationReport {
    let (n, m) = (a.actor(), a.module());
    let (dn, dm) = (n.dim(), m.dim());
    let mut r = ValidationReport::new("action");
    // n *₁ (mm') = (n *₁ m) m'
    r.check(Axiom::AAs1, &[dn, dm, dm], |t| {
        let (x, y, z) = (n.unit(t[0]), m.unit(t[1]), m.unit(t[2]));
        (a.act_left(&x, m.mul_basis(t[1], t[2])), m.mul(&a.act_left(&x, &y), &z))
    });
    // n *₁ (m *₂ n') = (n *₁ m) *₂ n'
    r.check(Axiom::AAs2, &[dn, dm, dn], |t| {
        let (x, y, z) = (n.unit(t[0]), m.unit(t[1]), n.unit(t[2]));
        (a.act_left(&x, &a.act_right(&y, &z)), a.act_right(&a.act_left(&x, &y), &z))
    });
    // n *₁ (n' *₁ m) = (nn') *₁ m
    r.check(Axiom::AAs3, &[dn, dn, dm], |t| {
        let (x, y, z) = (n.unit(t[0]), n.unit(t[1]), m.unit(t[2]));
        (a.act_left(&x, &a.act_left(&y, &z)), a.act_left(n.mul_basis(t[0], t[1]), &z))
    });
    // m *₂ (nn') = (m *₂ n) *₂ n'
    r.check(Axiom::AAs4, &[dm, dn, dn], |t| {
        let (x, y, z) = (m.unit(t[0]), n.unit(t[1]), n.unit(t[2]));
        (a.act_right(&x, n.mul_basis(t[1], t[2])), a.act_right(&a.act_right(&x, &y), &z))
    });
    // m (n *₁ m') = (m *₂ n) m'
    r.check(Axiom::AAs5, &[dm, dn, dm], |t| {
        let (x, y, z) = (m.unit(t[0]), n.unit(t[1]), m.unit(t[2]));
        (m.mul(&x, &a.act_left(&y, &z)), m.mul(&a.act_right(&x, &y), &z))
    });
    // m (m' *₂ n) = (mm') *₂ n
    r.check(Axiom::AAs6, &[dm, dm, dn], |t| {
        let (x, y, z) = (m.unit(t[0]), m.unit(t[1]), n.unit(t[2]));
        (m.mul(&x, &a.act_right(&y, &z)), a.act_right(m.mul_basis(t[0], t[1]), &z))
    });
    r
}

/// ALie1–ALie2 on basis triples.
pub fn validate_lie_action(a: &LieAction) -> ValidationReport {
    let (n, m) = (a.actor(), a.module());
    let (dn, dm) = (n.dim(), m.dim());
    let mut r = ValidationReport::new("action");
    // [n,n']·m = n·(n'·m) - n'·(n·m)
    r.check(Axiom::ALie1, &[dn, dn, dm], |t| {
        let (x, y, z) = (n.unit(t[0]), n.unit(t[1]), m.unit(t[2]));
        let lhs = a.act(n.mul_basis(t[0], t[1]), &z);
        let rhs = &a.act(&x, &a.act(&y, &z)) - &a.act(&y, &a.act(&x, &z));
        (lhs, rhs)
    });
    // n·[m,m'] = [n·m, m'] + [m, n·m']
    r.check(Axiom::ALie2, &[dn, dm, dm], |t| {
        let (x, y, z) = (n.unit(t[0]), m.unit(t[1]), m.unit(t[2]));
        let lhs = a.act(&x, m.mul_basis(t[1], t[2]));
        let rhs = &m.mul(&a.act(&x, &y), &z) + &m.mul(&y, &a.act(&x, &z));
        (lhs, rhs)
    });
    r
}

/// Flavor checks of both algebras followed by AAs1–AAs6.
pub fn assoc_action_report(a: &AssocAction, subject: &str) -> ValidationReport {
    let mut r = ValidationReport::new(subject);
    r.extend(a.actor().flavor_report(&format!("{subject}.actor"), Flavor::Assoc));
    r.extend(a.module().flavor_report(&format!("{subject}.module"), Flavor::Assoc));
    r.extend(retitle(validate_assoc_action(a), subject));
    r
}

pub fn lie_action_report(a: &LieAction, subject: &str) -> ValidationReport {
    let mut r = ValidationReport::new(subject);
    r.extend(a.actor().flavor_report(&format!("{subject}.actor"), Flavor::Lie));
    r.extend(a.module().flavor_report(&format!("{subject}.module"), Flavor::Lie));
    r.extend(retitle(validate_lie_action(a), subject));
    r
}

pub(crate) fn retitle(mut r: ValidationReport, subject: &str) -> ValidationReport {
    for e in &mut r.entries {
        e.subject = subject.to_string();
    }
    r.subject = subject.to_string();
    r
}

/// `[n, m]_* = n *₁ m - m *₂ n`, a Lie action of `N^ℒ` on `M^ℒ`.
pub fn induced_lie_action(a: &AssocAction) -> Result<LieAction> {
    let report = assoc_action_report(a, "action");
    if !report.passed() {
        return Err(Error::InvalidAction(Box::new(report)));
    }
    Ok(LieAction {
        actor: a.actor().commutator_algebra(),
        module: a.module().commutator_algebra(),
        dot: a.left().sub(&a.right().transpose()),
    })
}

/// `M ⋊ N` with its structure maps. Basis: the `M` block, then the `N` block.
#[derive(Clone, Debug)]
pub struct Semidirect {
    pub algebra: Algebra,
    /// `m ↦ (m, 0)`
    pub inj_m: LinMap,
    /// `n ↦ (0, n)`
    pub inj_n: LinMap,
    /// `(m, n) ↦ n`
    pub proj_n: LinMap,
}

fn semidirect_space(m: &Algebra, n: &Algebra) -> Space {
    m.space().direct_sum(n.space(), "m_", "n_")
}

fn semidirect_maps(space: &Space, m: &Algebra, n: &Algebra) -> (LinMap, LinMap, LinMap) {
    let dm = m.dim();
    let inj_m = LinMap::from_fn(m.space(), space, |j| space.unit(j));
    let inj_n = LinMap::from_fn(n.space(), space, |j| space.unit(dm + j));
    let proj_n = LinMap::from_fn(space, n.space(), |j| if j < dm { n.zero() } else { n.unit(j - dm) });
    (inj_m, inj_n, proj_n)
}

/// `(m,n)(m',n') = (mm' + n *₁ m' + m *₂ n', nn')`
pub fn semidirect_assoc(a: &AssocAction) -> Result<Semidirect> {
    let report = assoc_action_report(a, "action");
    if !report.passed() {
        return Err(Error::InvalidAction(Box::new(report)));
    }
    let (m, n) = (a.module(), a.actor());
    let dm = m.dim();
    let space = semidirect_space(m, n);
    let split = |v: &Vector| (v.slice(0, dm), v.slice(dm, n.dim()));
    let mult = BilMap::from_vector_fn(&space, &space, &space, |x, y| {
        let ((m1, n1), (m2, n2)) = (split(x), split(y));
        let mut first = m.mul(&m1, &m2);
        first = &first + &a.act_left(&n1, &m2);
        first = &first + &a.act_right(&m1, &n2);
        first.concat(&n.mul(&n1, &n2))
    });
    let algebra = Algebra::new(space.clone(), mult)?;
    let (inj_m, inj_n, proj_n) = semidirect_maps(&space, m, n);
    Ok(Semidirect { algebra, inj_m, inj_n, proj_n })
}

/// `[(m,n),(m',n')] = ([m,m'] + n·m' - n'·m, [n,n'])`
pub fn semidirect_lie(a: &LieAction) -> Result<Semidirect> {
    let report = lie_action_report(a, "action");
    if !report.passed() {
        return Err(Error::InvalidAction(Box::new(report)));
    }
    let (m, n) = (a.module(), a.actor());
    let dm = m.dim();
    let space = semidirect_space(m, n);
    let split = |v: &Vector| (v.slice(0, dm), v.slice(dm, n.dim()));
    let mult = BilMap::from_vector_fn(&space, &space, &space, |x, y| {
        let ((m1, n1), (m2, n2)) = (split(x), split(y));
        let first = &(&m.mul(&m1, &m2) + &a.act(&n1, &m2)) - &a.act(&n2, &m1);
        first.concat(&n.mul(&n1, &n2))
    });
    let algebra = Algebra::new(space.clone(), mult)?;
    let (inj_m, inj_n, proj_n) = semidirect_maps(&space, m, n);
    Ok(Semidirect { algebra, inj_m, inj_n, proj_n })
}
