//! Crossed modules of associative and Lie algebras and their morphisms.

use crate::action::{assoc_action_report, induced_lie_action, lie_action_report, retitle, AssocAction, LieAction};
use crate::algebra::{homomorphism_witness, Algebra};
use crate::error::{Error, Result};
use crate::linspace::{find_iso_witness, LinMap};
use crate::report::{find_witness, Axiom, ValidationReport};

/// `(M, N, (*₁, *₂), ∂)`. `M` is the action's module, `N` its actor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XModAssoc {
    action: AssocAction,
    boundary: LinMap,
}

/// `(M, N, ·, ∂)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XModLie {
    action: LieAction,
    boundary: LinMap,
}

fn shaped_boundary(boundary: &LinMap, m: &Algebra, n: &Algebra) -> Result<LinMap> {
    m.space().check_shape(boundary.domain(), "boundary domain")?;
    n.space().check_shape(boundary.codomain(), "boundary codomain")?;
    boundary.with_spaces(m.space().clone(), n.space().clone())
}

impl XModAssoc {
    /// Shape-checked, unvalidated.
    pub fn from_parts(action: AssocAction, boundary: LinMap) -> Result<XModAssoc> {
        let boundary = shaped_boundary(&boundary, action.module(), action.actor())?;
        Ok(XModAssoc { action, boundary })
    }

    pub fn new(action: AssocAction, boundary: LinMap) -> Result<XModAssoc> {
        let x = XModAssoc::from_parts(action, boundary)?;
        let report = xmod_assoc_report(&x, "xmod");
        if !report.passed() {
            return Err(Error::InvalidXMod(Box::new(report)));
        }
        Ok(x)
    }

    pub fn m(&self) -> &Algebra {
        self.action.module()
    }

    pub fn n(&self) -> &Algebra {
        self.action.actor()
    }

    pub fn action(&self) -> &AssocAction {
        &self.action
    }

    pub fn boundary(&self) -> &LinMap {
        &self.boundary
    }
}

impl XModLie {
    pub fn from_parts(action: LieAction, boundary: LinMap) -> Result<XModLie> {
        let boundary = shaped_boundary(&boundary, action.module(), action.actor())?;
        Ok(XModLie { action, boundary })
    }

    pub fn new(action: LieAction, boundary: LinMap) -> Result<XModLie> {
        let x = XModLie::from_parts(action, boundary)?;
        let report = xmod_lie_report(&x, "xmod");
        if !report.passed() {
            return Err(Error::InvalidXMod(Box::new(report)));
        }
        Ok(x)
    }

    pub fn m(&self) -> &Algebra {
        self.action.module()
    }

    pub fn n(&self) -> &Algebra {
        self.action.actor()
    }

    pub fn action(&self) -> &LieAction {
        &self.action
    }

    pub fn boundary(&self) -> &LinMap {
        &self.boundary
    }
}

/// XAs1 (both equalities) and XAs2 (both equalities).
pub fn validate_xmod_assoc(x: &XModAssoc) -> ValidationReport {
    let (m, n, a, d) = (x.m(), x.n(), x.action(), x.boundary());
    let (dm, dn) = (m.dim(), n.dim());
    let mut r = ValidationReport::new("xmod");
    // ∂(n *₁ m) = n ∂(m),  ∂(m *₂ n) = ∂(m) n
    let w = find_witness(&[dn, dm], |t| {
        let (nv, mv) = (n.unit(t[0]), m.unit(t[1]));
        (d.apply(&a.act_left(&nv, &mv)), n.mul(&nv, d.column(t[1])))
    })
    .or_else(|| {
        find_witness(&[dm, dn], |t| {
            let (mv, nv) = (m.unit(t[0]), n.unit(t[1]));
            (d.apply(&a.act_right(&mv, &nv)), n.mul(d.column(t[0]), &nv))
        })
    });
    r.record(Axiom::XAs1, w);
    // ∂(m) *₁ m' = mm' = m *₂ ∂(m')
    let w = find_witness(&[dm, dm], |t| (a.act_left(d.column(t[0]), &m.unit(t[1])), m.mul_basis(t[0], t[1]).clone()))
        .or_else(|| {
            find_witness(&[dm, dm], |t| (m.mul_basis(t[0], t[1]).clone(), a.act_right(&m.unit(t[0]), d.column(t[1]))))
        });
    r.record(Axiom::XAs2, w);
    r
}

/// XLie1 and XLie2.
pub fn validate_xmod_lie(x: &XModLie) -> ValidationReport {
    let (m, n, a, d) = (x.m(), x.n(), x.action(), x.boundary());
    let (dm, dn) = (m.dim(), n.dim());
    let mut r = ValidationReport::new("xmod");
    // ∂(n·m) = [n, ∂(m)]
    r.check(Axiom::XLie1, &[dn, dm], |t| {
        let nv = n.unit(t[0]);
        (d.apply(&a.act(&nv, &m.unit(t[1]))), n.mul(&nv, d.column(t[1])))
    });
    // ∂(m)·m' = [m, m']
    r.check(Axiom::XLie2, &[dm, dm], |t| (a.act(d.column(t[0]), &m.unit(t[1])), m.mul_basis(t[0], t[1]).clone()));
    r
}

/// Everything a crossed module presupposes, then XAs1–XAs2.
pub fn xmod_assoc_report(x: &XModAssoc, subject: &str) -> ValidationReport {
    let mut r = assoc_action_report(x.action(), subject);
    r.record_for(format!("{subject}.boundary"), Axiom::Hom, homomorphism_witness(x.boundary(), x.m(), x.n()));
    r.extend(retitle(validate_xmod_assoc(x), subject));
    r
}

pub fn xmod_lie_report(x: &XModLie, subject: &str) -> ValidationReport {
    let mut r = lie_action_report(x.action(), subject);
    r.record_for(format!("{subject}.boundary"), Axiom::Hom, homomorphism_witness(x.boundary(), x.m(), x.n()));
    r.extend(retitle(validate_xmod_lie(x), subject));
    r
}

/// `(M^ℒ, N^ℒ, [-,-]_*, ∂)`.
pub fn xmod_liefy(x: &XModAssoc) -> Result<XModLie> {
    let report = xmod_assoc_report(x, "xmod");
    if !report.passed() {
        return Err(Error::InvalidXMod(Box::new(report)));
    }
    let action = induced_lie_action(x.action())?;
    XModLie::from_parts(action, x.boundary().clone())
}

/// `(A, A, (*, *), Id_A)`.
pub fn identity_xmod_assoc(a: &Algebra) -> Result<XModAssoc> {
    let action = AssocAction::self_action(a)?;
    XModAssoc::from_parts(action, LinMap::identity(a.space()))
}

/// `(L, L, [-,-], Id_L)`.
pub fn identity_xmod_lie(l: &Algebra) -> Result<XModLie> {
    let action = LieAction::adjoint(l)?;
    XModLie::from_parts(action, LinMap::identity(l.space()))
}

/// Zero action and zero boundary.
pub fn zero_xmod_assoc(m: &Algebra, n: &Algebra) -> XModAssoc {
    XModAssoc::from_parts(AssocAction::zero(n, m), LinMap::zero(m.space(), n.space())).expect("shapes agree")
}

pub fn zero_xmod_lie(m: &Algebra, n: &Algebra) -> XModLie {
    XModLie::from_parts(LieAction::zero(n, m), LinMap::zero(m.space(), n.space())).expect("shapes agree")
}

/// A pair `(f₁: M → M', f₂: N → N')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XModMorphism {
    pub f1: LinMap,
    pub f2: LinMap,
}

fn check_morphism_shapes(phi: &XModMorphism, m: &Algebra, n: &Algebra, m2: &Algebra, n2: &Algebra) -> Result<()> {
    m.space().check_shape(phi.f1.domain(), "f1 domain")?;
    m2.space().check_shape(phi.f1.codomain(), "f1 codomain")?;
    n.space().check_shape(phi.f2.domain(), "f2 domain")?;
    n2.space().check_shape(phi.f2.codomain(), "f2 codomain")
}

/// Homomorphism conditions, XAssH1 (both sides) and XAssH2.
pub fn validate_xmod_morphism_assoc(
    phi: &XModMorphism,
    source: &XModAssoc,
    target: &XModAssoc,
) -> Result<ValidationReport> {
    check_morphism_shapes(phi, source.m(), source.n(), target.m(), target.n())?;
    let (f1, f2) = (&phi.f1, &phi.f2);
    let (m, n) = (source.m(), source.n());
    let (a, b) = (source.action(), target.action());
    let mut r = ValidationReport::new("morphism");
    r.record_for("morphism.f1", Axiom::Hom, homomorphism_witness(f1, m, target.m()));
    r.record_for("morphism.f2", Axiom::Hom, homomorphism_witness(f2, n, target.n()));
    // f₁(n ·₁ m) = f₂(n) *₁ f₁(m),  f₁(m ·₂ n) = f₁(m) *₂ f₂(n)
    let w = find_witness(&[n.dim(), m.dim()], |t| {
        let lhs = f1.apply(&a.act_left(&n.unit(t[0]), &m.unit(t[1])));
        (lhs, b.act_left(f2.column(t[0]), f1.column(t[1])))
    })
    .or_else(|| {
        find_witness(&[m.dim(), n.dim()], |t| {
            let lhs = f1.apply(&a.act_right(&m.unit(t[0]), &n.unit(t[1])));
            (lhs, b.act_right(f1.column(t[0]), f2.column(t[1])))
        })
    });
    r.record(Axiom::XAssH1, w);
    r.record(Axiom::XAssH2, boundary_square_witness(phi, source.boundary(), target.boundary()));
    Ok(r)
}

/// Homomorphism conditions, XLieH1 and XLieH2.
pub fn validate_xmod_morphism_lie(phi: &XModMorphism, source: &XModLie, target: &XModLie) -> Result<ValidationReport> {
    check_morphism_shapes(phi, source.m(), source.n(), target.m(), target.n())?;
    let (f1, f2) = (&phi.f1, &phi.f2);
    let (m, n) = (source.m(), source.n());
    let mut r = ValidationReport::new("morphism");
    r.record_for("morphism.f1", Axiom::Hom, homomorphism_witness(f1, m, target.m()));
    r.record_for("morphism.f2", Axiom::Hom, homomorphism_witness(f2, n, target.n()));
    r.check(Axiom::XLieH1, &[n.dim(), m.dim()], |t| {
        let lhs = f1.apply(&source.action().act(&n.unit(t[0]), &m.unit(t[1])));
        (lhs, target.action().act(f2.column(t[0]), f1.column(t[1])))
    });
    r.record(Axiom::XLieH2, boundary_square_witness(phi, source.boundary(), target.boundary()));
    Ok(r)
}

/// `∂' ∘ f₁ = f₂ ∘ ∂` on the basis of `M`.
fn boundary_square_witness(phi: &XModMorphism, d: &LinMap, d2: &LinMap) -> Option<crate::report::Witness> {
    find_witness(&[d.domain().dim()], |t| (d2.apply(phi.f1.column(t[0])), phi.f2.apply(d.column(t[0]))))
}

/// `Iso` entries for both components.
pub fn morphism_iso_report(phi: &XModMorphism) -> ValidationReport {
    let mut r = ValidationReport::new("morphism");
    r.record_for("morphism.f1", Axiom::Iso, find_iso_witness(&phi.f1));
    r.record_for("morphism.f2", Axiom::Iso, find_iso_witness(&phi.f2));
    r
}
