//! The functors between braided crossed modules and braided categorical
//! algebras, and the natural isomorphisms relating their composites to the
//! identity.
//!
//! Lie side: with `s(τ_ab) = [a,b]` and `t(τ_ab) = [b,a]` the element
//! `e([a,b]) - τ_ab` has boundary `2[a,b]`, so the Lie functors carry a factor
//! of two in each direction and the categorical-to-crossed direction needs
//! characteristic different from 2.

use super::{half, CatBraiding, LieVariant, XBraidingAssoc, XBraidingLie};
use crate::action::{semidirect_assoc, semidirect_lie, AssocAction, LieAction, Semidirect};
use crate::algebra::{homomorphism_witness, Algebra, Flavor};
use crate::error::{Error, Result};
use crate::icat::CatAlgebra;
use crate::linspace::{find_iso_witness, kernel, BilMap, LinMap, Space, Subspace, Vector};
use crate::report::{find_witness, Axiom, ValidationReport};
use crate::xmod::{
    morphism_iso_report, validate_xmod_morphism_assoc, validate_xmod_morphism_lie, XModAssoc, XModLie, XModMorphism,
};

/// `s(m,n) = n`, `t(m,n) = ∂m + n`, `e(n) = (0,n)` on `M ⋊ N`.
fn bar_category(sd: Semidirect, n: &Algebra, boundary: &LinMap, flavor: Flavor) -> Result<CatAlgebra> {
    let Semidirect { algebra, inj_n, proj_n, .. } = sd;
    let dm = boundary.domain().dim();
    let t =
        LinMap::from_fn(
            algebra.space(),
            n.space(),
            |j| {
                if j < dm {
                    boundary.column(j).clone()
                } else {
                    n.unit(j - dm)
                }
            },
        );
    CatAlgebra::from_parts(algebra, n.clone(), proj_n, t, inj_n, flavor)
}

/// The categorical algebra underlying the bar construction.
pub fn cx_base_assoc(x: &XModAssoc) -> Result<CatAlgebra> {
    bar_category(semidirect_assoc(x.action())?, x.n(), x.boundary(), Flavor::Assoc)
}

pub fn cx_base_lie(x: &XModLie) -> Result<CatAlgebra> {
    bar_category(semidirect_lie(x.action())?, x.n(), x.boundary(), Flavor::Lie)
}

/// `τ̄_{n,n'} = (-{n,n'}, nn')`.
pub fn cx_functor(b: &XBraidingAssoc) -> Result<CatBraiding> {
    b.require_valid()?;
    let base = cx_base_assoc(b.base())?;
    let n = b.base().n();
    let tau = BilMap::from_fn(n.space(), n.space(), base.c1().space(), |i, j| {
        (-b.brace().image(i, j)).concat(n.mul_basis(i, j))
    });
    CatBraiding::from_parts(base, tau)
}

/// `τ̄_{n,n'} = (-2{n,n'}, [n,n'])`.
pub fn cx_functor_lie(b: &XBraidingLie) -> Result<CatBraiding> {
    b.require_valid()?;
    let base = cx_base_lie(b.base())?;
    let n = b.base().n();
    let two = n.field().from_i64(2);
    let tau = BilMap::from_fn(n.space(), n.space(), base.c1().space(), |i, j| {
        b.brace().image(i, j).scale(&-&two).concat(n.mul_basis(i, j))
    });
    CatBraiding::from_parts(base, tau)
}

/// `ker(s)` with its own basis (labels of the pivot coordinates).
struct SourceKernel {
    sub: Subspace,
    space: Space,
}

impl SourceKernel {
    fn of(c: &CatAlgebra) -> Result<SourceKernel> {
        let sub = kernel(c.s());
        let labels = sub.pivots().iter().map(|&p| c.c1().space().labels()[p].clone()).collect();
        let space = Space::new(c.field(), labels)?;
        Ok(SourceKernel { sub, space })
    }

    fn basis(&self, j: usize) -> &Vector {
        &self.sub.basis()[j]
    }

    fn coords(&self, v: &Vector) -> Result<Vector> {
        self.sub
            .coordinates(v)
            .ok_or_else(|| Error::InternalInvariantViolation("element expected in ker(s) lies outside it".into()))
    }

    fn bilinear(&self, left: &Space, right: &Space, f: impl Fn(usize, usize) -> Vector) -> Result<BilMap> {
        let mut images = Vec::with_capacity(left.dim() * right.dim());
        for i in 0..left.dim() {
            for j in 0..right.dim() {
                images.push(self.coords(&f(i, j))?);
            }
        }
        BilMap::from_images(left.clone(), right.clone(), self.space.clone(), images)
    }

    fn algebra(&self, c1: &Algebra) -> Result<Algebra> {
        let mult = self.bilinear(&self.space, &self.space, |i, j| c1.mul(self.basis(i), self.basis(j)))?;
        Algebra::new(self.space.clone(), mult)
    }

    fn boundary(&self, c: &CatAlgebra) -> LinMap {
        LinMap::from_fn(&self.space, c.c0().space(), |j| c.t().apply(self.basis(j)))
    }
}

fn require_flavor(b: &CatBraiding, flavor: Flavor) -> Result<()> {
    if b.flavor() != flavor {
        return Err(Error::WrongFlavor(format!("expected a {} categorical braiding", flavor.as_str())));
    }
    Ok(())
}

/// `(ker s, C₀, (e(a)x, xe(a)), t|ker s)` with `{a,b}_τ = e(ab) - τ_ab`.
pub fn xc_functor(b: &CatBraiding) -> Result<XBraidingAssoc> {
    require_flavor(b, Flavor::Assoc)?;
    b.require_valid(LieVariant::Ulualan)?;
    let c = b.base();
    let (c0, c1, e) = (c.c0(), c.c1(), c.e());
    let k = SourceKernel::of(c)?;
    let m = k.algebra(c1)?;
    let left = k.bilinear(c0.space(), &k.space, |a, j| c1.mul(e.column(a), k.basis(j)))?;
    let right = k.bilinear(&k.space, c0.space(), |j, a| c1.mul(k.basis(j), e.column(a)))?;
    let action = AssocAction::from_parts(c0.clone(), m, left, right)?;
    let base = XModAssoc::from_parts(action, k.boundary(c))?;
    let brace = k.bilinear(c0.space(), c0.space(), |i, j| &e.apply(c0.mul_basis(i, j)) - b.tau().image(i, j))?;
    XBraidingAssoc::from_parts(base, brace)
}

/// `(ker s, C₀, [e(a), x], t|ker s)` with `{a,b}_τ = (e([a,b]) - τ_ab) / 2`.
pub fn xc_functor_lie(b: &CatBraiding) -> Result<XBraidingLie> {
    require_flavor(b, Flavor::Lie)?;
    let h = half(b.base().field())?;
    b.require_valid(LieVariant::Ulualan)?;
    let c = b.base();
    let (c0, c1, e) = (c.c0(), c.c1(), c.e());
    let k = SourceKernel::of(c)?;
    let m = k.algebra(c1)?;
    let dot = k.bilinear(c0.space(), &k.space, |a, j| c1.mul(e.column(a), k.basis(j)))?;
    let action = LieAction::from_parts(c0.clone(), m, dot)?;
    let base = XModLie::from_parts(action, k.boundary(c))?;
    let brace =
        k.bilinear(c0.space(), c0.space(), |i, j| (&e.apply(c0.mul_basis(i, j)) - b.tau().image(i, j)).scale(&h))?;
    XBraidingLie::from_parts(base, brace)
}

/// A natural isomorphism component together with its target and its check.
#[derive(Clone, Debug)]
pub struct Equivalence<M, T> {
    pub morphism: M,
    pub target: T,
    pub report: ValidationReport,
}

/// `f₁({n,n'}) = {f₂n, f₂n'}'` on basis pairs of `N`.
fn bxh_witness(phi: &XModMorphism, src: &BilMap, tgt: &BilMap) -> Option<crate::report::Witness> {
    let dn = src.left().dim();
    find_witness(&[dn, dn], |t| {
        (phi.f1.apply(src.image(t[0], t[1])), tgt.apply(phi.f2.column(t[0]), phi.f2.column(t[1])))
    })
}

/// Morphism conditions, braiding preservation and invertibility.
pub fn braided_morphism_report_assoc(
    phi: &XModMorphism,
    src: &XBraidingAssoc,
    tgt: &XBraidingAssoc,
) -> Result<ValidationReport> {
    let mut r = validate_xmod_morphism_assoc(phi, src.base(), tgt.base())?;
    r.record(Axiom::BXH, bxh_witness(phi, src.brace(), tgt.brace()));
    r.extend(morphism_iso_report(phi));
    Ok(r)
}

pub fn braided_morphism_report_lie(
    phi: &XModMorphism,
    src: &XBraidingLie,
    tgt: &XBraidingLie,
) -> Result<ValidationReport> {
    let mut r = validate_xmod_morphism_lie(phi, src.base(), tgt.base())?;
    r.record(Axiom::BXH, bxh_witness(phi, src.brace(), tgt.brace()));
    r.extend(morphism_iso_report(phi));
    Ok(r)
}

/// `α_M(m) = (m, 0)` in the coordinates of `ker(s̄)`, `α_N = id`.
fn alpha_morphism(m: &Algebra, n: &Algebra, target_m: &Space, c: &CatAlgebra) -> Result<XModMorphism> {
    let k = SourceKernel::of(c)?;
    let mut cols = Vec::with_capacity(m.dim());
    for j in 0..m.dim() {
        cols.push(k.coords(&m.unit(j).concat(&n.zero()))?);
    }
    Ok(XModMorphism {
        f1: LinMap::from_columns(m.space().clone(), target_m.clone(), cols)?,
        f2: LinMap::identity(n.space()),
    })
}

/// `(α_M, id_N)` from `b` to `X(C(b))`.
pub fn alpha_iso(b: &XBraidingAssoc) -> Result<Equivalence<XModMorphism, XBraidingAssoc>> {
    let cat = cx_functor(b)?;
    let target = xc_functor(&cat)?;
    let x = b.base();
    let morphism = alpha_morphism(x.m(), x.n(), target.base().m().space(), cat.base())?;
    let report = braided_morphism_report_assoc(&morphism, b, &target)?;
    Ok(Equivalence { morphism, target, report })
}

pub fn alpha_iso_lie(b: &XBraidingLie) -> Result<Equivalence<XModMorphism, XBraidingLie>> {
    let cat = cx_functor_lie(b)?;
    let target = xc_functor_lie(&cat)?;
    let x = b.base();
    let morphism = alpha_morphism(x.m(), x.n(), target.base().m().space(), cat.base())?;
    let report = braided_morphism_report_lie(&morphism, b, &target)?;
    Ok(Equivalence { morphism, target, report })
}

/// An internal functor `(F₁: C₁ → C₁', F₀: C₀ → C₀')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatFunctor {
    pub f1: LinMap,
    pub f0: LinMap,
}

/// Homomorphisms, compatibility with `s`, `t`, `e`, `F₁(τ_ab) = τ'_{F₀a,F₀b}`
/// and invertibility of both components.
pub fn cat_functor_report(f: &CatFunctor, src: &CatBraiding, tgt: &CatBraiding) -> Result<ValidationReport> {
    let (c, d) = (src.base(), tgt.base());
    c.c1().space().check_shape(f.f1.domain(), "F1 domain")?;
    d.c1().space().check_shape(f.f1.codomain(), "F1 codomain")?;
    c.c0().space().check_shape(f.f0.domain(), "F0 domain")?;
    d.c0().space().check_shape(f.f0.codomain(), "F0 codomain")?;
    let (d1, d0) = (c.c1().dim(), c.c0().dim());
    let mut r = ValidationReport::new("functor");
    r.record_for("functor.f1", Axiom::Hom, homomorphism_witness(&f.f1, c.c1(), d.c1()));
    r.record_for("functor.f0", Axiom::Hom, homomorphism_witness(&f.f0, c.c0(), d.c0()));
    r.check(Axiom::FunS, &[d1], |t| (d.s().apply(f.f1.column(t[0])), f.f0.apply(c.s().column(t[0]))));
    r.check(Axiom::FunT, &[d1], |t| (d.t().apply(f.f1.column(t[0])), f.f0.apply(c.t().column(t[0]))));
    r.check(Axiom::FunE, &[d0], |t| (f.f1.apply(c.e().column(t[0])), d.e().apply(f.f0.column(t[0]))));
    r.check(Axiom::BIFun, &[d0, d0], |t| {
        (f.f1.apply(src.tau().image(t[0], t[1])), tgt.tau().apply(f.f0.column(t[0]), f.f0.column(t[1])))
    });
    r.record_for("functor.f1", Axiom::Iso, find_iso_witness(&f.f1));
    r.record_for("functor.f0", Axiom::Iso, find_iso_witness(&f.f0));
    Ok(r)
}

/// `β(x) = (x - e(s(x)), s(x))` from `b` to `C(X(b))`, either flavor.
pub fn beta_iso(b: &CatBraiding) -> Result<Equivalence<CatFunctor, CatBraiding>> {
    let c = b.base();
    let target = match b.flavor() {
        Flavor::Assoc => cx_functor(&xc_functor(b)?)?,
        Flavor::Lie => cx_functor_lie(&xc_functor_lie(b)?)?,
    };
    let k = SourceKernel::of(c)?;
    let mut cols = Vec::with_capacity(c.c1().dim());
    for j in 0..c.c1().dim() {
        let x = c.c1().unit(j);
        let sx = c.s().column(j);
        cols.push(k.coords(&(&x - &c.e().apply(sx)))?.concat(sx));
    }
    let f1 = LinMap::from_columns(c.c1().space().clone(), target.base().c1().space().clone(), cols)?;
    let f0 = LinMap::identity(c.c0().space());
    let morphism = CatFunctor { f1, f0 };
    let report = cat_functor_report(&morphism, b, &target)?;
    Ok(Equivalence { morphism, target, report })
}
