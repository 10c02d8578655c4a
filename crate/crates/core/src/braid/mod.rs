//! Braidings on crossed modules and on categorical algebras.
//!
//! A braiding of a crossed module is a bilinear map `{-,-}: N × N → M`; a
//! braiding of a categorical algebra is a bilinear map `τ: C₀ × C₀ → C₁`.
//! The functors between the two pictures live in [`functors`].

pub mod functors;
pub mod search;

use crate::action::retitle;
use crate::algebra::{Algebra, Flavor};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::icat::{cat_algebra_report, cat_liefy, CatAlgebra};
use crate::linspace::{BilMap, Vector};
use crate::report::{find_witness, Axiom, ValidationReport};
use crate::xmod::{
    identity_xmod_assoc, identity_xmod_lie, xmod_assoc_report, xmod_lie_report, xmod_liefy, XModAssoc, XModLie,
};

pub use functors::{
    alpha_iso, alpha_iso_lie, beta_iso, braided_morphism_report_assoc, braided_morphism_report_lie, cat_functor_report,
    cx_base_assoc, cx_base_lie, cx_functor, cx_functor_lie, xc_functor, xc_functor_lie, CatFunctor, Equivalence,
};

/// `1/2`, or `CharTwo`.
pub fn half(field: Field) -> Result<Scalar> {
    if field.characteristic() == 2 {
        return Err(Error::CharTwo);
    }
    Ok(field.from_i64(2).inverse().expect("2 is invertible"))
}

fn check_brace_shape(brace: &BilMap, n: &Algebra, m: &Algebra) -> Result<BilMap> {
    n.space().check_shape(brace.left(), "braiding left argument")?;
    n.space().check_shape(brace.right(), "braiding right argument")?;
    m.space().check_shape(brace.codomain(), "braiding values")?;
    brace.with_spaces(n.space().clone(), n.space().clone(), m.space().clone())
}

/// A crossed module of associative algebras with `{-,-}: N × N → M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XBraidingAssoc {
    base: XModAssoc,
    brace: BilMap,
}

/// A crossed module of Lie algebras with `{-,-}: N × N → M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XBraidingLie {
    base: XModLie,
    brace: BilMap,
}

impl XBraidingAssoc {
    pub fn from_parts(base: XModAssoc, brace: BilMap) -> Result<Self> {
        let brace = check_brace_shape(&brace, base.n(), base.m())?;
        Ok(XBraidingAssoc { base, brace })
    }

    pub fn new(base: XModAssoc, brace: BilMap) -> Result<Self> {
        let b = Self::from_parts(base, brace)?;
        b.require_valid()?;
        Ok(b)
    }

    pub fn base(&self) -> &XModAssoc {
        &self.base
    }

    pub fn brace(&self) -> &BilMap {
        &self.brace
    }

    pub fn apply(&self, n: &Vector, n2: &Vector) -> Vector {
        self.brace.apply(n, n2)
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        let r = braided_xmod_assoc_report(self, "braided");
        if r.passed() {
            Ok(())
        } else {
            Err(Error::InvalidInput(Box::new(r)))
        }
    }
}

impl XBraidingLie {
    pub fn from_parts(base: XModLie, brace: BilMap) -> Result<Self> {
        let brace = check_brace_shape(&brace, base.n(), base.m())?;
        Ok(XBraidingLie { base, brace })
    }

    pub fn new(base: XModLie, brace: BilMap) -> Result<Self> {
        let b = Self::from_parts(base, brace)?;
        b.require_valid()?;
        Ok(b)
    }

    pub fn base(&self) -> &XModLie {
        &self.base
    }

    pub fn brace(&self) -> &BilMap {
        &self.brace
    }

    pub fn apply(&self, n: &Vector, n2: &Vector) -> Vector {
        self.brace.apply(n, n2)
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        let r = braided_xmod_lie_report(self, "braided");
        if r.passed() {
            Ok(())
        } else {
            Err(Error::InvalidInput(Box::new(r)))
        }
    }
}

/// Which axiom list a Lie categorical braiding is checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LieVariant {
    /// LieT1, LieT2, LieB3, LieB4
    Ulualan,
    /// LieT1, LieT2, LieT3, LieT4
    Alt,
}

impl LieVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            LieVariant::Ulualan => "ulualan",
            LieVariant::Alt => "alt",
        }
    }
}

/// A categorical algebra with `τ: C₀ × C₀ → C₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatBraiding {
    base: CatAlgebra,
    tau: BilMap,
}

impl CatBraiding {
    pub fn from_parts(base: CatAlgebra, tau: BilMap) -> Result<Self> {
        let tau = check_brace_shape(&tau, base.c0(), base.c1())?;
        Ok(CatBraiding { base, tau })
    }

    pub fn new(base: CatAlgebra, tau: BilMap) -> Result<Self> {
        let b = Self::from_parts(base, tau)?;
        b.require_valid(LieVariant::Ulualan)?;
        Ok(b)
    }

    pub fn base(&self) -> &CatAlgebra {
        &self.base
    }

    pub fn tau(&self) -> &BilMap {
        &self.tau
    }

    pub fn flavor(&self) -> Flavor {
        self.base.flavor()
    }

    pub(crate) fn require_valid(&self, variant: LieVariant) -> Result<()> {
        let r = braided_cat_report(self, "braided", variant);
        if r.passed() {
            Ok(())
        } else {
            Err(Error::InvalidInput(Box::new(r)))
        }
    }
}

/// BAs1–BAs6.
pub fn validate_braiding_xmod_assoc(b: &XBraidingAssoc) -> ValidationReport {
    let x = b.base();
    let (m, n, a, d) = (x.m(), x.n(), x.action(), x.boundary());
    let (dm, dn) = (m.dim(), n.dim());
    let br = |u: &Vector, v: &Vector| b.apply(u, v);
    let comm_n = |i: usize, j: usize| n.mul_basis(i, j) - n.mul_basis(j, i);
    let mut r = ValidationReport::new("braiding");
    // ∂{n,n'} = [n,n']
    r.check(Axiom::BAs1, &[dn, dn], |t| (d.apply(b.brace().image(t[0], t[1])), comm_n(t[0], t[1])));
    // {∂m,∂m'} = [m,m']
    r.check(Axiom::BAs2, &[dm, dm], |t| {
        (br(d.column(t[0]), d.column(t[1])), m.mul_basis(t[0], t[1]) - m.mul_basis(t[1], t[0]))
    });
    // {∂m,n} = -[n,m]_*
    r.check(Axiom::BAs3, &[dm, dn], |t| {
        let (mv, nv) = (m.unit(t[0]), n.unit(t[1]));
        (br(d.column(t[0]), &nv), -&a.bracket(&nv, &mv))
    });
    // {n,∂m} = [n,m]_*
    r.check(Axiom::BAs4, &[dn, dm], |t| {
        let (nv, mv) = (n.unit(t[0]), m.unit(t[1]));
        (br(&nv, d.column(t[1])), a.bracket(&nv, &mv))
    });
    // {n,n'n''} = n' *₁ {n,n''} + {n,n'} *₂ n''
    r.check(Axiom::BAs5, &[dn, dn, dn], |t| {
        let (u, v, w) = (n.unit(t[0]), n.unit(t[1]), n.unit(t[2]));
        let lhs = br(&u, n.mul_basis(t[1], t[2]));
        let rhs = &a.act_left(&v, b.brace().image(t[0], t[2])) + &a.act_right(b.brace().image(t[0], t[1]), &w);
        (lhs, rhs)
    });
    // {nn',n''} = n *₁ {n',n''} + {n,n''} *₂ n'
    r.check(Axiom::BAs6, &[dn, dn, dn], |t| {
        let (u, v) = (n.unit(t[0]), n.unit(t[1]));
        let lhs = br(n.mul_basis(t[0], t[1]), &n.unit(t[2]));
        let rhs = &a.act_left(&u, b.brace().image(t[1], t[2])) + &a.act_right(b.brace().image(t[0], t[2]), &v);
        (lhs, rhs)
    });
    r
}

/// BLie1–BLie6.
pub fn validate_braiding_xmod_lie(b: &XBraidingLie) -> ValidationReport {
    let x = b.base();
    let (m, n, a, d) = (x.m(), x.n(), x.action(), x.boundary());
    let (dm, dn) = (m.dim(), n.dim());
    let br = |u: &Vector, v: &Vector| b.apply(u, v);
    let mut r = ValidationReport::new("braiding");
    r.check(Axiom::BLie1, &[dn, dn], |t| (d.apply(b.brace().image(t[0], t[1])), n.mul_basis(t[0], t[1]).clone()));
    r.check(Axiom::BLie2, &[dm, dm], |t| (br(d.column(t[0]), d.column(t[1])), m.mul_basis(t[0], t[1]).clone()));
    // {∂m,n} = -n·m
    r.check(Axiom::BLie3, &[dm, dn], |t| {
        let nv = n.unit(t[1]);
        (br(d.column(t[0]), &nv), -&a.act(&nv, &m.unit(t[0])))
    });
    // {n,∂m} = n·m
    r.check(Axiom::BLie4, &[dn, dm], |t| {
        let nv = n.unit(t[0]);
        (br(&nv, d.column(t[1])), a.act(&nv, &m.unit(t[1])))
    });
    // {n,[n',n'']} = {[n,n'],n''} - {[n,n''],n'}
    r.check(Axiom::BLie5, &[dn, dn, dn], |t| {
        let lhs = br(&n.unit(t[0]), n.mul_basis(t[1], t[2]));
        let rhs = &br(n.mul_basis(t[0], t[1]), &n.unit(t[2])) - &br(n.mul_basis(t[0], t[2]), &n.unit(t[1]));
        (lhs, rhs)
    });
    // {[n,n'],n''} = {n,[n',n'']} - {n',[n,n'']}
    r.check(Axiom::BLie6, &[dn, dn, dn], |t| {
        let lhs = br(n.mul_basis(t[0], t[1]), &n.unit(t[2]));
        let rhs = &br(&n.unit(t[0]), n.mul_basis(t[1], t[2])) - &br(&n.unit(t[1]), n.mul_basis(t[0], t[2]));
        (lhs, rhs)
    });
    r
}

pub fn braided_xmod_assoc_report(b: &XBraidingAssoc, subject: &str) -> ValidationReport {
    let mut r = xmod_assoc_report(b.base(), subject);
    r.extend(retitle(validate_braiding_xmod_assoc(b), subject));
    r
}

pub fn braided_xmod_lie_report(b: &XBraidingLie, subject: &str) -> ValidationReport {
    let mut r = xmod_lie_report(b.base(), subject);
    r.extend(retitle(validate_braiding_xmod_lie(b), subject));
    r
}

/// `s(τ_ab) = p(a,b)` and `t(τ_ab) = p(b,a)`, for `p` the product or bracket of `C₀`.
fn source_target_witness(b: &CatBraiding) -> Option<crate::report::Witness> {
    let c = b.base();
    let (c0, d0) = (c.c0(), c.c0().dim());
    find_witness(&[d0, d0], |t| (c.s().apply(b.tau().image(t[0], t[1])), c0.mul_basis(t[0], t[1]).clone())).or_else(
        || find_witness(&[d0, d0], |t| (c.t().apply(b.tau().image(t[0], t[1])), c0.mul_basis(t[1], t[0]).clone())),
    )
}

/// `k(xy, τ_{tx,ty}) = k(τ_{sx,sy}, yx)` on basis pairs of `C₁`, with `xy` the
/// product (associative case) or bracket (Lie case) of `C₁`.
fn naturality_witness(b: &CatBraiding) -> Option<crate::report::Witness> {
    let c = b.base();
    let c1 = c.c1();
    let d1 = c1.dim();
    let tau = |x: &Vector, y: &Vector| b.tau().apply(x, y);
    find_witness(&[d1, d1], |t| {
        let lhs = c.k_raw(c1.mul_basis(t[0], t[1]), &tau(c.t().column(t[0]), c.t().column(t[1])));
        let rhs = c.k_raw(&tau(c.s().column(t[0]), c.s().column(t[1])), c1.mul_basis(t[1], t[0]));
        (lhs, rhs)
    })
}

/// AsT1–AsT4.
pub fn validate_braiding_cat_assoc(b: &CatBraiding) -> ValidationReport {
    let c = b.base();
    let (c0, c1, e) = (c.c0(), c.c1(), c.e());
    let d0 = c0.dim();
    let tau = |x: &Vector, y: &Vector| b.tau().apply(x, y);
    let mut r = ValidationReport::new("braiding");
    r.record(Axiom::AsT1, source_target_witness(b));
    r.record(Axiom::AsT2, naturality_witness(b));
    // τ_{ab,c} = k(e(a)τ_{b,c}, τ_{a,c}e(b))
    r.check(Axiom::AsT3, &[d0, d0, d0], |t| {
        let lhs = tau(c0.mul_basis(t[0], t[1]), &c0.unit(t[2]));
        let first = c1.mul(e.column(t[0]), b.tau().image(t[1], t[2]));
        let second = c1.mul(b.tau().image(t[0], t[2]), e.column(t[1]));
        (lhs, c.k_raw(&first, &second))
    });
    // τ_{a,bc} = k(τ_{a,b}e(c), e(b)τ_{a,c})
    r.check(Axiom::AsT4, &[d0, d0, d0], |t| {
        let lhs = tau(&c0.unit(t[0]), c0.mul_basis(t[1], t[2]));
        let first = c1.mul(b.tau().image(t[0], t[1]), e.column(t[2]));
        let second = c1.mul(e.column(t[1]), b.tau().image(t[0], t[2]));
        (lhs, c.k_raw(&first, &second))
    });
    r
}

fn lie_common(b: &CatBraiding, r: &mut ValidationReport) {
    r.record(Axiom::LieT1, source_target_witness(b));
    r.record(Axiom::LieT2, naturality_witness(b));
}

/// LieT1, LieT2, LieB3, LieB4.
pub fn validate_braiding_cat_lie_ulualan(b: &CatBraiding) -> ValidationReport {
    let c = b.base();
    let (c0, c1, e) = (c.c0(), c.c1(), c.e());
    let d0 = c0.dim();
    let mut r = ValidationReport::new("braiding");
    lie_common(b, &mut r);
    let tau = |i: usize, j: usize| b.tau().image(i, j);
    // τ_{[a,b],c} = [τ_{a,c}, e(b)] + [e(a), τ_{b,c}]
    r.check(Axiom::LieB3, &[d0, d0, d0], |t| {
        let lhs = b.tau().apply(c0.mul_basis(t[0], t[1]), &c0.unit(t[2]));
        let rhs = &c1.mul(tau(t[0], t[2]), e.column(t[1])) + &c1.mul(e.column(t[0]), tau(t[1], t[2]));
        (lhs, rhs)
    });
    // τ_{a,[b,c]} = [e(b), τ_{a,c}] + [τ_{a,b}, e(c)]
    r.check(Axiom::LieB4, &[d0, d0, d0], |t| {
        let lhs = b.tau().apply(&c0.unit(t[0]), c0.mul_basis(t[1], t[2]));
        let rhs = &c1.mul(e.column(t[1]), tau(t[0], t[2])) + &c1.mul(tau(t[0], t[1]), e.column(t[2]));
        (lhs, rhs)
    });
    r
}

/// LieT1, LieT2, LieT3, LieT4.
pub fn validate_braiding_cat_lie_alt(b: &CatBraiding) -> ValidationReport {
    let c0 = b.base().c0();
    let d0 = c0.dim();
    let tau = |x: &Vector, y: &Vector| b.tau().apply(x, y);
    let u = |i: usize| c0.unit(i);
    let mut r = ValidationReport::new("braiding");
    lie_common(b, &mut r);
    // τ_{[a,b],c} = τ_{a,[b,c]} - τ_{b,[a,c]}
    r.check(Axiom::LieT3, &[d0, d0, d0], |t| {
        let lhs = tau(c0.mul_basis(t[0], t[1]), &u(t[2]));
        let rhs = &tau(&u(t[0]), c0.mul_basis(t[1], t[2])) - &tau(&u(t[1]), c0.mul_basis(t[0], t[2]));
        (lhs, rhs)
    });
    // τ_{a,[b,c]} = τ_{[a,b],c} - τ_{[a,c],b}
    r.check(Axiom::LieT4, &[d0, d0, d0], |t| {
        let lhs = tau(&u(t[0]), c0.mul_basis(t[1], t[2]));
        let rhs = &tau(c0.mul_basis(t[0], t[1]), &u(t[2])) - &tau(c0.mul_basis(t[0], t[2]), &u(t[1]));
        (lhs, rhs)
    });
    r
}

/// Structure of the base, then the braiding axioms for its flavor.
pub fn braided_cat_report(b: &CatBraiding, subject: &str, variant: LieVariant) -> ValidationReport {
    let mut r = cat_algebra_report(b.base(), subject);
    let axioms = match (b.flavor(), variant) {
        (Flavor::Assoc, _) => validate_braiding_cat_assoc(b),
        (Flavor::Lie, LieVariant::Ulualan) => validate_braiding_cat_lie_ulualan(b),
        (Flavor::Lie, LieVariant::Alt) => validate_braiding_cat_lie_alt(b),
    };
    r.extend(retitle(axioms, subject));
    r
}

/// `τ_{a,[b,c]} = [e(a), τ_{b,c}]`, `τ_{[b,c],a} = [τ_{b,c}, e(a)]` and
/// `τ_{a,[b,c]} = -τ_{[b,c],a}` on basis triples.
pub fn check_anticoherence(b: &CatBraiding) -> Result<ValidationReport> {
    if b.flavor() != Flavor::Lie {
        return Err(Error::WrongFlavor("anticoherence is a Lie statement".into()));
    }
    half(b.base().field())?;
    let c = b.base();
    let (c0, c1, e) = (c.c0(), c.c1(), c.e());
    let d0 = c0.dim();
    let tau = |x: &Vector, y: &Vector| b.tau().apply(x, y);
    let mut r = ValidationReport::new("braiding");
    r.check(Axiom::AntiLeft, &[d0, d0, d0], |t| {
        (tau(&c0.unit(t[0]), c0.mul_basis(t[1], t[2])), c1.mul(e.column(t[0]), b.tau().image(t[1], t[2])))
    });
    r.check(Axiom::AntiRight, &[d0, d0, d0], |t| {
        (tau(c0.mul_basis(t[1], t[2]), &c0.unit(t[0])), c1.mul(b.tau().image(t[1], t[2]), e.column(t[0])))
    });
    r.check(Axiom::AntiSym, &[d0, d0, d0], |t| {
        let bc = c0.mul_basis(t[1], t[2]);
        (tau(&c0.unit(t[0]), bc), -&tau(bc, &c0.unit(t[0])))
    });
    Ok(r)
}

/// `(A, A, (*, *), Id_A, [-,-])`.
pub fn commutator_braiding(a: &Algebra) -> Result<XBraidingAssoc> {
    let base = identity_xmod_assoc(a)?;
    let brace = a.commutator_algebra().mult().clone();
    XBraidingAssoc::new(base, brace)
}

/// `(L, L, [-,-], Id_L, [-,-])`.
pub fn bracket_braiding(l: &Algebra) -> Result<XBraidingLie> {
    let base = identity_xmod_lie(l)?;
    XBraidingLie::new(base, l.mult().clone())
}

/// `τ^Lie_{a,b} = τ_{a,b} - τ_{b,a}` over the Lie-fied base.
pub fn cat_braiding_liefy(b: &CatBraiding) -> Result<CatBraiding> {
    if b.flavor() != Flavor::Assoc {
        return Err(Error::WrongFlavor("cat_braiding_liefy expects an associative braiding".into()));
    }
    b.require_valid(LieVariant::Ulualan)?;
    let base = cat_liefy(b.base())?;
    CatBraiding::from_parts(base, b.tau().sub(&b.tau().transpose()))
}

/// `{n,n'}_ℒ = ({n,n'} - {n',n}) / 2` over the Lie-fied crossed module.
pub fn xmod_braiding_liefy(b: &XBraidingAssoc) -> Result<XBraidingLie> {
    let h = half(b.base().m().field())?;
    b.require_valid()?;
    let base = xmod_liefy(b.base())?;
    XBraidingLie::from_parts(base, b.brace().sub(&b.brace().transpose()).scale(&h))
}
