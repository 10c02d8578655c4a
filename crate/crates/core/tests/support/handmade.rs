//! Hand-built structures for the mutation criterion: a few deliberately
//! broken objects and a braided crossed module with a non-injective,
//! non-zero boundary whose braiding has room to move.

#![allow(dead_code)]

use peiffer::action::{AssocAction, LieAction};
use peiffer::braid::functors::{cx_base_assoc, cx_functor, CatFunctor};
use peiffer::braid::{commutator_braiding, CatBraiding, XBraidingAssoc};
use peiffer::catalog::{abelian, fixture, matrix};
use peiffer::icat::CatAlgebra;
use peiffer::xmod::{XModAssoc, XModLie, XModMorphism};
use peiffer::{Algebra, BilMap, Field, Flavor, LinMap, Space, Vector};

pub fn q() -> Field {
    Field::Rationals
}

pub fn space(labels: &[&str]) -> Space {
    Space::new(q(), labels.iter().map(|s| s.to_string()).collect()).unwrap()
}

/// Bilinear map with the listed images, zero elsewhere.
pub fn bil(left: &Space, right: &Space, cod: &Space, images: &[(usize, usize, &[i64])]) -> BilMap {
    BilMap::from_fn(left, right, cod, |i, j| {
        images
            .iter()
            .find(|(a, b, _)| (*a, *b) == (i, j))
            .map_or_else(|| cod.zero(), |(_, _, v)| Vector::from_i64(q(), v))
    })
}

pub fn algebra(s: &Space, images: &[(usize, usize, &[i64])]) -> Algebra {
    Algebra::new(s.clone(), bil(s, s, s, images)).unwrap()
}

/// Alternating, with `[x,y] = x`, `[y,z] = y`, `[z,x] = z`: the Jacobi sum is `x + y + z`.
pub fn not_jacobi() -> Algebra {
    let s = space(&["x", "y", "z"]);
    algebra(
        &s,
        &[
            (0, 1, &[1, 0, 0]),
            (1, 0, &[-1, 0, 0]),
            (1, 2, &[0, 1, 0]),
            (2, 1, &[0, -1, 0]),
            (2, 0, &[0, 0, 1]),
            (0, 2, &[0, 0, -1]),
        ],
    )
}

/// `K` acting on `⟨u, w⟩` (`u² = w`) from the right by the projection onto `w`:
/// `u (u *₂ 1) = 0` but `u² *₂ 1 = w`.
pub fn right_action_not_multiplicative() -> AssocAction {
    let actor = matrix(q(), 1);
    let ms = space(&["u", "w"]);
    let module = algebra(&ms, &[(0, 0, &[0, 1])]);
    let left = BilMap::zero(actor.space(), &ms, &ms);
    let right = bil(&ms, actor.space(), &ms, &[(1, 0, &[0, 1])]);
    AssocAction::from_parts(actor, module, left, right).unwrap()
}

/// `Ab(1)` acting on `Heis3` by the identity, which is not a derivation.
pub fn action_not_by_derivations() -> LieAction {
    let actor = abelian(q(), 1);
    let module = fixture("Heis3", q()).unwrap();
    let dot = BilMap::from_fn(actor.space(), module.space(), module.space(), |_, j| module.unit(j));
    LieAction::from_parts(actor, module, dot).unwrap()
}

/// The self action with zero boundary: equivariant, but not Peiffer.
pub fn zero_boundary_assoc(a: &Algebra) -> XModAssoc {
    XModAssoc::from_parts(AssocAction::self_action(a).unwrap(), LinMap::zero(a.space(), a.space())).unwrap()
}

pub fn zero_boundary_lie(l: &Algebra) -> XModLie {
    XModLie::from_parts(LieAction::adjoint(l).unwrap(), LinMap::zero(l.space(), l.space())).unwrap()
}

/// Chevalley involution of `sl2` (`e ↦ -f`, `f ↦ -e`, `h ↦ -h`), an
/// automorphism that does not commute with the adjoint action.
pub fn chevalley(sl2: &Algebra) -> LinMap {
    LinMap::from_rows_i64(sl2.space(), sl2.space(), &[&[0, -1, 0], &[-1, 0, 0], &[0, 0, -1]])
}

pub fn morphism(f1: LinMap, f2: LinMap) -> XModMorphism {
    XModMorphism { f1, f2 }
}

/// `C₁ = A`, `C₀ = 0`: every pair is composable and `k(x, y) = x + y`,
/// which is additive but not multiplicative.
pub fn over_zero_objects(a: &Algebra) -> CatAlgebra {
    let zero = abelian(q(), 0);
    CatAlgebra::from_parts(
        a.clone(),
        zero.clone(),
        LinMap::zero(a.space(), zero.space()),
        LinMap::zero(a.space(), zero.space()),
        LinMap::zero(zero.space(), a.space()),
        Flavor::Assoc,
    )
    .unwrap()
}

/// `(F₁, F₀) = (e∘s, id)` on the bar construction of the commutator braiding:
/// compatible with sources and with units but not with targets.
pub fn collapse_to_units(b: &CatBraiding) -> CatFunctor {
    let c = b.base();
    CatFunctor { f1: c.e().compose(c.s()).unwrap(), f0: LinMap::identity(c.c0().space()) }
}

/// Bar construction of `K` acting on `K m` from the left only, `∂ = 0`,
/// with `τ_{a,a} = e(a)`; and the functor fixing `m` and sending `a ↦ a + m`,
/// which respects `s`, `t` and the products but not `e`.
pub fn shifted_units() -> (CatBraiding, CatFunctor) {
    let n = matrix(q(), 1);
    let m = abelian(q(), 1);
    let left = BilMap::from_fn(n.space(), m.space(), m.space(), |_, _| Vector::from_i64(q(), &[1]));
    let right = BilMap::zero(m.space(), n.space(), m.space());
    let action = AssocAction::from_parts(n.clone(), m.clone(), left, right).unwrap();
    let x = XModAssoc::from_parts(action, LinMap::zero(m.space(), n.space())).unwrap();
    let cat = cx_base_assoc(&x).unwrap();
    let tau = BilMap::from_fn(n.space(), n.space(), cat.c1().space(), |i, j| cat.e().apply(n.mul_basis(i, j)));
    let b = CatBraiding::from_parts(cat.clone(), tau).unwrap();
    let f1 = LinMap::from_rows_i64(cat.c1().space(), cat.c1().space(), &[&[1, 1], &[0, 1]]);
    (b, CatFunctor { f1, f0: LinMap::identity(n.space()) })
}

/// The bar construction of the commutator braiding on `a`, and a copy whose
/// `τ` is doubled.
pub fn doubled_tau(a: &Algebra) -> (CatBraiding, CatBraiding) {
    let b = cx_functor(&commutator_braiding(a).unwrap()).unwrap();
    let two = q().from_i64(2);
    let d = CatBraiding::from_parts(b.base().clone(), b.tau().scale(&two)).unwrap();
    (b, d)
}

/// `(M, N, ∂)` with `N = K a × K[ε]/ε²` (unit `b`), `M = K u × K m`,
/// `∂u = a`, `∂m = 0`; `a` acts on `u` and `b` on `m` by multiplication
/// on both sides, `ε` acts by zero, `u² = u`, and the braiding is zero.
/// Bumping the braiding at `(a,a)`, `(a,b)`, `(b,a)`, `(b,b)` or `(b,ε)` by `m`
/// breaks exactly one of BAs2, BAs3, BAs4, BAs5, BAs6.
pub fn split_braided() -> XBraidingAssoc {
    let ns = space(&["a", "b", "eps"]);
    let ms = space(&["u", "m"]);
    let n = algebra(&ns, &[(0, 0, &[1, 0, 0]), (1, 1, &[0, 1, 0]), (1, 2, &[0, 0, 1]), (2, 1, &[0, 0, 1])]);
    let m = algebra(&ms, &[(0, 0, &[1, 0])]);
    let left = bil(&ns, &ms, &ms, &[(0, 0, &[1, 0]), (1, 1, &[0, 1])]);
    let right = bil(&ms, &ns, &ms, &[(0, 0, &[1, 0]), (1, 1, &[0, 1])]);
    let action = AssocAction::from_parts(n, m, left, right).unwrap();
    let boundary = LinMap::from_rows_i64(&ms, &ns, &[&[1, 0], &[0, 0], &[0, 0]]);
    let x = XModAssoc::from_parts(action, boundary).unwrap();
    XBraidingAssoc::from_parts(x, BilMap::zero(&ns, &ns, &ms)).unwrap()
}

/// Identity crossed module of `sl2` with the Chevalley involution as
/// boundary: a homomorphism, but not equivariant.
pub fn chevalley_boundary(sl2: &Algebra) -> XModLie {
    XModLie::from_parts(LieAction::adjoint(sl2).unwrap(), chevalley(sl2)).unwrap()
}

/// Over 𝔽₂: bar construction of `N` acting on `M = K m` by `n_i·m = action[i] m`,
/// `∂ = 0`, with `τ_{ab} = (m, [a,b])` at `slot` and `(0, [a,b])` elsewhere.
pub fn f2_bar_braiding(n: &Algebra, action: &[i64], slot: (usize, usize)) -> CatBraiding {
    let f = n.field();
    let m = abelian(f, 1);
    let dot = BilMap::from_fn(n.space(), m.space(), m.space(), |i, _| Vector::from_i64(f, &[action[i]]));
    let x = XModLie::from_parts(
        LieAction::from_parts(n.clone(), m.clone(), dot).unwrap(),
        LinMap::zero(m.space(), n.space()),
    )
    .unwrap();
    let cat = peiffer::braid::functors::cx_base_lie(&x).unwrap();
    let tau = BilMap::from_fn(n.space(), n.space(), cat.c1().space(), |i, j| {
        let mv = Vector::from_i64(f, &[i64::from((i, j) == slot)]);
        mv.concat(n.mul_basis(i, j))
    });
    CatBraiding::from_parts(cat, tau).unwrap()
}

pub fn f2() -> Field {
    Field::prime(2).unwrap()
}

/// `[x, y] = y` over 𝔽₂.
pub fn f2_r2() -> Algebra {
    let f = f2();
    let s = Space::new(f, vec!["x".into(), "y".into()]).unwrap();
    Algebra::from_fn(s, |i, j| match (i, j) {
        (0, 1) | (1, 0) => Vector::from_i64(f, &[0, 1]),
        _ => Vector::from_i64(f, &[0, 0]),
    })
}

use peiffer::groupx::{cyclic, symmetric3, FiniteGroup, GroupXMod};

fn trivial_action(g: &FiniteGroup, h: &FiniteGroup) -> Vec<Vec<usize>> {
    (0..h.order()).map(|_| (0..g.order()).collect()).collect()
}

/// `S3` acting trivially on itself with identity boundary: fails XGr1.
pub fn trivial_action_identity_boundary() -> GroupXMod {
    let g = symmetric3();
    GroupXMod::new(g.clone(), g.clone(), trivial_action(&g, &g), (0..g.order()).collect(), None).unwrap()
}

/// `S3` acting trivially on itself with trivial boundary: fails XGr2 only.
pub fn trivial_action_trivial_boundary() -> GroupXMod {
    let g = symmetric3();
    GroupXMod::new(g.clone(), g.clone(), trivial_action(&g, &g), vec![g.identity(); g.order()], None).unwrap()
}

/// `(C3, C3)` with trivial action and boundary and braiding `{h, h'} = t(h, h')`.
pub fn c3_trivial_braided(brace: Vec<Vec<usize>>) -> GroupXMod {
    let g = cyclic(3);
    GroupXMod::new(g.clone(), g.clone(), trivial_action(&g, &g), vec![0; 3], Some(brace)).unwrap()
}

/// `{xⁱ, y} = y` for `i ≠ 0`: a homomorphism in the second variable only.
pub fn c3_half_bihomomorphism() -> GroupXMod {
    c3_trivial_braided(vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 1, 2]])
}
