//! Exhaustive search over 𝔽₂ for Lie categorical braidings that satisfy
//! LieT1–LieT2 but are accepted by only one of the two Lie validators.
//!
//! Bases are the bar constructions of every crossed module `(M, N, ·, ∂)` of
//! Lie algebras over 𝔽₂ with `M` abelian and `dim M, dim N ≤ max_dim`, plus
//! the identity crossed modules. On a bar construction LieT1 forces
//! `τ_ab = (m_ab, [a,b])` with `∂(m_ab) = [b,a] - [a,b] = 0`, so the search
//! runs over all choices of `m_ab ∈ ker ∂`.

use super::{validate_braiding_cat_lie_alt, validate_braiding_cat_lie_ulualan, CatBraiding};
use crate::action::LieAction;
use crate::algebra::Algebra;
use crate::catalog::abelian;
use crate::field::Field;
use crate::linspace::{kernel, BilMap, LinMap, Space, Vector};
use crate::report::Axiom;
use crate::xmod::{identity_xmod_lie, xmod_lie_report, XModLie};

use super::functors::cx_base_lie;

/// Counts from one run of [`separation_search`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchSummary {
    pub crossed_modules: usize,
    pub candidates: usize,
    pub passing_t12: usize,
    pub both_pass: usize,
    pub ulualan_only: usize,
    pub alt_only: usize,
    pub both_fail: usize,
    /// First braiding accepted by exactly one validator, described in words.
    pub first_separation: Option<String>,
}

fn f2() -> Field {
    Field::prime(2).expect("2 is prime")
}

fn from_bits(field: Field, bits: u64, len: usize) -> Vector {
    Vector((0..len).map(|i| field.from_i64(((bits >> i) & 1) as i64)).collect())
}

/// Lie algebras over 𝔽₂ of dimension at most 2, up to isomorphism.
pub fn small_lie_algebras(max_dim: usize) -> Vec<(String, Algebra)> {
    let f = f2();
    let mut out = Vec::new();
    for d in 1..=max_dim.min(2) {
        out.push((format!("Ab({d})"), abelian(f, d)));
    }
    if max_dim >= 2 {
        // [x, y] = y
        let space = Space::new(f, vec!["x".into(), "y".into()]).expect("distinct labels");
        let r2 = Algebra::from_fn(space, |i, j| match (i, j) {
            (0, 1) | (1, 0) => Vector::from_i64(f, &[0, 1]),
            _ => Vector::from_i64(f, &[0, 0]),
        });
        out.push(("r2".into(), r2));
    }
    out
}

/// Every valid crossed module with abelian `M`, plus identity crossed modules.
pub fn small_crossed_modules(max_dim: usize) -> Vec<(String, XModLie)> {
    let f = f2();
    let mut out = Vec::new();
    for (nname, n) in small_lie_algebras(max_dim) {
        out.push((format!("id({nname})"), identity_xmod_lie(&n).expect("Lie")));
        for dm in 1..=max_dim {
            let m = abelian(f, dm);
            let dn = n.dim();
            let action_bits = dn * dm * dm;
            let boundary_bits = dm * dn;
            for a in 0..(1u64 << action_bits) {
                let dot =
                    BilMap::from_fn(n.space(), m.space(), m.space(), |i, j| from_bits(f, a >> ((i * dm + j) * dm), dm));
                let Ok(action) = LieAction::from_parts(n.clone(), m.clone(), dot) else { continue };
                for d in 0..(1u64 << boundary_bits) {
                    let boundary = LinMap::from_fn(m.space(), n.space(), |j| from_bits(f, d >> (j * dn), dn));
                    let x = XModLie::from_parts(action.clone(), boundary).expect("shapes agree");
                    if xmod_lie_report(&x, "x").passed() {
                        out.push((format!("({nname}, Ab({dm}), action {a:#x}, boundary {d:#x})"), x));
                    }
                }
            }
        }
    }
    out
}

pub fn separation_search(max_dim: usize) -> SearchSummary {
    let mut sum = SearchSummary::default();
    for (name, x) in small_crossed_modules(max_dim) {
        sum.crossed_modules += 1;
        let base = cx_base_lie(&x).expect("valid crossed module");
        let (m, n) = (x.m(), x.n());
        let ker = kernel(x.boundary());
        let (kd, dn) = (ker.dim(), n.dim());
        let slots = dn * dn;
        let total_bits = kd * slots;
        for choice in 0..(1u64 << total_bits) {
            sum.candidates += 1;
            let tau = BilMap::from_fn(n.space(), n.space(), base.c1().space(), |i, j| {
                let slot = i * dn + j;
                let mut mv = m.zero();
                for (b, v) in ker.basis().iter().enumerate() {
                    if (choice >> (slot * kd + b)) & 1 == 1 {
                        mv = &mv + v;
                    }
                }
                mv.concat(n.mul_basis(i, j))
            });
            let b = CatBraiding::from_parts(base.clone(), tau).expect("shapes agree");
            let ul = validate_braiding_cat_lie_ulualan(&b);
            if !(ul.passes(Axiom::LieT1) && ul.passes(Axiom::LieT2)) {
                continue;
            }
            sum.passing_t12 += 1;
            let alt = validate_braiding_cat_lie_alt(&b);
            match (ul.passed(), alt.passed()) {
                (true, true) => sum.both_pass += 1,
                (false, false) => sum.both_fail += 1,
                (u, _) => {
                    if u {
                        sum.ulualan_only += 1;
                    } else {
                        sum.alt_only += 1;
                    }
                    if sum.first_separation.is_none() {
                        let which = if u { "LieB3-4 only" } else { "LieT3-4 only" };
                        sum.first_separation = Some(format!("{name}, τ choice {choice:#x}: {which}"));
                    }
                }
            }
        }
    }
    sum
}
