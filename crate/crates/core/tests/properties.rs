//! Randomised laws: basis changes, front-end round trips, Lie-fication.

use peiffer::action::{induced_lie_action, semidirect_assoc, semidirect_lie, AssocAction};
use peiffer::braid::{bracket_braiding, commutator_braiding, validate_braiding_xmod_assoc, validate_braiding_xmod_lie};
use peiffer::catalog::fixture;
use peiffer::frontend::commands::load;
use peiffer::frontend::{emit_object, Object};
use peiffer::natensor::{change_basis, tensor_square};
use peiffer::xmod::{identity_xmod_assoc, identity_xmod_lie, xmod_liefy};
use peiffer::{Algebra, BilMap, Field, LinMap, Space, Vector};
use proptest::prelude::*;

fn q() -> Field {
    Field::Rationals
}

/// An invertible `n × n` integer matrix, as columns.
fn invertible(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, n), n).prop_filter("invertible", move |cols| {
        let s = Space::numbered(q(), n, "e");
        let vs = cols.iter().map(|c| Vector::from_i64(q(), c)).collect();
        LinMap::from_columns(s.clone(), s, vs).unwrap().inverse().is_some()
    })
}

fn rebase(a: &Algebra, cols: &[Vec<i64>]) -> Algebra {
    let vs = cols.iter().map(|c| Vector::from_i64(q(), c)).collect();
    let p = LinMap::from_columns(a.space().clone(), a.space().clone(), vs).unwrap();
    change_basis(a, &p).unwrap()
}

fn structure_constants(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, n), n * n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn commutator_braiding_survives_basis_change(cols in invertible(4)) {
        let a = rebase(&fixture("Mat(2)", q()).unwrap(), &cols);
        let r = validate_braiding_xmod_assoc(&commutator_braiding(&a).unwrap());
        prop_assert!(r.passed(), "{}", r);
    }

    #[test]
    fn bracket_braiding_survives_basis_change(cols in invertible(3)) {
        for name in ["sl2", "Heis3"] {
            let l = rebase(&fixture(name, q()).unwrap(), &cols);
            let r = validate_braiding_xmod_lie(&bracket_braiding(&l).unwrap());
            prop_assert!(r.passed(), "{}", r);
        }
    }

    #[test]
    fn tensor_dimension_survives_basis_change(cols in invertible(3)) {
        let l = rebase(&fixture("sl2", q()).unwrap(), &cols);
        prop_assert_eq!(tensor_square(&l).unwrap().dim(), 3);
    }

    #[test]
    fn emitted_algebras_reload(consts in structure_constants(3)) {
        let s = Space::numbered(q(), 3, "b");
        let mult = BilMap::from_fn(&s, &s, &s, |i, j| Vector::from_i64(q(), &consts[i * 3 + j]));
        let algebra = Algebra::new(s, mult).unwrap();
        let object = Object::Algebra { algebra, flavor: None };
        let text = emit_object(q(), "A", &object).to_string();
        let env = load(&text).unwrap();
        prop_assert_eq!(&env.get("A").unwrap().object, &object);
    }

    #[test]
    fn emitted_braidings_reload(cols in invertible(4)) {
        let b = commutator_braiding(&rebase(&fixture("Mat(2)", q()).unwrap(), &cols)).unwrap();
        let object = Object::XBraidingAssoc(b);
        let text = emit_object(q(), "B", &object).to_string();
        let env = load(&text).unwrap();
        prop_assert_eq!(&env.get("B").unwrap().object, &object);
    }

    #[test]
    fn liefication_square(cols in invertible(3)) {
        let a = rebase(&fixture("Upper(2)", q()).unwrap(), &cols);
        let action = AssocAction::self_action(&a).unwrap();
        let lhs = semidirect_assoc(&action).unwrap().algebra.liefy().unwrap();
        let rhs = semidirect_lie(&induced_lie_action(&action).unwrap()).unwrap().algebra;
        prop_assert_eq!(lhs, rhs);
        let x = xmod_liefy(&identity_xmod_assoc(&a).unwrap()).unwrap();
        prop_assert_eq!(x, identity_xmod_lie(&a.liefy().unwrap()).unwrap());
    }
}
