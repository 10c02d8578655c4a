//! The seed list for the mutation search: valid fixtures whose single-entry
//! bumps are tried, plus the hand-built broken structures.

use peiffer::action::{AssocAction, LieAction};
use peiffer::braid::functors::{cx_base_assoc, cx_functor, cx_functor_lie, CatFunctor};
use peiffer::braid::{bracket_braiding, commutator_braiding, LieVariant};
use peiffer::catalog::{abelian, fixture};
use peiffer::groupx::{conjugation_example, symmetric3};
use peiffer::icat::CatAlgebra;
use peiffer::natensor::{tensor_braiding, tensor_square};
use peiffer::xmod::{identity_xmod_assoc, identity_xmod_lie};
use peiffer::{Algebra, Flavor, LinMap};

use super::handmade::*;
use super::mutation::*;

pub fn seeds() -> Vec<Seed> {
    let f = |n: &str| fixture(n, q()).unwrap();
    let (up2, sl2, heis) = (f("Upper(2)"), f("sl2"), f("Heis3"));
    let cb = commutator_braiding(&up2).unwrap();
    let bb = bracket_braiding(&sl2).unwrap();
    let tb = tensor_braiding(&tensor_square(&heis).unwrap()).unwrap();
    let split = split_braided();
    let (shift_b, shift_f) = shifted_units();
    let (dbl_src, dbl_tgt) = doubled_tau(&up2);
    let bar_cb = cx_functor(&cb).unwrap();
    let bar_bb = cx_functor_lie(&bb).unwrap();
    let bar_tb = cx_functor_lie(&tb).unwrap();
    let zero = |a: &Algebra| LinMap::zero(a.space(), a.space());
    let id = |a: &Algebra| LinMap::identity(a.space());
    let dbl_id = CatFunctor { f1: id(dbl_src.base().c1()), f0: id(dbl_src.base().c0()) };
    let s3 = conjugation_example(&symmetric3());
    let s3_plain = {
        let mut x = s3.clone();
        x.brace = None;
        x
    };
    let f2_ab2 = abelian(f2(), 2);
    vec![
        algebra_seed("Upper(2)", &up2, Flavor::Assoc),
        algebra_seed("sl2", &sl2, Flavor::Lie),
        algebra_seed("non-Jacobi bracket", &not_jacobi(), Flavor::Lie).broken(),
        assoc_action_seed("Upper(2) on itself", &AssocAction::self_action(&up2).unwrap()),
        assoc_action_seed("non-multiplicative right action", &right_action_not_multiplicative()).broken(),
        lie_action_seed("adjoint sl2", &LieAction::adjoint(&sl2).unwrap()),
        lie_action_seed("action not by derivations", &action_not_by_derivations()).broken(),
        xmod_assoc_seed("identity Upper(2)", &identity_xmod_assoc(&up2).unwrap()),
        xmod_assoc_seed("zero boundary Upper(2)", &zero_boundary_assoc(&up2)).broken(),
        xmod_lie_seed("identity sl2", &identity_xmod_lie(&sl2).unwrap()),
        xmod_lie_seed("zero boundary sl2", &zero_boundary_lie(&sl2)).broken(),
        xmod_lie_seed("Chevalley boundary sl2", &chevalley_boundary(&sl2)).broken(),
        braided_assoc_seed("commutator Upper(2)", &cb),
        braided_assoc_seed("split", &split),
        braided_lie_seed("bracket sl2", &bb),
        braided_lie_seed("tensor Heis3", &tb),
        braided_morphism_assoc_seed(
            "identity on commutator Upper(2)",
            &cb,
            &identity_morphism(cb.base().m(), cb.base().n()),
        ),
        braided_morphism_assoc_seed("zero morphism", &cb, &morphism(zero(&up2), zero(&up2))).broken(),
        braided_morphism_assoc_seed("zero top component", &cb, &morphism(zero(&up2), id(&up2))).broken(),
        braided_morphism_lie_seed("identity on bracket sl2", &bb, &morphism(id(&sl2), id(&sl2))),
        braided_morphism_lie_seed("Chevalley top component", &bb, &morphism(chevalley(&sl2), id(&sl2))).broken(),
        braided_morphism_lie_seed("zero top component sl2", &bb, &morphism(zero(&sl2), id(&sl2))).broken(),
        cat_seed("discrete Upper(2)", &CatAlgebra::discrete(&up2, Flavor::Assoc).unwrap()),
        cat_seed("over zero objects", &over_zero_objects(&up2)).broken(),
        cat_seed("bar Upper(2)", &cx_base_assoc(cb.base()).unwrap()),
        cat_braiding_seed("bar commutator Upper(2)", &bar_cb, LieVariant::Ulualan),
        cat_braiding_seed("bar split", &cx_functor(&split).unwrap(), LieVariant::Ulualan),
        cat_braiding_seed("bar bracket sl2 (Ulualan)", &bar_bb, LieVariant::Ulualan),
        cat_braiding_seed("bar bracket sl2 (alternate)", &bar_bb, LieVariant::Alt),
        cat_braiding_seed("bar tensor Heis3 (Ulualan)", &bar_tb, LieVariant::Ulualan),
        cat_braiding_seed("bar tensor Heis3 (alternate)", &bar_tb, LieVariant::Alt),
        cat_braiding_seed("F2 LieB4 separator", &f2_bar_braiding(&f2_ab2, &[1, 0], (0, 1)), LieVariant::Ulualan)
            .broken(),
        cat_braiding_seed("F2 LieB3 separator", &f2_bar_braiding(&f2_ab2, &[1, 0], (1, 0)), LieVariant::Ulualan)
            .broken(),
        cat_braiding_seed("F2 LieT3 separator", &f2_bar_braiding(&f2_r2(), &[0, 0], (0, 1)), LieVariant::Alt).broken(),
        anticoherence_seed("anticoherence sl2", &bar_bb),
        anticoherence_seed("anticoherence Heis3", &bar_tb),
        beta_seed("beta on commutator Upper(2)", &bar_cb),
        functor_seed("collapse to units", &bar_cb, &bar_cb, &collapse_to_units(&bar_cb)).broken(),
        functor_seed("shifted units", &shift_b, &shift_b, &shift_f).broken(),
        functor_seed("identity into doubled tau", &dbl_src, &dbl_tgt, &dbl_id).broken(),
        tensor_seed("tensor sl2", &sl2),
        unreduced_tensor_seed("unreduced tensor sl2", &sl2),
        group_seed("conjugation S3 unbraided", &s3_plain),
        group_seed("conjugation S3", &s3),
        group_seed("S3 trivial action, identity boundary", &trivial_action_identity_boundary()).broken(),
        group_seed("S3 trivial action, trivial boundary", &trivial_action_trivial_boundary()).broken(),
        group_seed("C3 trivial braiding", &c3_trivial_braided(vec![vec![0; 3]; 3])),
        group_seed("C3 one-sided braiding", &c3_half_bihomomorphism()).broken(),
    ]
}
