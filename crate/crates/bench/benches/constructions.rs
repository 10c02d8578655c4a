use criterion::{black_box, criterion_group, criterion_main, Criterion};
use peiffer::braid::functors::{beta_iso, cx_functor, cx_functor_lie};
use peiffer::braid::{bracket_braiding, commutator_braiding, validate_braiding_xmod_assoc, validate_braiding_xmod_lie};
use peiffer::catalog::fixture;
use peiffer::frontend::commands::{validate, Format};
use peiffer::groupx::{conjugation_example, group_fixture, validate_group_braiding};
use peiffer::natensor::tensor_square;
use peiffer::Field;

fn braidings(c: &mut Criterion) {
    let q = Field::Rationals;
    for name in ["Mat(2)", "Mat(3)", "Upper(3)"] {
        let b = commutator_braiding(&fixture(name, q).unwrap()).unwrap();
        c.bench_function(&format!("validate commutator braiding {name}"), |bn| {
            bn.iter(|| validate_braiding_xmod_assoc(black_box(&b)))
        });
    }
    for name in ["sl2", "gl(2)"] {
        let b = bracket_braiding(&fixture(name, q).unwrap()).unwrap();
        c.bench_function(&format!("validate bracket braiding {name}"), |bn| {
            bn.iter(|| validate_braiding_xmod_lie(black_box(&b)))
        });
    }
}

fn functors(c: &mut Criterion) {
    let q = Field::Rationals;
    let mat2 = commutator_braiding(&fixture("Mat(2)", q).unwrap()).unwrap();
    c.bench_function("bar construction Mat(2)", |bn| bn.iter(|| cx_functor(black_box(&mat2)).unwrap()));
    let bar = cx_functor(&mat2).unwrap();
    c.bench_function("beta iso Mat(2)", |bn| bn.iter(|| beta_iso(black_box(&bar)).unwrap()));
    let sl2 = bracket_braiding(&fixture("sl2", q).unwrap()).unwrap();
    let bar = cx_functor_lie(&sl2).unwrap();
    c.bench_function("beta iso sl2", |bn| bn.iter(|| beta_iso(black_box(&bar)).unwrap()));
}

fn tensor(c: &mut Criterion) {
    let q = Field::Rationals;
    for name in ["sl2", "Heis3", "gl(2)", "Ab(4)"] {
        let m = fixture(name, q).unwrap();
        c.bench_function(&format!("tensor square {name}"), |bn| bn.iter(|| tensor_square(black_box(&m)).unwrap()));
    }
}

fn groups(c: &mut Criterion) {
    for name in ["S3", "A4", "D6"] {
        let x = conjugation_example(&group_fixture(name).unwrap());
        c.bench_function(&format!("group braiding {name}"), |bn| {
            bn.iter(|| validate_group_braiding(black_box(&x)).unwrap())
        });
    }
}

fn frontend(c: &mut Criterion) {
    let src = include_str!("../../../fixtures/sl2.alg");
    c.bench_function("validate sl2.alg", |bn| bn.iter(|| validate(black_box(src), None, Format::Json)));
}

criterion_group!(benches, braidings, functors, tensor, groups, frontend);
criterion_main!(benches);
