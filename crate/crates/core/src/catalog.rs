//! Named fixture algebras.
//!
//! | name       | basis (in order)                         | product                         |
//! |------------|------------------------------------------|---------------------------------|
//! | `Ab(n)`    | `a1 .. an`                               | zero                            |
//! | `Mat(n)`   | `e11, e12, .., e1n, e21, .., enn`        | `eij ekl = δjk eil`             |
//! | `Upper(n)` | `eij` with `i <= j`, row-major           | matrix product                  |
//! | `gl(n)`    | as `Mat(n)`                              | commutator of `Mat(n)`          |
//! | `sl2`      | `e, f, h`                                | `[h,e]=2e, [h,f]=-2f, [e,f]=h`  |
//! | `Heis3`    | `x, y, z`                                | `[x,y]=z`                       |
//!
//! Lie fixtures list both orders of each bracket.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linspace::{Space, Vector};

pub const NAMES: &[&str] = &["Ab(n)", "Mat(n)", "Upper(n)", "gl(n)", "sl2", "Heis3"];

pub fn fixture(name: &str, field: Field) -> Result<Algebra> {
    let unknown = || Error::UnknownFixture(name.to_string());
    let name = name.trim();
    match name {
        "sl2" => return Ok(sl2(field)),
        "Heis3" => return Ok(heis3(field)),
        _ => {}
    }
    let open = name.find('(').ok_or_else(unknown)?;
    if !name.ends_with(')') {
        return Err(unknown());
    }
    let n: usize = name[open + 1..name.len() - 1].trim().parse().map_err(|_| unknown())?;
    match &name[..open] {
        "Ab" => Ok(abelian(field, n)),
        "Mat" if n >= 1 => Ok(matrix(field, n)),
        "Upper" if n >= 1 => Ok(upper(field, n)),
        "gl" if n >= 1 => Ok(matrix(field, n).commutator_algebra()),
        _ => Err(unknown()),
    }
}

fn labels(names: impl IntoIterator<Item = String>) -> Vec<String> {
    names.into_iter().collect()
}

pub fn abelian(field: Field, n: usize) -> Algebra {
    let space = Space::new(field, labels((1..=n).map(|i| format!("a{i}")))).expect("distinct labels");
    Algebra::abelian(space)
}

fn unit_label(n: usize, i: usize, j: usize) -> String {
    if n < 10 {
        format!("e{}{}", i + 1, j + 1)
    } else {
        format!("e{}_{}", i + 1, j + 1)
    }
}

/// Algebra spanned by the matrix units in `units`, closed under the matrix product.
fn matrix_units(field: Field, n: usize, units: Vec<(usize, usize)>) -> Algebra {
    let space = Space::new(field, units.iter().map(|&(i, j)| unit_label(n, i, j)).collect()).expect("distinct labels");
    let idx = |p: (usize, usize)| units.iter().position(|&u| u == p);
    Algebra::from_fn(space.clone(), |a, b| {
        let (i, j) = units[a];
        let (k, l) = units[b];
        if j == k {
            space.unit(idx((i, l)).expect("closed under product"))
        } else {
            space.zero()
        }
    })
}

pub fn matrix(field: Field, n: usize) -> Algebra {
    let units = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    matrix_units(field, n, units)
}

pub fn upper(field: Field, n: usize) -> Algebra {
    let units = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    matrix_units(field, n, units)
}

pub fn sl2(field: Field) -> Algebra {
    let space = Space::new(field, labels(["e", "f", "h"].map(String::from))).expect("distinct labels");
    let v = |c: [i64; 3]| Vector::from_i64(field, &c);
    Algebra::from_fn(space, |i, j| match (i, j) {
        (2, 0) => v([2, 0, 0]),
        (0, 2) => v([-2, 0, 0]),
        (2, 1) => v([0, -2, 0]),
        (1, 2) => v([0, 2, 0]),
        (0, 1) => v([0, 0, 1]),
        (1, 0) => v([0, 0, -1]),
        _ => v([0, 0, 0]),
    })
}

pub fn heis3(field: Field) -> Algebra {
    let space = Space::new(field, labels(["x", "y", "z"].map(String::from))).expect("distinct labels");
    let v = |c: [i64; 3]| Vector::from_i64(field, &c);
    Algebra::from_fn(space, |i, j| match (i, j) {
        (0, 1) => v([0, 0, 1]),
        (1, 0) => v([0, 0, -1]),
        _ => v([0, 0, 0]),
    })
}
