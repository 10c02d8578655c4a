//! Internal categories in associative and Lie algebras.
//!
//! Composition is never stored. On composable pairs it is forced to be
//! `k(x, y) = x - e(t(x)) + y`, and every morphism has the inverse
//! `e(s(f)) - f + e(t(f))`.

use crate::algebra::{homomorphism_witness, Algebra, Flavor};
use crate::error::{Error, Result};
use crate::linspace::{kernel, pullback_space, LinMap, Space, Subspace, Vector};
use crate::report::{find_witness, Axiom, ValidationReport};

/// `(C₁, C₀, s, t, e)` with the forced composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatAlgebra {
    c1: Algebra,
    c0: Algebra,
    s: LinMap,
    t: LinMap,
    e: LinMap,
    flavor: Flavor,
}

impl CatAlgebra {
    /// Shape-checked, unvalidated.
    pub fn from_parts(c1: Algebra, c0: Algebra, s: LinMap, t: LinMap, e: LinMap, flavor: Flavor) -> Result<CatAlgebra> {
        for (m, what) in [(&s, "s"), (&t, "t")] {
            c1.space().check_shape(m.domain(), &format!("{what} domain"))?;
            c0.space().check_shape(m.codomain(), &format!("{what} codomain"))?;
        }
        c0.space().check_shape(e.domain(), "e domain")?;
        c1.space().check_shape(e.codomain(), "e codomain")?;
        let (one, zero) = (c1.space().clone(), c0.space().clone());
        Ok(CatAlgebra {
            s: s.with_spaces(one.clone(), zero.clone())?,
            t: t.with_spaces(one.clone(), zero.clone())?,
            e: e.with_spaces(zero, one)?,
            c1,
            c0,
            flavor,
        })
    }

    pub fn new(c1: Algebra, c0: Algebra, s: LinMap, t: LinMap, e: LinMap, flavor: Flavor) -> Result<CatAlgebra> {
        let c = CatAlgebra::from_parts(c1, c0, s, t, e, flavor)?;
        c.require_valid()?;
        Ok(c)
    }

    /// Only identity morphisms: `C₁ = C₀ = A`, `s = t = e = id`.
    pub fn discrete(a: &Algebra, flavor: Flavor) -> Result<CatAlgebra> {
        a.require(flavor)?;
        let id = LinMap::identity(a.space());
        CatAlgebra::from_parts(a.clone(), a.clone(), id.clone(), id.clone(), id, flavor)
    }

    pub fn c1(&self) -> &Algebra {
        &self.c1
    }

    pub fn c0(&self) -> &Algebra {
        &self.c0
    }

    pub fn s(&self) -> &LinMap {
        &self.s
    }

    pub fn t(&self) -> &LinMap {
        &self.t
    }

    pub fn e(&self) -> &LinMap {
        &self.e
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn field(&self) -> crate::field::Field {
        self.c1.field()
    }

    /// `x - e(t(x)) + y`, with no composability check.
    pub fn k_raw(&self, x: &Vector, y: &Vector) -> Vector {
        &(x - &self.e.apply(&self.t.apply(x))) + y
    }

    pub(crate) fn require_valid(&self) -> Result<()> {
        let report = cat_algebra_report(self, "cat");
        if report.passed() {
            Ok(())
        } else {
            Err(Error::InvalidCatAlgebra(Box::new(report)))
        }
    }
}

/// `k(x, y)` for `t(x) = s(y)`.
pub fn compose(c: &CatAlgebra, x: &Vector, y: &Vector) -> Result<Vector> {
    let d = c.c1.dim();
    if x.dim() != d || y.dim() != d {
        return Err(Error::DimensionMismatch(format!("compose: morphisms must have dimension {d}")));
    }
    if c.t.apply(x) != c.s.apply(y) {
        return Err(Error::NotComposable);
    }
    Ok(c.k_raw(x, y))
}

/// `f' = e(s(f)) - f + e(t(f))`, checked to be a two-sided inverse.
pub fn invert_morphism(c: &CatAlgebra, f: &Vector) -> Result<Vector> {
    let esf = c.e.apply(&c.s.apply(f));
    let etf = c.e.apply(&c.t.apply(f));
    let inv = &(&esf - f) + &etf;
    let broken = |what: &str| Error::InternalInvariantViolation(format!("internal inverse: {what}"));
    if compose(c, f, &inv).map_err(|_| broken("f, f' not composable"))? != esf {
        return Err(broken("f' ∘ f is not the identity at s(f)"));
    }
    if compose(c, &inv, f).map_err(|_| broken("f', f not composable"))? != etf {
        return Err(broken("f ∘ f' is not the identity at t(f)"));
    }
    Ok(inv)
}

/// `C₁ ×_{C₀} C₁ = {(x, y) : t(x) = s(y)}`, split into its two coordinates.
pub fn composable_pairs(c: &CatAlgebra) -> Vec<(Vector, Vector)> {
    let d = c.c1.dim();
    let p = pullback_space(&c.t, &c.s).expect("t and s share a codomain");
    p.basis().iter().map(|v| (v.slice(0, d), v.slice(d, d))).collect()
}

/// Composable triples `t(x) = s(y)`, `t(y) = s(z)`.
pub fn composable_triples(c: &CatAlgebra) -> Vec<(Vector, Vector, Vector)> {
    let (d, d0) = (c.c1.dim(), c.c0.dim());
    let field = c.c1.field();
    let cube = Space::numbered(field, 3 * d, "c");
    let target = Space::numbered(field, 2 * d0, "o");
    let f = LinMap::from_fn(&cube, &target, |j| {
        let (block, i) = (j / d, j % d);
        let z = c.c0.zero();
        match block {
            0 => c.t.column(i).concat(&z),
            1 => (-c.s.column(i)).concat(c.t.column(i)),
            _ => z.concat(&-c.s.column(i)),
        }
    });
    kernel(&f).basis().iter().map(|v| (v.slice(0, d), v.slice(d, d), v.slice(2 * d, d))).collect()
}

/// Category laws for the forced composition.
pub fn validate_cat_algebra(c: &CatAlgebra) -> ValidationReport {
    let (c1, c0) = (&c.c1, &c.c0);
    let mut r = ValidationReport::new("cat");
    r.record_for("cat.s", Axiom::Hom, homomorphism_witness(&c.s, c1, c0));
    r.record_for("cat.t", Axiom::Hom, homomorphism_witness(&c.t, c1, c0));
    r.record_for("cat.e", Axiom::Hom, homomorphism_witness(&c.e, c0, c1));
    r.check(Axiom::CatSE, &[c0.dim()], |t| (c.s.apply(c.e.column(t[0])), c0.unit(t[0])));
    r.check(Axiom::CatTE, &[c0.dim()], |t| (c.t.apply(c.e.column(t[0])), c0.unit(t[0])));

    let pairs = composable_pairs(c);
    // k is an algebra map on the pullback, products taken componentwise
    r.check(Axiom::CatComp, &[pairs.len(), pairs.len()], |t| {
        let ((x1, y1), (x2, y2)) = (&pairs[t[0]], &pairs[t[1]]);
        let lhs = c.k_raw(&c1.mul(x1, x2), &c1.mul(y1, y2));
        (lhs, c1.mul(&c.k_raw(x1, y1), &c.k_raw(x2, y2)))
    });
    let w = find_witness(&[pairs.len()], |t| {
        let (x, y) = &pairs[t[0]];
        (c.s.apply(&c.k_raw(x, y)), c.s.apply(x))
    })
    .or_else(|| {
        find_witness(&[pairs.len()], |t| {
            let (x, y) = &pairs[t[0]];
            (c.t.apply(&c.k_raw(x, y)), c.t.apply(y))
        })
    });
    r.record(Axiom::CatSrcTgt, w);
    let w = find_witness(&[c1.dim()], |t| {
        let x = c1.unit(t[0]);
        (c.k_raw(&x, &c.e.apply(&c.t.apply(&x))), x)
    })
    .or_else(|| {
        find_witness(&[c1.dim()], |t| {
            let x = c1.unit(t[0]);
            (c.k_raw(&c.e.apply(&c.s.apply(&x)), &x), x)
        })
    });
    r.record(Axiom::CatUnit, w);
    let triples = composable_triples(c);
    r.check(Axiom::CatAssoc, &[triples.len()], |t| {
        let (x, y, z) = &triples[t[0]];
        (c.k_raw(&c.k_raw(x, y), z), c.k_raw(x, &c.k_raw(y, z)))
    });
    // ker(s) · ker(t) = 0
    let (ks, kt) = (kernel(&c.s), kernel(&c.t));
    r.check(Axiom::CatKer, &[ks.dim(), kt.dim()], |t| (c1.mul(&ks.basis()[t[0]], &kt.basis()[t[1]]), c1.zero()));
    r
}

/// Flavor entries for both algebras, then the category laws.
pub fn cat_algebra_report(c: &CatAlgebra, subject: &str) -> ValidationReport {
    let mut r = ValidationReport::new(subject);
    r.extend(c.c1.flavor_report(&format!("{subject}.c1"), c.flavor));
    r.extend(c.c0.flavor_report(&format!("{subject}.c0"), c.flavor));
    let mut laws = validate_cat_algebra(c);
    for e in &mut laws.entries {
        e.subject = e.subject.replacen("cat", subject, 1);
    }
    r.extend(laws);
    r
}

/// Commutator algebras on both levels, same structure maps.
pub fn cat_liefy(c: &CatAlgebra) -> Result<CatAlgebra> {
    if c.flavor != Flavor::Assoc {
        return Err(Error::WrongFlavor("cat_liefy expects an associative categorical algebra".into()));
    }
    c.require_valid()?;
    CatAlgebra::from_parts(
        c.c1.commutator_algebra(),
        c.c0.commutator_algebra(),
        c.s.clone(),
        c.t.clone(),
        c.e.clone(),
        Flavor::Lie,
    )
}

/// `ker(s)` as a subspace of `C₁`.
pub fn source_kernel(c: &CatAlgebra) -> Subspace {
    kernel(&c.s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::fixture;
    use crate::field::Field;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn discrete_category() {
        let mat2 = fixture("Mat(2)", q()).unwrap();
        let c = CatAlgebra::discrete(&mat2, Flavor::Assoc).unwrap();
        assert!(cat_algebra_report(&c, "d").passed());
        let x = Vector::from_i64(q(), &[1, 2, 3, 4]);
        assert_eq!(compose(&c, &x, &x).unwrap(), x);
        assert_eq!(invert_morphism(&c, &x).unwrap(), x);
        let y = Vector::from_i64(q(), &[1, 0, 0, 0]);
        assert!(matches!(compose(&c, &x, &y), Err(Error::NotComposable)));
    }

    #[test]
    fn doubled_unit_fails() {
        let mat2 = fixture("Mat(2)", q()).unwrap();
        let id = LinMap::identity(mat2.space());
        let two = id.scale(&q().from_i64(2));
        let c = CatAlgebra::from_parts(mat2.clone(), mat2.clone(), id.clone(), id, two, Flavor::Assoc).unwrap();
        let r = validate_cat_algebra(&c);
        assert!(r.fails(Axiom::CatSE));
        assert_eq!(r.entry(Axiom::CatSE).unwrap().witness.as_ref().unwrap().basis_tuple, vec![0]);
        assert!(CatAlgebra::new(
            c.c1().clone(),
            c.c0().clone(),
            c.s().clone(),
            c.t().clone(),
            c.e().clone(),
            Flavor::Assoc
        )
        .is_err());
    }

    #[test]
    fn identities_and_inverses_in_a_codiscrete_example() {
        // C₁ = C₀ ⊕ C₀ with s = pr₁, t = pr₂, e = diagonal, over the abelian algebra
        let ab = fixture("Ab(2)", q()).unwrap();
        let c1 = Algebra::abelian(ab.space().direct_sum(ab.space(), "s_", "t_"));
        let s = LinMap::from_rows_i64(c1.space(), ab.space(), &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        let t = LinMap::from_rows_i64(c1.space(), ab.space(), &[&[0, 0, 1, 0], &[0, 0, 0, 1]]);
        let e = LinMap::from_rows_i64(ab.space(), c1.space(), &[&[1, 0], &[0, 1], &[1, 0], &[0, 1]]);
        let c = CatAlgebra::new(c1, ab, s, t, e, Flavor::Assoc).unwrap();
        for i in 0..4 {
            let f = c.c1().unit(i);
            let inv = invert_morphism(&c, &f).unwrap();
            // the inverse swaps source and target
            assert_eq!(c.s().apply(&inv), c.t().apply(&f));
            assert_eq!(c.t().apply(&inv), c.s().apply(&f));
        }
        assert_eq!(composable_pairs(&c).len(), 6);
        assert_eq!(composable_triples(&c).len(), 8);
        assert!(cat_liefy(&c).unwrap().flavor() == Flavor::Lie);
    }

    #[test]
    fn liefy_discrete() {
        let mat2 = fixture("Mat(2)", q()).unwrap();
        let c = CatAlgebra::discrete(&mat2, Flavor::Assoc).unwrap();
        let l = cat_liefy(&c).unwrap();
        assert_eq!(l, CatAlgebra::discrete(&fixture("gl(2)", q()).unwrap(), Flavor::Lie).unwrap());
        assert!(cat_algebra_report(&l, "l").passed());
        let z = fixture("Ab(0)", q()).unwrap();
        let zc = CatAlgebra::discrete(&z, Flavor::Assoc).unwrap();
        assert_eq!(cat_liefy(&zc).unwrap().c1().dim(), 0);
        assert!(matches!(cat_liefy(&l), Err(Error::WrongFlavor(_))));
    }
}
