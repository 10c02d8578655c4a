//! Structure-constant algebras and their flavor predicates.
//!
//! An [`Algebra`] is only a vector space with a bilinear product. Whether it
//! is associative, Lie or Leibniz is always decided by checking, never
//! assumed.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linspace::{BilMap, LinMap, Space, Vector};
use crate::report::{find_witness, Axiom, ValidationReport, Witness};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    space: Space,
    mult: BilMap,
}

impl Algebra {
    pub fn new(space: Space, mult: BilMap) -> Result<Algebra> {
        for (s, what) in [(mult.left(), "left factor"), (mult.right(), "right factor"), (mult.codomain(), "product")] {
            space.check_shape(s, what)?;
        }
        let mult = mult.with_spaces(space.clone(), space.clone(), space.clone())?;
        Ok(Algebra { space, mult })
    }

    /// The algebra with zero product on `space`.
    pub fn abelian(space: Space) -> Algebra {
        let mult = BilMap::zero(&space, &space, &space);
        Algebra { space, mult }
    }

    pub fn from_fn(space: Space, f: impl Fn(usize, usize) -> Vector) -> Algebra {
        let mult = BilMap::from_fn(&space, &space, &space, f);
        Algebra { space, mult }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn mult(&self) -> &BilMap {
        &self.mult
    }

    pub fn field(&self) -> Field {
        self.space.field()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn unit(&self, i: usize) -> Vector {
        self.space.unit(i)
    }

    pub fn zero(&self) -> Vector {
        self.space.zero()
    }

    pub fn mul(&self, x: &Vector, y: &Vector) -> Vector {
        self.mult.apply(x, y)
    }

    /// Product of basis vectors.
    pub fn mul_basis(&self, i: usize, j: usize) -> &Vector {
        self.mult.image(i, j)
    }

    /// Same structure tensor with new basis labels.
    pub fn relabel(&self, space: Space) -> Result<Algebra> {
        Algebra::new(space, self.mult.clone())
    }

    /// `R(x): y ↦ y x`.
    pub fn right_mult(&self, x: &Vector) -> LinMap {
        LinMap::from_fn(&self.space, &self.space, |j| self.mul(&self.unit(j), x))
    }

    /// `L(x): y ↦ x y`; the adjoint map for a Lie bracket.
    pub fn left_mult(&self, x: &Vector) -> LinMap {
        LinMap::from_fn(&self.space, &self.space, |j| self.mul(x, &self.unit(j)))
    }

    pub fn associativity_witness(&self) -> Option<Witness> {
        let d = self.dim();
        find_witness(&[d, d, d], |t| {
            let (i, j, k) = (t[0], t[1], t[2]);
            let lhs = self.mul(self.mul_basis(i, j), &self.unit(k));
            let rhs = self.mul(&self.unit(i), self.mul_basis(j, k));
            (lhs, rhs)
        })
    }

    /// `[x,x] = 0` for every vector: checked on the diagonal and on
    /// symmetrized basis pairs, which spans `[x,x]` by polarization.
    pub fn alternation_witness(&self) -> Option<Witness> {
        let d = self.dim();
        find_witness(&[d, d], |t| {
            let (i, j) = (t[0], t[1]);
            let lhs = if i == j { self.mul_basis(i, i).clone() } else { self.mul_basis(i, j) + self.mul_basis(j, i) };
            (lhs, self.zero())
        })
    }

    pub fn jacobi_witness(&self) -> Option<Witness> {
        let d = self.dim();
        find_witness(&[d, d, d], |t| {
            let (x, y, z) = (self.unit(t[0]), self.unit(t[1]), self.unit(t[2]));
            let a = self.mul(&x, self.mul_basis(t[1], t[2]));
            let b = self.mul(&y, self.mul_basis(t[2], t[0]));
            let c = self.mul(&z, self.mul_basis(t[0], t[1]));
            (&(&a + &b) + &c, self.zero())
        })
    }

    /// `[x,[y,z]] = [[x,y],z] - [[x,z],y]`.
    pub fn leibniz_witness(&self) -> Option<Witness> {
        let d = self.dim();
        find_witness(&[d, d, d], |t| {
            let (x, y, z) = (self.unit(t[0]), self.unit(t[1]), self.unit(t[2]));
            let lhs = self.mul(&x, self.mul_basis(t[1], t[2]));
            let rhs = &self.mul(self.mul_basis(t[0], t[1]), &z) - &self.mul(self.mul_basis(t[0], t[2]), &y);
            (lhs, rhs)
        })
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_witness().is_none()
    }

    pub fn is_lie(&self) -> bool {
        self.alternation_witness().is_none() && self.jacobi_witness().is_none()
    }

    pub fn is_leibniz(&self) -> bool {
        self.leibniz_witness().is_none()
    }

    /// Report entry for the flavor a construction requires of this algebra.
    pub fn flavor_report(&self, subject: &str, flavor: Flavor) -> ValidationReport {
        let mut r = ValidationReport::new(subject);
        match flavor {
            Flavor::Assoc => r.record(Axiom::Assoc, self.associativity_witness()),
            Flavor::Lie => {
                r.record(Axiom::LieAlt, self.alternation_witness());
                r.record(Axiom::Jacobi, self.jacobi_witness());
            }
        }
        r
    }

    pub fn has_flavor(&self, flavor: Flavor) -> bool {
        match flavor {
            Flavor::Assoc => self.is_associative(),
            Flavor::Lie => self.is_lie(),
        }
    }

    pub fn require(&self, flavor: Flavor) -> Result<()> {
        match (flavor, self.has_flavor(flavor)) {
            (_, true) => Ok(()),
            (Flavor::Assoc, false) => Err(Error::NotAssociative),
            (Flavor::Lie, false) => Err(Error::NotLie),
        }
    }

    /// The commutator algebra `A^ℒ`, `[a, a'] = aa' - a'a`.
    pub fn liefy(&self) -> Result<Algebra> {
        self.require(Flavor::Assoc)?;
        Ok(self.commutator_algebra())
    }

    /// Commutator algebra without the associativity precondition.
    pub fn commutator_algebra(&self) -> Algebra {
        Algebra::from_fn(self.space.clone(), |i, j| self.mul_basis(i, j) - self.mul_basis(j, i))
    }
}

/// Which of the two algebra categories a structure lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Assoc,
    Lie,
}

impl Flavor {
    pub fn as_str(self) -> &'static str {
        match self {
            Flavor::Assoc => "assoc",
            Flavor::Lie => "lie",
        }
    }
}

/// First basis pair with `f(bᵢ bⱼ) ≠ f(bᵢ) f(bⱼ)`.
pub fn homomorphism_witness(f: &LinMap, a: &Algebra, b: &Algebra) -> Option<Witness> {
    let d = a.dim();
    find_witness(&[d, d], |t| {
        let lhs = f.apply(a.mul_basis(t[0], t[1]));
        let rhs = b.mul(f.column(t[0]), f.column(t[1]));
        (lhs, rhs)
    })
}

pub fn is_homomorphism(f: &LinMap, a: &Algebra, b: &Algebra) -> bool {
    f.domain().same_shape(a.space()) && f.codomain().same_shape(b.space()) && homomorphism_witness(f, a, b).is_none()
}

/// `D(xy) = D(x) y + x D(y)` on basis pairs.
pub fn is_derivation(d: &LinMap, a: &Algebra) -> bool {
    let n = a.dim();
    find_witness(&[n, n], |t| {
        let lhs = d.apply(a.mul_basis(t[0], t[1]));
        let rhs = &a.mul(d.column(t[0]), &a.unit(t[1])) + &a.mul(&a.unit(t[0]), d.column(t[1]));
        (lhs, rhs)
    })
    .is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::fixture;
    use crate::linspace::Subspace;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn flavor_examples() {
        let mat2 = fixture("Mat(2)", q()).unwrap();
        let sl2 = fixture("sl2", q()).unwrap();
        let heis = fixture("Heis3", q()).unwrap();
        let ab = fixture("Ab(3)", q()).unwrap();
        assert!(mat2.is_associative());
        assert!(!sl2.is_associative());
        assert!(ab.is_associative());
        assert!(sl2.is_lie() && heis.is_lie() && ab.is_lie());
        assert!(!mat2.is_lie());
        assert_eq!(mat2.alternation_witness().unwrap().basis_tuple, vec![0, 0]);
        assert!(sl2.is_leibniz() && heis.is_leibniz() && ab.is_leibniz());
        assert!(!mat2.is_leibniz());
    }

    #[test]
    fn liefy_examples() {
        let mat2 = fixture("Mat(2)", q()).unwrap();
        let gl2 = mat2.liefy().unwrap();
        assert!(gl2.is_lie());
        // [e11, e12] = e12
        assert_eq!(gl2.mul_basis(0, 1), &mat2.unit(1));
        let ab = fixture("Ab(2)", q()).unwrap();
        assert_eq!(ab.liefy().unwrap(), ab);
        let up = fixture("Upper(2)", q()).unwrap().liefy().unwrap();
        let derived = Subspace::span(up.space(), up.mult().images().to_vec());
        assert_eq!(derived.dim(), 1);
        assert!(matches!(fixture("sl2", q()).unwrap().liefy(), Err(Error::NotAssociative)));
    }

    #[test]
    fn homomorphism_examples() {
        let mat2 = fixture("Mat(2)", q()).unwrap();
        assert!(is_homomorphism(&LinMap::identity(mat2.space()), &mat2, &mat2));
        assert!(is_homomorphism(&LinMap::zero(mat2.space(), mat2.space()), &mat2, &mat2));
        let sl2 = fixture("sl2", q()).unwrap();
        // basis (e, f, h): swap e and f, fix h
        let swap = LinMap::from_rows_i64(sl2.space(), sl2.space(), &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert!(!is_homomorphism(&swap, &sl2, &sl2));
    }

    #[test]
    fn derivation_examples() {
        let sl2 = fixture("sl2", q()).unwrap();
        let ad_h = sl2.left_mult(&sl2.unit(2));
        assert!(is_derivation(&ad_h, &sl2));
        let mat2 = fixture("Mat(2)", q()).unwrap();
        assert!(!is_derivation(&LinMap::identity(mat2.space()), &mat2));
        let ab = fixture("Ab(2)", q()).unwrap();
        let any = LinMap::from_rows_i64(ab.space(), ab.space(), &[&[3, 1], &[-2, 5]]);
        assert!(is_derivation(&any, &ab));
    }

    #[test]
    fn right_multiplications_are_derivations_of_leibniz_fixtures() {
        for name in ["sl2", "Heis3", "gl(2)", "Ab(2)"] {
            let a = fixture(name, q()).unwrap();
            assert!(a.is_leibniz());
            for i in 0..a.dim() {
                assert!(is_derivation(&a.right_mult(&a.unit(i)), &a), "{name} R(b{i})");
            }
        }
    }
}
