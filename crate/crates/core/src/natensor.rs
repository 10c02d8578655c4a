//! The non-abelian tensor square `M ⊗ M` of a Lie algebra acting on itself
//! by the adjoint action.
//!
//! Brackets of pure tensors are pure tensors (`[m₁⊗m₂, m₃⊗m₄] = [m₁,m₂]⊗[m₃,m₄]`),
//! so the Lie algebra generated by the symbols is spanned by them and can be
//! built as a quotient of the plain tensor space `M ⊗_K M` by the two
//! families of relations
//!
//! ```text
//! [m₁,m₂]⊗m₃ - m₁⊗[m₂,m₃] + m₂⊗[m₁,m₃]
//! m₁⊗[m₂,m₃] - [m₃,m₁]⊗m₂ + [m₂,m₁]⊗m₃
//! ```

use crate::action::LieAction;
use crate::algebra::{Algebra, Flavor};
use crate::braid::XBraidingLie;
use crate::error::{Error, Result};
use crate::linspace::{dedup_labels, quotient, BilMap, LinMap, Quotient, Space, Subspace, Vector};
use crate::report::{Axiom, ValidationReport};
use crate::xmod::XModLie;

#[derive(Clone, Debug)]
pub struct TensorSquare {
    base: Algebra,
    tensor: Space,
    relations: Subspace,
    quotient: Quotient,
    carrier: Algebra,
    pure: BilMap,
}

impl TensorSquare {
    pub fn base(&self) -> &Algebra {
        &self.base
    }

    /// `M ⊗_K M`, basis `mᵢ ⊗ mⱼ` at index `i·dim M + j`.
    pub fn tensor_space(&self) -> &Space {
        &self.tensor
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// The quotient Lie algebra `T`.
    pub fn carrier(&self) -> &Algebra {
        &self.carrier
    }

    /// `(m, m') ↦ class of m ⊗ m'`.
    pub fn pure(&self) -> &BilMap {
        &self.pure
    }

    pub fn projection(&self) -> &LinMap {
        &self.quotient.projection
    }

    pub fn section(&self) -> &LinMap {
        &self.quotient.section
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    /// Coordinates of `x ⊗ y` in `M ⊗_K M`.
    pub fn tensor(&self, x: &Vector, y: &Vector) -> Vector {
        tensor(x, y)
    }

    /// Class of `x ⊗ y` in `T`.
    pub fn class(&self, x: &Vector, y: &Vector) -> Vector {
        self.quotient.projection.apply(&tensor(x, y))
    }
}

fn tensor(x: &Vector, y: &Vector) -> Vector {
    let mut out = Vec::with_capacity(x.dim() * y.dim());
    for a in &x.0 {
        for b in &y.0 {
            out.push(a * b);
        }
    }
    Vector(out)
}

/// `x ⊗ y ↦ [x, y]` on the plain tensor space.
fn contraction(m: &Algebra, tensor: &Space) -> LinMap {
    let d = m.dim();
    LinMap::from_fn(tensor, m.space(), |k| m.mul_basis(k / d, k % d).clone())
}

/// `x ⊗ y ↦ [a, x] ⊗ y + x ⊗ [a, y]` on the plain tensor space.
fn derivation(m: &Algebra, tensor_space: &Space, a: &Vector) -> LinMap {
    let d = m.dim();
    LinMap::from_fn(tensor_space, tensor_space, |k| {
        let (x, y) = (m.unit(k / d), m.unit(k % d));
        &tensor(&m.mul(a, &x), &y) + &tensor(&x, &m.mul(a, &y))
    })
}

fn tensor_space_of(m: &Algebra) -> Result<Space> {
    let d = m.dim();
    let labels = m.space().labels();
    let names = (0..d * d).map(|k| format!("{}_{}", labels[k / d], labels[k % d])).collect();
    Space::new(m.field(), dedup_labels(names))
}

pub fn tensor_square(m: &Algebra) -> Result<TensorSquare> {
    m.require(Flavor::Lie)?;
    let d = m.dim();
    let tensor_space = tensor_space_of(m)?;
    let br = |i: usize, j: usize| m.mul_basis(i, j);
    let u = |i: usize| m.unit(i);
    let mut rels = Vec::with_capacity(2 * d * d * d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let r1 = &(&tensor(br(i, j), &u(k)) - &tensor(&u(i), br(j, k))) + &tensor(&u(j), br(i, k));
                let r2 = &(&tensor(&u(i), br(j, k)) - &tensor(br(k, i), &u(j))) + &tensor(br(j, i), &u(k));
                rels.push(r1);
                rels.push(r2);
            }
        }
    }
    let relations = Subspace::span(&tensor_space, rels);
    let contract = contraction(m, &tensor_space);
    if relations.basis().iter().any(|r| !contract.apply(r).is_zero()) {
        return Err(Error::BracketNotWellDefined);
    }
    let q = quotient(&tensor_space, &relations, None)?;
    // [u, v] = π(∂̃σu ⊗ ∂̃σv)
    let lift: Vec<Vector> = (0..q.space.dim()).map(|i| contract.apply(q.section.column(i))).collect();
    let carrier = Algebra::from_fn(q.space.clone(), |i, j| q.projection.apply(&tensor(&lift[i], &lift[j])));
    if !carrier.is_lie() {
        return Err(Error::NotLie);
    }
    TensorSquare::from_parts(m.clone(), relations, carrier)
}

impl TensorSquare {
    /// `M ⊗_K M` modulo `relations`, with `carrier` as the bracket on the
    /// quotient. Only shapes are checked; [`antisymmetry_consequence`] and
    /// [`pure_bracket_report`] test the rest.
    pub fn from_parts(base: Algebra, relations: Subspace, carrier: Algebra) -> Result<TensorSquare> {
        let d = base.dim();
        let tensor_space = tensor_space_of(&base)?;
        let q = quotient(&tensor_space, &relations, None)?;
        q.space.check_shape(carrier.space(), "tensor carrier")?;
        let carrier = carrier.relabel(q.space.clone())?;
        let pure = BilMap::from_fn(base.space(), base.space(), &q.space, |i, j| q.projection.column(i * d + j).clone());
        Ok(TensorSquare { base, tensor: tensor_space, relations, quotient: q, carrier, pure })
    }
}

/// `(T, M, m·(m₁⊗m₂) = [m,m₁]⊗m₂ + m₁⊗[m,m₂], ∂(m₁⊗m₂) = [m₁,m₂])`.
pub fn tensor_xmod(ts: &TensorSquare) -> Result<XModLie> {
    let m = &ts.base;
    let contract = contraction(m, &ts.tensor);
    if ts.relations.basis().iter().any(|r| !contract.apply(r).is_zero()) {
        return Err(Error::IllDefinedOnQuotient("boundary"));
    }
    let t = ts.carrier.space();
    let mut images = Vec::with_capacity(m.dim() * t.dim());
    for a in 0..m.dim() {
        let der = derivation(m, &ts.tensor, &m.unit(a));
        if ts.relations.basis().iter().any(|r| !ts.relations.contains(&der.apply(r))) {
            return Err(Error::IllDefinedOnQuotient("action"));
        }
        for j in 0..t.dim() {
            images.push(ts.quotient.projection.apply(&der.apply(ts.quotient.section.column(j))));
        }
    }
    let dot = BilMap::from_images(m.space().clone(), t.clone(), t.clone(), images)?;
    let boundary = contract.compose(&ts.quotient.section)?;
    let action = LieAction::from_parts(m.clone(), ts.carrier.clone(), dot)?;
    XModLie::from_parts(action, boundary)
}

/// `{m₁, m₂} = m₁ ⊗ m₂`, validated.
pub fn tensor_braiding(ts: &TensorSquare) -> Result<XBraidingLie> {
    XBraidingLie::new(tensor_xmod(ts)?, ts.pure.clone())
}

/// `m₁⊗[m₂,m₃] + [m₂,m₃]⊗m₁ = 0` in `T`, on basis triples.
pub fn antisymmetry_consequence(ts: &TensorSquare) -> ValidationReport {
    let m = &ts.base;
    let d = m.dim();
    let mut r = ValidationReport::new("tensor");
    r.check(Axiom::RTLie3, &[d, d, d], |t| {
        let (x, yz) = (m.unit(t[0]), m.mul_basis(t[1], t[2]));
        (&ts.class(&x, yz) + &ts.class(yz, &x), ts.carrier.zero())
    });
    r
}

/// `[m₁⊗m₂, m₃⊗m₄] = [m₁,m₂]⊗[m₃,m₄]` in `T`, on basis quadruples.
pub fn pure_bracket_report(ts: &TensorSquare) -> ValidationReport {
    let m = &ts.base;
    let d = m.dim();
    let mut r = ValidationReport::new("tensor");
    r.check(Axiom::RTLie4, &[d, d, d, d], |t| {
        let lhs = ts.carrier.mul(ts.pure.image(t[0], t[1]), ts.pure.image(t[2], t[3]));
        (lhs, ts.class(m.mul_basis(t[0], t[1]), m.mul_basis(t[2], t[3])))
    });
    r
}

/// `[xᵢ, xⱼ]` in the basis `xᵢ = Σ_k p[k][i] e_k`, for invertible `p`.
pub fn change_basis(m: &Algebra, p: &LinMap) -> Result<Algebra> {
    let inv = p.inverse().ok_or_else(|| Error::DimensionMismatch("change of basis must be invertible".into()))?;
    m.space().check_shape(p.domain(), "change of basis")?;
    Ok(Algebra::from_fn(m.space().clone(), |i, j| inv.apply(&m.mul(p.column(i), p.column(j)))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::validate_braiding_xmod_lie;
    use crate::catalog::fixture;
    use crate::field::Field;
    use crate::xmod::validate_xmod_lie;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn abelian_tensor_square_is_the_full_tensor_space() {
        for n in 0..4 {
            let ts = tensor_square(&fixture(&format!("Ab({n})"), q()).unwrap()).unwrap();
            assert_eq!(ts.dim(), n * n);
            assert_eq!(ts.relations().dim(), 0);
            assert!(ts.carrier().mult().images().iter().all(Vector::is_zero));
            assert!(tensor_braiding(&ts).is_ok());
        }
    }

    #[test]
    fn sl2_and_heis3() {
        for name in ["sl2", "Heis3"] {
            let m = fixture(name, q()).unwrap();
            let ts = tensor_square(&m).unwrap();
            let x = tensor_xmod(&ts).unwrap();
            assert!(validate_xmod_lie(&x).passed(), "{name}");
            let b = tensor_braiding(&ts).unwrap();
            assert!(validate_braiding_xmod_lie(&b).passed(), "{name}");
            assert!(antisymmetry_consequence(&ts).passed(), "{name}");
            assert!(pure_bracket_report(&ts).passed(), "{name}");
            // ∂(m ⊗ m') = [m, m']
            for i in 0..3 {
                for j in 0..3 {
                    assert_eq!(&x.boundary().apply(ts.pure().image(i, j)), m.mul_basis(i, j));
                }
            }
        }
        let sl2 = tensor_square(&fixture("sl2", q()).unwrap()).unwrap();
        let x = tensor_xmod(&sl2).unwrap();
        // ∂(e ⊗ f) = h
        assert_eq!(x.boundary().apply(sl2.pure().image(0, 1)), Vector::from_i64(q(), &[0, 0, 1]));
    }

    #[test]
    fn action_agrees_with_the_contracted_form() {
        for name in ["sl2", "Heis3", "gl(2)"] {
            let m = fixture(name, q()).unwrap();
            let ts = tensor_square(&m).unwrap();
            let x = tensor_xmod(&ts).unwrap();
            let d = m.dim();
            for a in 0..d {
                for i in 0..d {
                    for j in 0..d {
                        // m·(m₁⊗m₂) = m ⊗ [m₁,m₂]
                        let lhs = x.action().act(&m.unit(a), ts.pure().image(i, j));
                        assert_eq!(lhs, ts.class(&m.unit(a), m.mul_basis(i, j)), "{name}");
                    }
                }
            }
        }
    }

    #[test]
    fn dimension_is_basis_independent() {
        let sl2 = fixture("sl2", q()).unwrap();
        let p = LinMap::from_rows_i64(sl2.space(), sl2.space(), &[&[1, 2, 0], &[0, 1, -1], &[3, 0, 1]]);
        let other = change_basis(&sl2, &p).unwrap();
        assert_ne!(other, sl2);
        assert!(other.is_lie());
        assert_eq!(tensor_square(&other).unwrap().dim(), tensor_square(&sl2).unwrap().dim());
    }

    #[test]
    fn rejects_non_lie_input() {
        assert!(matches!(tensor_square(&fixture("Mat(2)", q()).unwrap()), Err(Error::NotLie)));
    }
}
