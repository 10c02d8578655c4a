//! Exact finite-dimensional linear algebra.
//!
//! Vectors are coordinate columns over a [`Field`]. Linear maps are stored
//! by columns (column `j` is the image of the `j`-th domain basis vector),
//! bilinear maps by the images of basis pairs. Subspaces are kept in reduced
//! row echelon form so that equal subspaces compare equal.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::report::Witness;

/// A coordinate vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector(pub Vec<Scalar>);

impl Vector {
    pub fn zero(field: Field, dim: usize) -> Vector {
        Vector(vec![field.zero(); dim])
    }

    /// The `i`-th standard basis vector of `field^dim`.
    pub fn unit(field: Field, dim: usize, i: usize) -> Vector {
        let mut v = Vector::zero(field, dim);
        v.0[i] = field.one();
        v
    }

    pub fn from_i64(field: Field, entries: &[i64]) -> Vector {
        Vector(entries.iter().map(|&n| field.from_i64(n)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector(self.0.iter().map(|x| x * c).collect())
    }

    /// `self + c * other`, in place.
    pub fn add_scaled(&mut self, c: &Scalar, other: &Vector) {
        debug_assert_eq!(self.dim(), other.dim());
        if c.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            if !b.is_zero() {
                *a += &(c * b);
            }
        }
    }

    /// Coordinates of `self ⊕ other`.
    pub fn concat(&self, other: &Vector) -> Vector {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Vector(v)
    }

    pub fn slice(&self, start: usize, len: usize) -> Vector {
        Vector(self.0[start..start + len].to_vec())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(Scalar::to_string).collect()
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl Add for Vector {
    type Output = Vector;
    fn add(self, rhs: Vector) -> Vector {
        &self + &rhs
    }
}

impl Sub for Vector {
    type Output = Vector;
    fn sub(self, rhs: Vector) -> Vector {
        &self - &rhs
    }
}

/// A based vector space `field^dim` with named basis vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Space {
    field: Field,
    labels: Vec<String>,
}

impl Space {
    pub fn new(field: Field, labels: Vec<String>) -> Result<Space> {
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(Space { field, labels })
    }

    /// A space with labels `prefix0, prefix1, ...`.
    pub fn numbered(field: Field, dim: usize, prefix: &str) -> Space {
        Space { field, labels: (0..dim).map(|i| format!("{prefix}{i}")).collect() }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn zero(&self) -> Vector {
        Vector::zero(self.field, self.dim())
    }

    pub fn unit(&self, i: usize) -> Vector {
        Vector::unit(self.field, self.dim(), i)
    }

    pub fn basis(&self) -> impl Iterator<Item = Vector> + '_ {
        (0..self.dim()).map(move |i| self.unit(i))
    }

    /// `self ⊕ other` with the two label sets prefixed to stay distinct.
    pub fn direct_sum(&self, other: &Space, left: &str, right: &str) -> Space {
        let labels = self
            .labels
            .iter()
            .map(|l| format!("{left}{l}"))
            .chain(other.labels.iter().map(|l| format!("{right}{l}")))
            .collect();
        Space::new(self.field, dedup_labels(labels)).expect("labels deduplicated")
    }

    /// Same field and dimension; labels are presentation only.
    pub fn same_shape(&self, other: &Space) -> bool {
        self.field == other.field && self.dim() == other.dim()
    }

    pub fn check_shape(&self, other: &Space, what: &str) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { expected: self.field, found: other.field });
        }
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{what}: expected dimension {}, found {}",
                self.dim(),
                other.dim()
            )));
        }
        Ok(())
    }
}

/// Makes a label list unique by suffixing repeats with `_2`, `_3`, ...
pub fn dedup_labels(labels: Vec<String>) -> Vec<String> {
    let mut seen = std::collections::HashSet::new();
    labels
        .into_iter()
        .map(|l| {
            if seen.insert(l.clone()) {
                return l;
            }
            let mut k = 2;
            loop {
                let cand = format!("{l}_{k}");
                if seen.insert(cand.clone()) {
                    return cand;
                }
                k += 1;
            }
        })
        .collect()
}

/// A linear map between based spaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinMap {
    domain: Space,
    codomain: Space,
    columns: Vec<Vector>,
}

impl LinMap {
    pub fn from_columns(domain: Space, codomain: Space, columns: Vec<Vector>) -> Result<LinMap> {
        if domain.field() != codomain.field() {
            return Err(Error::FieldMismatch { expected: domain.field(), found: codomain.field() });
        }
        if columns.len() != domain.dim() {
            return Err(Error::DimensionMismatch(format!(
                "linear map has {} columns for a {}-dimensional domain",
                columns.len(),
                domain.dim()
            )));
        }
        for c in &columns {
            check_vector(&codomain, c)?;
        }
        Ok(LinMap { domain, codomain, columns })
    }

    pub fn from_fn(domain: &Space, codomain: &Space, f: impl Fn(usize) -> Vector) -> LinMap {
        let columns = (0..domain.dim()).map(f).collect();
        LinMap::from_columns(domain.clone(), codomain.clone(), columns).expect("well-formed columns")
    }

    /// Build from a row-major integer grid of shape `codomain × domain`.
    pub fn from_rows_i64(domain: &Space, codomain: &Space, rows: &[&[i64]]) -> LinMap {
        assert_eq!(rows.len(), codomain.dim());
        let f = domain.field();
        LinMap::from_fn(domain, codomain, |j| Vector(rows.iter().map(|r| f.from_i64(r[j])).collect()))
    }

    pub fn identity(space: &Space) -> LinMap {
        LinMap::from_fn(space, space, |j| space.unit(j))
    }

    pub fn zero(domain: &Space, codomain: &Space) -> LinMap {
        LinMap::from_fn(domain, codomain, |_| codomain.zero())
    }

    pub fn domain(&self) -> &Space {
        &self.domain
    }

    pub fn codomain(&self) -> &Space {
        &self.codomain
    }

    pub fn field(&self) -> Field {
        self.domain.field()
    }

    pub fn column(&self, j: usize) -> &Vector {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[Vector] {
        &self.columns
    }

    pub fn entry(&self, row: usize, col: usize) -> &Scalar {
        &self.columns[col].0[row]
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(v.dim(), self.domain.dim(), "linear map applied to wrong dimension");
        let mut out = self.codomain.zero();
        for (c, col) in v.0.iter().zip(&self.columns) {
            out.add_scaled(c, col);
        }
        out
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &LinMap) -> Result<LinMap> {
        first.codomain.check_shape(&self.domain, "composition")?;
        let columns = first.columns.iter().map(|c| self.apply(c)).collect();
        LinMap::from_columns(first.domain.clone(), self.codomain.clone(), columns)
    }

    pub fn add(&self, other: &LinMap) -> LinMap {
        assert!(self.domain.same_shape(&other.domain) && self.codomain.same_shape(&other.codomain));
        LinMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            columns: self.columns.iter().zip(&other.columns).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> LinMap {
        LinMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            columns: self.columns.iter().map(|v| v.scale(c)).collect(),
        }
    }

    pub fn with_spaces(&self, domain: Space, codomain: Space) -> Result<LinMap> {
        LinMap::from_columns(domain, codomain, self.columns.clone())
    }

    /// Rows of the matrix, used for elimination.
    fn rows(&self) -> Vec<Vector> {
        (0..self.codomain.dim()).map(|r| Vector(self.columns.iter().map(|c| c.0[r].clone()).collect())).collect()
    }

    pub fn rank(&self) -> usize {
        row_reduce(self.rows(), self.domain.dim()).1.len()
    }

    pub fn image(&self) -> Subspace {
        Subspace::span(&self.codomain, self.columns.clone())
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.domain.dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.domain.dim() == self.codomain.dim() && self.is_injective()
    }

    /// Two-sided inverse of an isomorphism.
    pub fn inverse(&self) -> Option<LinMap> {
        if !self.is_isomorphism() {
            return None;
        }
        let n = self.domain.dim();
        let f = self.field();
        // Row reduce [A | I].
        let rows: Vec<Vector> =
            self.rows().into_iter().enumerate().map(|(r, row)| row.concat(&Vector::unit(f, n, r))).collect();
        let (reduced, pivots) = row_reduce(rows, n);
        debug_assert_eq!(pivots, (0..n).collect::<Vec<_>>());
        // Row r of the right block is row r of A⁻¹.
        let inv_rows: Vec<Vector> = reduced.iter().map(|r| r.slice(n, n)).collect();
        Some(LinMap::from_fn(&self.codomain, &self.domain, |j| {
            Vector(inv_rows.iter().map(|r| r.0[j].clone()).collect())
        }))
    }
}

fn check_vector(space: &Space, v: &Vector) -> Result<()> {
    if v.dim() != space.dim() {
        return Err(Error::DimensionMismatch(format!(
            "vector of dimension {} in a {}-dimensional space",
            v.dim(),
            space.dim()
        )));
    }
    if let Some(bad) = v.0.iter().find(|s| s.field() != space.field()) {
        return Err(Error::FieldMismatch { expected: space.field(), found: bad.field() });
    }
    Ok(())
}

/// A bilinear map `left × right → codomain`, stored by basis-pair images:
/// `(bᵢ, bⱼ) ↦ Σ_k c[k][i][j] c_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilMap {
    left: Space,
    right: Space,
    codomain: Space,
    images: Vec<Vector>,
}

impl BilMap {
    pub fn from_images(left: Space, right: Space, codomain: Space, images: Vec<Vector>) -> Result<BilMap> {
        for s in [&right, &codomain] {
            if s.field() != left.field() {
                return Err(Error::FieldMismatch { expected: left.field(), found: s.field() });
            }
        }
        if images.len() != left.dim() * right.dim() {
            return Err(Error::DimensionMismatch(format!(
                "bilinear map needs {} basis-pair images, got {}",
                left.dim() * right.dim(),
                images.len()
            )));
        }
        for v in &images {
            check_vector(&codomain, v)?;
        }
        Ok(BilMap { left, right, codomain, images })
    }

    pub fn from_fn(left: &Space, right: &Space, codomain: &Space, f: impl Fn(usize, usize) -> Vector) -> BilMap {
        let mut images = Vec::with_capacity(left.dim() * right.dim());
        for i in 0..left.dim() {
            for j in 0..right.dim() {
                images.push(f(i, j));
            }
        }
        BilMap::from_images(left.clone(), right.clone(), codomain.clone(), images).expect("well-formed images")
    }

    /// Bilinear extension of a map on arbitrary vectors evaluated on basis pairs.
    pub fn from_vector_fn(
        left: &Space,
        right: &Space,
        codomain: &Space,
        f: impl Fn(&Vector, &Vector) -> Vector,
    ) -> BilMap {
        BilMap::from_fn(left, right, codomain, |i, j| f(&left.unit(i), &right.unit(j)))
    }

    pub fn zero(left: &Space, right: &Space, codomain: &Space) -> BilMap {
        BilMap::from_fn(left, right, codomain, |_, _| codomain.zero())
    }

    pub fn left(&self) -> &Space {
        &self.left
    }

    pub fn right(&self) -> &Space {
        &self.right
    }

    pub fn codomain(&self) -> &Space {
        &self.codomain
    }

    pub fn field(&self) -> Field {
        self.left.field()
    }

    /// Image of the basis pair `(bᵢ, bⱼ)`.
    pub fn image(&self, i: usize, j: usize) -> &Vector {
        &self.images[i * self.right.dim() + j]
    }

    pub fn images(&self) -> &[Vector] {
        &self.images
    }

    /// Structure constant `c[k][i][j]`.
    pub fn coeff(&self, k: usize, i: usize, j: usize) -> &Scalar {
        &self.image(i, j).0[k]
    }

    pub fn apply(&self, x: &Vector, y: &Vector) -> Vector {
        assert_eq!(x.dim(), self.left.dim(), "left argument has wrong dimension");
        assert_eq!(y.dim(), self.right.dim(), "right argument has wrong dimension");
        let mut out = self.codomain.zero();
        for (i, xi) in x.0.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.0.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                out.add_scaled(&(xi * yj), self.image(i, j));
            }
        }
        out
    }

    /// `(x, y) ↦ self(y, x)`.
    pub fn transpose(&self) -> BilMap {
        BilMap::from_fn(&self.right, &self.left, &self.codomain, |i, j| self.image(j, i).clone())
    }

    pub fn add(&self, other: &BilMap) -> BilMap {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &BilMap) -> BilMap {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &Scalar) -> BilMap {
        BilMap::from_fn(&self.left, &self.right, &self.codomain, |i, j| self.image(i, j).scale(c))
    }

    fn zip(&self, other: &BilMap, f: impl Fn(&Vector, &Vector) -> Vector) -> BilMap {
        assert!(
            self.left.same_shape(&other.left)
                && self.right.same_shape(&other.right)
                && self.codomain.same_shape(&other.codomain),
            "bilinear maps of different shape"
        );
        BilMap::from_fn(&self.left, &self.right, &self.codomain, |i, j| f(self.image(i, j), other.image(i, j)))
    }

    /// Post-compose with a linear map on the codomain.
    pub fn then(&self, g: &LinMap) -> BilMap {
        BilMap::from_fn(&self.left, &self.right, g.codomain(), |i, j| g.apply(self.image(i, j)))
    }

    pub fn with_spaces(&self, left: Space, right: Space, codomain: Space) -> Result<BilMap> {
        BilMap::from_images(left, right, codomain, self.images.clone())
    }
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn row_reduce(mut rows: Vec<Vector>, width: usize) -> (Vec<Vector>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i].0[col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r].0[col].inverse().expect("nonzero pivot");
        rows[r] = rows[r].scale(&inv);
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row.0[col].is_zero() {
                let c = -&row.0[col];
                row.add_scaled(&c, &pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// A subspace, represented by its unique reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: Space,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient: &Space, vectors: Vec<Vector>) -> Subspace {
        for v in &vectors {
            check_vector(ambient, v).expect("spanning vector lives in the ambient space");
        }
        let (basis, pivots) = row_reduce(vectors, ambient.dim());
        Subspace { ambient: ambient.clone(), basis, pivots }
    }

    pub fn zero(ambient: &Space) -> Subspace {
        Subspace::span(ambient, Vec::new())
    }

    pub fn full(ambient: &Space) -> Subspace {
        Subspace::span(ambient, ambient.basis().collect())
    }

    pub fn ambient(&self) -> &Space {
        &self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `v` minus its component along the canonical basis; zero iff `v` lies in the span.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut w = v.clone();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = -&w.0[p];
            w.add_scaled(&c, b);
        }
        w
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &Vector) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(Vector(self.pivots.iter().map(|&p| v.0[p].clone()).collect()))
    }

    /// The inclusion of the subspace, with the given basis labels.
    pub fn inclusion(&self, space: &Space) -> LinMap {
        assert_eq!(space.dim(), self.dim());
        LinMap::from_fn(space, &self.ambient, |j| self.basis[j].clone())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }
}

/// `{v : f(v) = 0}` in canonical form.
pub fn kernel(f: &LinMap) -> Subspace {
    let n = f.domain().dim();
    let (rows, pivots) = row_reduce(f.rows(), n);
    let field = f.field();
    let mut vectors = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = Vector::unit(field, n, free);
        for (row, &p) in rows.iter().zip(&pivots) {
            v.0[p] = -&row.0[free];
        }
        vectors.push(v);
    }
    Subspace::span(f.domain(), vectors)
}

/// A quotient space together with the projection onto it and a linear section.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub space: Space,
    pub projection: LinMap,
    pub section: LinMap,
}

/// `ambient / r`. Quotient coordinates are the non-pivot coordinates of the
/// canonical reduction modulo `r`.
pub fn quotient(ambient: &Space, r: &Subspace, labels: Option<Vec<String>>) -> Result<Quotient> {
    ambient.check_shape(r.ambient(), "quotient")?;
    let free: Vec<usize> = (0..ambient.dim()).filter(|c| !r.pivots.contains(c)).collect();
    let labels = labels.unwrap_or_else(|| free.iter().map(|&c| ambient.labels()[c].clone()).collect());
    let space = Space::new(ambient.field(), labels)?;
    if space.dim() != free.len() {
        return Err(Error::DimensionMismatch("quotient label count".into()));
    }
    let projection = LinMap::from_fn(ambient, &space, |j| {
        let red = r.reduce(&ambient.unit(j));
        Vector(free.iter().map(|&c| red.0[c].clone()).collect())
    });
    let section = LinMap::from_fn(&space, ambient, |q| ambient.unit(free[q]));
    Ok(Quotient { space, projection, section })
}

/// `{(x, y) : t(x) = s(y)}` inside `domain(t) ⊕ domain(s)`.
pub fn pullback_space(t: &LinMap, s: &LinMap) -> Result<Subspace> {
    t.codomain().check_shape(s.codomain(), "pullback")?;
    let sum = t.domain().direct_sum(s.domain(), "x_", "y_");
    let dt = t.domain().dim();
    let diff = LinMap::from_fn(&sum, t.codomain(), |j| if j < dt { t.column(j).clone() } else { -s.column(j - dt) });
    Ok(kernel(&diff))
}

pub fn in_subspace(v: &Vector, r: &Subspace) -> bool {
    r.contains(v)
}

/// `None` if `f` is invertible. Otherwise a kernel vector against zero, or
/// the two dimensions when `f` is injective but not onto.
pub fn find_iso_witness(f: &LinMap) -> Option<Witness> {
    if f.is_isomorphism() {
        return None;
    }
    let k = kernel(f);
    if let Some(v) = k.basis().first() {
        return Some(Witness { basis_tuple: Vec::new(), lhs: v.to_strings(), rhs: f.domain().zero().to_strings() });
    }
    Some(Witness {
        basis_tuple: Vec::new(),
        lhs: vec![f.domain().dim().to_string()],
        rhs: vec![f.codomain().dim().to_string()],
    })
}
