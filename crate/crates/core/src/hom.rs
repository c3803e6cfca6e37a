//! Hom-algebras and hom-Lie algebras: data model and axiom checkers.
//!
//! All checks are on basis elements; bilinearity makes that complete.
//! Every checker returns the first failing witness in lexicographic order.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::scalar::{Field, Rational};
use crate::tensor::Tensor3;
use crate::verdict::{compare, Axiom, Verdict, Violation};

/// A product `·` on `V` together with a twist `φ`.
///
/// The morphism property `φ(u·v) = φ(u)·φ(v)` is not assumed; use
/// [`HomAlgebra::check_morphism`].
#[derive(Clone, Debug, PartialEq)]
pub struct HomAlgebra<F: Field = Rational> {
    pub product: Tensor3<F>,
    pub twist: Matrix<F>,
}

impl<F: Field> HomAlgebra<F> {
    pub fn new(product: Tensor3<F>, twist: Matrix<F>) -> Result<Self> {
        check_dims(&product, &twist)?;
        Ok(HomAlgebra { product, twist })
    }

    pub fn dim(&self) -> usize {
        self.product.dim()
    }

    pub fn check_morphism(&self) -> Verdict<F> {
        check_morphism(&self.product, &self.twist).expect("dimensions validated at construction")
    }

    pub fn commutator(&self) -> Tensor3<F> {
        commutator_bracket(&self.product)
    }

    pub fn check_hom_left_symmetric(&self) -> Verdict<F> {
        check_hom_left_symmetric(&self.product, &self.twist)
    }
}

/// An antisymmetric bracket with a twist map.
#[derive(Clone, Debug, PartialEq)]
pub struct HomLieAlgebra<F: Field = Rational> {
    pub bracket: Tensor3<F>,
    pub twist: Matrix<F>,
}

impl<F: Field> HomLieAlgebra<F> {
    /// Validates dimensions and antisymmetry; the morphism property and
    /// hom-Jacobi are reported by [`HomLieAlgebra::verify`].
    pub fn new(bracket: Tensor3<F>, twist: Matrix<F>) -> Result<Self> {
        check_dims(&bracket, &twist)?;
        if !bracket.is_antisymmetric() {
            return Err(Error::NotAntisymmetricBracket);
        }
        Ok(HomLieAlgebra { bracket, twist })
    }

    pub fn dim(&self) -> usize {
        self.bracket.dim()
    }

    pub fn bracket(&self, u: &Vector<F>, v: &Vector<F>) -> Vector<F> {
        self.bracket.apply(u, v)
    }

    pub fn is_regular(&self) -> bool {
        !self.twist.determinant().expect("square twist").is_zero()
    }

    pub fn is_involutive(&self) -> bool {
        is_involutive(&self.twist)
    }

    /// Morphism property followed by the hom-Jacobi identity.
    pub fn verify(&self) -> Verdict<F> {
        check_morphism(&self.bracket, &self.twist)
            .expect("dimensions validated at construction")
            .and_then(|| check_hom_jacobi(&self.bracket, &self.twist))
    }
}

pub(crate) fn check_dims<F: Field>(t: &Tensor3<F>, twist: &Matrix<F>) -> Result<()> {
    if !twist.is_square() {
        return Err(Error::NonSquare {
            rows: twist.rows(),
            cols: twist.cols(),
        });
    }
    if twist.rows() != t.dim() {
        return Err(Error::DimensionMismatch {
            expected: t.dim(),
            found: twist.rows(),
        });
    }
    Ok(())
}

pub fn is_involutive<F: Field>(twist: &Matrix<F>) -> bool {
    twist.is_square() && &(twist * twist) == &Matrix::identity(twist.rows())
}

/// `[u, v] = u·v − v·u`.
pub fn commutator_bracket<F: Field>(product: &Tensor3<F>) -> Tensor3<F> {
    product - &product.opposite()
}

/// Entrywise antisymmetry `c[k][i][j] = −c[k][j][i]`.
pub fn check_antisymmetry<F: Field>(c: &Tensor3<F>) -> Verdict<F> {
    let n = c.dim();
    for i in 0..n {
        for j in i..n {
            let lhs = c.on_basis(i, j);
            let rhs = -c.on_basis(j, i);
            if let Some(v) = compare(Axiom::Antisymmetry, &[i, j], lhs, rhs) {
                return Verdict::Fails(v);
            }
        }
    }
    Verdict::Holds
}

/// `φ(e_i ∘ e_j) = φ(e_i) ∘ φ(e_j)` for all pairs.
pub fn check_morphism<F: Field>(t: &Tensor3<F>, twist: &Matrix<F>) -> Result<Verdict<F>> {
    check_dims(t, twist)?;
    let n = t.dim();
    let images: Vec<Vector<F>> = (0..n).map(|i| twist.column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = twist.mul_vec(&t.on_basis(i, j));
            let rhs = t.apply(&images[i], &images[j]);
            if let Some(v) = compare(Axiom::Morphism, &[i, j], lhs, rhs) {
                return Ok(Verdict::Fails(v));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// The cyclic sum `[φu,[v,w]] + [φv,[w,u]] + [φw,[u,v]]` at basis vectors
/// (0-based indices). With `φ = Id` this is the ordinary Jacobiator.
pub fn jacobi_defect<F: Field>(c: &Tensor3<F>, twist: &Matrix<F>, i: usize, j: usize, k: usize) -> Vector<F> {
    let term = |a: usize, b: usize, d: usize| c.apply(&twist.column(a), &c.on_basis(b, d));
    &(&term(i, j, k) + &term(j, k, i)) + &term(k, i, j)
}

fn jacobi_like<F: Field>(c: &Tensor3<F>, twist: &Matrix<F>, kind: Axiom) -> Verdict<F> {
    let n = c.dim();
    // For an antisymmetric bracket the cyclic sum is alternating, so strictly
    // increasing triples suffice.
    let alternating = c.is_antisymmetric();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if alternating && !(i < j && j < k) {
                    continue;
                }
                let s = jacobi_defect(c, twist, i, j, k);
                if !s.is_zero() {
                    return Verdict::Fails(Violation::at(kind, &[i, j, k], s, Vector::zeros(n)));
                }
            }
        }
    }
    Verdict::Holds
}

/// Hom-Jacobi identity `↻ [φ(e_i), [e_j, e_k]] = 0`.
pub fn check_hom_jacobi<F: Field>(c: &Tensor3<F>, twist: &Matrix<F>) -> Verdict<F> {
    jacobi_like(c, twist, Axiom::HomJacobi)
}

/// Ordinary Jacobi identity (the hom-Jacobi identity with `φ = Id`).
pub fn check_jacobi<F: Field>(c: &Tensor3<F>) -> Verdict<F> {
    jacobi_like(c, &Matrix::identity(c.dim()), Axiom::Jacobi)
}

/// `ass_φ(u,v,w) = (u·v)·φ(w) − φ(u)·(v·w)` at basis vectors.
pub fn hom_associator<F: Field>(p: &Tensor3<F>, twist: &Matrix<F>, i: usize, j: usize, k: usize) -> Vector<F> {
    let n = p.dim();
    let left = p.apply(&p.on_basis(i, j), &twist.column(k));
    let right = p.apply(&twist.column(i), &p.apply(&Vector::basis(n, j), &Vector::basis(n, k)));
    &left - &right
}

/// `ass_φ(e_i,e_j,e_k) = ass_φ(e_j,e_i,e_k)` for all triples.
pub fn check_hom_left_symmetric<F: Field>(p: &Tensor3<F>, twist: &Matrix<F>) -> Verdict<F> {
    let n = p.dim();
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let lhs = hom_associator(p, twist, i, j, k);
                let rhs = hom_associator(p, twist, j, i, k);
                if let Some(v) = compare(Axiom::HomLeftSymmetry, &[i, j, k], lhs, rhs) {
                    return Verdict::Fails(v);
                }
            }
        }
    }
    Verdict::Holds
}

/// `K(u,v)w = φ(u)·(v·w) − φ(v)·(u·w) − [u,v]·φ(w)` with `[·,·]` the
/// commutator of the product.
pub fn tensor_curvature<F: Field>(
    p: &Tensor3<F>,
    twist: &Matrix<F>,
    u: &Vector<F>,
    v: &Vector<F>,
    w: &Vector<F>,
) -> Vector<F> {
    let a = p.apply(&twist.mul_vec(u), &p.apply(v, w));
    let b = p.apply(&twist.mul_vec(v), &p.apply(u, w));
    let uv = &p.apply(u, v) - &p.apply(v, u);
    let c = p.apply(&uv, &twist.mul_vec(w));
    &(&a - &b) - &c
}

/// `↻ [φ(u),[v,w]] = ↻ K(u,v)w` on all basis triples.
///
/// This holds for every bilinear product and every linear `φ`; a failure
/// means an evaluation bug, so it doubles as a self-test.
pub fn check_hom_bianchi<F: Field>(p: &Tensor3<F>, twist: &Matrix<F>) -> Verdict<F> {
    let n = p.dim();
    let bracket = commutator_bracket(p);
    let e: Vec<Vector<F>> = (0..n).map(|i| Vector::basis(n, i)).collect();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = jacobi_defect(&bracket, twist, i, j, k);
                let rhs = &(&tensor_curvature(p, twist, &e[i], &e[j], &e[k])
                    + &tensor_curvature(p, twist, &e[j], &e[k], &e[i]))
                    + &tensor_curvature(p, twist, &e[k], &e[i], &e[j]);
                if let Some(v) = compare(Axiom::HomBianchi, &[i, j, k], lhs, rhs) {
                    return Verdict::Fails(v);
                }
            }
        }
    }
    Verdict::Holds
}

/// The commutator bracket of `p` satisfies hom-Jacobi.
pub fn check_hom_lie_admissible<F: Field>(p: &Tensor3<F>, twist: &Matrix<F>) -> Verdict<F> {
    check_hom_jacobi(&commutator_bracket(p), twist)
}

/// Whether `w` lies in the column span of `basis` (columns independent).
pub(crate) fn in_span<F: Field>(basis: &Matrix<F>, w: &Vector<F>) -> bool {
    let aug = Matrix::from_fn(basis.rows(), basis.cols() + 1, |r, c| {
        if c < basis.cols() {
            basis[(r, c)].clone()
        } else {
            w[r].clone()
        }
    });
    aug.rank() == basis.cols()
}

/// `φ(h) ⊆ h` and `[h, h] ⊆ h` for `h = span(basis)`.
///
/// Witnesses index into `basis` (1-based). Membership is decided by exact
/// rank computation, so this works over any field (e.g. Gaussian rationals
/// for subspaces of a complexification).
pub fn check_subalgebra<F: Field>(c: &Tensor3<F>, twist: &Matrix<F>, basis: &[Vector<F>]) -> Result<Verdict<F>> {
    check_dims(c, twist)?;
    let n = c.dim();
    if let Some(b) = basis.iter().find(|b| b.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: b.len(),
        });
    }
    if basis.is_empty() {
        return Ok(Verdict::Holds);
    }
    let span = Matrix::from_columns(basis.to_vec())?;
    if span.rank() != basis.len() {
        return Err(Error::DependentBasis);
    }
    for (a, b) in basis.iter().enumerate() {
        let img = twist.mul_vec(b);
        if !in_span(&span, &img) {
            return Ok(Verdict::Fails(Violation::at(
                Axiom::SubalgebraTwist,
                &[a],
                img,
                Vector::zeros(n),
            )));
        }
    }
    for a in 0..basis.len() {
        for b in a + 1..basis.len() {
            let br = c.apply(&basis[a], &basis[b]);
            if !in_span(&span, &br) {
                return Ok(Verdict::Fails(Violation::at(
                    Axiom::SubalgebraBracket,
                    &[a, b],
                    br,
                    Vector::zeros(n),
                )));
            }
        }
    }
    Ok(Verdict::Holds)
}
