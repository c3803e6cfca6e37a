//! Pseudo-Riemannian metrics, symplectic forms, the hom-Levi-Civita product
//! and the left-symmetric product induced by a symplectic form.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hom::{check_dims, is_involutive};
use crate::linalg::{Matrix, Vector};
use crate::scalar::{Field, Rational};
use crate::tensor::Tensor3;
use crate::verdict::{compare, Axiom, Verdict, Violation};

/// Symmetric nondegenerate Gram matrix of `<,>`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct MetricForm<F: Field = Rational> {
    gram: Matrix<F>,
}

impl<F: Field> MetricForm<F> {
    pub fn new(gram: Matrix<F>) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::NonSquare {
                rows: gram.rows(),
                cols: gram.cols(),
            });
        }
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if gram.determinant()?.is_zero() {
            return Err(Error::DegenerateForm);
        }
        Ok(MetricForm { gram })
    }

    pub fn identity(n: usize) -> Self {
        MetricForm {
            gram: Matrix::identity(n),
        }
    }

    pub fn gram(&self) -> &Matrix<F> {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn eval(&self, x: &Vector<F>, y: &Vector<F>) -> F {
        self.gram.bilinear(x, y)
    }
}

/// Antisymmetric nondegenerate matrix of `ω`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct SymplecticForm<F: Field = Rational> {
    omega: Matrix<F>,
}

impl<F: Field> SymplecticForm<F> {
    pub fn new(omega: Matrix<F>) -> Result<Self> {
        if !omega.is_square() {
            return Err(Error::NonSquare {
                rows: omega.rows(),
                cols: omega.cols(),
            });
        }
        if !omega.is_antisymmetric() {
            return Err(Error::NotAntisymmetric);
        }
        if omega.determinant()?.is_zero() {
            return Err(Error::DegenerateForm);
        }
        Ok(SymplecticForm { omega })
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.omega
    }

    pub fn dim(&self) -> usize {
        self.omega.rows()
    }

    pub fn eval(&self, x: &Vector<F>, y: &Vector<F>) -> F {
        self.omega.bilinear(x, y)
    }
}

fn require_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

fn require_regular<F: Field>(twist: &Matrix<F>) -> Result<()> {
    if twist.determinant()?.is_zero() {
        Err(Error::SingularTwist)
    } else {
        Ok(())
    }
}

/// `<φe_i, φe_j> = <e_i, e_j>` for all pairs.
pub fn check_pseudo_riemannian<F: Field>(g: &MetricForm<F>, twist: &Matrix<F>) -> Result<Verdict<F>> {
    require_dim(g.dim(), twist.rows())?;
    let n = g.dim();
    for i in 0..n {
        for j in i..n {
            let lhs = g.eval(&twist.column(i), &twist.column(j));
            let rhs = g.gram()[(i, j)].clone();
            if lhs != rhs {
                return Ok(Verdict::Fails(Violation::scalar(Axiom::PseudoRiemannian, &[i, j], lhs, rhs)));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// `<φe_i, e_j> = <e_i, φe_j>`, i.e. `gram·φ = φᵀ·gram`.
pub fn check_phi_selfadjoint<F: Field>(g: &MetricForm<F>, twist: &Matrix<F>) -> Result<Verdict<F>> {
    require_dim(g.dim(), twist.rows())?;
    if !is_involutive(twist) {
        return Err(Error::NonInvolutiveTwist);
    }
    let left = g.gram() * twist;
    let right = &twist.transpose() * g.gram();
    let n = g.dim();
    for i in 0..n {
        for j in 0..n {
            if left[(i, j)] != right[(i, j)] {
                return Ok(Verdict::Fails(Violation::scalar(
                    Axiom::PhiSelfAdjoint,
                    &[j, i],
                    right[(i, j)].clone(),
                    left[(i, j)].clone(),
                )));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// The hom-Levi-Civita product of `(c, φ, g)` from Koszul's formula
/// `2<e_i·e_j, φe_k> = <[e_i,e_j], φe_k> + <[e_k,e_j], φe_i> + <[e_k,e_i], φe_j>`.
///
/// With `B = φᵀ·gram` the pairing `<x, φe_k>` is `(Bx)_k`, so each product
/// is `½[e_i,e_j] + ½B⁻¹t` for the vector `t` of the last two terms.
pub fn levi_civita_product<F: Field>(c: &Tensor3<F>, twist: &Matrix<F>, g: &MetricForm<F>) -> Result<Tensor3<F>> {
    check_dims(c, twist)?;
    require_dim(c.dim(), g.dim())?;
    require_regular(twist)?;
    let n = c.dim();
    let b = &twist.transpose() * g.gram();
    let b_inv = b.inverse().map_err(|_| Error::DegenerateForm)?;
    let half = F::from_rational(Rational::new(1, 2));
    let images: Vec<Vector<F>> = (0..n).map(|i| twist.column(i)).collect();
    let mut out = Tensor3::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let t = Vector(
                (0..n)
                    .map(|k| g.eval(&c.on_basis(k, j), &images[i]) + g.eval(&c.on_basis(k, i), &images[j]))
                    .collect(),
            );
            let p = (&c.on_basis(i, j) + &b_inv.mul_vec(&t)).scale(&half);
            out.set_product(i, j, &p)?;
        }
    }
    Ok(out)
}

/// `e_i·e_j − e_j·e_i = [e_i, e_j]`.
pub fn check_torsion<F: Field>(p: &Tensor3<F>, c: &Tensor3<F>) -> Result<Verdict<F>> {
    require_dim(p.dim(), c.dim())?;
    let n = p.dim();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = &p.on_basis(i, j) - &p.on_basis(j, i);
            if let Some(v) = compare(Axiom::Torsion, &[i, j], lhs, c.on_basis(i, j)) {
                return Ok(Verdict::Fails(v));
            }
        }
    }
    // Diagonal commutators vanish; c must too.
    for i in 0..n {
        if let Some(v) = compare(Axiom::Torsion, &[i, i], Vector::zeros(n), c.on_basis(i, i)) {
            return Ok(Verdict::Fails(v));
        }
    }
    Ok(Verdict::Holds)
}

/// `<e_i·e_j, φe_k> = −<φe_j, e_i·e_k>` for all triples.
pub fn check_metric_compatibility<F: Field>(p: &Tensor3<F>, g: &MetricForm<F>, twist: &Matrix<F>) -> Result<Verdict<F>> {
    check_dims(p, twist)?;
    require_dim(p.dim(), g.dim())?;
    let n = p.dim();
    let images: Vec<Vector<F>> = (0..n).map(|i| twist.column(i)).collect();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = g.eval(&p.on_basis(i, j), &images[k]);
                let rhs = -g.eval(&images[j], &p.on_basis(i, k));
                if lhs != rhs {
                    return Ok(Verdict::Fails(Violation::scalar(
                        Axiom::MetricCompatibility,
                        &[i, j, k],
                        lhs,
                        rhs,
                    )));
                }
            }
        }
    }
    Ok(Verdict::Holds)
}

/// 2-hom-cocycle condition on all triples, then `ω(φe_i, φe_j) = ω(e_i, e_j)`.
pub fn check_symplectic<F: Field>(omega: &SymplecticForm<F>, c: &Tensor3<F>, twist: &Matrix<F>) -> Result<Verdict<F>> {
    check_dims(c, twist)?;
    require_dim(c.dim(), omega.dim())?;
    require_regular(twist)?;
    let n = c.dim();
    let images: Vec<Vector<F>> = (0..n).map(|i| twist.column(i)).collect();
    // Alternating in (i, j, k) for an antisymmetric bracket.
    let alternating = c.is_antisymmetric();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if alternating && !(i < j && j < k) {
                    continue;
                }
                let s = omega.eval(&c.on_basis(i, j), &images[k])
                    + omega.eval(&c.on_basis(k, i), &images[j])
                    + omega.eval(&c.on_basis(j, k), &images[i]);
                if !s.is_zero() {
                    return Ok(Verdict::Fails(Violation::scalar(
                        Axiom::SymplecticCocycle,
                        &[i, j, k],
                        s,
                        F::zero(),
                    )));
                }
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let lhs = omega.eval(&images[i], &images[j]);
            let rhs = omega.matrix()[(i, j)].clone();
            if lhs != rhs {
                return Ok(Verdict::Fails(Violation::scalar(
                    Axiom::SymplecticInvariance,
                    &[i, j],
                    lhs,
                    rhs,
                )));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// The product `a` with `ω(a(e_i,e_j), φe_k) = −ω(φe_j, [e_i,e_k])` for all `k`.
///
/// With `M = ω·φ` the left side is `(Mᵀ a(e_i,e_j))_k`.
pub fn symplectic_left_symmetric<F: Field>(
    omega: &SymplecticForm<F>,
    c: &Tensor3<F>,
    twist: &Matrix<F>,
) -> Result<Tensor3<F>> {
    check_dims(c, twist)?;
    require_dim(c.dim(), omega.dim())?;
    if !is_involutive(twist) {
        return Err(Error::NonInvolutiveTwist);
    }
    let n = c.dim();
    let mt = (omega.matrix() * twist).transpose();
    let mt_inv = mt.inverse().map_err(|_| Error::DegenerateForm)?;
    let images: Vec<Vector<F>> = (0..n).map(|i| twist.column(i)).collect();
    let mut out = Tensor3::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let rhs = Vector((0..n).map(|k| -omega.eval(&images[j], &c.on_basis(i, k))).collect());
            out.set_product(i, j, &mt_inv.mul_vec(&rhs))?;
        }
    }
    Ok(out)
}

/// `u ↦ u* = gram·u` in the dual basis.
pub fn musical_flat<F: Field>(g: &MetricForm<F>, u: &Vector<F>) -> Result<Vector<F>> {
    require_dim(g.dim(), u.len())?;
    Ok(g.gram().mul_vec(u))
}

/// Inverse of [`musical_flat`].
pub fn musical_sharp<F: Field>(g: &MetricForm<F>, a: &Vector<F>) -> Result<Vector<F>> {
    require_dim(g.dim(), a.len())?;
    g.gram().solve(a)?.unique()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::hom::{check_hom_left_symmetric, commutator_bracket};
    use crate::scalar::q;

    fn r(n: i64) -> Rational {
        q(n, 1)
    }

    #[test]
    fn form_validation() {
        assert_eq!(
            MetricForm::new(Matrix::from_ints(&[&[1, 2], &[2, 4]])).unwrap_err(),
            Error::DegenerateForm
        );
        assert_eq!(
            MetricForm::new(Matrix::from_ints(&[&[1, 2], &[0, 4]])).unwrap_err(),
            Error::NotSymmetric
        );
        assert_eq!(
            SymplecticForm::new(Matrix::from_ints(&[&[0, 1], &[1, 0]])).unwrap_err(),
            Error::NotAntisymmetric
        );
        assert_eq!(
            SymplecticForm::new(Matrix::<Rational>::zeros(2, 2)).unwrap_err(),
            Error::DegenerateForm
        );
    }

    #[test]
    fn pseudo_riemannian_examples() {
        let g = MetricForm::new(fixtures::kahler4_metric(&r(1), &r(1), &r(1))).unwrap();
        assert!(check_pseudo_riemannian(&g, &fixtures::imex_twist()).unwrap().holds());
        let g2 = MetricForm::new(Matrix::diag(vec![r(1), r(2)])).unwrap();
        assert!(check_pseudo_riemannian(&g2, &Matrix::identity(2)).unwrap().holds());
        let swap = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        let v = check_pseudo_riemannian(&g2, &swap).unwrap().into_violation().unwrap();
        assert_eq!(v.witness, vec![1, 1]);
        assert_eq!(v.lhs, Vector(vec![r(2)]));
    }

    #[test]
    fn selfadjoint() {
        let g = MetricForm::new(fixtures::kahler4_metric(&r(2), &r(3), &r(1))).unwrap();
        assert!(check_phi_selfadjoint(&g, &fixtures::imex_twist()).unwrap().holds());
        let g2 = MetricForm::new(Matrix::diag(vec![r(1), r(2)])).unwrap();
        let swap = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert!(!check_phi_selfadjoint(&g2, &swap).unwrap().holds());
        let shear = Matrix::from_ints(&[&[1, 1], &[0, 1]]);
        assert_eq!(check_phi_selfadjoint(&g2, &shear).unwrap_err(), Error::NonInvolutiveTwist);
    }

    #[test]
    fn koszul_kahler_example() {
        let (a, b) = (r(1), r(1));
        let alg = fixtures::imex(&a, &b);
        let g = MetricForm::new(fixtures::kahler4_metric(&a, &b, &r(1))).unwrap();
        let p = levi_civita_product(&alg.bracket, &alg.twist, &g).unwrap();
        assert_eq!(p, fixtures::kahler4_levi_civita(&a, &b));
        assert!(check_torsion(&p, &alg.bracket).unwrap().holds());
        assert!(check_metric_compatibility(&p, &g, &alg.twist).unwrap().holds());
    }

    #[test]
    fn koszul_2d() {
        let c = fixtures::bracket_2d();
        let g = MetricForm::new(Matrix::from_ints(&[&[2, 1], &[1, 1]])).unwrap();
        let p = levi_civita_product(&c, &Matrix::identity(2), &g).unwrap();
        assert_eq!(p, fixtures::kahler2_case1_product(&r(1), &r(1), &r(-2)));
        assert!(check_metric_compatibility(&p, &g, &Matrix::identity(2)).unwrap().holds());
    }

    #[test]
    fn koszul_abelian_and_errors() {
        let z = Tensor3::<Rational>::zeros(3);
        let g = MetricForm::identity(3);
        let phi = Matrix::diag(vec![r(1), r(-1), r(1)]);
        assert!(levi_civita_product(&z, &phi, &g).unwrap().is_zero());
        let sing = Matrix::diag(vec![r(1), r(0), r(1)]);
        assert_eq!(levi_civita_product(&z, &sing, &g).unwrap_err(), Error::SingularTwist);
    }

    #[test]
    fn torsion_zero_vs_imex() {
        let alg = fixtures::imex(&r(1), &r(1));
        let z = Tensor3::zeros(4);
        assert!(check_torsion(&z, &z).unwrap().holds());
        let v = check_torsion(&z, &alg.bracket).unwrap().into_violation().unwrap();
        assert_eq!(v.witness, vec![1, 2]);
    }

    #[test]
    fn imex_symplectic() {
        let alg = fixtures::imex(&r(1), &r(1));
        let om = SymplecticForm::new(fixtures::imex_omega(&r(1), &r(1), &r(1))).unwrap();
        assert!(check_symplectic(&om, &alg.bracket, &alg.twist).unwrap().holds());
        let mut flipped = om.matrix().clone();
        flipped[(1, 3)] = r(-1);
        flipped[(3, 1)] = r(1);
        let bad = SymplecticForm::new(flipped).unwrap();
        let v = check_symplectic(&bad, &alg.bracket, &alg.twist).unwrap().into_violation().unwrap();
        assert_eq!(v.kind, Axiom::SymplecticCocycle);
        assert_eq!(v.witness, vec![1, 3, 4]);
        assert_eq!(v.lhs, Vector(vec![r(-2)]));
    }

    #[test]
    fn abelian_symplectic() {
        let om = SymplecticForm::new(Matrix::from_ints(&[&[0, 3], &[-3, 0]])).unwrap();
        assert!(check_symplectic(&om, &Tensor3::zeros(2), &Matrix::identity(2)).unwrap().holds());
        assert!(symplectic_left_symmetric(&om, &Tensor3::zeros(2), &Matrix::identity(2))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn left_symmetric_from_omega() {
        for (a, b) in [(r(1), r(1)), (r(2), r(3)), (r(-1), q(1, 2))] {
            let alg = fixtures::imex(&a, &b);
            let om = SymplecticForm::new(fixtures::imex_omega(&a, &b, &r(5))).unwrap();
            let p = symplectic_left_symmetric(&om, &alg.bracket, &alg.twist).unwrap();
            assert_eq!(commutator_bracket(&p), alg.bracket);
            assert!(check_hom_left_symmetric(&p, &alg.twist).holds());
            // Defining relation, evaluated directly.
            for i in 0..4 {
                for j in 0..4 {
                    for k in 0..4 {
                        let lhs = om.eval(&p.on_basis(i, j), &alg.twist.column(k));
                        let rhs = -om.eval(&alg.twist.column(j), &alg.bracket.on_basis(i, k));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn left_symmetric_requires_involution() {
        let om = SymplecticForm::new(Matrix::from_ints(&[&[0, 1], &[-1, 0]])).unwrap();
        let phi = Matrix::diag(vec![r(2), r(1)]);
        assert_eq!(
            symplectic_left_symmetric(&om, &Tensor3::zeros(2), &phi).unwrap_err(),
            Error::NonInvolutiveTwist
        );
    }

    #[test]
    fn musical_maps() {
        let g = MetricForm::new(Matrix::diag(vec![r(2), r(3)])).unwrap();
        assert_eq!(musical_flat(&g, &Vector::basis(2, 1)).unwrap(), Vector(vec![r(0), r(3)]));
        let id = MetricForm::<Rational>::identity(2);
        assert_eq!(musical_flat(&id, &Vector::basis(2, 0)).unwrap(), Vector::basis(2, 0));
        let g4 = MetricForm::new(Matrix::from_ints(&[&[2, 1, 0, 0], &[1, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 3]])).unwrap();
        let u = Vector(vec![q(1, 2), r(-3), r(7), q(2, 5)]);
        assert_eq!(musical_sharp(&g4, &musical_flat(&g4, &u).unwrap()).unwrap(), u);
    }
}
