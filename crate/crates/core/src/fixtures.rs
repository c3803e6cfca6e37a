//! Parametrized instances used throughout the tests, examples and CLI.
//!
//! Matrices are operators: column `j` holds the image of `e_j`. Product
//! tables list `e_i·e_j` directly and need no convention.

use crate::hom::HomLieAlgebra;
use crate::linalg::{Matrix, Vector};
use crate::scalar::{Field, Rational};
use crate::tensor::Tensor3;

fn v(entries: &[Rational]) -> Vector<Rational> {
    Vector(entries.to_vec())
}

fn z() -> Rational {
    Rational::zero()
}

fn table(dim: usize, entries: Vec<((usize, usize), Vector<Rational>)>) -> Tensor3<Rational> {
    let shifted = entries.into_iter().map(|((i, j), w)| ((i - 1, j - 1), w));
    Tensor3::from_products(dim, shifted).expect("fixture tables are well-formed")
}

/// `φ = diag(−1, 1, −1, 1)`.
pub fn imex_twist() -> Matrix<Rational> {
    Matrix::diag(vec![Rational::from(-1), Rational::one(), Rational::from(-1), Rational::one()])
}

/// `[e1,e2] = −a e3`, `[e1,e3] = b e2`, `[e2,e4] = −a e2`, `[e3,e4] = a e3`.
pub fn imex_bracket(a: &Rational, b: &Rational) -> Tensor3<Rational> {
    let entries = vec![
        ((0, 1), v(&[z(), z(), -a, z()])),
        ((0, 2), v(&[z(), b.clone(), z(), z()])),
        ((1, 3), v(&[z(), -a, z(), z()])),
        ((2, 3), v(&[z(), z(), a.clone(), z()])),
    ];
    Tensor3::antisymmetric_from(4, entries).expect("fixture tables are well-formed")
}

pub fn imex(a: &Rational, b: &Rational) -> HomLieAlgebra<Rational> {
    HomLieAlgebra::new(imex_bracket(a, b), imex_twist()).expect("IMEX bracket is antisymmetric")
}

/// `A·[[0,0,−1,0],[0,0,0,a/b],[1,0,0,0],[0,−a/b,0,0]]`; requires `b ≠ 0`.
pub fn imex_omega(a: &Rational, b: &Rational, big_a: &Rational) -> Matrix<Rational> {
    let r = a.quot(b);
    let one = Rational::one();
    Matrix::from_rows(vec![
        vec![z(), z(), -&one, z()],
        vec![z(), z(), z(), r.clone()],
        vec![one, z(), z(), z()],
        vec![z(), -r, z(), z()],
    ])
    .expect("4x4")
    .scale(big_a)
}

/// `diag(A, aA/b, A, aA/b)`; requires `b ≠ 0`.
pub fn kahler4_metric(a: &Rational, b: &Rational, big_a: &Rational) -> Matrix<Rational> {
    let s = a.quot(b) * big_a.clone();
    Matrix::diag(vec![big_a.clone(), s.clone(), big_a.clone(), s])
}

/// `e1 ↦ e3, e2 ↦ e4, e3 ↦ −e1, e4 ↦ −e2`.
pub fn kahler4_j() -> Matrix<Rational> {
    Matrix::from_ints(&[&[0, 0, -1, 0], &[0, 0, 0, -1], &[1, 0, 0, 0], &[0, 1, 0, 0]])
}

/// The hom-Levi-Civita product of the 4D Kähler example, as tabulated.
pub fn kahler4_levi_civita(a: &Rational, b: &Rational) -> Tensor3<Rational> {
    let e = |k: usize, s: Rational| {
        let mut w = Vector::zeros(4);
        w[k - 1] = s;
        w
    };
    table(
        4,
        vec![
            ((2, 1), e(3, a.clone())),
            ((2, 2), e(4, a.clone())),
            ((2, 3), e(1, -a)),
            ((2, 4), e(2, -a)),
            ((3, 1), e(2, -b)),
            ((3, 2), e(1, -a)),
            ((3, 3), e(4, b.clone())),
            ((3, 4), e(3, a.clone())),
        ],
    )
}

/// `φ` swapping `e1 ↔ e2` and `e3 ↔ e4`.
pub fn hermitian4_twist() -> Matrix<Rational> {
    Matrix::from_ints(&[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]])
}

/// `[e1,e3] = a(e1+e2)`, `[e2,e4] = a(e1+e2)`, `[e3,e4] = −a e3 + a e4`.
pub fn hermitian4_bracket(a: &Rational) -> Tensor3<Rational> {
    let entries = vec![
        ((0, 2), v(&[a.clone(), a.clone(), z(), z()])),
        ((1, 3), v(&[a.clone(), a.clone(), z(), z()])),
        ((2, 3), v(&[z(), z(), -a, a.clone()])),
    ];
    Tensor3::antisymmetric_from(4, entries).expect("fixture tables are well-formed")
}

pub fn hermitian4(a: &Rational) -> HomLieAlgebra<Rational> {
    HomLieAlgebra::new(hermitian4_bracket(a), hermitian4_twist()).expect("antisymmetric")
}

/// `e1 ↦ e4, e2 ↦ e3, e3 ↦ −e2, e4 ↦ −e1`.
pub fn hermitian4_j() -> Matrix<Rational> {
    Matrix::from_ints(&[&[0, 0, 0, -1], &[0, 0, -1, 0], &[0, 1, 0, 0], &[1, 0, 0, 0]])
}

/// `[e1, e2] = e2`.
pub fn bracket_2d() -> Tensor3<Rational> {
    Tensor3::antisymmetric_from(2, vec![((0, 1), v(&[z(), Rational::one()]))]).expect("2D bracket")
}

/// Kähler product on the 2D algebra for `a ≠ 0`, `a² + hd = −1`:
/// `e1·e1 = a²e1 + ad e2`, `e1·e2 = ah e1 − a²e2`,
/// `e2·e1 = ah e1 − (a²+1)e2`, `e2·e2 = h²e1 − ah e2`.
pub fn kahler2_case1_product(a: &Rational, h: &Rational, d: &Rational) -> Tensor3<Rational> {
    let a2 = a * a;
    let ah = a * h;
    table(
        2,
        vec![
            ((1, 1), v(&[a2.clone(), a * d])),
            ((1, 2), v(&[ah.clone(), -&a2])),
            ((2, 1), v(&[ah.clone(), -(a2 + Rational::one())])),
            ((2, 2), v(&[h * h, -ah])),
        ],
    )
}

/// `[[−d/a, 1], [1, h/a]]`.
pub fn kahler2_case1_metric(a: &Rational, h: &Rational, d: &Rational) -> Matrix<Rational> {
    Matrix::from_rows(vec![vec![-d.quot(a), Rational::one()], vec![Rational::one(), h.quot(a)]]).expect("2x2")
}

/// Operator with `J e1 = a e1 + d e2`, `J e2 = h e1 − a e2`.
pub fn kahler2_case1_j(a: &Rational, h: &Rational, d: &Rational) -> Matrix<Rational> {
    Matrix::from_rows(vec![vec![a.clone(), h.clone()], vec![d.clone(), -a]]).expect("2x2")
}

/// `a = 0` branch: `e2·e1 = −e2`, `e2·e2 = (1/d²) e1`.
pub fn kahler2_case2_product(d: &Rational) -> Tensor3<Rational> {
    let inv_d2 = (d * d).recip().expect("d != 0");
    table(
        2,
        vec![
            ((2, 1), v(&[z(), Rational::from(-1)])),
            ((2, 2), v(&[inv_d2, z()])),
        ],
    )
}

/// `diag(t, t/d²)`.
pub fn kahler2_case2_metric(t: &Rational, d: &Rational) -> Matrix<Rational> {
    Matrix::diag(vec![t.clone(), t.quot(&(d * d))])
}

/// Operator with `J e1 = d e2`, `J e2 = −(1/d) e1`.
pub fn kahler2_case2_j(d: &Rational) -> Matrix<Rational> {
    let inv = d.recip().expect("d != 0");
    Matrix::from_rows(vec![vec![z(), -inv], vec![d.clone(), z()]]).expect("2x2")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::{commutator_bracket, jacobi_defect};
    use crate::scalar::q;

    #[test]
    fn imex_jacobi_defect_is_2ab_e2() {
        for (a, b) in [(q(1, 1), q(1, 1)), (q(2, 1), q(3, 1)), (q(-1, 1), q(1, 2))] {
            let c = imex_bracket(&a, &b);
            let d = jacobi_defect(&c, &Matrix::identity(4), 0, 2, 3);
            let two_ab = q(2, 1) * a.clone() * b.clone();
            assert_eq!(d, Vector(vec![z(), two_ab, z(), z()]));
        }
    }

    #[test]
    fn kahler4_table_commutator_is_imex() {
        let (a, b) = (q(3, 2), q(-5, 7));
        assert_eq!(commutator_bracket(&kahler4_levi_civita(&a, &b)), imex_bracket(&a, &b));
    }

    #[test]
    fn kahler2_tables_have_the_2d_bracket() {
        // a² + hd = −1 with a = 2, h = 5: d = −1.
        let p = kahler2_case1_product(&q(2, 1), &q(5, 1), &q(-1, 1));
        assert_eq!(commutator_bracket(&p), bracket_2d());
        assert_eq!(commutator_bracket(&kahler2_case2_product(&q(3, 1))), bracket_2d());
    }

    #[test]
    fn complex_structures_square_to_minus_one() {
        let m1 = -Matrix::<Rational>::identity(4);
        assert_eq!(kahler4_j().pow(2), m1);
        assert_eq!(hermitian4_j().pow(2), m1);
        let m2 = -Matrix::<Rational>::identity(2);
        assert_eq!(kahler2_case1_j(&q(1, 1), &q(1, 1), &q(-2, 1)).pow(2), m2);
        assert_eq!(kahler2_case2_j(&q(2, 1)).pow(2), m2);
    }
}
