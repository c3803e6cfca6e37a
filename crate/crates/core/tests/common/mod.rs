//! Generators and independent oracles shared by the integration tests.
//!
//! The oracles work on raw `Vec<Vec<Rational>>` with their own elimination
//! so that they share no code path with the library beyond arithmetic.
#![allow(dead_code)]

use homlie::fixtures;
use homlie::linalg::{Matrix, Vector};
use homlie::metric::MetricForm;
use homlie::{q, Rational, Tensor3};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational(rng: &mut impl Rng, max_num: i64, max_den: i64) -> Rational {
    q(rng.gen_range(-max_num..=max_num), rng.gen_range(1..=max_den))
}

pub fn nonzero_rational(rng: &mut impl Rng, max_num: i64, max_den: i64) -> Rational {
    loop {
        let r = rational(rng, max_num, max_den);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn matrix(rng: &mut impl Rng, n: usize, max_num: i64, max_den: i64) -> Matrix<Rational> {
    Matrix::from_fn(n, n, |_, _| rational(rng, max_num, max_den))
}

pub fn invertible(rng: &mut impl Rng, n: usize) -> Matrix<Rational> {
    loop {
        let s = matrix(rng, n, 2, 1);
        if !s.determinant().unwrap().is_zero() {
            return s;
        }
    }
}

pub fn tensor(rng: &mut impl Rng, n: usize, max_num: i64, max_den: i64) -> Tensor3<Rational> {
    Tensor3::from_fn(n, |_, _, _| rational(rng, max_num, max_den))
}

/// An involutive hom-Lie algebra with a nondegenerate `φ`-invariant metric,
/// in a random basis. Dimension 2 uses `[e1, e2] = e2` with one of the three
/// involutive twists; dimension 4 uses the IMEX or Hermitian example.
pub fn pseudo_riemannian_instance(
    rng: &mut impl Rng,
    n: usize,
) -> (Tensor3<Rational>, Matrix<Rational>, MetricForm) {
    let (c, phi) = match n {
        2 => {
            let phi = match rng.gen_range(0..3) {
                0 => Matrix::identity(2),
                1 => Matrix::diag(vec![q(1, 1), q(-1, 1)]),
                _ => Matrix::from_rows(vec![vec![q(1, 1), q(0, 1)], vec![nonzero_rational(rng, 5, 3), q(-1, 1)]]).unwrap(),
            };
            (fixtures::bracket_2d(), phi)
        }
        4 => {
            if rng.gen_bool(0.5) {
                let (a, b) = (nonzero_rational(rng, 5, 3), nonzero_rational(rng, 5, 3));
                (fixtures::imex_bracket(&a, &b), fixtures::imex_twist())
            } else {
                (fixtures::hermitian4_bracket(&nonzero_rational(rng, 5, 3)), fixtures::hermitian4_twist())
            }
        }
        _ => panic!("dimension {n} not generated"),
    };
    let s = invertible(rng, n);
    let c = c.change_basis(&s).unwrap();
    let phi = &(&s.inverse().unwrap() * &phi) * &s;
    loop {
        let m = matrix(rng, n, 4, 2);
        let sym = (&m + &m.transpose()).scale(&q(1, 2));
        // Averaging over {Id, φ} makes the form φ-invariant.
        let g = (&sym + &(&(&phi.transpose() * &sym) * &phi)).scale(&q(1, 2));
        if let Ok(g) = MetricForm::new(g) {
            return (c, phi, g);
        }
    }
}

/// Solves a square system by Gauss-Jordan elimination; `None` if singular.
pub fn gauss_solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip().unwrap();
        for x in a[col].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        b[col] = b[col].clone() * inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for k in 0..n {
                    let d = f.clone() * a[col][k].clone();
                    a[r][k] = a[r][k].clone() - d;
                }
                let d = f * b[col].clone();
                b[r] = b[r].clone() - d;
            }
        }
    }
    Some(b)
}

fn entry(m: &Matrix<Rational>, r: usize, c: usize) -> Rational {
    m[(r, c)].clone()
}

/// `<x, y>` from raw Gram entries.
fn pair(g: &Matrix<Rational>, x: &[Rational], y: &[Rational]) -> Rational {
    let n = x.len();
    let mut s = Rational::zero();
    for a in 0..n {
        for b in 0..n {
            s = s + x[a].clone() * entry(g, a, b) * y[b].clone();
        }
    }
    s
}

/// Hom-Levi-Civita product by one linear solve per pair `(i, j)`:
/// `<x, φe_k> = ½(<[e_i,e_j], φe_k> + <[e_k,e_j], φe_i> + <[e_k,e_i], φe_j>)`
/// for all `k`, solved for `x = e_i·e_j`.
pub fn koszul_oracle(c: &Tensor3<Rational>, phi: &Matrix<Rational>, g: &Matrix<Rational>) -> Option<Tensor3<Rational>> {
    let n = c.dim();
    let col = |m: &Matrix<Rational>, j: usize| -> Vec<Rational> { (0..n).map(|r| entry(m, r, j)).collect() };
    let br = |i: usize, j: usize| -> Vec<Rational> { (0..n).map(|k| c.get(k, i, j).clone()).collect() };
    let basis = |l: usize| -> Vec<Rational> { (0..n).map(|r| if r == l { q(1, 1) } else { q(0, 1) }).collect() };
    let half = q(1, 2);
    let mut out = Tensor3::zeros(n);
    for i in 0..n {
        for j in 0..n {
            let a: Vec<Vec<Rational>> = (0..n).map(|k| (0..n).map(|l| pair(g, &basis(l), &col(phi, k))).collect()).collect();
            let b: Vec<Rational> = (0..n)
                .map(|k| {
                    (pair(g, &br(i, j), &col(phi, k)) + pair(g, &br(k, j), &col(phi, i)) + pair(g, &br(k, i), &col(phi, j)))
                        * half.clone()
                })
                .collect();
            let x = gauss_solve(a, b)?;
            out.set_product(i, j, &Vector(x)).unwrap();
        }
    }
    Some(out)
}

/// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]` on basis vectors, from raw constants.
pub fn jacobi_oracle(c: &Tensor3<Rational>, i: usize, j: usize, k: usize) -> Vec<Rational> {
    let n = c.dim();
    let mut out = vec![Rational::zero(); n];
    for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
        for m in 0..n {
            let inner = c.get(m, y, z).clone();
            if inner.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                *o = o.clone() + inner.clone() * c.get(r, x, m).clone();
            }
        }
    }
    out
}

/// A random almost complex structure commuting with `diag(−1, 1, −1, 1)`:
/// independent `2×2` blocks on `span(e1, e3)` and `span(e2, e4)`, each with
/// trace 0 and determinant 1.
pub fn imex_complex_structure(rng: &mut impl Rng) -> Matrix<Rational> {
    let mut block = || {
        let p = rational(rng, 4, 3);
        let r = nonzero_rational(rng, 4, 3);
        let s = -(q(1, 1) + p.clone() * p.clone()) / r.clone();
        (p, r, s)
    };
    let (p1, r1, s1) = block();
    let (p2, r2, s2) = block();
    let z = Rational::zero();
    Matrix::from_rows(vec![
        vec![p1.clone(), z.clone(), s1, z.clone()],
        vec![z.clone(), p2.clone(), z.clone(), s2],
        vec![r1, z.clone(), -p1, z.clone()],
        vec![z.clone(), r2, z, -p2],
    ])
    .unwrap()
}
