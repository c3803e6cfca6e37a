//! Exact rationals, Gaussian rationals and linear algebra over them.

use homlie::linalg::Matrix;
use homlie::{q, GaussianRational, Vector};

fn main() {
    let a = Matrix::from_rows(vec![
        vec![q(2, 1), q(1, 3), q(0, 1)],
        vec![q(-1, 2), q(1, 1), q(4, 1)],
        vec![q(0, 1), q(5, 7), q(1, 1)],
    ])
    .unwrap();
    println!("A = {a}");
    println!("det A = {}", a.determinant().unwrap());
    println!("A^-1 = {}", a.inverse().unwrap());

    let b = Vector(vec![q(1, 1), q(0, 1), q(-1, 1)]);
    let x = a.solve(&b).unwrap().unique().unwrap();
    println!("A x = {b}  =>  x = {x}");
    assert_eq!(a.mul_vec(&x), b);

    let z = GaussianRational::new(q(1, 2), q(-3, 4));
    println!("z = {z}, conj z = {}, |z|^2 = {}", z.conj(), z.norm_sqr());
}
