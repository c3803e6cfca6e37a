//! The axioms of a hom-Lie algebra on the 4-dimensional IMEX example,
//! and the failure of the untwisted Jacobi identity.

use homlie::fixtures;
use homlie::hom::{check_jacobi, jacobi_defect};
use homlie::linalg::Matrix;
use homlie::{q, Verdict};

fn main() {
    let (a, b) = (q(2, 1), q(3, 1));
    let alg = fixtures::imex(&a, &b);
    println!("bracket:\n{}", alg.bracket);
    println!("twist = {}", alg.twist);
    println!("involutive: {}, regular: {}", alg.is_involutive(), alg.is_regular());
    alg.verify().assert_holds();
    println!("morphism and hom-Jacobi hold");

    match check_jacobi(&alg.bracket) {
        Verdict::Holds => println!("plain Jacobi holds"),
        Verdict::Fails(v) => println!("plain Jacobi: {v}"),
    }
    let defect = jacobi_defect(&alg.bracket, &Matrix::identity(4), 0, 2, 3);
    println!("Jacobi sum at (e1, e3, e4) = {defect}  (2ab = {})", q(2, 1) * a * b);
}
