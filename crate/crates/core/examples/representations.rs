//! Representations of hom-Lie algebras and their duals.

use homlie::fixtures;
use homlie::metric::{symplectic_left_symmetric, SymplecticForm};
use homlie::phase_space::{adjoint_rep, check_admissible, check_dual_pairing, check_representation, dual_rep, left_mult_rep};
use homlie::q;

fn main() {
    let (a, b, big_a) = (q(1, 1), q(1, 1), q(1, 1));
    let alg = fixtures::imex(&a, &b);
    let ad = adjoint_rep(&alg);
    println!("adjoint: representation {}", check_representation(&ad).unwrap().holds());
    println!("adjoint: admissible {}", check_admissible(&ad).unwrap().holds());

    let omega = SymplecticForm::new(fixtures::imex_omega(&a, &b, &big_a)).unwrap();
    let p = symplectic_left_symmetric(&omega, &alg.bracket, &alg.twist).unwrap();
    let rep = left_mult_rep(&p, &alg.twist).unwrap();
    check_admissible(&rep).unwrap().assert_holds();
    let dual = dual_rep(&rep).unwrap();
    check_representation(&dual.to_representation()).unwrap().assert_holds();
    check_dual_pairing(&rep, &dual).assert_holds();
    println!("left multiplication is admissible; its dual is a representation");
}
