//! The hom-left-symmetric product induced by a symplectic form.

use homlie::fixtures;
use homlie::hom::check_hom_left_symmetric;
use homlie::metric::{check_symplectic, check_torsion, symplectic_left_symmetric, SymplecticForm};
use homlie::q;

fn main() {
    let (a, b, big_a) = (q(1, 1), q(2, 1), q(3, 1));
    let alg = fixtures::imex(&a, &b);
    let omega = SymplecticForm::new(fixtures::imex_omega(&a, &b, &big_a)).unwrap();
    check_symplectic(&omega, &alg.bracket, &alg.twist).unwrap().assert_holds();

    let p = symplectic_left_symmetric(&omega, &alg.bracket, &alg.twist).unwrap();
    println!("{p}");
    check_hom_left_symmetric(&p, &alg.twist).assert_holds();
    check_torsion(&p, &alg.bracket).unwrap().assert_holds();
    println!("hom-left-symmetric, with the bracket as its commutator");
}
