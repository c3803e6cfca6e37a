//! Almost complex, Hermitian and Kähler structures, the Nijenhuis torsion,
//! and the splitting of the complexification.

use homlie::complex::{
    check_almost_complex, check_hermitian_compatibility, check_integrability_equivalence, check_kahler,
    complexify_and_split, induced_symplectic, nijenhuis_tensor,
};
use homlie::fixtures;
use homlie::metric::{levi_civita_product, MetricForm};
use homlie::q;

fn main() {
    let (a, b, big_a) = (q(1, 1), q(1, 1), q(1, 1));
    let alg = fixtures::imex(&a, &b);
    let j = fixtures::kahler4_j();
    let g = MetricForm::new(fixtures::kahler4_metric(&a, &b, &big_a)).unwrap();

    check_almost_complex(&j, &alg.twist).unwrap().assert_holds();
    check_hermitian_compatibility(&j, &g, &alg.twist).unwrap().assert_holds();
    let n = nijenhuis_tensor(&alg.bracket, &alg.twist, &j).unwrap();
    println!("Nijenhuis tensor zero: {}", n.is_zero());
    let p = levi_civita_product(&alg.bracket, &alg.twist, &g).unwrap();
    println!("Kähler: {}", check_kahler(&p, &alg.twist, &j).unwrap().holds());
    println!("induced omega = {}", induced_symplectic(&g, &alg.twist, &j).unwrap().matrix());

    let split = complexify_and_split(&alg.bracket, &alg.twist, &j).unwrap();
    for w in &split.basis10 {
        println!("g^(1,0) basis vector {w}");
    }
    let rep = check_integrability_equivalence(&alg.bracket, &alg.twist, &j).unwrap();
    println!("{rep:?}");

    let herm = fixtures::hermitian4(&q(1, 1));
    let n = nijenhuis_tensor(&herm.bracket, &herm.twist, &fixtures::hermitian4_j()).unwrap();
    println!("almost Hermitian example: {}", n.verdict().violation().map_or("integrable".into(), |v| v.to_string()));
}
