//! The hom-Levi-Civita product of a pseudo-Riemannian hom-Lie algebra.

use homlie::fixtures;
use homlie::metric::{check_metric_compatibility, check_pseudo_riemannian, check_torsion, levi_civita_product, MetricForm};
use homlie::q;

fn main() {
    let (a, b, big_a) = (q(1, 1), q(1, 1), q(1, 1));
    let alg = fixtures::imex(&a, &b);
    let g = MetricForm::new(fixtures::kahler4_metric(&a, &b, &big_a)).unwrap();
    check_pseudo_riemannian(&g, &alg.twist).unwrap().assert_holds();

    let p = levi_civita_product(&alg.bracket, &alg.twist, &g).unwrap();
    println!("{p}");
    check_torsion(&p, &alg.bracket).unwrap().assert_holds();
    check_metric_compatibility(&p, &g, &alg.twist).unwrap().assert_holds();
    println!("torsion-free and metric-compatible");
}
