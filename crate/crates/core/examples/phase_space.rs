//! The phase space `V ⊕ V*` of a hom-left-symmetric algebra.

use homlie::complex::induced_symplectic;
use homlie::fixtures;
use homlie::metric::{symplectic_left_symmetric, MetricForm};
use homlie::phase_space::{build_phase_space, check_phase_space_complex};
use homlie::{q, Verdict};

fn main() {
    let (a, b, big_a) = (q(1, 1), q(1, 1), q(1, 1));
    let alg = fixtures::imex(&a, &b);
    let g = MetricForm::new(fixtures::kahler4_metric(&a, &b, &big_a)).unwrap();
    let omega = induced_symplectic(&g, &alg.twist, &fixtures::kahler4_j()).unwrap();
    let p = symplectic_left_symmetric(&omega, &alg.bracket, &alg.twist).unwrap();

    let ps = build_phase_space(&p, &alg.twist, Some(&g)).unwrap();
    println!("phase space of dimension {}", ps.dim());
    for (name, verdict) in ps.structural_checks().unwrap() {
        println!("{name}: {}", if verdict.holds() { "holds" } else { "fails" });
    }
    match check_phase_space_complex(&ps) {
        Verdict::Holds => println!("complex structure is integrable"),
        Verdict::Fails(v) => println!("complex structure: {v}"),
    }
}
