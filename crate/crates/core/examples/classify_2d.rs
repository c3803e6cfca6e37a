//! Complex, Hermitian and Kähler structures on `[e1, e2] = e2` for each
//! involutive twist.

use homlie::dim2::{proper_nonexistence_report, solve_almost_complex_2d, solve_hermitian_2d, solve_kahler_2d, TwistFamily2D};
use homlie::metric::MetricForm;

fn main() {
    let hat = solve_almost_complex_2d(&TwistFamily2D::Hat);
    println!("hat: {:?} {:?}", hat.free_params, hat.constraints);
    let j = hat.sample.clone().unwrap();
    let herm = solve_hermitian_2d(&TwistFamily2D::Hat, &j).unwrap();
    println!("Hermitian metrics for J = {j}: t * {}", herm.sample.clone().unwrap());
    let g = MetricForm::new(herm.sample.unwrap()).unwrap();
    let kahler = solve_kahler_2d(&TwistFamily2D::Hat, &j, &g).unwrap();
    for line in &kahler.derivation {
        println!("  {line}");
    }

    let report = proper_nonexistence_report();
    for (twist, family) in &report.entries {
        println!("{twist}: {:?}", family.kind);
    }
    println!("no proper twist admits a complex structure: {}", report.all_none);
}
