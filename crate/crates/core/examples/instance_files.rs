//! Loading a parametrized instance file, binding it, and running checks.

use std::collections::BTreeMap;
use std::path::Path;

use homlie::instance::{build, verify, InstanceFile};
use homlie::q;

fn main() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/kahler4.alg");
    let file = InstanceFile::load(&path).unwrap();
    println!("parameters: {:?}", file.params);

    let bindings = BTreeMap::from([("a".into(), q(1, 1)), ("b".into(), q(2, 1)), ("A".into(), q(1, 3))]);
    let inst = file.bind(&bindings).unwrap();
    let checks: Vec<String> = ["hom-jacobi", "hermitian", "nijenhuis", "kahler"].map(String::from).to_vec();
    print!("{}", verify(&inst, Some(&checks)).unwrap().render_text(false));
    print!("{}", build(&inst, "induced-omega").unwrap().to_json());
}
