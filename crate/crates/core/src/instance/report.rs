//! Command reports: verdicts by check name, counterexamples, and derived
//! objects. Every map is a `BTreeMap`, so JSON output is deterministic.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::complex::IntegrabilityReport;
use crate::dim2::SolutionFamily;
use crate::linalg::{Matrix, Vector};
use crate::scalar::{GaussianRational, Rational};
use crate::tensor::Tensor3;
use crate::verdict::{Verdict, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub check: String,
    #[serde(flatten)]
    pub violation: Violation,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Derived {
    Tensor(Tensor3<Rational>),
    Matrix(Matrix<Rational>),
    ComplexVectors(Vec<Vector<GaussianRational>>),
    Family(Box<SolutionFamily>),
    Integrability(IntegrabilityReport),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub instance: String,
    pub bindings: BTreeMap<String, Rational>,
    pub verdicts: BTreeMap<String, Outcome>,
    pub counterexamples: Vec<Counterexample>,
    pub derived: BTreeMap<String, Derived>,
}

impl Report {
    pub fn new(instance: impl Into<String>, bindings: BTreeMap<String, Rational>) -> Self {
        Report {
            instance: instance.into(),
            bindings,
            verdicts: BTreeMap::new(),
            counterexamples: Vec::new(),
            derived: BTreeMap::new(),
        }
    }

    /// Counterexamples are kept sorted by check name.
    pub fn record(&mut self, check: &str, verdict: Verdict) {
        let outcome = match verdict {
            Verdict::Holds => Outcome::Pass,
            Verdict::Fails(violation) => {
                let at = self.counterexamples.partition_point(|c| c.check.as_str() < check);
                self.counterexamples.insert(
                    at,
                    Counterexample {
                        check: check.to_string(),
                        violation,
                    },
                );
                Outcome::Fail
            }
        };
        self.verdicts.insert(check.to_string(), outcome);
    }

    /// A yes/no property with no basis witness.
    pub fn record_flag(&mut self, check: &str, holds: bool) {
        let outcome = if holds { Outcome::Pass } else { Outcome::Fail };
        self.verdicts.insert(check.to_string(), outcome);
    }

    pub fn derive(&mut self, name: &str, value: Derived) {
        self.derived.insert(name.to_string(), value);
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.values().all(|o| *o == Outcome::Pass)
    }

    /// 0 when every verdict passes, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    pub fn render_text(&self, color: bool) -> String {
        let paint = |o: Outcome| match (o, color) {
            (Outcome::Pass, true) => "\x1b[32mPASS\x1b[0m",
            (Outcome::Fail, true) => "\x1b[31mFAIL\x1b[0m",
            (Outcome::Pass, false) => "PASS",
            (Outcome::Fail, false) => "FAIL",
        };
        let mut out = String::new();
        writeln!(out, "instance: {}", self.instance).unwrap();
        if !self.bindings.is_empty() {
            let b: Vec<String> = self.bindings.iter().map(|(k, v)| format!("{k} = {v}")).collect();
            writeln!(out, "bindings: {}", b.join(", ")).unwrap();
        }
        for (check, outcome) in &self.verdicts {
            writeln!(out, "{} {check}", paint(*outcome)).unwrap();
            for c in self.counterexamples.iter().filter(|c| &c.check == check) {
                writeln!(out, "    {}", c.violation).unwrap();
            }
        }
        for (name, value) in &self.derived {
            writeln!(out, "{name}:").unwrap();
            for line in render_derived(value) {
                writeln!(out, "    {line}").unwrap();
            }
        }
        out
    }
}

fn render_derived(value: &Derived) -> Vec<String> {
    match value {
        Derived::Tensor(t) => t.to_string().lines().map(str::to_string).collect(),
        Derived::Matrix(m) => m.to_rows().iter().map(|r| Vector(r.clone()).to_string()).collect(),
        Derived::ComplexVectors(vs) => vs.iter().map(|v| v.to_string()).collect(),
        Derived::Family(f) => {
            let mut lines = vec![format!("kind: {}", serde_json::to_value(f.kind).expect("kind").as_str().unwrap_or(""))];
            if !f.free_params.is_empty() {
                lines.push(format!("free parameters: {}", f.free_params.join(", ")));
            }
            lines.extend(f.constraints.iter().map(|c| format!("constraint: {c}")));
            if let Some(s) = &f.sample {
                lines.push(format!("sample: {s}"));
            }
            if let Some(p) = &f.product {
                lines.extend(p.to_string().lines().map(|l| format!("product: {l}")));
            }
            lines.extend(f.derivation.iter().flat_map(|d| d.lines()).map(|d| format!("| {d}")));
            lines
        }
        Derived::Integrability(r) => vec![
            format!("g^(1,0) subalgebra: {}", r.subalg10),
            format!("g^(0,1) subalgebra: {}", r.subalg01),
            format!("Nijenhuis tensor zero: {}", r.nijenhuis_zero),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;
    use crate::verdict::Axiom;

    #[test]
    fn deterministic_json_and_exit_code() {
        let mut r = Report::new("t", BTreeMap::from([("b".to_string(), q(1, 2)), ("a".to_string(), q(1, 1))]));
        r.record("zeta", Verdict::Holds);
        let v = Violation::at(Axiom::Jacobi, &[0, 2, 3], Vector(vec![q(2, 1)]), Vector(vec![q(0, 1)]));
        r.record("jacobi", Verdict::Fails(v));
        assert_eq!(r.exit_code(), 1);
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["verdicts"]["jacobi"], "fail");
        assert_eq!(json["bindings"]["b"], "1/2");
        assert_eq!(json["counterexamples"][0]["witness"], serde_json::json!([1, 3, 4]));
        let keys: Vec<&String> = json["bindings"].as_object().unwrap().keys().collect();
        assert_eq!(keys, ["a", "b"]);
        let text = r.render_text(false);
        assert!(text.contains("FAIL jacobi\n    jacobi fails at (1,3,4)"));
        assert!(!text.contains('\x1b'));
    }
}
