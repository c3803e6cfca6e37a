//! `verify`, `build` and `classify2` over bound instances.

use thiserror::Error;

use super::file::{BoundInstance, InstanceError};
use super::report::{Derived, Report};
use crate::complex::{
    check_almost_complex, check_hermitian_compatibility, check_integrability_equivalence, check_kahler,
    complexify_and_split, induced_symplectic, nijenhuis_tensor,
};
use crate::dim2::{canonical_bracket_2d, solve_almost_complex_2d, solve_hermitian_2d, solve_kahler_2d, TwistFamily2D};
use crate::hom::{
    check_antisymmetry, check_hom_bianchi, check_hom_jacobi, check_hom_left_symmetric, check_hom_lie_admissible,
    check_jacobi, check_morphism,
};
use crate::linalg::Matrix;
use crate::metric::{
    check_metric_compatibility, check_phi_selfadjoint, check_pseudo_riemannian, check_symplectic, check_torsion,
    levi_civita_product, symplectic_left_symmetric, MetricForm, SymplecticForm,
};
use crate::phase_space::{build_phase_space, check_phase_space_complex, check_twisted_dual_pairing};
use crate::scalar::Rational;
use crate::tensor::Tensor3;
use crate::verdict::Verdict;

/// Input problems; the CLI maps all of them to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CommandError {
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Algebra(#[from] crate::Error),
    #[error("{0}")]
    Usage(String),
}

pub type CommandResult<T> = std::result::Result<T, CommandError>;

/// Every check accepted by `verify --checks`.
pub const CHECKS: &[&str] = &[
    "antisymmetry",
    "morphism",
    "hom-jacobi",
    "jacobi",
    "pseudo-riemannian",
    "phi-self-adjoint",
    "symplectic",
    "almost-complex",
    "hermitian",
    "nijenhuis",
    "kahler",
    "torsion",
    "metric-compatibility",
    "hom-left-symmetry",
    "hom-lie-admissible",
    "hom-bianchi",
    "twisted-dual-pairing",
];

pub const TARGETS: &[&str] = &["levi-civita", "left-symmetric", "phase-space", "complexify", "induced-omega"];

struct Structures<'a> {
    inst: &'a BoundInstance,
    // Construction errors surface only when a check needs the form.
    metric: Option<crate::Result<MetricForm>>,
    omega: Option<crate::Result<SymplecticForm>>,
}

impl<'a> Structures<'a> {
    fn new(inst: &'a BoundInstance) -> Self {
        Structures {
            inst,
            metric: inst.metric.clone().map(MetricForm::new),
            omega: inst.omega.clone().map(SymplecticForm::new),
        }
    }

    fn missing(what: &str, purpose: &str) -> CommandError {
        CommandError::Usage(format!("{purpose} needs {what}, which the instance does not declare"))
    }

    fn metric(&self, purpose: &str) -> CommandResult<&MetricForm> {
        match &self.metric {
            None => Err(Self::missing("a metric", purpose)),
            Some(m) => m.as_ref().map_err(|e| CommandError::Algebra(e.clone())),
        }
    }

    fn optional_metric(&self, purpose: &str) -> CommandResult<Option<&MetricForm>> {
        self.metric.as_ref().map(|_| self.metric(purpose)).transpose()
    }

    fn omega(&self, purpose: &str) -> CommandResult<&SymplecticForm> {
        match &self.omega {
            None => Err(Self::missing("omega", purpose)),
            Some(m) => m.as_ref().map_err(|e| CommandError::Algebra(e.clone())),
        }
    }

    fn j(&self, purpose: &str) -> CommandResult<&Matrix<Rational>> {
        self.inst.j.as_ref().ok_or_else(|| Self::missing("J", purpose))
    }

    fn product(&self, purpose: &str) -> CommandResult<&Tensor3<Rational>> {
        self.inst.product.as_ref().ok_or_else(|| Self::missing("a product", purpose))
    }

    /// The declared product, else the Levi-Civita product of the metric.
    fn connection(&self, purpose: &str) -> CommandResult<Tensor3<Rational>> {
        match &self.inst.product {
            Some(p) => Ok(p.clone()),
            None => Ok(levi_civita_product(&self.inst.bracket, &self.inst.twist, self.metric(purpose)?)?),
        }
    }

    /// The declared ω, else the form induced by `J` and the metric.
    fn symplectic(&self, purpose: &str) -> CommandResult<(SymplecticForm, bool)> {
        if self.omega.is_some() {
            return Ok((self.omega(purpose)?.clone(), false));
        }
        match (&self.inst.j, &self.metric) {
            (Some(j), Some(_)) => Ok((induced_symplectic(self.metric(purpose)?, &self.inst.twist, j)?, true)),
            _ => Err(Self::missing("omega, or J with a metric", purpose)),
        }
    }

    /// Runs `f` only when `J` is an almost complex structure; otherwise the
    /// almost complex failure is the verdict.
    fn with_complex(
        &self,
        purpose: &str,
        f: impl FnOnce(&Matrix<Rational>) -> CommandResult<Verdict>,
    ) -> CommandResult<Verdict> {
        let j = self.j(purpose)?;
        match check_almost_complex(j, &self.inst.twist)? {
            Verdict::Holds => f(j),
            fail => Ok(fail),
        }
    }

    fn run(&self, check: &str) -> CommandResult<Verdict> {
        let c = &self.inst.bracket;
        let phi = &self.inst.twist;
        Ok(match check {
            "antisymmetry" => check_antisymmetry(c),
            "morphism" => check_morphism(c, phi)?,
            "hom-jacobi" => check_hom_jacobi(c, phi),
            "jacobi" => check_jacobi(c),
            "pseudo-riemannian" => check_pseudo_riemannian(self.metric(check)?, phi)?,
            "phi-self-adjoint" => check_phi_selfadjoint(self.metric(check)?, phi)?,
            "symplectic" => check_symplectic(self.omega(check)?, c, phi)?,
            "almost-complex" => check_almost_complex(self.j(check)?, phi)?,
            "hermitian" => {
                let g = self.metric(check)?;
                self.with_complex(check, |j| Ok(check_hermitian_compatibility(j, g, phi)?))?
            }
            "nijenhuis" => self.with_complex(check, |j| Ok(nijenhuis_tensor(c, phi, j)?.verdict()))?,
            "kahler" => {
                let p = self.connection(check)?;
                self.with_complex(check, |j| Ok(check_kahler(&p, phi, j)?))?
            }
            "torsion" => check_torsion(self.product(check)?, c)?,
            "metric-compatibility" => check_metric_compatibility(self.product(check)?, self.metric(check)?, phi)?,
            "hom-left-symmetry" => check_hom_left_symmetric(self.product(check)?, phi),
            "hom-lie-admissible" => check_hom_lie_admissible(self.product(check)?, phi),
            "hom-bianchi" => check_hom_bianchi(&self.connection(check)?, phi),
            "twisted-dual-pairing" => check_twisted_dual_pairing(self.product(check)?, phi)?,
            other => {
                return Err(CommandError::Usage(format!(
                    "unknown check {other:?}; known checks: {}",
                    CHECKS.join(", ")
                )))
            }
        })
    }
}

/// The checks `verify` runs when none are requested: the hom-Lie axioms
/// plus whatever the declared structures make meaningful.
pub fn default_checks(inst: &BoundInstance) -> Vec<&'static str> {
    let mut checks = vec!["antisymmetry", "morphism", "hom-jacobi"];
    if inst.metric.is_some() {
        checks.push("pseudo-riemannian");
    }
    if inst.omega.is_some() {
        checks.push("symplectic");
    }
    if inst.j.is_some() {
        checks.push("almost-complex");
        if inst.metric.is_some() {
            checks.push("hermitian");
        }
    }
    if inst.product.is_some() {
        checks.push("torsion");
        if inst.metric.is_some() {
            checks.push("metric-compatibility");
        }
    }
    checks
}

fn new_report(inst: &BoundInstance) -> Report {
    Report::new(inst.name.clone(), inst.bindings.clone())
}

pub fn verify(inst: &BoundInstance, checks: Option<&[String]>) -> CommandResult<Report> {
    let s = Structures::new(inst);
    let names: Vec<String> = match checks {
        Some(list) if !list.is_empty() => list.to_vec(),
        _ => default_checks(inst).into_iter().map(String::from).collect(),
    };
    let mut report = new_report(inst);
    for name in &names {
        let verdict = s.run(name)?;
        report.record(name, verdict);
    }
    Ok(report)
}

pub fn build(inst: &BoundInstance, target: &str) -> CommandResult<Report> {
    let s = Structures::new(inst);
    let c = &inst.bracket;
    let phi = &inst.twist;
    let mut report = new_report(inst);
    match target {
        "levi-civita" => {
            let g = s.metric(target)?;
            let p = levi_civita_product(c, phi, g)?;
            report.record("torsion", check_torsion(&p, c)?);
            report.record("metric-compatibility", check_metric_compatibility(&p, g, phi)?);
            report.derive("product", Derived::Tensor(p));
        }
        "left-symmetric" => {
            let (om, induced) = s.symplectic(target)?;
            let a = symplectic_left_symmetric(&om, c, phi)?;
            report.record("hom-left-symmetry", check_hom_left_symmetric(&a, phi));
            report.record("torsion", check_torsion(&a, c)?);
            if induced {
                report.derive("omega", Derived::Matrix(om.matrix().clone()));
            }
            report.derive("product", Derived::Tensor(a));
        }
        "phase-space" => {
            let p = match &inst.product {
                Some(p) => p.clone(),
                None => symplectic_left_symmetric(&s.symplectic(target)?.0, c, phi)?,
            };
            let ps = build_phase_space(&p, phi, s.optional_metric(target)?)?;
            for (name, verdict) in ps.structural_checks()? {
                report.record(name, verdict);
            }
            report.record("nijenhuis", check_phase_space_complex(&ps));
            report.derive("product", Derived::Tensor(ps.product));
            report.derive("twist", Derived::Matrix(ps.twist));
            report.derive("omega", Derived::Matrix(ps.omega.matrix().clone()));
            report.derive("complex-structure", Derived::Matrix(ps.j_cal));
        }
        "complexify" => {
            let j = s.j(target)?;
            let split = complexify_and_split(c, phi, j)?;
            let integrability = check_integrability_equivalence(c, phi, j)?;
            report.record_flag("conjugation-swaps", split.conjugation_swaps());
            report.record_flag("integrability-agreement", integrability.agree());
            report.derive("basis10", Derived::ComplexVectors(split.basis10));
            report.derive("basis01", Derived::ComplexVectors(split.basis01));
            report.derive("integrability", Derived::Integrability(integrability));
        }
        "induced-omega" => {
            let j = s.j(target)?;
            let om = induced_symplectic(s.metric(target)?, phi, j)?;
            report.record("symplectic", check_symplectic(&om, c, phi)?);
            report.derive("omega", Derived::Matrix(om.matrix().clone()));
        }
        other => {
            return Err(CommandError::Usage(format!(
                "unknown target {other:?}; known targets: {}",
                TARGETS.join(", ")
            )))
        }
    }
    Ok(report)
}

/// Reads a twist family from a bound 2D instance with `[e1, e2] = e2`.
pub fn twist_of_instance(inst: &BoundInstance) -> CommandResult<TwistFamily2D> {
    if inst.dimension != 2 || inst.bracket != canonical_bracket_2d() {
        return Err(CommandError::Usage(
            "classify2 needs a 2-dimensional instance with bracket [e1, e2] = e2".into(),
        ));
    }
    TwistFamily2D::from_matrix(&inst.twist).ok_or_else(|| {
        CommandError::Usage(format!(
            "twist {} is not one of hat, bar, tilde(B) with B != 0",
            inst.twist
        ))
    })
}

/// Solves for almost complex structures on `([e1, e2] = e2, φ)`; when a
/// sample exists, carries it through the Hermitian and Kähler solvers.
/// Verdicts confirm each sample against the independent checkers.
pub fn classify2(twist: &TwistFamily2D) -> CommandResult<Report> {
    let phi = twist.matrix();
    let mut report = Report::new(twist.to_string(), Default::default());
    let complex = solve_almost_complex_2d(twist);
    if let Some(j) = complex.sample.clone() {
        report.record("almost-complex", check_almost_complex(&j, &phi)?);
        let hermitian = solve_hermitian_2d(twist, &j)?;
        if let Some(gram) = hermitian.sample.clone() {
            let g = MetricForm::new(gram)?;
            report.record("hermitian", check_hermitian_compatibility(&j, &g, &phi)?);
            let kahler = solve_kahler_2d(twist, &j, &g)?;
            report.derive("kahler", Derived::Family(Box::new(kahler)));
        }
        report.derive("hermitian", Derived::Family(Box::new(hermitian)));
    }
    report.derive("almost-complex", Derived::Family(Box::new(complex)));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::file::InstanceFile;
    use crate::instance::report::Outcome;
    use crate::scalar::q;
    use std::collections::BTreeMap;

    const KAHLER4: &str = r#"{
  "name": "kahler4",
  "dimension": 4,
  "params": ["a", "b", "A"],
  "phi": [["-1","0","0","0"],["0","1","0","0"],["0","0","-1","0"],["0","0","0","1"]],
  "bracket": [
    {"i": 1, "j": 2, "coeffs": ["0","0","-a","0"]},
    {"i": 1, "j": 3, "coeffs": ["0","b","0","0"]},
    {"i": 2, "j": 4, "coeffs": ["0","-a","0","0"]},
    {"i": 3, "j": 4, "coeffs": ["0","0","a","0"]}
  ],
  "metric": [["A*a/b","0","0","0"],["0","A","0","0"],["0","0","A*a/b","0"],["0","0","0","A"]],
  "J": [["0","0","-1","0"],["0","0","0","-1"],["1","0","0","0"],["0","1","0","0"]]
}"#;

    fn bound(text: &str, pairs: &[(&str, Rational)]) -> BoundInstance {
        let b: BTreeMap<String, Rational> = pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
        InstanceFile::parse(text).unwrap().bind(&b).unwrap()
    }

    fn kahler4() -> BoundInstance {
        bound(KAHLER4, &[("a", q(1, 1)), ("b", q(1, 1)), ("A", q(1, 1))])
    }

    #[test]
    fn verify_defaults_and_opt_in() {
        let inst = kahler4();
        let r = verify(&inst, None).unwrap();
        let names: Vec<&String> = r.verdicts.keys().collect();
        assert_eq!(names, ["almost-complex", "antisymmetry", "hermitian", "hom-jacobi", "morphism", "pseudo-riemannian"]);
        assert!(r.all_pass());
        let checks = ["nijenhuis".to_string(), "kahler".into(), "jacobi".into()];
        let r = verify(&inst, Some(&checks)).unwrap();
        assert_eq!(r.verdicts["nijenhuis"], Outcome::Pass);
        assert_eq!(r.verdicts["kahler"], Outcome::Pass);
        assert_eq!(r.verdicts["jacobi"], Outcome::Fail);
        assert_eq!(r.exit_code(), 1);
        assert_eq!(r.counterexamples[0].violation.witness, vec![1, 2, 4]);
    }

    #[test]
    fn verify_input_errors() {
        let inst = kahler4();
        assert!(matches!(verify(&inst, Some(&["symplectic".into()])), Err(CommandError::Usage(_))));
        assert!(matches!(verify(&inst, Some(&["bogus".into()])), Err(CommandError::Usage(_))));
    }

    #[test]
    fn build_levi_civita_has_e2e1_equal_e3() {
        let r = build(&kahler4(), "levi-civita").unwrap();
        assert!(r.all_pass());
        let Derived::Tensor(p) = &r.derived["product"] else { panic!() };
        assert_eq!(p.on_basis(1, 0), crate::linalg::Vector(vec![q(0, 1), q(0, 1), q(1, 1), q(0, 1)]));
    }

    #[test]
    fn build_targets_run() {
        let inst = kahler4();
        for t in TARGETS {
            let r = build(&inst, t).unwrap();
            assert!(!r.derived.is_empty(), "{t}");
        }
        let r = build(&inst, "left-symmetric").unwrap();
        assert!(r.derived.contains_key("omega"));
        assert!(r.all_pass());
    }

    #[test]
    fn classify_bar_is_none_and_hat_constrained() {
        let r = classify2(&TwistFamily2D::Bar).unwrap();
        assert!(r.verdicts.is_empty());
        let Derived::Family(f) = &r.derived["almost-complex"] else { panic!() };
        assert!(f.is_none());
        assert_eq!(r.exit_code(), 0);
        let r = classify2(&TwistFamily2D::Hat).unwrap();
        assert!(r.all_pass());
        assert!(r.derived.contains_key("hermitian"));
    }
}
