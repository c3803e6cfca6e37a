//! Checker outcomes: a pass, or the first counterexample found.

use std::fmt;

use serde::Serialize;

use crate::linalg::Vector;
use crate::scalar::{Field, Rational};

/// The identity a checker tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Antisymmetry,
    Morphism,
    HomJacobi,
    Jacobi,
    HomLeftSymmetry,
    HomBianchi,
    SubalgebraTwist,
    SubalgebraBracket,
    PseudoRiemannian,
    PhiSelfAdjoint,
    Torsion,
    MetricCompatibility,
    SymplecticCocycle,
    SymplecticInvariance,
    ComplexSquare,
    ComplexCommutesWithTwist,
    Nijenhuis,
    Hermitian,
    Kahler,
    RepresentationTwist,
    RepresentationBracket,
    AdmissibleTwist,
    AdmissibleBracket,
    PhaseSpaceTwistInvolutive,
    DualPairing,
    TwistedDualPairing,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Antisymmetry => "antisymmetry",
            Axiom::Morphism => "morphism",
            Axiom::HomJacobi => "hom-jacobi",
            Axiom::Jacobi => "jacobi",
            Axiom::HomLeftSymmetry => "hom-left-symmetry",
            Axiom::HomBianchi => "hom-bianchi",
            Axiom::SubalgebraTwist => "subalgebra-twist",
            Axiom::SubalgebraBracket => "subalgebra-bracket",
            Axiom::PseudoRiemannian => "pseudo-riemannian",
            Axiom::PhiSelfAdjoint => "phi-self-adjoint",
            Axiom::Torsion => "torsion",
            Axiom::MetricCompatibility => "metric-compatibility",
            Axiom::SymplecticCocycle => "symplectic-cocycle",
            Axiom::SymplecticInvariance => "symplectic-invariance",
            Axiom::ComplexSquare => "complex-square",
            Axiom::ComplexCommutesWithTwist => "complex-commutes-with-twist",
            Axiom::Nijenhuis => "nijenhuis",
            Axiom::Hermitian => "hermitian",
            Axiom::Kahler => "kahler",
            Axiom::RepresentationTwist => "representation-twist",
            Axiom::RepresentationBracket => "representation-bracket",
            Axiom::AdmissibleTwist => "admissible-twist",
            Axiom::AdmissibleBracket => "admissible-bracket",
            Axiom::PhaseSpaceTwistInvolutive => "phase-space-twist-involutive",
            Axiom::DualPairing => "dual-pairing",
            Axiom::TwistedDualPairing => "twisted-dual-pairing",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A failed identity at a basis witness, with both sides evaluated.
///
/// Witness indices are 1-based basis labels. For matrix-valued identities
/// `lhs`/`rhs` hold the row-major entries of the two matrices.
#[derive(Clone, PartialEq, Serialize)]
pub struct Violation<F: Field = Rational> {
    pub kind: Axiom,
    pub witness: Vec<usize>,
    pub lhs: Vector<F>,
    pub rhs: Vector<F>,
}

impl<F: Field> Violation<F> {
    /// Builds from 0-based indices.
    pub fn at(kind: Axiom, witness0: &[usize], lhs: Vector<F>, rhs: Vector<F>) -> Self {
        Violation {
            kind,
            witness: witness0.iter().map(|i| i + 1).collect(),
            lhs,
            rhs,
        }
    }

    pub fn scalar(kind: Axiom, witness0: &[usize], lhs: F, rhs: F) -> Self {
        Self::at(kind, witness0, Vector(vec![lhs]), Vector(vec![rhs]))
    }
}

impl<F: Field> fmt::Display for Violation<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w: Vec<String> = self.witness.iter().map(|i| i.to_string()).collect();
        write!(
            f,
            "{} fails at ({}): lhs = {}, rhs = {}",
            self.kind,
            w.join(","),
            self.lhs,
            self.rhs
        )
    }
}

impl<F: Field> fmt::Debug for Violation<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum Verdict<F: Field = Rational> {
    Holds,
    Fails(Violation<F>),
}

impl<F: Field> Verdict<F> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn violation(&self) -> Option<&Violation<F>> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(v) => Some(v),
        }
    }

    pub fn into_violation(self) -> Option<Violation<F>> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(v) => Some(v),
        }
    }

    /// First failure wins.
    pub fn and_then(self, next: impl FnOnce() -> Verdict<F>) -> Verdict<F> {
        match self {
            Verdict::Holds => next(),
            fail => fail,
        }
    }

    /// Panics with the counterexample if the verdict is a failure.
    #[track_caller]
    pub fn assert_holds(&self) {
        if let Verdict::Fails(v) = self {
            panic!("{v}");
        }
    }
}

impl<F: Field> From<Option<Violation<F>>> for Verdict<F> {
    fn from(v: Option<Violation<F>>) -> Self {
        match v {
            None => Verdict::Holds,
            Some(v) => Verdict::Fails(v),
        }
    }
}

/// Compares two vectors and turns a mismatch into a failed verdict.
pub(crate) fn compare<F: Field>(
    kind: Axiom,
    witness0: &[usize],
    lhs: Vector<F>,
    rhs: Vector<F>,
) -> Option<Violation<F>> {
    if lhs == rhs {
        None
    } else {
        Some(Violation::at(kind, witness0, lhs, rhs))
    }
}
