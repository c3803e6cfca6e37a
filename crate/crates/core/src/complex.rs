//! Almost complex, Hermitian and Kähler structures, the Nijenhuis torsion
//! of `φ∘J`, and the splitting of the complexification.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hom::{check_dims, check_subalgebra, is_involutive};
use crate::linalg::{Matrix, Vector};
use crate::metric::{check_pseudo_riemannian, MetricForm, SymplecticForm};
use crate::scalar::{Field, GaussianRational, Rational};
use crate::tensor::Tensor3;
use crate::verdict::{compare, Axiom, Verdict, Violation};

fn require_shape<F: Field>(j: &Matrix<F>, twist: &Matrix<F>) -> Result<()> {
    if !j.is_square() {
        return Err(Error::NonSquare {
            rows: j.rows(),
            cols: j.cols(),
        });
    }
    if j.rows() != twist.rows() || !twist.is_square() {
        return Err(Error::DimensionMismatch {
            expected: j.rows(),
            found: twist.rows(),
        });
    }
    Ok(())
}

/// Compares two matrices column by column; the witness is the basis vector
/// whose images differ.
pub(crate) fn compare_columns<F: Field>(kind: Axiom, lhs: &Matrix<F>, rhs: &Matrix<F>) -> Verdict<F> {
    for c in 0..lhs.cols() {
        if let Some(v) = compare(kind, &[c], lhs.column(c), rhs.column(c)) {
            return Verdict::Fails(v);
        }
    }
    Verdict::Holds
}

/// `J² = −Id` and `φJ = Jφ`.
///
/// Odd dimensions are rejected outright: `det(J)² = (−1)^n` has no real
/// solution for odd `n`.
pub fn check_almost_complex<F: Field>(j: &Matrix<F>, twist: &Matrix<F>) -> Result<Verdict<F>> {
    require_shape(j, twist)?;
    let n = j.rows();
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    if !is_involutive(twist) {
        return Err(Error::NonInvolutiveTwist);
    }
    let square = compare_columns(Axiom::ComplexSquare, &(j * j), &-Matrix::identity(n));
    Ok(square.and_then(|| compare_columns(Axiom::ComplexCommutesWithTwist, &(twist * j), &(j * twist))))
}

fn require_almost_complex<F: Field>(j: &Matrix<F>, twist: &Matrix<F>) -> Result<()> {
    match check_almost_complex(j, twist)? {
        Verdict::Holds => Ok(()),
        Verdict::Fails(v) => Err(Error::NotAlmostComplex(v.to_string())),
    }
}

/// `N(u,v) = [Ku, Kv] − K[Ku, v] − K[u, Kv] − [u, v]` for an arbitrary
/// endomorphism `K`, on basis pairs.
pub(crate) fn nijenhuis_of<F: Field>(c: &Tensor3<F>, k: &Matrix<F>) -> Tensor3<F> {
    let n = c.dim();
    let images: Vec<Vector<F>> = (0..n).map(|i| k.column(i)).collect();
    let mut out = Tensor3::zeros(n);
    for i in 0..n {
        for j in i + 1..n {
            let e_i = Vector::basis(n, i);
            let e_j = Vector::basis(n, j);
            let a = c.apply(&images[i], &images[j]);
            let b = k.mul_vec(&c.apply(&images[i], &e_j));
            let d = k.mul_vec(&c.apply(&e_i, &images[j]));
            let w = &(&(&a - &b) - &d) - &c.on_basis(i, j);
            out.set_product(i, j, &w).expect("dimension");
            out.set_product(j, i, &-w).expect("dimension");
        }
    }
    out
}

/// The Nijenhuis torsion of `φ∘J`, antisymmetric in its two arguments.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct NijenhuisTensor<F: Field = Rational>(pub Tensor3<F>);

impl<F: Field> NijenhuisTensor<F> {
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// First pair `(i, j)`, `i < j`, with `N(e_i, e_j) ≠ 0`.
    pub fn verdict(&self) -> Verdict<F> {
        let n = self.0.dim();
        for i in 0..n {
            for j in i + 1..n {
                let w = self.0.on_basis(i, j);
                if !w.is_zero() {
                    return Verdict::Fails(Violation::at(Axiom::Nijenhuis, &[i, j], w, Vector::zeros(n)));
                }
            }
        }
        Verdict::Holds
    }
}

pub fn nijenhuis_tensor<F: Field>(c: &Tensor3<F>, twist: &Matrix<F>, j: &Matrix<F>) -> Result<NijenhuisTensor<F>> {
    check_dims(c, twist)?;
    require_almost_complex(j, twist)?;
    Ok(NijenhuisTensor(nijenhuis_of(c, &(twist * j))))
}

/// Pseudo-Riemannian condition, then `<(φJ)e_i, (φJ)e_j> = <e_i, e_j>`.
pub fn check_hermitian_compatibility<F: Field>(j: &Matrix<F>, g: &MetricForm<F>, twist: &Matrix<F>) -> Result<Verdict<F>> {
    require_almost_complex(j, twist)?;
    let base = check_pseudo_riemannian(g, twist)?;
    Ok(base.and_then(|| {
        let k = twist * j;
        let n = k.rows();
        for a in 0..n {
            for b in a..n {
                let lhs = g.eval(&k.column(a), &k.column(b));
                let rhs = g.gram()[(a, b)].clone();
                if lhs != rhs {
                    return Verdict::Fails(Violation::scalar(Axiom::Hermitian, &[a, b], lhs, rhs));
                }
            }
        }
        Verdict::Holds
    }))
}

/// `L_{e_i}·(φJ) = (φJ)·L_{e_i}` for every `i`.
///
/// `p` is taken as given; pass the hom-Levi-Civita product of the metric.
pub fn check_kahler<F: Field>(p: &Tensor3<F>, twist: &Matrix<F>, j: &Matrix<F>) -> Result<Verdict<F>> {
    check_dims(p, twist)?;
    require_almost_complex(j, twist)?;
    let k = twist * j;
    for i in 0..p.dim() {
        let l = p.left_mult(i);
        let lhs = &l * &k;
        let rhs = &k * &l;
        if lhs != rhs {
            return Ok(Verdict::Fails(Violation::at(Axiom::Kahler, &[i], lhs.flatten(), rhs.flatten())));
        }
    }
    Ok(Verdict::Holds)
}

/// `Ω(e_i, e_j) = <(φJ)e_i, e_j>`, i.e. `Ω = (φJ)ᵀ·gram`.
pub fn induced_symplectic<F: Field>(g: &MetricForm<F>, twist: &Matrix<F>, j: &Matrix<F>) -> Result<SymplecticForm<F>> {
    if let Verdict::Fails(v) = check_hermitian_compatibility(j, g, twist)? {
        return Err(Error::NotHermitian(v.to_string()));
    }
    let k = twist * j;
    SymplecticForm::new(&k.transpose() * g.gram())
}

/// `g^ℂ = g^{1,0} ⊕ g^{0,1}`, the `±i` eigenspaces of `K = φ∘J`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComplexSplit {
    pub basis10: Vec<Vector<GaussianRational>>,
    pub basis01: Vec<Vector<GaussianRational>>,
    #[serde(skip)]
    k: Matrix<GaussianRational>,
}

impl ComplexSplit {
    /// `K = φ∘J` over the Gaussian rationals.
    pub fn operator(&self) -> &Matrix<GaussianRational> {
        &self.k
    }

    fn projection(&self, sign: i64) -> Matrix<GaussianRational> {
        let n = self.k.rows();
        let half = GaussianRational::real(Rational::new(1, 2));
        let i = GaussianRational::new(Rational::zero(), Rational::from(sign));
        (&Matrix::identity(n) + &self.k.scale(&i)).scale(&half)
    }

    /// `π¹⁰(w) = ½(w − iKw)`.
    pub fn pi10(&self) -> Matrix<GaussianRational> {
        self.projection(-1)
    }

    /// `π⁰¹(w) = ½(w + iKw)`.
    pub fn pi01(&self) -> Matrix<GaussianRational> {
        self.projection(1)
    }

    /// Every conjugated `basis10` vector lies in `span(basis01)`.
    pub fn conjugation_swaps(&self) -> bool {
        if self.basis01.is_empty() {
            return self.basis10.is_empty();
        }
        let span = Matrix::from_columns(self.basis01.clone()).expect("consistent lengths");
        self.basis10.iter().all(|w| crate::hom::in_span(&span, &w.conj()))
    }
}

fn independent_subset(candidates: Vec<Vector<GaussianRational>>) -> Vec<Vector<GaussianRational>> {
    let mut kept: Vec<Vector<GaussianRational>> = Vec::new();
    for w in candidates {
        let mut trial = kept.clone();
        trial.push(w);
        let m = Matrix::from_columns(trial.clone()).expect("consistent lengths");
        if m.rank() == trial.len() {
            kept = trial;
        }
    }
    kept
}

/// Splits the complexification using the vectors `e_k − i(φJ)e_k`, kept
/// greedily in index order while independent.
pub fn complexify_and_split(c: &Tensor3<Rational>, twist: &Matrix<Rational>, j: &Matrix<Rational>) -> Result<ComplexSplit> {
    check_dims(c, twist)?;
    require_almost_complex(j, twist)?;
    let k = (twist * j).to_gaussian();
    let n = k.rows();
    let i = GaussianRational::i();
    let candidates = (0..n)
        .map(|a| &Vector::basis(n, a) - &k.column(a).scale(&i))
        .collect();
    let basis10 = independent_subset(candidates);
    let basis01 = basis10.iter().map(|w| w.conj()).collect();
    Ok(ComplexSplit { basis10, basis01, k })
}

/// The three integrability conditions, computed independently.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IntegrabilityReport {
    pub subalg10: bool,
    pub subalg01: bool,
    pub nijenhuis_zero: bool,
}

impl IntegrabilityReport {
    pub fn agree(&self) -> bool {
        self.subalg10 == self.subalg01 && self.subalg01 == self.nijenhuis_zero
    }
}

pub fn check_integrability_equivalence(
    c: &Tensor3<Rational>,
    twist: &Matrix<Rational>,
    j: &Matrix<Rational>,
) -> Result<IntegrabilityReport> {
    let split = complexify_and_split(c, twist, j)?;
    let cg = c.to_gaussian();
    let tg = twist.to_gaussian();
    let subalg10 = check_subalgebra(&cg, &tg, &split.basis10)?.holds();
    let subalg01 = check_subalgebra(&cg, &tg, &split.basis01)?.holds();
    let nijenhuis_zero = nijenhuis_tensor(c, twist, j)?.is_zero();
    Ok(IntegrabilityReport {
        subalg10,
        subalg01,
        nijenhuis_zero,
    })
}
