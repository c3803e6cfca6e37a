//! Representations, dual representations and the phase space `V ⊕ V*`.
//!
//! Dual vectors use the dual basis `e^i(e_j) = δ_ij`, so the transpose of
//! `φ` represents `φ*`.

use crate::complex::{compare_columns, nijenhuis_of, NijenhuisTensor};
use crate::error::{Error, Result};
use crate::hom::{check_dims, check_hom_jacobi, check_hom_left_symmetric, commutator_bracket, is_involutive, HomLieAlgebra};
use crate::linalg::{Matrix, Vector};
use crate::metric::{check_symplectic, MetricForm, SymplecticForm};
use crate::scalar::{Field, Rational};
use crate::tensor::Tensor3;
use crate::verdict::{Axiom, Verdict, Violation};

/// `(V, A, ρ)`: `rho[i]` is the matrix of `ρ(e_i)` on the carrier.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation<F: Field = Rational> {
    pub a: Matrix<F>,
    pub rho: Vec<Matrix<F>>,
    pub base: HomLieAlgebra<F>,
}

impl<F: Field> Representation<F> {
    pub fn carrier_dim(&self) -> usize {
        self.a.rows()
    }

    /// `ρ(u) = Σ u_i ρ(e_i)`.
    pub fn rho_of(&self, u: &Vector<F>) -> Matrix<F> {
        let m = self.carrier_dim();
        u.iter()
            .zip(&self.rho)
            .filter(|(x, _)| !x.is_zero())
            .fold(Matrix::zeros(m, m), |acc, (x, r)| &acc + &r.scale(x))
    }

    fn validate(&self) -> Result<()> {
        let m = self.carrier_dim();
        if !self.a.is_square() {
            return Err(Error::NonSquare {
                rows: self.a.rows(),
                cols: self.a.cols(),
            });
        }
        if self.rho.len() != self.base.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.base.dim(),
                found: self.rho.len(),
            });
        }
        if let Some(r) = self.rho.iter().find(|r| r.rows() != m || r.cols() != m) {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: r.rows(),
            });
        }
        Ok(())
    }

    fn pairs(&self, kind_twist: Axiom, kind_bracket: Axiom, admissible: bool) -> Verdict<F> {
        let n = self.base.dim();
        let twist = &self.base.twist;
        let rho_phi: Vec<Matrix<F>> = (0..n).map(|i| self.rho_of(&twist.column(i))).collect();
        for i in 0..n {
            let (lhs, rhs) = if admissible {
                (&self.a * &rho_phi[i], &self.rho[i] * &self.a)
            } else {
                (&rho_phi[i] * &self.a, &self.a * &self.rho[i])
            };
            if lhs != rhs {
                return Verdict::Fails(Violation::at(kind_twist, &[i], lhs.flatten(), rhs.flatten()));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let rho_br = self.rho_of(&self.base.bracket.on_basis(i, j));
                let (lhs, rhs) = if admissible {
                    (
                        &self.a * &rho_br,
                        &(&self.rho[i] * &rho_phi[j]) - &(&self.rho[j] * &rho_phi[i]),
                    )
                } else {
                    (
                        &rho_br * &self.a,
                        &(&rho_phi[i] * &self.rho[j]) - &(&rho_phi[j] * &self.rho[i]),
                    )
                };
                if lhs != rhs {
                    return Verdict::Fails(Violation::at(kind_bracket, &[i, j], lhs.flatten(), rhs.flatten()));
                }
            }
        }
        Verdict::Holds
    }
}

/// `ρ(φu)A = Aρ(u)` and `ρ([u,v])A = ρ(φu)ρ(v) − ρ(φv)ρ(u)`.
pub fn check_representation<F: Field>(rep: &Representation<F>) -> Result<Verdict<F>> {
    rep.validate()?;
    Ok(rep.pairs(Axiom::RepresentationTwist, Axiom::RepresentationBracket, false))
}

/// The representation conditions, then `Aρ(φu) = ρ(u)A` and
/// `Aρ([u,v]) = ρ(u)ρ(φv) − ρ(v)ρ(φu)`.
pub fn check_admissible<F: Field>(rep: &Representation<F>) -> Result<Verdict<F>> {
    Ok(check_representation(rep)?.and_then(|| rep.pairs(Axiom::AdmissibleTwist, Axiom::AdmissibleBracket, true)))
}

/// `ρ(e_i) = ad(e_i)`, `A = φ`.
pub fn adjoint_rep<F: Field>(g: &HomLieAlgebra<F>) -> Representation<F> {
    Representation {
        a: g.twist.clone(),
        rho: (0..g.dim()).map(|i| g.bracket.left_mult(i)).collect(),
        base: g.clone(),
    }
}

/// `ρ(e_i) = L_{e_i}`, `A = φ`, over the commutator hom-Lie algebra.
pub fn left_mult_rep<F: Field>(p: &Tensor3<F>, twist: &Matrix<F>) -> Result<Representation<F>> {
    check_dims(p, twist)?;
    if !check_hom_left_symmetric(p, twist).holds() {
        return Err(Error::NotLeftSymmetric);
    }
    Ok(Representation {
        a: twist.clone(),
        rho: (0..p.dim()).map(|i| p.left_mult(i)).collect(),
        base: HomLieAlgebra::new(commutator_bracket(p), twist.clone())?,
    })
}

/// `(V*, Aᵀ, ρ̃)` with `ρ̃(u) = −ρ(u)ᵀ`.
#[derive(Clone, Debug, PartialEq)]
pub struct DualRepresentation<F: Field = Rational> {
    pub a_star: Matrix<F>,
    pub rho_tilde: Vec<Matrix<F>>,
    pub base: HomLieAlgebra<F>,
}

impl<F: Field> DualRepresentation<F> {
    pub fn to_representation(&self) -> Representation<F> {
        Representation {
            a: self.a_star.clone(),
            rho: self.rho_tilde.clone(),
            base: self.base.clone(),
        }
    }
}

pub fn dual_rep<F: Field>(rep: &Representation<F>) -> Result<DualRepresentation<F>> {
    if !check_admissible(rep)?.holds() {
        return Err(Error::NotAdmissible);
    }
    Ok(DualRepresentation {
        a_star: rep.a.transpose(),
        rho_tilde: rep.rho.iter().map(|r| -r.transpose()).collect(),
        base: rep.base.clone(),
    })
}

/// `≺ρ̃(e_i)e^a, e_b≻ + ≺e^a, ρ(e_i)e_b≻ = 0` for all `i, a, b`.
pub fn check_dual_pairing<F: Field>(rep: &Representation<F>, dual: &DualRepresentation<F>) -> Verdict<F> {
    let m = rep.carrier_dim();
    for (i, (r, rt)) in rep.rho.iter().zip(&dual.rho_tilde).enumerate() {
        for a in 0..m {
            for b in 0..m {
                let lhs = rt.column(a)[b].clone();
                let rhs = -r.column(b)[a].clone();
                if lhs != rhs {
                    return Verdict::Fails(Violation::scalar(Axiom::DualPairing, &[i, a, b], lhs, rhs));
                }
            }
        }
    }
    Verdict::Holds
}

/// `≺L̃_{φ(e_i)} e^a, φ(e_j)≻ = −≺e_i·e_j, φ*(e^a)≻` with `L̃ = −Lᵀ`.
pub fn check_twisted_dual_pairing<F: Field>(p: &Tensor3<F>, twist: &Matrix<F>) -> Result<Verdict<F>> {
    check_dims(p, twist)?;
    let n = p.dim();
    let twist_t = twist.transpose();
    for i in 0..n {
        let l_tilde = -p.left_mult_by(&twist.column(i)).transpose();
        for j in 0..n {
            let prod = p.on_basis(i, j);
            for a in 0..n {
                let lhs = l_tilde.column(a).dot(&twist.column(j));
                let rhs = -prod.dot(&twist_t.column(a));
                if lhs != rhs {
                    return Ok(Verdict::Fails(Violation::scalar(Axiom::TwistedDualPairing, &[i, j, a], lhs, rhs)));
                }
            }
        }
    }
    Ok(Verdict::Holds)
}

/// The phase space `V ⊕ V*` of dimension `2n`: coordinates `0..n` are `V`,
/// `n..2n` the dual basis.
#[derive(Clone, Debug, PartialEq)]
pub struct PhaseSpaceInstance<F: Field = Rational> {
    pub base_dim: usize,
    /// `(u,a*)·(v,b*) = (u·v, L̃_{φ(u)} b*)`.
    pub product: Tensor3<F>,
    /// `Φ = φ ⊕ φ*`.
    pub twist: Matrix<F>,
    /// `ω((u,a*),(v,b*)) = ≺b*,u≻ − ≺a*,v≻`.
    pub omega: SymplecticForm<F>,
    /// `𝒥(u,a*) = (−φ(a*♯), φ*(u♭))`.
    pub j_cal: Matrix<F>,
}

/// Builds the phase space of an involutive hom-left-symmetric algebra.
///
/// `metric` supplies the musical isomorphisms used by `𝒥`; the identity
/// Gram matrix when `None`.
pub fn build_phase_space<F: Field>(
    p: &Tensor3<F>,
    twist: &Matrix<F>,
    metric: Option<&MetricForm<F>>,
) -> Result<PhaseSpaceInstance<F>> {
    check_dims(p, twist)?;
    if !is_involutive(twist) {
        return Err(Error::NonInvolutiveTwist);
    }
    if !check_hom_left_symmetric(p, twist).holds() {
        return Err(Error::NotLeftSymmetric);
    }
    assemble_phase_space(p, twist, metric)
}

/// The same data as [`build_phase_space`] without checking its hypotheses.
pub fn assemble_phase_space<F: Field>(
    p: &Tensor3<F>,
    twist: &Matrix<F>,
    metric: Option<&MetricForm<F>>,
) -> Result<PhaseSpaceInstance<F>> {
    check_dims(p, twist)?;
    let n = p.dim();
    let identity = MetricForm::identity(n);
    let g = metric.unwrap_or(&identity);
    if g.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: g.dim(),
        });
    }
    let big = 2 * n;
    let mut product = Tensor3::zeros(big);
    for i in 0..n {
        for j in 0..n {
            product.set_product(i, j, &p.on_basis(i, j).concat(&Vector::zeros(n)))?;
        }
        let l_tilde = -p.left_mult_by(&twist.column(i)).transpose();
        for b in 0..n {
            product.set_product(i, n + b, &Vector::zeros(n).concat(&l_tilde.column(b)))?;
        }
    }

    let twist_big = twist.direct_sum(&twist.transpose());

    let mut omega = Matrix::zeros(big, big);
    for i in 0..n {
        omega[(i, n + i)] = F::one();
        omega[(n + i, i)] = -F::one();
    }

    let g_inv = g.gram().inverse().map_err(|_| Error::DegenerateForm)?;
    let mut j_cal = Matrix::zeros(big, big);
    j_cal.set_block(0, n, &-(twist * &g_inv));
    j_cal.set_block(n, 0, &(&twist.transpose() * g.gram()));

    Ok(PhaseSpaceInstance {
        base_dim: n,
        product,
        twist: twist_big,
        omega: SymplecticForm::new(omega)?,
        j_cal,
    })
}

impl<F: Field> PhaseSpaceInstance<F> {
    pub fn dim(&self) -> usize {
        2 * self.base_dim
    }

    pub fn bracket(&self) -> Tensor3<F> {
        commutator_bracket(&self.product)
    }

    /// The structural checks of a phase space, in a fixed order:
    /// hom-left-symmetry, hom-Jacobi of the commutator, `Φ² = Id`, the
    /// symplectic conditions, `𝒥² = −Id`, `Φ𝒥 = 𝒥Φ`.
    pub fn structural_checks(&self) -> Result<Vec<(&'static str, Verdict<F>)>> {
        let big = self.dim();
        let bracket = self.bracket();
        let id = Matrix::identity(big);
        let symplectic = check_symplectic(&self.omega, &bracket, &self.twist)?;
        Ok(vec![
            ("hom-left-symmetry", check_hom_left_symmetric(&self.product, &self.twist)),
            ("hom-jacobi", check_hom_jacobi(&bracket, &self.twist)),
            (
                "twist-involutive",
                compare_columns(Axiom::PhaseSpaceTwistInvolutive, &(&self.twist * &self.twist), &id),
            ),
            ("symplectic", symplectic),
            (
                "complex-square",
                compare_columns(Axiom::ComplexSquare, &(&self.j_cal * &self.j_cal), &-id),
            ),
            (
                "complex-commutes-with-twist",
                compare_columns(
                    Axiom::ComplexCommutesWithTwist,
                    &(&self.twist * &self.j_cal),
                    &(&self.j_cal * &self.twist),
                ),
            ),
        ])
    }
}

/// `N_{Φ∘𝒥} = 0` for the commutator bracket of the phase space.
pub fn check_phase_space_complex<F: Field>(ps: &PhaseSpaceInstance<F>) -> Verdict<F> {
    NijenhuisTensor(nijenhuis_of(&ps.bracket(), &(&ps.twist * &ps.j_cal))).verdict()
}
