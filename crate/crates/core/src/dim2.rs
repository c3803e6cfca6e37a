//! Exact classification on the 2D algebra `[e1, e2] = e2`: almost complex,
//! Hermitian and Kähler structures for each twist family.
//!
//! Solutions are reached by exact linear algebra. Every returned sample is
//! re-verified by the corresponding checker before it is reported.

use std::fmt;

use serde::Serialize;

use crate::complex::{check_almost_complex, check_hermitian_compatibility, check_kahler};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::metric::{levi_civita_product, MetricForm};
use crate::scalar::{Field, Rational};
use crate::tensor::Tensor3;

/// The twists admitted by the 2D bracket.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwistFamily2D {
    /// `φ = Id`.
    Hat,
    /// `φ = diag(1, −1)`.
    Bar,
    /// `φ(e1) = e1 + B e2`, `φ(e2) = −e2`, `B ≠ 0`.
    Tilde(Rational),
}

impl TwistFamily2D {
    pub fn tag(&self) -> &'static str {
        match self {
            TwistFamily2D::Hat => "hat",
            TwistFamily2D::Bar => "bar",
            TwistFamily2D::Tilde(_) => "tilde",
        }
    }

    pub fn matrix(&self) -> Matrix<Rational> {
        let one = Rational::one();
        match self {
            TwistFamily2D::Hat => Matrix::identity(2),
            TwistFamily2D::Bar => Matrix::diag(vec![one.clone(), -one]),
            TwistFamily2D::Tilde(b) => {
                Matrix::from_rows(vec![vec![one.clone(), Rational::zero()], vec![b.clone(), -one]]).expect("2x2")
            }
        }
    }

    /// Recognizes one of the three families from a twist matrix.
    pub fn from_matrix(m: &Matrix<Rational>) -> Option<Self> {
        if m.rows() != 2 || m.cols() != 2 {
            return None;
        }
        let candidate = if m[(1, 0)].is_zero() {
            if m == &Matrix::identity(2) {
                TwistFamily2D::Hat
            } else {
                TwistFamily2D::Bar
            }
        } else {
            TwistFamily2D::Tilde(m[(1, 0)].clone())
        };
        (&candidate.matrix() == m).then_some(candidate)
    }

    /// `φ ≠ Id`.
    pub fn is_proper(&self) -> bool {
        !matches!(self, TwistFamily2D::Hat)
    }
}

impl fmt::Display for TwistFamily2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwistFamily2D::Tilde(b) => write!(f, "tilde(B={b})"),
            other => f.write_str(other.tag()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SolutionKind {
    None,
    Constrained,
}

/// A solution set described by free parameters and constraints, with one
/// verified sample and the steps that produced it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SolutionFamily {
    pub kind: SolutionKind,
    pub free_params: Vec<String>,
    pub constraints: Vec<String>,
    pub sample: Option<Matrix<Rational>>,
    /// The Levi-Civita product of a Kähler family.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub product: Option<Tensor3<Rational>>,
    pub derivation: Vec<String>,
}

impl SolutionFamily {
    fn none(derivation: Vec<String>) -> Self {
        SolutionFamily {
            kind: SolutionKind::None,
            free_params: Vec::new(),
            constraints: Vec::new(),
            sample: None,
            product: None,
            derivation,
        }
    }

    pub fn is_none(&self) -> bool {
        self.kind == SolutionKind::None
    }
}

/// `[e1, e2] = e2`.
pub fn canonical_bracket_2d() -> Tensor3<Rational> {
    crate::fixtures::bracket_2d()
}

/// Reads a matrix written row by row with row `i` holding the coordinates
/// of `J(e_i)`, returning the operator matrix (its transpose).
pub fn from_row_presentation(m: &Matrix<Rational>) -> Matrix<Rational> {
    m.transpose()
}

/// 2×2 matrix from its coordinates in `(E11, E12, E21, E22)`.
fn unflatten(x: &Vector<Rational>) -> Matrix<Rational> {
    Matrix::from_fn(2, 2, |r, c| x[2 * r + c].clone())
}

/// Linear map `X ↦ Xφ − φX` on 2×2 matrices, in the coordinates above.
fn commutator_system(phi: &Matrix<Rational>) -> Matrix<Rational> {
    let cols: Vec<Vector<Rational>> = (0..4)
        .map(|k| {
            let x = unflatten(&Vector::basis(4, k));
            (&(&x * phi) - &(phi * &x)).flatten()
        })
        .collect();
    Matrix::from_columns(cols).expect("4x4")
}

fn describe(m: &Matrix<Rational>) -> String {
    format!("[[{}, {}], [{}, {}]]", m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)])
}

/// Small integer vectors of length `r`, by increasing `Σ|v_i|`, then
/// lexicographically with values ordered `0, −1, 1, −2, 2, …`.
fn small_vectors(r: usize, max_norm: i64) -> Vec<Vec<i64>> {
    fn rank(x: i64) -> i64 {
        if x == 0 {
            0
        } else if x < 0 {
            -2 * x - 1
        } else {
            2 * x
        }
    }
    let mut out: Vec<Vec<i64>> = Vec::new();
    for norm in 1..=max_norm {
        let mut level = Vec::new();
        let mut stack = vec![Vec::new()];
        while let Some(prefix) = stack.pop() {
            let used: i64 = prefix.iter().map(|x: &i64| x.abs()).sum();
            if prefix.len() == r {
                if used == norm {
                    level.push(prefix);
                }
                continue;
            }
            for x in -(norm - used)..=(norm - used) {
                let mut next = prefix.clone();
                next.push(x);
                stack.push(next);
            }
        }
        level.sort_by_key(|v| v.iter().map(|&x| rank(x)).collect::<Vec<_>>());
        out.extend(level);
    }
    out
}

/// Whether the symmetric matrix `q` is negative semidefinite: every
/// principal minor of `−q` is nonnegative.
fn negative_semidefinite(q: &Matrix<Rational>) -> bool {
    let r = q.rows();
    let neg = -q.clone();
    (1u32..(1 << r)).all(|mask| {
        let idx: Vec<usize> = (0..r).filter(|i| mask & (1 << i) != 0).collect();
        let sub = Matrix::from_fn(idx.len(), idx.len(), |a, b| neg[(idx[a], idx[b])].clone());
        !sub.determinant().expect("square").is_negative()
    })
}

/// Almost complex structures commuting with the twist.
///
/// A 2×2 matrix squares to `−Id` exactly when its trace is 0 and its
/// determinant is 1. The solver intersects the commutant of `φ` with the
/// trace-free matrices, writes `det` on that subspace as a quadratic form
/// `Q`, and reports no solution when `Q ≤ 0` everywhere.
pub fn solve_almost_complex_2d(twist: &TwistFamily2D) -> SolutionFamily {
    let phi = twist.matrix();
    let mut derivation = vec![format!("twist {twist}: phi = {}", describe(&phi))];
    let sys = commutator_system(&phi);
    let trace = Matrix::from_rows(vec![vec![Rational::one(), Rational::zero(), Rational::zero(), Rational::one()]])
        .expect("1x4");
    let mut rows = sys.to_rows();
    rows.extend(trace.to_rows());
    let basis: Vec<Matrix<Rational>> = Matrix::from_rows(rows)
        .expect("5x4")
        .nullspace()
        .iter()
        .map(unflatten)
        .collect();
    derivation.push(format!(
        "commutant of phi has dimension {}; trace-free part spanned by {}",
        4 - sys.rank(),
        basis.iter().map(describe).collect::<Vec<_>>().join(", ")
    ));

    let r = basis.len();
    let det = |m: &Matrix<Rational>| m.determinant().expect("2x2");
    let half = Rational::new(1, 2);
    let q = Matrix::from_fn(r, r, |a, b| {
        if a == b {
            det(&basis[a])
        } else {
            (det(&(&basis[a] + &basis[b])) - det(&basis[a]) - det(&basis[b])) * half.clone()
        }
    });
    derivation.push("J^2 = -Id iff tr J = 0 and det J = 1 (Cayley-Hamilton)".to_string());
    derivation.push(format!("det J as a quadratic form in the coordinates: Gram {}", q));

    if r == 0 || negative_semidefinite(&q) {
        derivation.push("det J <= 0 on the whole solution space, so det J = 1 reduces to s^2 = -1: no solution".to_string());
        return SolutionFamily::none(derivation);
    }

    let sample = small_vectors(r, 4)
        .into_iter()
        .map(|v| {
            basis
                .iter()
                .zip(&v)
                .fold(Matrix::zeros(2, 2), |acc, (m, &s)| &acc + &m.scale(&Rational::from(s)))
        })
        .find(|j| det(j).is_one())
        .expect("an indefinite form represents 1 on small integers here");
    debug_assert!(check_almost_complex(&sample, &phi).expect("2D").holds());
    derivation.push(format!("sample with det J = 1: J = {}", describe(&sample)));

    let (free_params, constraints) = if r == 3 {
        (
            vec!["a".into(), "b".into(), "c".into()],
            vec!["J = [[a, b], [c, -a]]".into(), "a^2 + b*c = -1".into()],
        )
    } else {
        ((0..r).map(|i| format!("s{}", i + 1)).collect(), vec!["det(sum s_i M_i) = 1".into()])
    };
    SolutionFamily {
        kind: SolutionKind::Constrained,
        free_params,
        constraints,
        sample: Some(sample),
        product: None,
        derivation,
    }
}

/// Metrics `g` with `<(φJ)u, (φJ)v> = <u, v>` and `<φu, φv> = <u, v>`.
///
/// Both conditions are linear in `(g11, g12, g22)`. The one-dimensional
/// solution space is normalized to `g12 = 1` when possible, else `g11 = 1`.
pub fn solve_hermitian_2d(twist: &TwistFamily2D, j: &Matrix<Rational>) -> Result<SolutionFamily> {
    let phi = twist.matrix();
    if !check_almost_complex(j, &phi)?.holds() {
        return Err(Error::NoComplexStructure);
    }
    let k = &phi * j;
    let sym = |x: &Vector<Rational>| {
        Matrix::from_rows(vec![vec![x[0].clone(), x[1].clone()], vec![x[1].clone(), x[2].clone()]]).expect("2x2")
    };
    let mut rows = Vec::new();
    for t in [&k, &phi] {
        let cols: Vec<Vector<Rational>> = (0..3)
            .map(|a| {
                let g = sym(&Vector::basis(3, a));
                let d = &(&(&t.transpose() * &g) * t) - &g;
                Vector(vec![d[(0, 0)].clone(), d[(0, 1)].clone(), d[(1, 1)].clone()])
            })
            .collect();
        rows.extend(Matrix::from_columns(cols).expect("3x3").to_rows());
    }
    let system = Matrix::from_rows(rows).expect("6x3");
    let kernel = system.nullspace();
    let mut derivation = vec![
        format!("K = phi J = {}", describe(&k)),
        format!("K^T g K = g and phi^T g phi = g: solution space of dimension {}", kernel.len()),
    ];
    let nondegenerate: Vec<Matrix<Rational>> = kernel
        .iter()
        .map(sym)
        .filter(|g| !g.determinant().expect("2x2").is_zero())
        .collect();
    let Some(base) = nondegenerate.into_iter().next().filter(|_| kernel.len() == 1) else {
        derivation.push("no one-parameter nondegenerate family".into());
        return Ok(SolutionFamily::none(derivation));
    };
    let scale = if !base[(0, 1)].is_zero() {
        base[(0, 1)].recip()
    } else {
        base[(0, 0)].recip()
    }
    .expect("nonzero normalizer");
    let sample = base.scale(&scale);
    let g = MetricForm::new(sample.clone())?;
    debug_assert!(check_hermitian_compatibility(j, &g, &phi)?.holds());
    derivation.push(format!(
        "g = t * {} with det = t^2 * {}",
        describe(&sample),
        sample.determinant().expect("2x2")
    ));
    Ok(SolutionFamily {
        kind: SolutionKind::Constrained,
        free_params: vec!["t".into()],
        constraints: vec!["t != 0".into()],
        sample: Some(sample),
        product: None,
        derivation,
    })
}

/// The Levi-Civita product of `([e1,e2] = e2, φ, g)` and whether `J` is
/// Kähler for it.
pub fn solve_kahler_2d(twist: &TwistFamily2D, j: &Matrix<Rational>, g: &MetricForm) -> Result<SolutionFamily> {
    let phi = twist.matrix();
    if !check_almost_complex(j, &phi)?.holds() {
        return Ok(SolutionFamily::none(vec![format!(
            "no almost complex structure for twist {twist}: Kähler family is empty"
        )]));
    }
    if !check_hermitian_compatibility(j, g, &phi)?.holds() {
        return Err(Error::NotHermitian(format!("metric {} with J {}", describe(g.gram()), describe(j))));
    }
    let c = canonical_bracket_2d();
    let p = levi_civita_product(&c, &phi, g)?;
    let kahler = check_kahler(&p, &phi, j)?.holds();
    let mut derivation = vec![
        format!("Levi-Civita product of g = {}:", describe(g.gram())),
        p.to_string(),
    ];
    derivation.push(format!("L_e(phi J) = (phi J) L_e for all e: {kahler}"));
    if !kahler {
        return Ok(SolutionFamily::none(derivation));
    }
    Ok(SolutionFamily {
        kind: SolutionKind::Constrained,
        free_params: Vec::new(),
        constraints: Vec::new(),
        sample: Some(g.gram().clone()),
        product: Some(p),
        derivation,
    })
}

/// Almost complex solutions for every proper twist sampled.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NonexistenceReport {
    pub entries: Vec<(String, SolutionFamily)>,
    pub all_none: bool,
}

/// Runs the almost complex solver on `bar` and `tilde(B)` for
/// `B ∈ {1, 2, −1, 1/2, 7}`.
pub fn proper_nonexistence_report() -> NonexistenceReport {
    let mut twists = vec![TwistFamily2D::Bar];
    twists.extend(
        [Rational::from(1), Rational::from(2), Rational::from(-1), Rational::new(1, 2), Rational::from(7)]
            .into_iter()
            .map(TwistFamily2D::Tilde),
    );
    let entries: Vec<(String, SolutionFamily)> = twists
        .iter()
        .filter(|t| t.is_proper())
        .map(|t| (t.to_string(), solve_almost_complex_2d(t)))
        .collect();
    let all_none = entries.iter().all(|(_, s)| s.is_none());
    NonexistenceReport { entries, all_none }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::hom::{check_hom_jacobi, check_morphism};
    use crate::scalar::q;

    fn r(n: i64) -> Rational {
        q(n, 1)
    }

    #[test]
    fn bracket_is_hom_lie_for_all_twists() {
        let c = canonical_bracket_2d();
        for t in [TwistFamily2D::Hat, TwistFamily2D::Bar, TwistFamily2D::Tilde(r(2))] {
            assert!(check_morphism(&c, &t.matrix()).unwrap().holds());
            assert!(check_hom_jacobi(&c, &t.matrix()).holds());
        }
        let bar = TwistFamily2D::Bar.matrix();
        assert_eq!(bar.mul_vec(&c.on_basis(0, 1)), Vector(vec![r(0), r(-1)]));
    }

    #[test]
    fn twist_recognition() {
        for t in [TwistFamily2D::Hat, TwistFamily2D::Bar, TwistFamily2D::Tilde(q(-3, 4))] {
            assert_eq!(TwistFamily2D::from_matrix(&t.matrix()), Some(t));
        }
        assert_eq!(TwistFamily2D::from_matrix(&Matrix::from_ints(&[&[0, 1], &[1, 0]])), None);
    }

    #[test]
    fn small_vector_order() {
        let v = small_vectors(3, 2);
        assert_eq!(v[0], vec![0, 0, -1]);
        assert_eq!(v[1], vec![0, 0, 1]);
        assert_eq!(v[6], vec![0, 0, -2]);
    }

    #[test]
    fn hat_family() {
        let s = solve_almost_complex_2d(&TwistFamily2D::Hat);
        assert_eq!(s.kind, SolutionKind::Constrained);
        assert_eq!(s.sample, Some(Matrix::from_ints(&[&[0, -1], &[1, 0]])));
        assert!(s.constraints.contains(&"a^2 + b*c = -1".to_string()));
    }

    #[test]
    fn proper_twists_have_none() {
        assert!(solve_almost_complex_2d(&TwistFamily2D::Bar).is_none());
        assert!(solve_almost_complex_2d(&TwistFamily2D::Tilde(r(3))).is_none());
        assert!(solve_almost_complex_2d(&TwistFamily2D::Tilde(q(1, 2))).is_none());
        let rep = proper_nonexistence_report();
        assert!(rep.all_none);
        assert_eq!(rep.entries.len(), 6);
    }

    #[test]
    fn hermitian_case1() {
        let (a, h, d) = (r(1), r(1), r(-2));
        let j = fixtures::kahler2_case1_j(&a, &h, &d);
        assert_eq!(j, from_row_presentation(&Matrix::from_ints(&[&[1, -2], &[1, -1]])));
        let s = solve_hermitian_2d(&TwistFamily2D::Hat, &j).unwrap();
        assert_eq!(s.sample, Some(Matrix::from_ints(&[&[2, 1], &[1, 1]])));
        assert_eq!(s.sample.unwrap().determinant().unwrap(), r(1));
    }

    #[test]
    fn hermitian_case2() {
        let j = fixtures::kahler2_case2_j(&r(2));
        let s = solve_hermitian_2d(&TwistFamily2D::Hat, &j).unwrap();
        assert_eq!(s.sample, Some(Matrix::diag(vec![r(1), q(1, 4)])));
    }

    #[test]
    fn hermitian_needs_complex_structure() {
        let rot = Matrix::from_ints(&[&[0, -1], &[1, 0]]);
        assert_eq!(
            solve_hermitian_2d(&TwistFamily2D::Bar, &rot).unwrap_err(),
            Error::NoComplexStructure
        );
    }

    #[test]
    fn kahler_case1() {
        let (a, h, d) = (r(1), r(1), r(-2));
        let j = fixtures::kahler2_case1_j(&a, &h, &d);
        let g = MetricForm::new(fixtures::kahler2_case1_metric(&a, &h, &d)).unwrap();
        let s = solve_kahler_2d(&TwistFamily2D::Hat, &j, &g).unwrap();
        assert_eq!(s.kind, SolutionKind::Constrained);
        assert_eq!(s.product.unwrap(), fixtures::kahler2_case1_product(&a, &h, &d));
    }

    #[test]
    fn kahler_case2() {
        let d = r(2);
        let j = fixtures::kahler2_case2_j(&d);
        let g = MetricForm::new(fixtures::kahler2_case2_metric(&r(1), &d)).unwrap();
        let s = solve_kahler_2d(&TwistFamily2D::Hat, &j, &g).unwrap();
        let p = s.product.unwrap();
        assert_eq!(p, fixtures::kahler2_case2_product(&d));
        assert_eq!(p.on_basis(1, 1), Vector(vec![q(1, 4), r(0)]));
    }

    #[test]
    fn kahler_bar_is_vacuous() {
        let rot = Matrix::from_ints(&[&[0, -1], &[1, 0]]);
        let s = solve_kahler_2d(&TwistFamily2D::Bar, &rot, &MetricForm::identity(2)).unwrap();
        assert!(s.is_none());
    }
}
