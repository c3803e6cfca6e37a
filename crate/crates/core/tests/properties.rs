mod common;

use proptest::prelude::*;

use homlie::complex::{
    check_almost_complex, check_hermitian_compatibility, check_integrability_equivalence, check_kahler,
    complexify_and_split, induced_symplectic, nijenhuis_tensor,
};
use homlie::dim2::{
    canonical_bracket_2d, solve_almost_complex_2d, solve_hermitian_2d, solve_kahler_2d, TwistFamily2D,
};
use homlie::fixtures;
use homlie::hom::{check_hom_bianchi, check_hom_jacobi, check_hom_left_symmetric, check_hom_lie_admissible, commutator_bracket};
use homlie::linalg::{Matrix, Solution, Vector};
use homlie::metric::{
    check_metric_compatibility, check_phi_selfadjoint, check_pseudo_riemannian, check_symplectic, check_torsion,
    levi_civita_product, musical_flat, symplectic_left_symmetric, MetricForm, SymplecticForm,
};
use homlie::phase_space::{build_phase_space, check_dual_pairing, dual_rep, left_mult_rep};
use homlie::{q, GaussianRational, Rational, Tensor3};

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn matrix(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(rational(), n * n).prop_map(move |v| Matrix::from_fn(n, n, |r, c| v[r * n + c].clone()))
}

fn square_pair() -> impl Strategy<Value = (Matrix<Rational>, Matrix<Rational>)> {
    (1usize..=5).prop_flat_map(|n| (matrix(n), matrix(n)))
}

fn invertible_with_vector() -> impl Strategy<Value = (Matrix<Rational>, Vector<Rational>)> {
    (1usize..=6)
        .prop_flat_map(|n| (matrix(n), prop::collection::vec(rational(), n)))
        .prop_filter("invertible", |(a, _)| !a.determinant().unwrap().is_zero())
        .prop_map(|(a, x)| (a, Vector(x)))
}

fn tensor(n: usize) -> impl Strategy<Value = Tensor3<Rational>> {
    prop::collection::vec(rational(), n * n * n)
        .prop_map(move |v| Tensor3::from_fn(n, |k, i, j| v[(k * n + i) * n + j].clone()))
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (rational(), rational()).prop_map(|(re, im)| GaussianRational::new(re, im))
}

fn imex_params() -> impl Strategy<Value = (Rational, Rational, Rational)> {
    (nonzero(), nonzero(), nonzero())
}

/// `(a, h)` with `a ≠ 0`, `h ≠ 0`; `d` follows from `a² + hd = −1`.
fn kahler2_params() -> impl Strategy<Value = (Rational, Rational, Rational)> {
    (nonzero(), nonzero()).prop_map(|(a, h)| {
        let d = -(q(1, 1) + &a * &a) / h.clone();
        (a, h, d)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn solve_recovers_x((a, x) in invertible_with_vector()) {
        let b = a.mul_vec(&x);
        prop_assert_eq!(a.solve(&b).unwrap(), Solution::Unique(x));
    }

    #[test]
    fn determinant_is_multiplicative((a, b) in square_pair()) {
        let ab = &a * &b;
        prop_assert_eq!(ab.determinant().unwrap(), a.determinant().unwrap() * b.determinant().unwrap());
    }

    #[test]
    fn gaussian_conjugation(z in gaussian()) {
        prop_assert_eq!(z.conj().conj(), z.clone());
        let n = z.clone() * z.conj();
        prop_assert!(n.is_real());
        prop_assert_eq!(n, z.norm_sqr());
    }

    #[test]
    fn commutator_is_antisymmetric(p in (2usize..=4).prop_flat_map(tensor)) {
        prop_assert!(commutator_bracket(&p).is_antisymmetric());
    }

    #[test]
    fn hom_bianchi_is_unconditional(
        (p, phi) in (2usize..=4).prop_flat_map(|n| (tensor(n), matrix(n)))
    ) {
        check_hom_bianchi(&p, &phi).assert_holds();
    }

    #[test]
    fn hom_jacobi_verdict_is_basis_independent(seed in any::<u64>(), random in any::<bool>()) {
        let mut rng = common::rng(seed);
        let n = if seed % 2 == 0 { 2 } else { 4 };
        let (c, phi) = if random {
            (common::tensor(&mut rng, n, 2, 1), common::matrix(&mut rng, n, 2, 1))
        } else {
            let (c, phi, _) = common::pseudo_riemannian_instance(&mut rng, n);
            (c, phi)
        };
        let s = common::invertible(&mut rng, n);
        let c2 = c.change_basis(&s).unwrap();
        let phi2 = &(&s.inverse().unwrap() * &phi) * &s;
        prop_assert_eq!(check_hom_jacobi(&c, &phi).holds(), check_hom_jacobi(&c2, &phi2).holds());
    }

    #[test]
    fn levi_civita_is_torsion_free_and_compatible(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let (c, phi, g) = common::pseudo_riemannian_instance(&mut rng, if seed % 3 == 0 { 4 } else { 2 });
        let p = levi_civita_product(&c, &phi, &g).unwrap();
        check_torsion(&p, &c).unwrap().assert_holds();
        check_metric_compatibility(&p, &g, &phi).unwrap().assert_holds();
    }

    #[test]
    fn pseudo_riemannian_implies_self_adjoint(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let (_, phi, g) = common::pseudo_riemannian_instance(&mut rng, 2 + 2 * (seed % 2) as usize);
        check_pseudo_riemannian(&g, &phi).unwrap().assert_holds();
        check_phi_selfadjoint(&g, &phi).unwrap().assert_holds();
        // φ*(u♭) = (φu)♭.
        for i in 0..g.dim() {
            let u = Vector::basis(g.dim(), i);
            let lhs = phi.transpose().mul_vec(&musical_flat(&g, &u).unwrap());
            prop_assert_eq!(lhs, musical_flat(&g, &phi.mul_vec(&u)).unwrap());
        }
    }

    #[test]
    fn symplectic_product_has_the_bracket_as_commutator((a, b, big_a) in imex_params()) {
        let c = fixtures::imex_bracket(&a, &b);
        let phi = fixtures::imex_twist();
        let om = SymplecticForm::new(fixtures::imex_omega(&a, &b, &big_a)).unwrap();
        let p = symplectic_left_symmetric(&om, &c, &phi).unwrap();
        check_torsion(&p, &c).unwrap().assert_holds();
        check_hom_left_symmetric(&p, &phi).assert_holds();
        check_hom_lie_admissible(&p, &phi).assert_holds();
        let rep = left_mult_rep(&p, &phi).unwrap();
        let dual = dual_rep(&rep).unwrap();
        check_dual_pairing(&rep, &dual).assert_holds();
    }

    #[test]
    fn imex_structures_split_and_agree(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let (a, b) = (common::nonzero_rational(&mut rng, 4, 3), common::nonzero_rational(&mut rng, 4, 3));
        let c = fixtures::imex_bracket(&a, &b);
        let phi = fixtures::imex_twist();
        let j = common::imex_complex_structure(&mut rng);
        check_almost_complex(&j, &phi).unwrap().assert_holds();
        prop_assert!(nijenhuis_tensor(&c, &phi, &j).unwrap().0.is_antisymmetric());
        let split = complexify_and_split(&c, &phi, &j).unwrap();
        prop_assert_eq!(&split.pi10() + &split.pi01(), Matrix::identity(4));
        let i = GaussianRational::i();
        prop_assert_eq!(split.operator() * &split.pi10(), split.pi10().scale(&i));
        prop_assert!(check_integrability_equivalence(&c, &phi, &j).unwrap().agree());
    }

    #[test]
    fn hat_family_closure(a in rational(), b in nonzero()) {
        let c = -(q(1, 1) + &a * &a) / b.clone();
        let j = Matrix::from_rows(vec![vec![a.clone(), b], vec![c, -a]]).unwrap();
        check_almost_complex(&j, &TwistFamily2D::Hat.matrix()).unwrap().assert_holds();
        let rep = check_integrability_equivalence(&canonical_bracket_2d(), &Matrix::identity(2), &j).unwrap();
        prop_assert!(rep.agree());
    }

    #[test]
    fn kahler2_case1_branch((a, h, d) in kahler2_params()) {
        let p = fixtures::kahler2_case1_product(&a, &h, &d);
        prop_assert_eq!(commutator_bracket(&p), canonical_bracket_2d());
        let g = fixtures::kahler2_case1_metric(&a, &h, &d);
        prop_assert_eq!(g.determinant().unwrap(), (&a * &a).recip().unwrap());
        let j = fixtures::kahler2_case1_j(&a, &h, &d);
        let g = MetricForm::new(g).unwrap();
        let fam = solve_kahler_2d(&TwistFamily2D::Hat, &j, &g).unwrap();
        prop_assert_eq!(fam.product.as_ref(), Some(&p));
        check_kahler(&p, &Matrix::identity(2), &j).unwrap().assert_holds();
        let om = induced_symplectic(&g, &Matrix::identity(2), &j).unwrap();
        check_symplectic(&om, &canonical_bracket_2d(), &Matrix::identity(2)).unwrap().assert_holds();
    }

    #[test]
    fn kahler4_implies_symplectic((a, b, big_a) in imex_params()) {
        let phi = fixtures::imex_twist();
        let c = fixtures::imex_bracket(&a, &b);
        let j = fixtures::kahler4_j();
        let Ok(g) = MetricForm::new(fixtures::kahler4_metric(&a, &b, &big_a)) else { return Ok(()) };
        let p = levi_civita_product(&c, &phi, &g).unwrap();
        check_kahler(&p, &phi, &j).unwrap().assert_holds();
        let om = induced_symplectic(&g, &phi, &j).unwrap();
        check_symplectic(&om, &c, &phi).unwrap().assert_holds();
    }

    #[test]
    fn solver_samples_pass_checkers(a in rational(), b in nonzero(), big_b in nonzero()) {
        let c = -(q(1, 1) + &a * &a) / b.clone();
        let j = Matrix::from_rows(vec![vec![a.clone(), b], vec![c, -a]]).unwrap();
        let herm = solve_hermitian_2d(&TwistFamily2D::Hat, &j).unwrap();
        let g = MetricForm::new(herm.sample.unwrap()).unwrap();
        check_hermitian_compatibility(&j, &g, &Matrix::identity(2)).unwrap().assert_holds();
        let kahler = solve_kahler_2d(&TwistFamily2D::Hat, &j, &g).unwrap();
        if let Some(p) = &kahler.product {
            check_kahler(p, &Matrix::identity(2), &j).unwrap().assert_holds();
        }
        prop_assert!(solve_almost_complex_2d(&TwistFamily2D::Tilde(big_b)).is_none());
    }

    #[test]
    fn phase_space_embeds_v_and_dual((a, b, big_a) in imex_params()) {
        let phi = fixtures::imex_twist();
        let om = SymplecticForm::new(fixtures::imex_omega(&a, &b, &big_a)).unwrap();
        let p = symplectic_left_symmetric(&om, &fixtures::imex_bracket(&a, &b), &phi).unwrap();
        let ps = build_phase_space(&p, &phi, None).unwrap();
        let n = 4;
        for x in 0..2 * n {
            for y in 0..2 * n {
                let w = ps.product.on_basis(x, y);
                if x >= n && y >= n {
                    prop_assert!(w.is_zero());
                }
                if x < n && y < n {
                    prop_assert_eq!(w.slice(0, n), p.on_basis(x, y));
                    prop_assert!(w.slice(n, 2 * n).is_zero());
                }
            }
        }
        let omega = ps.omega.matrix();
        let twist = &ps.twist;
        prop_assert_eq!(&(&twist.transpose() * omega) * twist, omega.clone());
        check_symplectic(&ps.omega, &ps.bracket(), twist).unwrap().assert_holds();
    }
}

/// Changing any one constant of a Levi-Civita product breaks torsion or
/// compatibility.
#[test]
fn levi_civita_is_unique_on_fixtures() {
    let phi = fixtures::imex_twist();
    for (a, b, big_a) in [(q(1, 1), q(1, 1), q(1, 1)), (q(2, 1), q(3, 1), q(1, 1))] {
        let c = fixtures::imex_bracket(&a, &b);
        let g = MetricForm::new(fixtures::kahler4_metric(&a, &b, &big_a)).unwrap();
        let p = levi_civita_product(&c, &phi, &g).unwrap();
        for k in 0..4 {
            for i in 0..4 {
                for j in 0..4 {
                    let mut bumped = p.clone();
                    bumped.set(k, i, j, p.get(k, i, j).clone() + Rational::one());
                    let torsion = check_torsion(&bumped, &c).unwrap().holds();
                    let compat = check_metric_compatibility(&bumped, &g, &phi).unwrap().holds();
                    assert!(!(torsion && compat), "perturbing c[{k}][{i}][{j}] kept both identities");
                }
            }
        }
    }
}
