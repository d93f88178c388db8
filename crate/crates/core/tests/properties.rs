use lorinv::exactnum::{rat, BoostScalar, Rational};
use lorinv::invariant::{is_invariant, reynolds};
use lorinv::lorentz::{
    boost_in, hyperbolic_rotation, kappa_x, kappa_y, validate, Component, GroupGenerator, GroupKind,
    GroupParameters, GroupSpec, MinkowskiForm, RotationTag, enumerate_finite, DEFAULT_GROUP_CAP,
};
use lorinv::matrix::Matrix;
use lorinv::polyring::{membership, Poly};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = BoostScalar> {
    prop::collection::vec((-3i64..=3, -9i64..=9, 1i64..=5), 0..4)
        .prop_map(|ts| BoostScalar::from_terms(ts.into_iter().map(|(k, n, d)| (k, rat(n, d)))))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

/// Polynomial in `nvars` variables of total degree at most 3.
fn poly(nvars: usize) -> impl Strategy<Value = Poly<BoostScalar>> {
    prop::collection::vec((prop::collection::vec(0u32..=3, nvars), scalar()), 0..5).prop_map(move |ts| {
        let ts = ts.into_iter().filter(|(e, _)| e.iter().sum::<u32>() <= 3);
        Poly::from_terms(nvars, ts).unwrap()
    })
}

fn rational_matrix(n: usize) -> impl Strategy<Value = Matrix<BoostScalar>> {
    prop::collection::vec(rational(), n * n).prop_map(move |v| {
        let rows = v.chunks(n).map(|r| r.iter().cloned().map(BoostScalar::from_rational).collect()).collect();
        Matrix::from_rows(rows).unwrap()
    })
}

/// `Σ |c_k| e^{|k| |β| / 2}`, a bound on the magnitude of the value at `β`.
fn magnitude(a: &BoostScalar, beta: f64) -> f64 {
    a.terms()
        .map(|(k, c)| lorinv::exactnum::rational_to_f64(c).abs() * (k as f64 * beta / 2.0).abs().exp())
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn boost_scalar_ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &BoostScalar::from_int(0), a.clone());
        prop_assert_eq!(&a * &BoostScalar::from_int(1), a.clone());
        prop_assert_eq!(&a + &(-&a), BoostScalar::from_int(0));
        prop_assert_eq!(&a - &b, &a + &(-&b));
    }

    #[test]
    fn eval_numeric_is_a_homomorphism(a in scalar(), b in scalar(), beta in -2.0f64..2.0) {
        let (x, y) = (a.eval_numeric(beta).unwrap(), b.eval_numeric(beta).unwrap());
        let tol = 1e-12 * (1.0 + magnitude(&a, beta)) * (1.0 + magnitude(&b, beta));
        prop_assert!(((&a + &b).eval_numeric(beta).unwrap() - (x + y)).abs() <= tol);
        prop_assert!(((&a * &b).eval_numeric(beta).unwrap() - x * y).abs() <= tol);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn substitution_composes(p in poly(3), a in rational_matrix(3), b in rational_matrix(3)) {
        let lhs = p.substitute_linear(&a).unwrap().substitute_linear(&b).unwrap();
        let rhs = p.substitute_linear(&a.mul(&b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(p.substitute_linear(&Matrix::identity(3)).unwrap(), p);
    }

    #[test]
    fn gradient_is_linear(p in poly(3), q in poly(3), c in scalar()) {
        let lhs = (&p.scale(&c) + &q).gradient();
        let rhs = p.gradient().scale(&c).add(&q.gradient()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn membership_witness_reproduces_input(
        coeffs in prop::collection::vec((0u32..=2, 0u32..=2, rational()), 1..4)
    ) {
        let x: Poly<Rational> = Poly::var(2, 0);
        let y: Poly<Rational> = Poly::var(2, 1);
        let gens = vec![&x.pow(2) + &y.pow(2), &x * &y.pow(2)];
        let mut p = Poly::zero(2);
        for (i, j, c) in &coeffs {
            p = &p + &(&gens[0].pow(*i) * &gens[1].pow(*j)).scale(c);
        }
        let r = membership(&p, &gens).unwrap();
        prop_assert!(r.inside);
        prop_assert_eq!(r.witness.unwrap().evaluate(&gens, 2), p.clone());
        // x alone has odd degree in x, outside these generators
        let off = &p + &x;
        prop_assert!(!membership(&off, &gens).unwrap().inside);
    }

    #[test]
    fn reynolds_is_an_idempotent_projection(p in poly(2), order in 2u32..=6) {
        let gen = GroupGenerator::rotation(2, RotationTag::new(order, (0, 1)).unwrap());
        let g = enumerate_finite(2, std::slice::from_ref(&gen), DEFAULT_GROUP_CAP).unwrap();
        let r = reynolds(&p, &g).unwrap();
        prop_assert_eq!(reynolds(&r, &g).unwrap(), r.clone());
        let spec = GroupSpec {
            kind: GroupKind::Finite,
            dim: 2,
            signature: None,
            generators: vec![gen],
            lattice_rank: None,
            parameters: GroupParameters::default(),
        };
        prop_assert!(is_invariant(&r, &spec).unwrap().invariant);
    }

    #[test]
    fn components_multiply_like_the_klein_group(m1 in -3i64..=3, m2 in -3i64..=3, i in 0usize..4, j in 0usize..4) {
        let form = MinkowskiForm::new(1);
        let reps = [Matrix::identity(2), form.lambda_p(), form.lambda_t(), form.lambda_pt()];
        let a = validate(&reps[i].mul(&hyperbolic_rotation(m1)).unwrap(), 1).unwrap();
        let b = validate(&reps[j].mul(&hyperbolic_rotation(m2)).unwrap(), 1).unwrap();
        let ca = a.component().unwrap();
        let cb = b.component().unwrap();
        prop_assert_eq!(a.mul(&b).unwrap().component().unwrap(), ca.compose(&cb));
        prop_assert_eq!(a.inverse().unwrap().component().unwrap(), ca);
        prop_assert_eq!(ca.compose(&ca), Component::Identity);
    }
}

#[test]
fn reflections_sit_in_the_reversal_components() {
    assert_eq!(validate(&kappa_x(), 1).unwrap().component().unwrap(), Component::TimeReversal);
    assert_eq!(validate(&kappa_y(), 1).unwrap().component().unwrap(), Component::SpaceReversal);
    assert_eq!(validate(&boost_in(3, 2), 3).unwrap().component().unwrap(), Component::Identity);
}
