use idempo::algebra::{
    classify_spectrum, eigenvalue_set, restrict_element, restrict_scalars, AlgebraElement,
    StructureTensor,
};
use idempo::fields::{ExtensionField, Field, LaurentField, LaurentSeries, PrimeField, Rationals};
use idempo::solver::{
    count_solutions_extension, solve_exact_dim2, solve_exhaustive, QuadraticSystem, SolveConfig,
};
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn check_axioms<F: Field>(f: &F, a: &F::Elem, b: &F::Elem, c: &F::Elem) -> Result<(), TestCaseError> {
    prop_assert!(f.equals(&f.add(&f.add(a, b), c), &f.add(a, &f.add(b, c))));
    prop_assert!(f.equals(&f.mul(&f.mul(a, b), c), &f.mul(a, &f.mul(b, c))));
    prop_assert!(f.equals(&f.add(a, b), &f.add(b, a)));
    prop_assert!(f.equals(&f.mul(a, b), &f.mul(b, a)));
    prop_assert!(f.equals(&f.mul(a, &f.add(b, c)), &f.add(&f.mul(a, b), &f.mul(a, c))));
    prop_assert!(f.is_zero(&f.add(a, &f.neg(a))));
    prop_assert!(f.equals(&f.add(a, &f.zero()), a));
    prop_assert!(f.equals(&f.mul(a, &f.one()), a));
    if !f.is_zero(a) {
        prop_assert!(f.is_one(&f.mul(a, &f.inv(a).unwrap())));
    } else {
        prop_assert!(f.inv(a).is_err());
    }
    Ok(())
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-60i64..60, 1i64..40).prop_map(|(n, d)| Rationals.ratio(n, d))
}

fn f27() -> ExtensionField<PrimeField> {
    ExtensionField::galois(3, 3).unwrap()
}

fn f27_elem() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(0u64..3, 3)
}

fn laurent() -> LaurentField<Rationals> {
    LaurentField::new(&Rationals, 6).unwrap()
}

fn series() -> impl Strategy<Value = LaurentSeries<BigRational>> {
    (-3i64..4, prop::collection::vec(rational(), 6)).prop_map(|(nu, coeffs)| laurent().series(nu, coeffs))
}

fn regular_series() -> impl Strategy<Value = LaurentSeries<BigRational>> {
    (0i64..4, prop::collection::vec(rational(), 6)).prop_map(|(nu, coeffs)| laurent().series(nu, coeffs))
}

fn tensor_f5(dim: usize) -> impl Strategy<Value = StructureTensor<PrimeField>> {
    let f5 = PrimeField::new(5).unwrap();
    prop::collection::vec(0u64..5, dim * dim * dim)
        .prop_map(move |flat| StructureTensor::from_flat(&f5, dim, flat).unwrap())
}

fn tensor_q(dim: usize) -> impl Strategy<Value = StructureTensor<Rationals>> {
    prop::collection::vec(-4i64..5, dim * dim * dim).prop_map(move |flat| {
        StructureTensor::from_flat(&Rationals, dim, flat.iter().map(|&c| Rationals.from_i64(c)).collect()).unwrap()
    })
}

fn elem_f5(dim: usize) -> impl Strategy<Value = AlgebraElement<PrimeField>> {
    prop::collection::vec(0u64..5, dim).prop_map(AlgebraElement::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rational_axioms(a in rational(), b in rational(), c in rational()) {
        check_axioms(&Rationals, &a, &b, &c)?;
    }

    #[test]
    fn prime_axioms(a in 0u64..101, b in 0u64..101, c in 0u64..101) {
        check_axioms(&PrimeField::new(101).unwrap(), &a, &b, &c)?;
    }

    #[test]
    fn extension_axioms(a in f27_elem(), b in f27_elem(), c in f27_elem()) {
        check_axioms(&f27(), &a, &b, &c)?;
    }

    #[test]
    fn laurent_axioms(a in series(), b in series(), c in series()) {
        check_axioms(&laurent(), &a, &b, &c)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn residue_split_recomposes(a in regular_series()) {
        let l = laurent();
        let (constant, tail) = l.residue_decompose(&a).unwrap();
        prop_assert!(l.equals(&l.recompose(&constant, &tail), &a));
        prop_assert!(l.is_zero(&tail) || l.laurent_valuation(&tail).unwrap() >= 1);
        prop_assert_eq!(constant, l.coeff(&a, 0).unwrap());
    }

    #[test]
    fn valuation_is_additive_and_ultrametric(a in series(), b in series()) {
        let l = laurent();
        let (va, vb) = (l.laurent_valuation(&a).unwrap(), l.laurent_valuation(&b).unwrap());
        prop_assert_eq!(l.laurent_valuation(&l.mul(&a, &b)).unwrap(), va + vb);
        let sum = l.add(&a, &b);
        if let Ok(vs) = l.laurent_valuation(&sum) {
            prop_assert!(vs >= va.min(vb));
        }
    }

    #[test]
    fn multiplication_is_bilinear(
        a in tensor_f5(3), x in elem_f5(3), x2 in elem_f5(3), y in elem_f5(3), s in 0u64..5, t in 0u64..5,
    ) {
        let f = a.field().clone();
        let lhs = a.multiply(&x.scale(&f, &s).add(&f, &x2.scale(&f, &t)), &y).unwrap();
        let rhs = a.multiply(&x, &y).unwrap().scale(&f, &s).add(&f, &a.multiply(&x2, &y).unwrap().scale(&f, &t));
        prop_assert_eq!(&lhs, &rhs);
        let lhs = a.multiply(&y, &x.scale(&f, &s).add(&f, &x2.scale(&f, &t))).unwrap();
        let rhs = a.multiply(&y, &x).unwrap().scale(&f, &s).add(&f, &a.multiply(&y, &x2).unwrap().scale(&f, &t));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn quadratic_operator_is_homogeneous(a in tensor_q(3), c in rational(), x in prop::collection::vec(rational(), 3)) {
        let q = Rationals;
        let x = AlgebraElement::new(x);
        let lhs = a.quadratic_operator(&x.scale(&q, &c)).unwrap();
        let rhs = a.quadratic_operator(&x).unwrap().scale(&q, &q.mul(&c, &c));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn symmetrize_keeps_v(a in tensor_f5(3), x in elem_f5(3)) {
        let s = a.symmetrize().unwrap();
        prop_assert!(s.is_commutative());
        prop_assert_eq!(a.quadratic_operator(&x).unwrap(), s.quadratic_operator(&x).unwrap());
    }

    #[test]
    fn rescaled_eigenvectors_are_canonical(a in tensor_f5(2), x in elem_f5(2)) {
        prop_assume!(!x.is_zero(a.field()));
        if let Some(lambda) = a.eigencheck(&x).unwrap() {
            let z = a.rescale_to_canonical(&x, &lambda).unwrap();
            let zz = a.quadratic_operator(&z).unwrap();
            if lambda == 0 {
                prop_assert!(zz.is_zero(a.field()));
            } else {
                prop_assert_eq!(zz, z);
            }
        }
    }

    #[test]
    fn restriction_commutes_with_multiplication(seed in any::<u64>()) {
        let f9 = ExtensionField::galois(3, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = StructureTensor::random(&f9, 2, false, &mut rng).unwrap();
        let r = restrict_scalars(&a).unwrap();
        prop_assert_eq!(r.dim(), 4);
        let x = AlgebraElement::random(&f9, 2, &mut rng);
        let y = AlgebraElement::random(&f9, 2, &mut rng);
        let down = restrict_element(&f9, &a.multiply(&x, &y).unwrap());
        let across = r.multiply(&restrict_element(&f9, &x), &restrict_element(&f9, &y)).unwrap();
        prop_assert_eq!(down, across);
    }

    #[test]
    fn scaling_the_tensor_scales_lambda(a in tensor_f5(2), c in 1u64..5) {
        let f5 = a.field().clone();
        let cfg = SolveConfig::default();
        let base = solve_exhaustive(&QuadraticSystem::build(&a), &cfg).unwrap();
        let scaled = solve_exhaustive(&QuadraticSystem::build(&a.scaled(&c)), &cfg).unwrap();
        let mut expected: Vec<Vec<u64>> = base
            .iter()
            .filter_map(|s| {
                let mut p = s.coords().to_vec();
                p[2] = f5.mul(&p[2], &c);
                idempo::solver::ProjectiveSolution::exact(&f5, p).map(|s| s.coords().to_vec())
            })
            .collect();
        let mut got: Vec<Vec<u64>> = scaled.iter().map(|s| s.coords().to_vec()).collect();
        expected.sort();
        got.sort();
        prop_assert_eq!(expected, got);
    }

    #[test]
    fn rational_directions_reduce_to_solutions_mod_p(a in tensor_q(2)) {
        let exact = solve_exact_dim2(&a).unwrap();
        for p in [5u64, 7, 11] {
            let fp = PrimeField::new(p).unwrap();
            let reduce = |c: &BigRational| -> Option<u64> {
                let n = fp.from_i64(i64::try_from(c.numer().clone()).ok()?);
                let d = fp.from_i64(i64::try_from(c.denom().clone()).ok()?);
                fp.div(&n, &d).ok()
            };
            let modp = a.map_field(&fp, |c| reduce(c).unwrap()).unwrap();
            let sols = solve_exhaustive(&QuadraticSystem::build(&modp), &SolveConfig::default()).unwrap();
            for s in &exact.solutions {
                let Some(coords) = s.coords().iter().map(reduce).collect::<Option<Vec<u64>>>() else { continue };
                let Some(point) = idempo::solver::ProjectiveSolution::exact(&fp, coords) else { continue };
                prop_assert!(sols.iter().any(|t| t.coords() == point.coords()), "p = {}", p);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(25))]

    #[test]
    fn counts_grow_along_divisibility(a in tensor_f5(2)) {
        let sys = QuadraticSystem::build(&a);
        let cfg = SolveConfig::default();
        let c: Vec<u128> = (1..=4).map(|k| count_solutions_extension(&sys, k, &cfg).unwrap()).collect();
        prop_assert!(c[0] >= 1);
        prop_assert!(c[0] <= c[1] && c[1] <= c[3] && c[0] <= c[2]);
    }

    #[test]
    fn spectrum_is_one_of_four_sets(a in tensor_f5(2)) {
        let cfg = SolveConfig::default();
        let f5 = a.field().clone();
        let report = classify_spectrum(&a, &cfg).unwrap();
        let sigma = eigenvalue_set(&a, &cfg).unwrap();
        prop_assert_eq!(Some(sigma), report.description.eigenvalues(&f5));
    }
}
