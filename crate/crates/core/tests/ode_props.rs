use proptest::prelude::*;
use wronski::odecore::{fundamental_check, initial_condition_matrix, AlgebraElement, Fundamentality, UniversalContext};
use wronski::{DividedSeries, Polynomial, Rational, Ring, SymbolTable};

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..12, 1i64..5).prop_map(|(a, b)| &Rational::from(a) / &Rational::from(b))
}

fn constants(xs: &[Rational]) -> Vec<Polynomial> {
    let q = SymbolTable::empty();
    xs.iter().map(|x| Polynomial::constant(&q, x.clone())).collect()
}

#[test]
fn fundamental_system_to_order_sixteen() {
    for r in 0..=4 {
        let ctx = UniversalContext::new(r, 16).unwrap();
        let op = ctx.operator();
        for u in ctx.universal_solutions(16).unwrap() {
            let image = op.apply(&u).unwrap();
            assert_eq!(image.order(), 16 - r - 1);
            assert!(image.is_zero_to(16 - r - 1).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn specialized_systems_are_fundamental(r in 0usize..4, images in prop::collection::vec(rational(), 4)) {
        let ctx = UniversalContext::new(r, 10).unwrap();
        let subst = ctx.specialization(constants(&images[..=r])).unwrap();
        let v = ctx.specialize_system(&subst, 10).unwrap();
        let op = ctx.specialize_operator(&subst).unwrap();
        for vj in &v {
            prop_assert!(op.apply(vj).unwrap().is_zero_to(10 - r - 1).unwrap());
        }
        let (det, verdict) = fundamental_check(&initial_condition_matrix(&v).unwrap()).unwrap();
        prop_assert!(det.is_one_constant());
        prop_assert_eq!(verdict, Fundamentality::Fundamental);
    }

    #[test]
    fn cauchy_problem_matches_data(r in 0usize..4, inits in prop::collection::vec(rational(), 4)) {
        let ctx = UniversalContext::new(r, 10).unwrap();
        let data = ctx.rational_initial_conditions(&inits[..=r]).unwrap();
        let sol = ctx.cauchy_solve(&data, 10).unwrap();
        prop_assert!(ctx.kernel_check(&sol.series).unwrap().holds);
        for i in 0..=r {
            prop_assert_eq!(sol.series.coeffs()[i].constant_value().unwrap(), inits[i].clone());
        }
    }

    #[test]
    fn nonhomogeneous_residual_vanishes(
        r in 0usize..4,
        rhs in prop::collection::vec(rational(), 13),
        inits in prop::collection::vec(rational(), 4),
        images in prop::collection::vec(rational(), 4),
    ) {
        let n = 12;
        let ctx = UniversalContext::new(r, n).unwrap();
        let f = DividedSeries::new(
            rhs.iter().map(|c| Polynomial::constant(ctx.symbols(), c.clone())).collect(),
        ).unwrap();
        let data = ctx.rational_initial_conditions(&inits[..=r]).unwrap();
        let y = ctx.solve_nonhomogeneous(&f, &data, n).unwrap();
        let certified = n - r - 1;
        let residual = ctx.operator().apply(&y).unwrap().checked_sub(&f.truncate(certified).unwrap()).unwrap();
        prop_assert!(residual.is_zero_to(certified).unwrap());
        for i in 0..=r {
            prop_assert_eq!(y.coeffs()[i].constant_value().unwrap(), inits[i].clone());
        }
        // and after specializing the coefficients
        let subst = ctx.specialization(constants(&images[..=r])).unwrap();
        let ys = y.evaluate(&subst).unwrap();
        let op = ctx.specialize_operator(&subst).unwrap();
        let fs = f.evaluate(&subst).unwrap();
        prop_assert!(op.apply(&ys).unwrap().agrees_with(&fs, certified).unwrap());
    }

    #[test]
    fn root_algebra_is_a_commutative_ring(
        r in 1usize..4,
        xs in prop::collection::vec((-5i64..5, 0u32..3), 12),
    ) {
        let ctx = UniversalContext::new(r, 6).unwrap();
        let alg = ctx.root_algebra();
        let elt = |k: usize| {
            let coeffs = (0..=r)
                .map(|i| {
                    let (c, e) = xs[(k * 4 + i) % xs.len()];
                    ctx.e(1 + i % (r + 1)).pow(e).scale(&Rational::from(c))
                })
                .collect();
            AlgebraElement::from_power_coeffs(&alg, coeffs)
        };
        let (a, b, c) = (elt(0), elt(1), elt(2));
        prop_assert_eq!(a.times(&b), b.times(&a));
        prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
        prop_assert_eq!(a.plus(&b).times(&c), a.times(&c).plus(&b.times(&c)));
    }
}

#[test]
fn euler_formula_small_ranks() {
    for r in 1..=3 {
        let ctx = UniversalContext::new(r, 12).unwrap();
        assert!(ctx.universal_exp_check(12).unwrap());
    }
}

trait OneConstant {
    fn is_one_constant(&self) -> bool;
}

impl OneConstant for Polynomial {
    fn is_one_constant(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }
}
