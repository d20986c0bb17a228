use num_bigint::BigInt;
use proptest::prelude::*;
use wronski::combinat::{partitions_in_box, syt_count_hook, syt_enumerate, Partition};
use wronski::odecore::UniversalContext;
use wronski::schurring::{
    grassmann_degree, h_symbols, jacobi_trudi, rewrite_in_e, schur_expand, sigma1_power, GradedSequence,
    GrassmannRing, SchurExpansion,
};
use wronski::{Polynomial, Rational, Ring};

#[test]
fn hook_formula_agrees_with_enumeration() {
    for n in 0..=10 {
        for lambda in partitions_in_box(n, n as usize + 1, None) {
            assert_eq!(syt_count_hook(&lambda).unwrap().count, syt_enumerate(&lambda).unwrap().count, "{lambda}");
        }
    }
}

#[test]
fn sigma1_powers_count_tableaux() {
    for k in 0..=8 {
        let power = sigma1_power(k, k as usize).unwrap();
        let shapes = partitions_in_box(k, k as usize + 1, None);
        assert_eq!(power.len(), shapes.len());
        for lambda in shapes {
            let c: BigInt = syt_count_hook(&lambda).unwrap().count.into();
            assert_eq!(power.coefficient(&lambda).to_integer().unwrap(), c, "k={k} {lambda}");
        }
    }
}

fn catalan(n: usize) -> BigInt {
    // C_0 = 1, C_{m+1} = sum C_i C_{m-i}
    let mut c = vec![BigInt::from(1)];
    for m in 0..n {
        let next = (0..=m).map(|i| &c[i] * &c[m - i]).sum();
        c.push(next);
    }
    c[n].clone()
}

#[test]
fn plucker_degrees() {
    assert_eq!(grassmann_degree(1, 3).unwrap(), BigInt::from(2));
    assert_eq!(grassmann_degree(1, 4).unwrap(), BigInt::from(5));
    assert_eq!(grassmann_degree(2, 4).unwrap(), BigInt::from(5));
    for d in 2..=6 {
        assert_eq!(grassmann_degree(1, d).unwrap(), catalan(d - 1), "d = {d}");
    }
    for (r, d) in [(1, 5), (2, 5), (2, 6), (3, 6)] {
        let g = GrassmannRing::new(r, d).unwrap();
        let hook: BigInt = syt_count_hook(&g.top_class()).unwrap().count.into();
        assert_eq!(g.degree().unwrap(), hook);
    }
}

#[test]
fn poincare_pairing() {
    for (r, d) in [(1, 3), (2, 4), (1, 4)] {
        let g = GrassmannRing::new(r, d).unwrap();
        let basis = g.basis();
        for lambda in &basis {
            let dual = g.dual(lambda).unwrap();
            let prod = g
                .product(&SchurExpansion::single(lambda.clone()), &SchurExpansion::single(dual.clone()))
                .unwrap();
            assert_eq!(prod, SchurExpansion::single(g.top_class()), "{lambda} x {dual}");
            for mu in &basis {
                if lambda.weight() + mu.weight() == g.dimension() && *mu != dual {
                    let p = g
                        .product(&SchurExpansion::single(lambda.clone()), &SchurExpansion::single(mu.clone()))
                        .unwrap();
                    assert!(p.is_zero(), "{lambda} x {mu}");
                }
            }
        }
    }
}

fn class_in(g: GrassmannRing) -> impl Strategy<Value = SchurExpansion> {
    let basis = g.basis();
    prop::collection::vec((0..basis.len(), -3i64..4), 1..4).prop_map(move |terms| {
        SchurExpansion::from_terms(terms.into_iter().map(|(i, c)| (basis[i].clone(), Rational::from(c))))
    })
}

fn h_polynomial() -> impl Strategy<Value = Polynomial> {
    // monomials h1^a h2^b h3^c h4^d of weight at most 8
    prop::collection::vec((0u16..5, 0u16..3, 0u16..2, 0u16..2, -4i64..5), 1..5).prop_map(|terms| {
        let s = h_symbols(4);
        let mut p = Polynomial::zero(&s);
        for (a, b, c, d, k) in terms {
            if a + 2 * b + 3 * c + 4 * d <= 8 {
                let m = Polynomial::from_terms(&s, [(Rational::from(k), vec![a, b, c, d])]).unwrap();
                p = p.plus(&m);
            }
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn product_is_commutative_and_associative(
        (g, a, b, c) in (3usize..5).prop_flat_map(|d| {
            let g = GrassmannRing::new(1, d).unwrap();
            (Just(g), class_in(g), class_in(g), class_in(g))
        }),
    ) {
        prop_assert_eq!(g.product(&a, &b).unwrap(), g.product(&b, &a).unwrap());
        let left = g.product(&g.product(&a, &b).unwrap(), &c).unwrap();
        let right = g.product(&a, &g.product(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn schur_expansion_reconstructs(p in h_polynomial(), r in 0usize..4) {
        let ctx = UniversalContext::new(r, 12).unwrap();
        let h = GradedSequence::from_h(&ctx.h_sequence(12));
        let expansion = schur_expand(&p, r).unwrap();
        let mut rebuilt = ctx.zero();
        for (lambda, c) in expansion.terms() {
            prop_assert!(lambda.len() <= r + 1);
            rebuilt = rebuilt.plus(&jacobi_trudi(lambda, &h, r).unwrap().scale(c));
        }
        prop_assert_eq!(rebuilt, rewrite_in_e(&p, &ctx).unwrap());
    }
}

#[test]
fn special_classes_generate() {
    // sigma_1 * sigma_1 * sigma_1 in G(1,4) = s(3) + 2 s(2,1)
    let g = GrassmannRing::new(1, 4).unwrap();
    let s1 = SchurExpansion::single(Partition::row(1));
    let cube = g.product(&g.product(&s1, &s1).unwrap(), &s1).unwrap();
    let expected = SchurExpansion::from_terms([
        ("3".parse().unwrap(), Rational::from(1)),
        ("2,1".parse().unwrap(), Rational::from(2)),
    ]);
    assert_eq!(cube, expected);
}
