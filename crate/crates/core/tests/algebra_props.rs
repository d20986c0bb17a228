use std::sync::Arc;

use proptest::prelude::*;
use wronski::{DividedSeries, Matrix, Polynomial, Rational, Ring, Substitution, SymbolTable};

fn symbols() -> Arc<SymbolTable> {
    SymbolTable::indexed("e", 3)
}

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..20, 1i64..7).prop_map(|(a, b)| &Rational::from(a) / &Rational::from(b))
}

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u16..3, 3), rational()), 0..5).prop_map(|terms| {
        let s = symbols();
        terms.into_iter().fold(Polynomial::zero(&s), |acc, (exps, c)| {
            let mono = Polynomial::from_terms(&s, [(c, exps)]).unwrap();
            acc.plus(&mono)
        })
    })
}

fn series(order: usize) -> impl Strategy<Value = DividedSeries<Polynomial>> {
    prop::collection::vec(polynomial(), order + 1).prop_map(|c| DividedSeries::new(c).unwrap())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn sign(p: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in polynomial(), b in polynomial(), c in polynomial()) {
        prop_assert_eq!(a.plus(&b), b.plus(&a));
        prop_assert_eq!(a.times(&b), b.times(&a));
        prop_assert_eq!(a.times(&b).times(&c), a.times(&b.times(&c)));
        prop_assert_eq!(a.plus(&b).times(&c), a.times(&c).plus(&b.times(&c)));
        prop_assert_eq!(a.minus(&a), a.zero_like());
        prop_assert_eq!(a.times(&a.one_like()), a.clone());
        prop_assert_eq!(a.plus(&a.negated()), a.zero_like());
    }

    #[test]
    fn determinant_matches_permutation_sum(
        n in 1usize..5,
        entries in prop::collection::vec(polynomial(), 16),
    ) {
        let m = Matrix::from_fn(n, n, |i, j| entries[i * 4 + j].clone()).unwrap();
        let mut expected = Polynomial::zero(&symbols());
        for p in permutations(n) {
            let term = (0..n).fold(Polynomial::one(&symbols()), |acc, i| acc.times(m.get(i, p[i])));
            expected = if sign(&p) { expected.plus(&term) } else { expected.minus(&term) };
        }
        prop_assert_eq!(m.determinant().unwrap(), expected);
    }

    #[test]
    fn substitution_is_a_homomorphism(a in polynomial(), b in polynomial(), images in prop::collection::vec(rational(), 3)) {
        let subst = Substitution::new(&symbols(), Rational::one()).with_leading(images).unwrap();
        let sum = a.plus(&b).evaluate(&subst).unwrap();
        prop_assert_eq!(sum, a.evaluate(&subst).unwrap().plus(&b.evaluate(&subst).unwrap()));
        let prod = a.times(&b).evaluate(&subst).unwrap();
        prop_assert_eq!(prod, a.evaluate(&subst).unwrap().times(&b.evaluate(&subst).unwrap()));
    }

    #[test]
    fn render_parse_round_trip(a in polynomial()) {
        let text = a.to_string();
        prop_assert_eq!(Polynomial::parse(&text, &symbols()).unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Polynomial>(&json).unwrap(), a);
    }

    #[test]
    fn rational_text_round_trip(q in rational()) {
        prop_assert_eq!(q.to_string().parse::<Rational>().unwrap(), q.clone());
        let json = serde_json::to_string(&q).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), q);
    }

    #[test]
    fn leibniz_rule(f in series(6), g in series(6)) {
        let lhs = f.product(&g).unwrap().derive(1).unwrap();
        let rhs = f.derive(1).unwrap().product(&g.truncate(5).unwrap()).unwrap()
            .checked_add(&f.truncate(5).unwrap().product(&g.derive(1).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn series_product_ring_laws(f in series(4), g in series(4), h in series(4)) {
        prop_assert_eq!(f.product(&g).unwrap(), g.product(&f).unwrap());
        prop_assert_eq!(
            f.product(&g).unwrap().product(&h).unwrap(),
            f.product(&g.product(&h).unwrap()).unwrap()
        );
        let json = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<DividedSeries<Polynomial>>(&json).unwrap(), f);
    }

    #[test]
    fn exponentials_multiply(a in rational(), b in rational()) {
        let ea = DividedSeries::exponential(&a, 8);
        let eb = DividedSeries::exponential(&b, 8);
        prop_assert_eq!(ea.product(&eb).unwrap(), DividedSeries::exponential(&a.plus(&b), 8));
    }
}
