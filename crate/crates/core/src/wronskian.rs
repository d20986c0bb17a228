//! Generalized Wronskians `W_lambda(f) = det(f_i^{(j + lambda_{r-j})})` of
//! tuples of divided-power series, and the identities they satisfy for the
//! universal fundamental system: Giambelli, Pieri, and the expansion of
//! `D^k W_0` with standard-tableaux coefficients.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::{pieri_successors, Partition};
use crate::error::{Error, Result};
use crate::exactmath::{Matrix, Polynomial, Rational, Ring};
use crate::odecore::UniversalContext;
use crate::schurring::{
    jacobi_trudi, rewrite_in_h, schur_expand, GradedSequence, GrassmannClass, GrassmannRing, SchurExpansion,
};
use crate::series::DividedSeries;

/// `r + 1` series over one ring, all of the same order.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesTuple<R> {
    entries: Vec<DividedSeries<R>>,
}

impl<R: Ring> SeriesTuple<R> {
    pub fn new(entries: Vec<DividedSeries<R>>) -> Result<Self> {
        let first = entries.first().ok_or_else(|| Error::usage("empty series tuple"))?;
        let order = first.order();
        for s in &entries {
            if s.order() != order {
                return Err(Error::usage(format!("series orders differ: {} and {}", order, s.order())));
            }
            if !s.coeffs()[0].compatible(&first.coeffs()[0]) {
                return Err(Error::usage("series over different coefficient rings"));
            }
        }
        Ok(SeriesTuple { entries })
    }

    pub fn rank(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn order(&self) -> usize {
        self.entries[0].order()
    }

    pub fn entries(&self) -> &[DividedSeries<R>] {
        &self.entries
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        Ok(SeriesTuple { entries: self.entries.iter().map(|s| s.truncate(order)).collect::<Result<_>>()? })
    }
}

/// Highest derivative appearing in `W_lambda` for `r + 1` functions.
pub fn wronskian_span(lambda: &Partition, rank: usize) -> usize {
    rank + lambda.part(0) as usize
}

/// `W_lambda(f)` to the largest order the input supports,
/// `order(f) - (r + lambda_0)`.
pub fn generalized_wronskian<R: Ring>(f: &SeriesTuple<R>, lambda: &Partition) -> Result<DividedSeries<R>> {
    let span = wronskian_span(lambda, f.rank());
    if f.order() < span {
        return Err(Error::TruncationExhausted { needed: span, available: f.order() });
    }
    generalized_wronskian_to(f, lambda, f.order() - span)
}

/// `W_lambda(f)` to exactly `order`; only the needed coefficients are used.
pub fn generalized_wronskian_to<R: Ring>(f: &SeriesTuple<R>, lambda: &Partition, order: usize) -> Result<DividedSeries<R>> {
    let r = f.rank();
    let lam = lambda.padded(r + 1)?;
    let needed = order + wronskian_span(lambda, r);
    if f.order() < needed {
        return Err(Error::TruncationExhausted { needed, available: f.order() });
    }
    let mut entries = Vec::with_capacity((r + 1) * (r + 1));
    for fi in f.entries() {
        for j in 0..=r {
            let k = j + lam[r - j] as usize;
            entries.push(fi.derive(k)?.truncate(order)?);
        }
    }
    Matrix::new(r + 1, r + 1, entries)?.determinant()
}

/// `sum c_lambda W_lambda(f)`; the same data as a [`SchurExpansion`].
#[derive(Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WronskiExpansion(pub SchurExpansion);

impl WronskiExpansion {
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.0.terms()
    }

    pub fn coefficient(&self, lambda: &Partition) -> Rational {
        self.0.coefficient(lambda)
    }

    /// Evaluates the combination on a tuple, to `order`.
    pub fn evaluate<R: Ring>(&self, f: &SeriesTuple<R>, order: usize) -> Result<DividedSeries<R>> {
        let zero = f.entries()[0].coeffs()[0].zero_like();
        let mut acc = DividedSeries::constant(zero, order);
        for (lambda, c) in self.terms() {
            acc = acc.checked_add(&generalized_wronskian_to(f, lambda, order)?.scale_rational(c))?;
        }
        Ok(acc)
    }
}

impl fmt::Display for WronskiExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.to_string().replace("s(", "W("))
    }
}

impl fmt::Debug for WronskiExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The universal fundamental system as a tuple, to `order`.
pub fn universal_tuple(ctx: &UniversalContext, order: usize) -> Result<SeriesTuple<Polynomial>> {
    SeriesTuple::new(ctx.universal_solutions(order)?)
}

fn h_graded(ctx: &UniversalContext, lambda: &Partition) -> GradedSequence<Polynomial> {
    let top = lambda.part(0) as usize + ctx.rank();
    GradedSequence::from_h(&ctx.h_sequence(top))
}

/// `Delta_lambda(h)` in the `e`'s of the context.
pub fn schur_in_e(ctx: &UniversalContext, lambda: &Partition) -> Result<Polynomial> {
    jacobi_trudi(lambda, &h_graded(ctx, lambda), ctx.rank())
}

#[derive(Clone, Debug, PartialEq)]
pub struct GiambelliCertificate {
    pub partition: Partition,
    /// `Delta_lambda(h)`, the claimed ratio `W_lambda(u) / W_0(u)`.
    pub ratio: Polynomial,
    pub verified: bool,
    pub certified_order: usize,
    pub first_mismatch: Option<usize>,
}

/// Checks `W_lambda(u) = Delta_lambda(h) W_0(u)` to order `n`.
pub fn giambelli_certificate(ctx: &UniversalContext, lambda: &Partition, n: usize) -> Result<GiambelliCertificate> {
    giambelli_with(ctx, lambda, n, None)
}

/// As [`giambelli_certificate`], with an optional perturbation of the ratio
/// (used to confirm that a wrong ratio is caught).
pub fn giambelli_with(
    ctx: &UniversalContext,
    lambda: &Partition,
    n: usize,
    perturb: Option<&Polynomial>,
) -> Result<GiambelliCertificate> {
    if n < ctx.rank() + 1 {
        return Err(Error::usage(format!("verification order {n} is below rank + 1")));
    }
    let u = universal_tuple(ctx, n + wronskian_span(lambda, ctx.rank()))?;
    let mut ratio = schur_in_e(ctx, lambda)?;
    if let Some(p) = perturb {
        ratio = ratio.plus(p);
    }
    let w = generalized_wronskian_to(&u, lambda, n)?;
    let w0 = generalized_wronskian_to(&u, &Partition::empty(), n)?;
    let first_mismatch = w.first_difference(&w0.scale(&ratio), n)?;
    Ok(GiambelliCertificate {
        partition: lambda.clone(),
        ratio,
        verified: first_mismatch.is_none(),
        certified_order: n,
        first_mismatch,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct PieriCheck {
    pub successors: Vec<Partition>,
    pub holds: bool,
}

/// Checks `h_k W_lambda(u) = sum_mu W_mu(u)` over the Pieri successors of
/// `lambda`, to order `n`.
pub fn pieri_wronskian_check(ctx: &UniversalContext, lambda: &Partition, k: u32, n: usize) -> Result<PieriCheck> {
    pieri_wronskian_with(ctx, lambda, k, n, false)
}

/// As [`pieri_wronskian_check`]; `drop_last` omits one successor from the sum.
pub fn pieri_wronskian_with(
    ctx: &UniversalContext,
    lambda: &Partition,
    k: u32,
    n: usize,
    drop_last: bool,
) -> Result<PieriCheck> {
    let r = ctx.rank();
    let successors = pieri_successors(lambda, k, r, None)?;
    let widest = successors.iter().map(|m| m.part(0)).max().unwrap_or(0);
    let u = universal_tuple(ctx, n + r + widest.max(lambda.part(0)) as usize)?;
    let lhs = generalized_wronskian_to(&u, lambda, n)?.scale(&ctx.h(k as i64));
    let used = if drop_last && !successors.is_empty() { successors.len() - 1 } else { successors.len() };
    let mut rhs = DividedSeries::constant(ctx.zero(), n);
    for mu in &successors[..used] {
        rhs = rhs.checked_add(&generalized_wronskian_to(&u, mu, n)?)?;
    }
    Ok(PieriCheck { holds: lhs.agrees_with(&rhs, n)?, successors })
}

#[derive(Clone, Debug, PartialEq)]
pub struct DerivativeExpansion {
    pub k: usize,
    /// `D^k W_0(u) (0)`, so that `D^k W_0 = q_k W_0`.
    pub q: Polynomial,
    pub expansion: WronskiExpansion,
    pub verified: bool,
    pub certified_order: usize,
}

/// Expands `D^k W_0` in generalized Wronskians. The coefficients come from
/// writing `q_k` in the `h`'s and expanding in the Schur basis; the result is
/// then checked as a series identity to order `n - k - r`.
pub fn derivative_expansion(ctx: &UniversalContext, k: usize, n: usize) -> Result<DerivativeExpansion> {
    derivative_expansion_with(ctx, k, n, None)
}

/// As [`derivative_expansion`], optionally adding `perturb` to the
/// expansion before verifying it.
pub fn derivative_expansion_with(
    ctx: &UniversalContext,
    k: usize,
    n: usize,
    perturb: Option<&SchurExpansion>,
) -> Result<DerivativeExpansion> {
    let r = ctx.rank();
    if n < k + r + 1 {
        return Err(Error::usage(format!("order {n} must be at least k + r + 1 = {}", k + r + 1)));
    }
    let u = universal_tuple(ctx, n)?;
    let w0 = generalized_wronskian(&u, &Partition::empty())?;
    let q = w0.coeffs()[k].clone();
    let mut expansion = schur_expand(&rewrite_in_h(&q, r)?, r)?;
    if let Some(p) = perturb {
        expansion = expansion.plus(p);
    }
    let expansion = WronskiExpansion(expansion);
    let certified_order = n - k - r;
    let lhs = w0.derive(k)?;
    let rhs = expansion.evaluate(&u, certified_order)?;
    let verified = lhs.agrees_with(&rhs, certified_order)?;
    Ok(DerivativeExpansion { k, q, expansion, verified, certified_order })
}

/// Partitions obtained from `lambda` by adding one box, with at most
/// `rank + 1` rows.
pub fn young_covers(lambda: &Partition, rank: usize) -> Vec<Partition> {
    lambda
        .addable_rows(rank + 1)
        .into_iter()
        .filter_map(|row| lambda.with_box_added(row))
        .collect()
}

/// Checks `D W_lambda(f) = sum W_mu(f)` over the covers `mu` of `lambda`,
/// to order `n`.
pub fn young_cover_derivative_check<R: Ring>(f: &SeriesTuple<R>, lambda: &Partition, n: usize) -> Result<bool> {
    let w = generalized_wronskian_to(f, lambda, n + 1)?;
    let mut rhs = DividedSeries::constant(f.entries()[0].coeffs()[0].zero_like(), n);
    for mu in young_covers(lambda, f.rank()) {
        rhs = rhs.checked_add(&generalized_wronskian_to(f, &mu, n)?)?;
    }
    w.derive(1)?.agrees_with(&rhs, n)
}

/// The specialization `e_i -> sigma_{(1^i)}` of the universal fundamental
/// system into `H^*(G(r, P^d))`, to `order`.
pub fn grassmann_system(g: &GrassmannRing, order: usize) -> Result<SeriesTuple<GrassmannClass>> {
    let ctx = UniversalContext::new(g.rank(), order.max(g.rank() + 1))?;
    let images = (1..=g.rank() as u32 + 1)
        .map(|i| GrassmannClass::schubert(*g, Partition::column(i)))
        .collect::<Result<Vec<_>>>()?;
    let subst = ctx.specialization(images)?;
    SeriesTuple::new(ctx.specialize_system(&subst, order)?)
}

/// Checks that `Omega_lambda -> W_lambda(v)` intertwines `sigma_k`:
/// `sum_mu c_mu W_mu(v) = sigma_k W_lambda(v)` where
/// `sigma_k cap Omega_lambda = sum_mu c_mu Omega_mu`, to order `n`.
pub fn wr_module_check(g: &GrassmannRing, lambda: &Partition, k: u32, n: usize) -> Result<bool> {
    let image = g.cap_action(k, &SchurExpansion::single(lambda.clone()))?;
    let widest = image.terms().map(|(m, _)| m.part(0)).max().unwrap_or(0).max(lambda.part(0));
    let v = grassmann_system(g, n + g.rank() + widest as usize)?;
    let sigma_k = if k <= g.cols() {
        GrassmannClass::schubert(*g, Partition::row(k))?
    } else {
        GrassmannClass::new(*g, SchurExpansion::zero())?
    };
    let lhs = WronskiExpansion(image).evaluate(&v, n)?;
    let rhs = generalized_wronskian_to(&v, lambda, n)?.scale(&sigma_k);
    lhs.agrees_with(&rhs, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::SymbolTable;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn poly(ctx: &UniversalContext, s: &str) -> Polynomial {
        Polynomial::parse(s, ctx.symbols()).unwrap()
    }

    #[test]
    fn ordinary_wronskian_is_exponential() {
        for r in 0..=3 {
            let ctx = UniversalContext::new(r, 8).unwrap();
            let u = universal_tuple(&ctx, 8).unwrap();
            let w0 = generalized_wronskian(&u, &Partition::empty()).unwrap();
            assert_eq!(w0.order(), 8 - r);
            assert_eq!(w0, DividedSeries::exponential(&ctx.e(1), 8 - r));
        }
    }

    #[test]
    fn constant_terms_are_schur_determinants() {
        let ctx = UniversalContext::new(2, 8).unwrap();
        let u = universal_tuple(&ctx, 8).unwrap();
        for l in ["1", "2", "1,1", "2,1", "3", "1,1,1", "2,2", "3,1,1"] {
            let lambda = p(l);
            let w = generalized_wronskian_to(&u, &lambda, 0).unwrap();
            assert_eq!(w.coeffs()[0], schur_in_e(&ctx, &lambda).unwrap(), "{l}");
        }
    }

    #[test]
    fn truncation_is_reported() {
        let ctx = UniversalContext::new(1, 4).unwrap();
        let u = universal_tuple(&ctx, 4).unwrap();
        assert_eq!(generalized_wronskian(&u, &p("3")).unwrap().order(), 0);
        assert!(matches!(generalized_wronskian(&u, &p("4")), Err(Error::TruncationExhausted { needed: 5, available: 4 })));
        assert!(generalized_wronskian(&u, &p("1,1,1")).is_err());
    }

    #[test]
    fn giambelli_examples() {
        let ctx = UniversalContext::new(1, 10).unwrap();
        let c = giambelli_certificate(&ctx, &p("1"), 10).unwrap();
        assert!(c.verified);
        assert_eq!(c.ratio, poly(&ctx, "e1"));
        let c = giambelli_certificate(&ctx, &p("2,2"), 10).unwrap();
        assert!(c.verified);
        assert_eq!(c.ratio, ctx.h(2).pow(2).minus(&ctx.h(1).times(&ctx.h(3))));
        assert_eq!(c.ratio, poly(&ctx, "e2^2"));
        let c = giambelli_certificate(&ctx, &Partition::empty(), 4).unwrap();
        assert_eq!(c.ratio, ctx.one());
        let bad = giambelli_with(&ctx, &p("2,1"), 6, Some(&ctx.one())).unwrap();
        assert!(!bad.verified);
        assert_eq!(bad.first_mismatch, Some(0));
    }

    #[test]
    fn liouville() {
        let ctx = UniversalContext::new(2, 9).unwrap();
        let u = universal_tuple(&ctx, 9).unwrap();
        let w0 = generalized_wronskian(&u, &Partition::empty()).unwrap();
        let w1 = generalized_wronskian(&u, &p("1")).unwrap();
        assert_eq!(w0.derive(1).unwrap(), w1);
        assert_eq!(w1, w0.truncate(6).unwrap().scale(&ctx.e(1)));
    }

    #[test]
    fn pieri_examples() {
        let ctx = UniversalContext::new(1, 8).unwrap();
        let c = pieri_wronskian_check(&ctx, &p("1"), 1, 8).unwrap();
        assert!(c.holds);
        assert_eq!(c.successors, vec![p("2"), p("1,1")]);
        let c = pieri_wronskian_check(&ctx, &p("1,1"), 2, 8).unwrap();
        assert!(c.holds);
        assert_eq!(c.successors, vec![p("3,1")]);
        assert!(pieri_wronskian_check(&ctx, &p("2,1"), 0, 6).unwrap().holds);
        assert!(!pieri_wronskian_with(&ctx, &p("1"), 1, 6, true).unwrap().holds);
    }

    #[test]
    fn derivative_expansions() {
        let ctx = UniversalContext::new(1, 10).unwrap();
        let d = derivative_expansion(&ctx, 1, 6).unwrap();
        assert!(d.verified);
        assert_eq!(d.expansion.to_string(), "W(1)");
        let d = derivative_expansion(&ctx, 2, 8).unwrap();
        assert_eq!(d.q, poly(&ctx, "e1^2"));
        assert_eq!(d.expansion.to_string(), "W(2) + W(1,1)");
        assert!(d.verified);
        let d = derivative_expansion(&ctx, 3, 8).unwrap();
        assert_eq!(d.expansion.to_string(), "W(3) + 2*W(2,1)");
        assert!(d.verified);
        let bad = SchurExpansion::single(p("2,1"));
        assert!(!derivative_expansion_with(&ctx, 3, 8, Some(&bad)).unwrap().verified);
        assert!(derivative_expansion(&ctx, 3, 4).is_err());
    }

    #[test]
    fn young_cover_on_rational_tuple() {
        let q = SymbolTable::empty();
        let c = |n: i64, d: i64| Polynomial::constant(&q, &Rational::from(n) / &Rational::from(d));
        let f = SeriesTuple::new(
            (0..3)
                .map(|i| DividedSeries::from_fn(16, |n| c((n as i64 * 7 + i * 3) % 11 - 5, (n as i64 % 4) + 1)))
                .collect(),
        )
        .unwrap();
        assert!(young_cover_derivative_check(&f, &Partition::empty(), 10).unwrap());
        assert!(young_cover_derivative_check(&f, &p("2,1"), 10).unwrap());
        assert_eq!(young_covers(&p("1"), 1), vec![p("2"), p("1,1")]);
        assert_eq!(young_covers(&p("1,1"), 1), vec![p("2,1")]);
    }

    #[test]
    fn wr_module_small() {
        let g = GrassmannRing::new(1, 3).unwrap();
        assert!(wr_module_check(&g, &p("1"), 1, 3).unwrap());
        assert!(wr_module_check(&g, &Partition::empty(), 2, 3).unwrap());
    }

    #[test]
    fn expansion_json_mirrors_schur() {
        let e = WronskiExpansion(SchurExpansion::single(p("2,1")));
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(s, r#"{"terms":[{"partition":[2,1],"coeff":"1"}]}"#);
        assert_eq!(serde_json::from_str::<WronskiExpansion>(&s).unwrap(), e);
    }
}
