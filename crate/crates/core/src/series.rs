//! Truncated formal power series in the divided-power convention.
//!
//! A [`DividedSeries`] of order `N` stores `a_0, ..., a_N` and represents
//! `sum_{n<=N} a_n t^n / n!`. The stored `a_n` are the derivatives at zero, so
//! `D^k` is a shift by `k` and the product is the binomial convolution
//! `c_n = sum_k C(n, k) a_k b_{n-k}` (the Leibniz rule).
//!
//! Every operation returns the largest order it can certify and never pads
//! with zeros; comparisons are made up to an explicitly requested order.

use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{Polynomial, Rational, Ring, Substitution, SymbolTable};

#[derive(Clone, Debug, PartialEq)]
pub struct DividedSeries<R> {
    coeffs: Vec<R>,
}

/// Row `n` of Pascal's triangle as rationals.
fn binomial_row(n: usize) -> Vec<Rational> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = BigInt::from(1);
    for k in 0..=n {
        row.push(Rational::from_integer(c.clone()));
        c = c * BigInt::from(n - k) / BigInt::from(k + 1);
    }
    row
}

impl<R: Ring> DividedSeries<R> {
    /// `coeffs[n]` is the divided-power coefficient `a_n`; the order is
    /// `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<R>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::usage("a series needs at least the constant coefficient"));
        }
        if coeffs.iter().any(|c| !c.compatible(&coeffs[0])) {
            return Err(Error::usage("series coefficients live in different rings"));
        }
        Ok(DividedSeries { coeffs })
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> R) -> Self {
        DividedSeries { coeffs: (0..=order).map(f).collect() }
    }

    /// The constant series `c` (all higher coefficients zero) to `order`.
    pub fn constant(c: R, order: usize) -> Self {
        let zero = c.zero_like();
        let mut coeffs = vec![zero; order + 1];
        coeffs[0] = c;
        DividedSeries { coeffs }
    }

    /// `exp(x t)`: coefficients `x^n`.
    pub fn exponential(x: &R, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(x.one_like());
        for n in 1..=order {
            let next = coeffs[n - 1].times(x);
            coeffs.push(next);
        }
        DividedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Option<&R> {
        self.coeffs.get(n)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.coeffs[0].compatible(&other.coeffs[0]) {
            Ok(())
        } else {
            Err(Error::usage("series over different coefficient rings"))
        }
    }

    /// Keeps `a_0..a_order`.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::TruncationExhausted { needed: order, available: self.order() });
        }
        Ok(DividedSeries { coeffs: self.coeffs[..=order].to_vec() })
    }

    /// `D^k f`; the result has order `order(f) - k`.
    pub fn derive(&self, k: usize) -> Result<Self> {
        if k > self.order() {
            return Err(Error::TruncationExhausted { needed: k, available: self.order() });
        }
        Ok(DividedSeries { coeffs: self.coeffs[k..].to_vec() })
    }

    /// Binomial convolution; the order is the smaller of the two.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.product_unchecked(other))
    }

    fn product_unchecked(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let zero = self.coeffs[0].zero_like();
        let coeffs = (0..=order)
            .map(|n| {
                let row = binomial_row(n);
                let mut acc = zero.clone();
                for k in 0..=n {
                    let a = &self.coeffs[k];
                    let b = &other.coeffs[n - k];
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    let ab = a.times(b);
                    acc = acc.plus(&if row[k].is_one() { ab } else { ab.scaled(&row[k]) });
                }
                acc
            })
            .collect();
        DividedSeries { coeffs }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.zip_with(other, R::plus))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.zip_with(other, R::minus))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&R, &R) -> R) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect();
        DividedSeries { coeffs }
    }

    /// Multiplication by a constant (in `t`) ring element.
    pub fn scale(&self, c: &R) -> Self {
        DividedSeries { coeffs: self.coeffs.iter().map(|a| c.times(a)).collect() }
    }

    pub fn scale_rational(&self, k: &Rational) -> Self {
        DividedSeries { coeffs: self.coeffs.iter().map(|a| a.scaled(k)).collect() }
    }

    pub fn negated(&self) -> Self {
        DividedSeries { coeffs: self.coeffs.iter().map(R::negated).collect() }
    }

    /// Coefficient-wise image under `f`; the order is preserved.
    pub fn map_coeffs<S: Ring>(&self, f: impl FnMut(&R) -> Result<S>) -> Result<DividedSeries<S>> {
        let coeffs = self.coeffs.iter().map(f).collect::<Result<Vec<S>>>()?;
        DividedSeries::new(coeffs)
    }

    /// Whether the first `order + 1` coefficients vanish. Both operands of an
    /// identity check must carry at least `order`.
    pub fn is_zero_to(&self, order: usize) -> Result<bool> {
        Ok(self.first_nonzero_to(order)?.is_none())
    }

    pub fn first_nonzero_to(&self, order: usize) -> Result<Option<usize>> {
        if order > self.order() {
            return Err(Error::TruncationExhausted { needed: order, available: self.order() });
        }
        Ok(self.coeffs[..=order].iter().position(|c| !c.is_zero()))
    }

    /// Order-by-order equality up to `order`; fails if either side is shorter.
    pub fn agrees_with(&self, other: &Self, order: usize) -> Result<bool> {
        Ok(self.first_difference(other, order)?.is_none())
    }

    pub fn first_difference(&self, other: &Self, order: usize) -> Result<Option<usize>> {
        self.check_ring(other)?;
        let available = self.order().min(other.order());
        if order > available {
            return Err(Error::TruncationExhausted { needed: order, available });
        }
        Ok((0..=order).find(|&n| self.coeffs[n] != other.coeffs[n]))
    }
}

impl DividedSeries<Polynomial> {
    /// Coefficient-wise substitution, the induced map on series rings.
    pub fn substitute(&self, subst: &Substitution<Polynomial>) -> Result<Self> {
        self.map_coeffs(|c| c.substitute(subst))
    }

    /// Coefficient-wise evaluation into an arbitrary ring.
    pub fn evaluate<S: Ring>(&self, subst: &Substitution<S>) -> Result<DividedSeries<S>> {
        self.map_coeffs(|c| c.evaluate(subst))
    }

    pub fn symbols(&self) -> &Arc<SymbolTable> {
        self.coeffs[0].symbols()
    }

    pub fn embed(&self, target: &Arc<SymbolTable>) -> Result<Self> {
        self.map_coeffs(|c| c.embed(target))
    }
}

/// Series form a ring under binomial convolution; mixed orders truncate to
/// the smaller one. Used for determinants of series matrices.
impl<R: Ring> Ring for DividedSeries<R> {
    fn zero_like(&self) -> Self {
        DividedSeries { coeffs: vec![self.coeffs[0].zero_like(); self.coeffs.len()] }
    }

    fn one_like(&self) -> Self {
        DividedSeries::constant(self.coeffs[0].one_like(), self.order())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(R::is_zero)
    }

    fn plus(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, R::plus)
    }

    fn minus(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, R::minus)
    }

    fn times(&self, rhs: &Self) -> Self {
        self.product_unchecked(rhs)
    }

    fn negated(&self) -> Self {
        DividedSeries::negated(self)
    }

    fn scaled(&self, k: &Rational) -> Self {
        self.scale_rational(k)
    }

    fn compatible(&self, rhs: &Self) -> bool {
        self.coeffs[0].compatible(&rhs.coeffs[0])
    }
}

/// Monic linear differential operator `D^m + c_{m-1} D^{m-1} + ... + c_0`
/// with coefficients constant in `t`.
#[derive(Clone, Debug, PartialEq)]
pub struct DifferentialOperator<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> DifferentialOperator<R> {
    /// `coeffs[i]` multiplies `D^i`; the last entry must be the ring unit.
    pub fn new(coeffs: Vec<R>) -> Result<Self> {
        let Some(lead) = coeffs.last() else {
            return Err(Error::usage("operator without coefficients"));
        };
        if *lead != lead.one_like() {
            return Err(Error::usage("differential operator must be monic"));
        }
        if coeffs.iter().any(|c| !c.compatible(lead)) {
            return Err(Error::usage("operator coefficients live in different rings"));
        }
        Ok(DifferentialOperator { coeffs })
    }

    /// The plain derivative `D` over the ring of `one`.
    pub fn derivation(one: &R) -> Self {
        DifferentialOperator { coeffs: vec![one.zero_like(), one.one_like()] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// `P(D) f`, of order `order(f) - degree(P)`.
    pub fn apply(&self, f: &DividedSeries<R>) -> Result<DividedSeries<R>> {
        let deg = self.degree();
        if f.order() < deg {
            return Err(Error::TruncationExhausted { needed: deg, available: f.order() });
        }
        if !f.coeffs[0].compatible(&self.coeffs[0]) {
            return Err(Error::usage("operator and series over different rings"));
        }
        let zero = f.coeffs[0].zero_like();
        let coeffs = (0..=f.order() - deg)
            .map(|m| {
                self.coeffs.iter().enumerate().fold(zero.clone(), |acc, (i, c)| {
                    let a = &f.coeffs[m + i];
                    if c.is_zero() || a.is_zero() {
                        acc
                    } else {
                        acc.plus(&c.times(a))
                    }
                })
            })
            .collect();
        Ok(DividedSeries { coeffs })
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl FnMut(&R) -> Result<S>) -> Result<DifferentialOperator<S>> {
        DifferentialOperator::new(self.coeffs.iter().map(f).collect::<Result<Vec<S>>>()?)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    order: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    symbols: Vec<String>,
    coeffs: Vec<String>,
}

/// `{"order":N,"coeffs":["a0",...]}` with each coefficient in text form; a
/// `"symbols"` list is present when coefficients are non-constant polynomials.
impl Serialize for DividedSeries<Polynomial> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesJson {
            order: self.order(),
            symbols: self.symbols().names().to_vec(),
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DividedSeries<Polynomial> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SeriesJson::deserialize(deserializer)?;
        if raw.coeffs.len() != raw.order + 1 {
            return Err(D::Error::custom(format!(
                "order {} needs {} coefficients, found {}",
                raw.order,
                raw.order + 1,
                raw.coeffs.len()
            )));
        }
        let symbols = SymbolTable::new(raw.symbols).map_err(D::Error::custom)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|c| Polynomial::parse(c, &symbols))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        DividedSeries::new(coeffs).map_err(D::Error::custom)
    }
}

impl Serialize for DividedSeries<Rational> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SeriesJson {
            order: self.order(),
            symbols: Vec::new(),
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DividedSeries<Rational> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SeriesJson::deserialize(deserializer)?;
        if raw.coeffs.len() != raw.order + 1 || !raw.symbols.is_empty() {
            return Err(D::Error::custom("malformed rational series"));
        }
        let coeffs = raw
            .coeffs
            .iter()
            .map(|c| c.parse::<Rational>())
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        DividedSeries::new(coeffs).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    fn rs(v: &[i64]) -> DividedSeries<Rational> {
        DividedSeries::new(v.iter().map(|&x| q(x)).collect()).unwrap()
    }

    #[test]
    fn derive_shifts() {
        let f = rs(&[1, 1, 1]);
        assert_eq!(f.derive(1).unwrap(), rs(&[1, 1]));
        assert_eq!(f.derive(0).unwrap(), f);
        assert!(matches!(f.derive(3), Err(Error::TruncationExhausted { needed: 3, available: 2 })));
    }

    #[test]
    fn product_examples() {
        // (1 + t)^2 = 1 + 2t + 2 t^2/2!
        assert_eq!(rs(&[1, 1, 0]).product(&rs(&[1, 1, 0])).unwrap(), rs(&[1, 2, 2]));
        // exp(t)^2 = exp(2t)
        let ones = rs(&[1; 11]);
        let sq = ones.product(&ones).unwrap();
        for (n, c) in sq.coeffs().iter().enumerate() {
            assert_eq!(*c, q(1 << n));
        }
        let f = rs(&[3, -1, 4, 1, 5]);
        assert_eq!(f.product(&DividedSeries::constant(q(1), 6)).unwrap(), f);
    }

    #[test]
    fn product_order_is_minimum() {
        assert_eq!(rs(&[1, 2, 3, 4]).product(&rs(&[1, 1])).unwrap().order(), 1);
    }

    #[test]
    fn binomial_transform_against_direct_sum() {
        let f = rs(&[2, -3, 5, 0, 7, 1, -1, 4, 9, -6, 3]);
        let ones = rs(&[1; 11]);
        let conv = f.product(&ones).unwrap();
        for n in 0..=10usize {
            let mut direct = q(0);
            for k in 0..=n {
                // C(n, k) by the multiplicative formula
                let mut c = 1i64;
                for i in 0..k {
                    c = c * (n - i) as i64 / (i + 1) as i64;
                }
                direct = &direct + &(&q(c) * f.coeff(k).unwrap());
            }
            assert_eq!(conv.coeff(n).unwrap(), &direct, "n = {n}");
        }
    }

    #[test]
    fn derivation_operator_is_shift() {
        let f = rs(&[4, 3, 2, 1]);
        let d = DifferentialOperator::derivation(&q(1));
        assert_eq!(d.apply(&f).unwrap(), f.derive(1).unwrap());
    }

    #[test]
    fn operator_kills_exponential() {
        // (D - 2) exp(2t) = 0
        let op = DifferentialOperator::new(vec![q(-2), q(1)]).unwrap();
        let f = DividedSeries::exponential(&q(2), 8);
        assert!(op.apply(&f).unwrap().is_zero_to(7).unwrap());
    }

    #[test]
    fn operator_requires_monic_and_order() {
        assert!(DifferentialOperator::new(vec![q(1), q(2)]).is_err());
        let op = DifferentialOperator::new(vec![q(1), q(0), q(1)]).unwrap();
        assert!(matches!(op.apply(&rs(&[1, 2])), Err(Error::TruncationExhausted { .. })));
    }

    #[test]
    fn comparison_needs_certified_order() {
        let a = rs(&[1, 2, 3]);
        let b = rs(&[1, 2, 3, 4]);
        assert!(a.agrees_with(&b, 2).unwrap());
        assert!(a.agrees_with(&b, 3).is_err());
        assert_eq!(a.first_difference(&rs(&[1, 5, 3]), 2).unwrap(), Some(1));
    }

    #[test]
    fn json_form() {
        let f = rs(&[1, 3, 7]);
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"{"order":2,"coeffs":["1","3","7"]}"#);
        let back: DividedSeries<Rational> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);

        let t = SymbolTable::indexed("e", 2);
        let p = DividedSeries::new(vec![
            Polynomial::one(&t),
            Polynomial::parse("e1", &t).unwrap(),
            Polynomial::parse("e1^2 - e2", &t).unwrap(),
        ])
        .unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"order":2,"symbols":["e1","e2"],"coeffs":["1","e1","e1^2 - e2"]}"#);
        let back: DividedSeries<Polynomial> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<DividedSeries<Rational>>(r#"{"order":3,"coeffs":["1"]}"#).is_err());
    }
}
