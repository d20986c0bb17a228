//! Sparse multivariate polynomials with rational coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded lexicographic (total degree first, then exponents compared left to
//! right in symbol-table order). Rendering walks the map from the largest
//! monomial down, so `e1^2 - e2` and never `-e2 + e1^2`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use super::{Rational, Ring, SymbolTable};
use crate::error::{Error, Result};

type Exps = SmallVec<[u16; 8]>;

/// Exponent vector with its total degree cached for the graded order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exps: Exps,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { degree: 0, exps: SmallVec::from_elem(0, nvars) }
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial { degree: exps.iter().map(|&e| e as u32).sum(), exps: SmallVec::from_slice(exps) }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    fn product(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { degree: self.degree + other.degree, exps }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    symbols: Arc<SymbolTable>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(symbols: &Arc<SymbolTable>) -> Self {
        Polynomial { symbols: symbols.clone(), terms: BTreeMap::new() }
    }

    pub fn one(symbols: &Arc<SymbolTable>) -> Self {
        Self::constant(symbols, Rational::one())
    }

    pub fn constant(symbols: &Arc<SymbolTable>, c: impl Into<Rational>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(symbols.len()), c);
        }
        Polynomial { symbols: symbols.clone(), terms }
    }

    /// The polynomial consisting of the single symbol `name`.
    pub fn var(symbols: &Arc<SymbolTable>, name: &str) -> Result<Self> {
        let idx = symbols
            .index_of(name)
            .ok_or_else(|| Error::usage(format!("unknown symbol {name:?}")))?;
        Ok(Self::var_at(symbols, idx))
    }

    /// Panics if `idx` is out of range.
    pub fn var_at(symbols: &Arc<SymbolTable>, idx: usize) -> Self {
        assert!(idx < symbols.len(), "symbol index {idx} out of range");
        let mut exps: Exps = SmallVec::from_elem(0, symbols.len());
        exps[idx] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial { degree: 1, exps }, Rational::one());
        Polynomial { symbols: symbols.clone(), terms }
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs, merging
    /// repeated monomials and dropping zero coefficients.
    pub fn from_terms<I>(symbols: &Arc<SymbolTable>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, Vec<u16>)>,
    {
        let mut out = Polynomial::zero(symbols);
        for (c, exps) in terms {
            if exps.len() != symbols.len() {
                return Err(Error::usage(format!(
                    "exponent vector of length {} for {} symbols",
                    exps.len(),
                    symbols.len()
                )));
            }
            out.add_term(Monomial::from_exponents(&exps), &c);
        }
        Ok(out)
    }

    pub fn symbols(&self) -> &Arc<SymbolTable> {
        &self.symbols
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.constant_term())
        } else {
            None
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.terms.get(&Monomial::one(self.symbols.len())).cloned().unwrap_or_default()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the largest monomial (graded lex) down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, exps: &[u16]) -> Rational {
        self.terms.get(&Monomial::from_exponents(exps)).cloned().unwrap_or_default()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// Largest weighted degree `sum(w_i * a_i)` over the terms, e.g. with
    /// `deg(e_i) = i` for the ring of ODE coefficients.
    pub fn weighted_degree(&self, weights: &[u32]) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| m.exps.iter().zip(weights).map(|(&a, &w)| a as u32 * w).sum())
            .max()
    }

    pub fn same_symbols(&self, other: &Polynomial) -> bool {
        Arc::ptr_eq(&self.symbols, &other.symbols) || self.symbols == other.symbols
    }

    fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &Polynomial) -> Result<()> {
        if self.same_symbols(other) {
            Ok(())
        } else {
            Err(Error::usage(format!(
                "symbol tables differ: {:?} vs {:?}",
                self.symbols, other.symbols
            )))
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        Ok(out)
    }

    /// Exact product; fails if the operands use different symbol tables.
    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same(other)?;
        let mut out = Polynomial::zero(&self.symbols);
        if self.is_zero() || other.is_zero() {
            return Ok(out);
        }
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.product(mb), &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Rational) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero(&self.symbols);
        }
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect();
        Polynomial { symbols: self.symbols.clone(), terms }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.symbols);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Ring-homomorphism image of `self` under `subst`. Constants map to
    /// multiples of the target one.
    pub fn evaluate<R: Ring>(&self, subst: &Substitution<R>) -> Result<R> {
        if !self.same_symbols_as_table(&subst.source) {
            return Err(Error::usage(format!(
                "substitution is defined on {:?}, polynomial lives in {:?}",
                subst.source, self.symbols
            )));
        }
        let nvars = self.symbols.len();
        // Powers of each image, grown on demand.
        let mut powers: Vec<Vec<R>> = vec![Vec::new(); nvars];
        let mut acc = subst.target_one.zero_like();
        for (m, c) in &self.terms {
            let mut term = subst.target_one.scaled(c);
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let image = subst.images[i].as_ref().ok_or_else(|| {
                    Error::usage(format!("no image for symbol {:?}", self.symbols.names()[i]))
                })?;
                let table = &mut powers[i];
                if table.is_empty() {
                    table.push(image.clone());
                }
                while table.len() < e as usize {
                    let next = table.last().unwrap().times(image);
                    table.push(next);
                }
                term = term.times(&table[e as usize - 1]);
            }
            acc = acc.plus(&term);
        }
        Ok(acc)
    }

    /// Polynomial-to-polynomial substitution.
    pub fn substitute(&self, subst: &Substitution<Polynomial>) -> Result<Polynomial> {
        self.evaluate(subst)
    }

    fn same_symbols_as_table(&self, table: &Arc<SymbolTable>) -> bool {
        Arc::ptr_eq(&self.symbols, table) || *self.symbols == **table
    }

    /// Re-expresses `self` over `target`, which must contain every symbol
    /// that occurs in `self` (matched by name).
    pub fn embed(&self, target: &Arc<SymbolTable>) -> Result<Polynomial> {
        if self.same_symbols_as_table(target) {
            return Ok(self.clone());
        }
        let map: Vec<Option<usize>> =
            self.symbols.names().iter().map(|n| target.index_of(n)).collect();
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut exps: Exps = SmallVec::from_elem(0, target.len());
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let j = map[i].ok_or_else(|| {
                    Error::usage(format!(
                        "symbol {:?} is missing from the target table",
                        self.symbols.names()[i]
                    ))
                })?;
                exps[j] = e;
            }
            out.add_term(Monomial { degree: m.degree, exps }, c);
        }
        Ok(out)
    }

    /// Parses the text form produced by `Display` (and a little more:
    /// parentheses, `^` on groups, implicit `+`).
    pub fn parse(text: &str, symbols: &Arc<SymbolTable>) -> Result<Polynomial> {
        super::parse::parse_polynomial(text, symbols)
    }
}

/// A ring homomorphism out of a polynomial ring, given by per-symbol images.
#[derive(Clone, Debug)]
pub struct Substitution<R> {
    source: Arc<SymbolTable>,
    images: Vec<Option<R>>,
    target_one: R,
}

impl<R: Ring> Substitution<R> {
    /// An empty substitution; `target_one` fixes the codomain.
    pub fn new(source: &Arc<SymbolTable>, target_one: R) -> Self {
        Substitution { source: source.clone(), images: vec![None; source.len()], target_one }
    }

    pub fn with(mut self, name: &str, image: R) -> Result<Self> {
        let idx = self
            .source
            .index_of(name)
            .ok_or_else(|| Error::usage(format!("unknown symbol {name:?}")))?;
        if !image.compatible(&self.target_one) {
            return Err(Error::usage(format!("image of {name:?} lies in a different ring")));
        }
        self.images[idx] = Some(image);
        Ok(self)
    }

    /// Assigns images to the first `images.len()` symbols in order.
    pub fn with_leading(mut self, images: impl IntoIterator<Item = R>) -> Result<Self> {
        for (i, image) in images.into_iter().enumerate() {
            let name = self
                .source
                .names()
                .get(i)
                .ok_or_else(|| Error::usage("more images than symbols"))?
                .clone();
            self = self.with(&name, image)?;
        }
        Ok(self)
    }

    pub fn source(&self) -> &Arc<SymbolTable> {
        &self.source
    }

    pub fn target_one(&self) -> &R {
        &self.target_one
    }

    pub fn image(&self, idx: usize) -> Option<&R> {
        self.images.get(idx).and_then(Option::as_ref)
    }
}

impl Substitution<Polynomial> {
    /// Every symbol of `source` mapped to the same-named symbol of `target`.
    pub fn identity(source: &Arc<SymbolTable>) -> Self {
        let mut s = Substitution::new(source, Polynomial::one(source));
        for i in 0..source.len() {
            s.images[i] = Some(Polynomial::var_at(source, i));
        }
        s
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    /// Panics if the symbol tables differ; see [`Polynomial::checked_add`].
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial addition")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial subtraction")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial { symbols: self.symbols.clone(), terms }
    }
}

impl Ring for Polynomial {
    fn zero_like(&self) -> Self {
        Polynomial::zero(&self.symbols)
    }

    fn one_like(&self) -> Self {
        Polynomial::one(&self.symbols)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn negated(&self) -> Self {
        -self
    }

    fn scaled(&self, k: &Rational) -> Self {
        self.scale(k)
    }

    fn compatible(&self, rhs: &Self) -> bool {
        self.same_symbols(rhs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let mut first = true;
            if !abs.is_one() || m.is_one() {
                write!(f, "{abs}")?;
                first = false;
            }
            for (name, &e) in self.symbols.names().iter().zip(&m.exps) {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if e == 1 {
                    write!(f, "{name}")?;
                } else {
                    write!(f, "{name}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self} over {:?})", self.symbols)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: Rational,
    exps: Vec<u16>,
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    symbols: Vec<String>,
    terms: Vec<TermJson>,
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PolynomialJson {
            symbols: self.symbols.names().to_vec(),
            terms: self
                .terms()
                .map(|(m, c)| TermJson { coeff: c.clone(), exps: m.exps.to_vec() })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = PolynomialJson::deserialize(deserializer)?;
        let symbols = SymbolTable::new(raw.symbols).map_err(serde::de::Error::custom)?;
        Polynomial::from_terms(&symbols, raw.terms.into_iter().map(|t| (t.coeff, t.exps)))
            .map_err(serde::de::Error::custom)
    }
}
