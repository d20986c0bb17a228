//! Schur determinants, the `e`/`h` change of variables, expansion in the
//! Schur basis by iterated Pieri steps, and the Schubert calculus of the
//! finite Grassmannian `G(r, P^d)`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::combinat::{pieri_successors, Partition};
use crate::error::{Error, Result};
use crate::exactmath::{Matrix, Polynomial, Rational, Ring, Substitution, SymbolTable};
use crate::odecore::{HSequence, UniversalContext};

/// What a [`GradedSequence`] returns past its stored values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Beyond {
    /// `x_j = 0` for large `j`, e.g. special classes in a finite Grassmannian.
    Zero,
    /// Values were only computed this far; reading further is an error.
    Truncated,
}

/// `x_j` for every integer `j`: zero below 0, `x_0 = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedSequence<R> {
    values: Vec<R>,
    beyond: Beyond,
}

impl<R: Ring> GradedSequence<R> {
    pub fn new(values: Vec<R>, beyond: Beyond) -> Result<Self> {
        match values.first() {
            None => Err(Error::usage("graded sequence needs x_0")),
            Some(x0) if *x0 != x0.one_like() => Err(Error::usage("graded sequence needs x_0 = 1")),
            Some(_) => Ok(GradedSequence { values, beyond }),
        }
    }

    pub fn values(&self) -> &[R] {
        &self.values
    }

    pub fn get(&self, j: i64) -> Result<R> {
        if j < 0 {
            return Ok(self.values[0].zero_like());
        }
        match (self.values.get(j as usize), self.beyond) {
            (Some(x), _) => Ok(x.clone()),
            (None, Beyond::Zero) => Ok(self.values[0].zero_like()),
            (None, Beyond::Truncated) => Err(Error::TruncationExhausted {
                needed: j as usize,
                available: self.values.len() - 1,
            }),
        }
    }
}

impl GradedSequence<Polynomial> {
    pub fn from_h(h: &HSequence) -> Self {
        GradedSequence { values: h.values().to_vec(), beyond: Beyond::Truncated }
    }

    /// `1, x1, ..., xm` as free variables named `{prefix}1..{prefix}m`.
    pub fn formal(prefix: &str, m: usize, beyond: Beyond) -> Self {
        let symbols = SymbolTable::indexed(prefix, m);
        let mut values = vec![Polynomial::one(&symbols)];
        values.extend((0..m).map(|i| Polynomial::var_at(&symbols, i)));
        GradedSequence { values, beyond }
    }
}

/// `Delta_lambda(x) = det(x_{lambda_{r-j} + j - i})_{0 <= i,j <= r}`.
pub fn jacobi_trudi<R: Ring>(lambda: &Partition, x: &GradedSequence<R>, rank: usize) -> Result<R> {
    schur_determinant(&lambda.padded(rank + 1)?, x, rank)
}

/// The same determinant for an arbitrary index tuple `(a_0, ..., a_r)`,
/// not necessarily weakly decreasing.
pub fn schur_determinant<R: Ring>(a: &[u32], x: &GradedSequence<R>, rank: usize) -> Result<R> {
    let n = rank + 1;
    if a.len() != n {
        return Err(Error::usage(format!("expected {n} indices, got {}", a.len())));
    }
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            entries.push(x.get(a[rank - j] as i64 + j as i64 - i as i64)?);
        }
    }
    Matrix::new(n, n, entries)?.determinant()
}

/// Symbols `h1..hm`.
pub fn h_symbols(m: usize) -> Arc<SymbolTable> {
    SymbolTable::indexed("h", m)
}

/// `e_0..e_m` as polynomials in free `h1..hm`, from
/// `e_k = h1 e_{k-1} - h2 e_{k-2} + ... + (-1)^{k-1} h_k`.
pub fn e_from_h(m: usize) -> Vec<Polynomial> {
    let symbols = h_symbols(m);
    let h = |i: usize| Polynomial::var_at(&symbols, i - 1);
    let mut e = vec![Polynomial::one(&symbols)];
    for k in 1..=m {
        let mut acc = Polynomial::zero(&symbols);
        for i in 1..=k {
            let term = h(i).times(&e[k - i]);
            acc = if i % 2 == 1 { acc.plus(&term) } else { acc.minus(&term) };
        }
        e.push(acc);
    }
    e
}

/// `h_0..h_m` in the `e`'s of the context.
pub fn h_from_e(ctx: &UniversalContext, m: usize) -> Vec<Polynomial> {
    ctx.h_sequence(m).values().to_vec()
}

/// Rewrites a polynomial in `e1..e_{r+1}` (symbols named `e<i>`) in terms of
/// `h1..h_{r+1}`, which generate the same ring.
pub fn rewrite_in_h(p: &Polynomial, rank: usize) -> Result<Polynomial> {
    let e = e_from_h(rank + 1);
    let target = h_symbols(rank + 1);
    let mut subst = Substitution::new(p.symbols(), Polynomial::one(&target));
    for (i, ei) in e.into_iter().enumerate().skip(1) {
        let name = format!("e{i}");
        if p.symbols().index_of(&name).is_some() {
            subst = subst.with(&name, ei)?;
        }
    }
    p.evaluate(&subst)
}

/// Rewrites a polynomial in `h1..hm` in terms of the context's `e`'s.
pub fn rewrite_in_e(q: &Polynomial, ctx: &UniversalContext) -> Result<Polynomial> {
    let m = q.symbols().len();
    let h = h_from_e(ctx, m);
    let mut subst = Substitution::new(q.symbols(), ctx.one());
    for name in q.symbols().names() {
        subst = subst.with(name, h[h_index(name)?].clone())?;
    }
    q.evaluate(&subst)
}

fn h_index(name: &str) -> Result<usize> {
    name.strip_prefix('h')
        .and_then(|k| k.parse::<usize>().ok())
        .filter(|&k| k > 0)
        .ok_or_else(|| Error::usage(format!("expected a symbol h<k>, got {name:?}")))
}

/// `sum c_lambda s_lambda`, with only nonzero coefficients stored.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, Rational>,
}

impl SchurExpansion {
    pub fn zero() -> Self {
        SchurExpansion::default()
    }

    pub fn one() -> Self {
        SchurExpansion::single(Partition::empty())
    }

    pub fn single(lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, Rational::one());
        SchurExpansion { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, Rational)>) -> Self {
        let mut out = SchurExpansion::zero();
        for (lambda, c) in terms {
            out.add_term(lambda, &c);
        }
        out
    }

    pub fn add_term(&mut self, lambda: Partition, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Terms in reverse-lex order of partitions.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (lambda, c) in &other.terms {
            out.add_term(lambda.clone(), c);
        }
        out
    }

    pub fn scaled(&self, k: &Rational) -> Self {
        SchurExpansion::from_terms(self.terms.iter().map(|(l, c)| (l.clone(), c * k)))
    }

    /// Largest number of rows among the supporting partitions.
    pub fn max_rows(&self) -> usize {
        self.terms.keys().map(Partition::len).max().unwrap_or(0)
    }

    /// `h_k` (or `sigma_k`) times this expansion, by the Pieri rule.
    pub fn pieri(&self, k: u32, rank: usize, col_bound: Option<u32>) -> Result<Self> {
        let mut out = SchurExpansion::zero();
        for (lambda, c) in &self.terms {
            for mu in pieri_successors(lambda, k, rank, col_bound)? {
                out.add_term(mu, c);
            }
        }
        Ok(out)
    }

    /// Evaluates `sum c_lambda Delta_lambda(x)`.
    pub fn evaluate<R: Ring>(&self, x: &GradedSequence<R>, rank: usize) -> Result<R> {
        let mut acc = x.values()[0].zero_like();
        for (lambda, c) in &self.terms {
            acc = acc.plus(&jacobi_trudi(lambda, x, rank)?.scaled(c));
        }
        Ok(acc)
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (lambda, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            write!(f, "s({lambda})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    partition: Partition,
    coeff: Rational,
}

#[derive(Serialize, Deserialize)]
struct ExpansionJson {
    terms: Vec<TermJson>,
}

impl Serialize for SchurExpansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ExpansionJson {
            terms: self
                .terms()
                .map(|(p, c)| TermJson { partition: p.clone(), coeff: c.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchurExpansion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ExpansionJson::deserialize(d)?;
        let mut out = SchurExpansion::zero();
        for t in raw.terms {
            if t.coeff.is_zero() {
                return Err(serde::de::Error::custom("zero coefficient in expansion"));
            }
            if out.terms.contains_key(&t.partition) {
                return Err(serde::de::Error::custom(format!("repeated partition {}", t.partition)));
            }
            out.terms.insert(t.partition, t.coeff);
        }
        Ok(out)
    }
}

/// Multiplies `start` by `x_{k_1}^{a_1} x_{k_2}^{a_2} ...` through repeated
/// Pieri steps; `exps[i]` is the exponent of `x_{i+1}`.
fn pieri_monomial(start: &SchurExpansion, exps: &[u16], rank: usize, col_bound: Option<u32>) -> Result<SchurExpansion> {
    let mut acc = start.clone();
    for (i, &a) in exps.iter().enumerate() {
        for _ in 0..a {
            acc = acc.pieri(i as u32 + 1, rank, col_bound)?;
            if acc.is_zero() {
                return Ok(acc);
            }
        }
    }
    Ok(acc)
}

/// Writes a polynomial in `h1..hm` as `sum c_lambda Delta_lambda(h)` over
/// partitions with at most `rank + 1` rows.
pub fn schur_expand(p: &Polynomial, rank: usize) -> Result<SchurExpansion> {
    let names = p.symbols().names();
    let mut order = Vec::with_capacity(names.len());
    for name in names {
        order.push(h_index(name)?);
    }
    let width = order.iter().copied().max().unwrap_or(0);
    let mut out = SchurExpansion::zero();
    for (mono, c) in p.terms() {
        let mut exps = vec![0u16; width];
        for (idx, &a) in mono.exponents().iter().enumerate() {
            exps[order[idx] - 1] += a;
        }
        let part = pieri_monomial(&SchurExpansion::one(), &exps, rank, None)?;
        out = out.plus(&part.scaled(c));
    }
    Ok(out)
}

/// `h_1^k` in the Schur basis with at most `rank + 1` rows.
pub fn sigma1_power(k: u32, rank: usize) -> Result<SchurExpansion> {
    sigma1_power_bounded(k, rank, None)
}

fn sigma1_power_bounded(k: u32, rank: usize, col_bound: Option<u32>) -> Result<SchurExpansion> {
    let mut acc = SchurExpansion::one();
    for _ in 0..k {
        acc = acc.pieri(1, rank, col_bound)?;
    }
    Ok(acc)
}

/// `H^*(G(r, P^d), Q)` with the Schubert basis: partitions in the
/// `(r+1) x (d-r)` box.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GrassmannRing {
    rank: usize,
    dim: usize,
}

impl GrassmannRing {
    pub fn new(rank: usize, dim: usize) -> Result<Self> {
        if dim <= rank {
            return Err(Error::usage(format!("need d > r, got r = {rank}, d = {dim}")));
        }
        Ok(GrassmannRing { rank, dim })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> usize {
        self.rank + 1
    }

    pub fn cols(&self) -> u32 {
        (self.dim - self.rank) as u32
    }

    /// Complex dimension `(r+1)(d-r)`.
    pub fn dimension(&self) -> u32 {
        self.rows() as u32 * self.cols()
    }

    pub fn top_class(&self) -> Partition {
        Partition::rectangle(self.rows(), self.cols())
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        lambda.fits_in_box(self.rows(), self.cols())
    }

    /// Every basis partition, by weight and then reverse-lex.
    pub fn basis(&self) -> Vec<Partition> {
        (0..=self.dimension())
            .flat_map(|n| crate::combinat::partitions_in_box(n, self.rows(), Some(self.cols())))
            .collect()
    }

    /// The Poincare dual partition: `(d-r) - lambda_{r-i}`.
    pub fn dual(&self, lambda: &Partition) -> Result<Partition> {
        lambda.box_complement(self.rows(), self.cols())
    }

    fn check_support(&self, a: &SchurExpansion) -> Result<()> {
        match a.terms.keys().find(|l| !self.contains(l)) {
            Some(l) => Err(Error::usage(format!(
                "partition {l} does not fit in the {}x{} box",
                self.rows(),
                self.cols()
            ))),
            None => Ok(()),
        }
    }

    /// `sigma_lambda` as a polynomial in formal `s1..s_{d-r}` (Giambelli).
    pub fn giambelli(&self, lambda: &Partition) -> Result<Polynomial> {
        let sigma = GradedSequence::formal("s", self.cols() as usize, Beyond::Zero);
        jacobi_trudi(lambda, &sigma, self.rank)
    }

    /// Cup product: each class of `b` is expanded in special classes via
    /// Giambelli, which then act on `a` by Pieri inside the box.
    pub fn product(&self, a: &SchurExpansion, b: &SchurExpansion) -> Result<SchurExpansion> {
        self.check_support(a)?;
        self.check_support(b)?;
        let mut out = SchurExpansion::zero();
        for (lambda, c) in &b.terms {
            let g = self.giambelli(lambda)?;
            for (mono, m) in g.terms() {
                let part = pieri_monomial(a, mono.exponents(), self.rank, Some(self.cols()))?;
                out = out.plus(&part.scaled(&(c * m)));
            }
        }
        Ok(out)
    }

    /// `sigma_k` acting on a homology class written in the `Omega` basis.
    pub fn cap_action(&self, k: u32, omega: &SchurExpansion) -> Result<SchurExpansion> {
        self.check_support(omega)?;
        omega.pieri(k, self.rank, Some(self.cols()))
    }

    /// Coefficient of the top class in `sigma_1^{dim}`.
    pub fn degree(&self) -> Result<BigInt> {
        let power = sigma1_power_bounded(self.dimension(), self.rank, Some(self.cols()))?;
        power
            .coefficient(&self.top_class())
            .to_integer()
            .ok_or_else(|| Error::Internal("non-integral degree".into()))
    }
}

pub fn grassmann_product(g: &GrassmannRing, a: &SchurExpansion, b: &SchurExpansion) -> Result<SchurExpansion> {
    g.product(a, b)
}

pub fn grassmann_degree(rank: usize, dim: usize) -> Result<BigInt> {
    GrassmannRing::new(rank, dim)?.degree()
}

pub fn cap_action(g: &GrassmannRing, k: u32, omega: &SchurExpansion) -> Result<SchurExpansion> {
    g.cap_action(k, omega)
}

/// An element of a [`GrassmannRing`], usable as series coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct GrassmannClass {
    ring: GrassmannRing,
    value: SchurExpansion,
}

impl GrassmannClass {
    pub fn new(ring: GrassmannRing, value: SchurExpansion) -> Result<Self> {
        ring.check_support(&value)?;
        Ok(GrassmannClass { ring, value })
    }

    pub fn schubert(ring: GrassmannRing, lambda: Partition) -> Result<Self> {
        Self::new(ring, SchurExpansion::single(lambda))
    }

    pub fn ring(&self) -> GrassmannRing {
        self.ring
    }

    pub fn value(&self) -> &SchurExpansion {
        &self.value
    }
}

impl Ring for GrassmannClass {
    fn zero_like(&self) -> Self {
        GrassmannClass { ring: self.ring, value: SchurExpansion::zero() }
    }

    fn one_like(&self) -> Self {
        GrassmannClass { ring: self.ring, value: SchurExpansion::one() }
    }

    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn plus(&self, rhs: &Self) -> Self {
        GrassmannClass { ring: self.ring, value: self.value.plus(&rhs.value) }
    }

    fn minus(&self, rhs: &Self) -> Self {
        GrassmannClass { ring: self.ring, value: self.value.plus(&rhs.value.scaled(&-Rational::one())) }
    }

    fn times(&self, rhs: &Self) -> Self {
        let value = self.ring.product(&self.value, &rhs.value).expect("supports stay inside the box");
        GrassmannClass { ring: self.ring, value }
    }

    fn negated(&self) -> Self {
        GrassmannClass { ring: self.ring, value: self.value.scaled(&-Rational::one()) }
    }

    fn scaled(&self, k: &Rational) -> Self {
        GrassmannClass { ring: self.ring, value: self.value.scaled(k) }
    }

    fn compatible(&self, rhs: &Self) -> bool {
        self.ring == rhs.ring
    }
}
