//! The universal linear ODE `U_{r+1}(D) u = 0` over `E_r = Q[e1, ..., e_{r+1}]`,
//! where `U_{r+1}(T) = T^{r+1} - e1 T^r + ... + (-1)^{r+1} e_{r+1}`.
//!
//! Its explicit fundamental system is `u_j = sum_{n>=j} h_{n-j} t^n/n!`, with
//! `h_n` the coefficients of `1 / (1 - e1 t + ... + (-1)^{r+1} e_{r+1} t^{r+1})`.
//! Everything else here (Cauchy problems, the non-homogeneous equation,
//! specialisation to concrete coefficients, the universal Euler formula) is
//! assembled from those series.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactmath::{Matrix, PolyMatrix, Polynomial, Rational, Ring, Substitution, SymbolTable};
use crate::series::{DifferentialOperator, DividedSeries};

/// Rank `r`, the coefficient ring `E_r` (optionally enlarged by extra
/// symbols), and the `h`-sequence precomputed up to the default order.
#[derive(Clone, Debug)]
pub struct UniversalContext {
    rank: usize,
    symbols: Arc<SymbolTable>,
    /// `e_0 = 1, e_1, ..., e_{r+1}`
    e: Vec<Polynomial>,
    order: usize,
    h: Vec<Polynomial>,
}

/// `h_0, ..., h_N` for a fixed rank. Indices below zero read as zero.
#[derive(Clone, Debug, PartialEq)]
pub struct HSequence {
    rank: usize,
    values: Vec<Polynomial>,
}

impl HSequence {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn values(&self) -> &[Polynomial] {
        &self.values
    }

    pub fn order(&self) -> usize {
        self.values.len() - 1
    }

    /// `h_j`, zero for negative `j`; `None` past the computed order.
    pub fn get(&self, j: i64) -> Option<Polynomial> {
        if j < 0 {
            Some(self.values[0].zero_like())
        } else {
            self.values.get(j as usize).cloned()
        }
    }
}

fn e_names(rank: usize) -> Vec<String> {
    (1..=rank + 1).map(|i| format!("e{i}")).collect()
}

fn extend_h(rank: usize, e: &[Polynomial], h: &mut Vec<Polynomial>, order: usize) {
    while h.len() <= order {
        let n = h.len();
        // h_n = sum_{i=1}^{r+1} (-1)^{i+1} e_i h_{n-i}
        let mut acc = h[0].zero_like();
        for i in 1..=(rank + 1).min(n) {
            let term = e[i].times(&h[n - i]);
            acc = if i % 2 == 1 { acc.plus(&term) } else { acc.minus(&term) };
        }
        h.push(acc);
    }
}

impl UniversalContext {
    /// Context over `E_r = Q[e1..e_{r+1}]` with default truncation `order`.
    pub fn new(rank: usize, order: usize) -> Result<Self> {
        Self::with_extra_symbols(rank, order, std::iter::empty::<String>())
    }

    /// Context over `E_r[y0..yr]`, for Cauchy problems with symbolic data.
    pub fn with_initial_symbols(rank: usize, order: usize) -> Result<Self> {
        Self::with_extra_symbols(rank, order, (0..=rank).map(|i| format!("y{i}")))
    }

    pub fn with_extra_symbols<I, S>(rank: usize, order: usize, extra: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        if order < rank + 1 {
            return Err(Error::usage(format!("order {order} must be at least rank + 1 = {}", rank + 1)));
        }
        let symbols = SymbolTable::new(e_names(rank))?.extended(extra)?;
        let mut e = vec![Polynomial::one(&symbols)];
        e.extend((0..=rank).map(|i| Polynomial::var_at(&symbols, i)));
        let mut h = vec![Polynomial::one(&symbols)];
        extend_h(rank, &e, &mut h, order);
        Ok(UniversalContext { rank, symbols, e, order, h })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn symbols(&self) -> &Arc<SymbolTable> {
        &self.symbols
    }

    /// `e_i`, with `e_0 = 1` and `e_i = 0` for `i > r + 1`.
    pub fn e(&self, i: usize) -> Polynomial {
        self.e.get(i).cloned().unwrap_or_else(|| self.zero())
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(&self.symbols)
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::one(&self.symbols)
    }

    /// `h_0..h_order`, from the cache when it is long enough.
    pub fn h_sequence(&self, order: usize) -> HSequence {
        let values = if order < self.h.len() {
            self.h[..=order].to_vec()
        } else {
            let mut h = self.h.clone();
            extend_h(self.rank, &self.e, &mut h, order);
            h
        };
        HSequence { rank: self.rank, values }
    }

    /// `h_j` for any integer `j`.
    pub fn h(&self, j: i64) -> Polynomial {
        if j < 0 {
            self.zero()
        } else if (j as usize) < self.h.len() {
            self.h[j as usize].clone()
        } else {
            self.h_sequence(j as usize).values.pop().unwrap()
        }
    }

    /// `U_{r+1}(D)`; the coefficient of `D^{r+1-i}` is `(-1)^i e_i`.
    pub fn operator(&self) -> DifferentialOperator<Polynomial> {
        let deg = self.rank + 1;
        let coeffs = (0..=deg)
            .map(|k| {
                let i = deg - k;
                if i % 2 == 0 {
                    self.e(i)
                } else {
                    self.e(i).negated()
                }
            })
            .collect();
        DifferentialOperator::new(coeffs).expect("universal operator is monic")
    }

    /// The universal fundamental system `u_0..u_r` to `order`:
    /// the `n`-th coefficient of `u_j` is `h_{n-j}`.
    pub fn universal_solutions(&self, order: usize) -> Result<Vec<DividedSeries<Polynomial>>> {
        if order < self.rank {
            return Err(Error::usage(format!("order {order} is below the rank {}", self.rank)));
        }
        let h = self.h_sequence(order);
        Ok((0..=self.rank)
            .map(|j| DividedSeries::from_fn(order, |n| h.get(n as i64 - j as i64).unwrap()))
            .collect())
    }

    /// Checks the coefficient recurrence
    /// `x_{n+1} - e1 x_n + ... + (-1)^{r+1} e_{r+1} x_{n-r} = 0` for
    /// `r <= n <= order(f) - 1`, i.e. membership in `ker U_{r+1}(D)` to the
    /// certified order.
    pub fn kernel_check(&self, f: &DividedSeries<Polynomial>) -> Result<KernelVerdict> {
        let image = self.operator().apply(f)?;
        for (m, c) in image.coeffs().iter().enumerate() {
            if !c.is_zero() {
                return Ok(KernelVerdict {
                    holds: false,
                    first_violation: Some(m + self.rank),
                    residual: Some(c.clone()),
                });
            }
        }
        Ok(KernelVerdict { holds: true, first_violation: None, residual: None })
    }

    /// Initial data `x_0..x_r` as polynomials over this context.
    pub fn initial_conditions(&self, values: Vec<Polynomial>) -> Result<InitialConditions> {
        if values.len() != self.rank + 1 {
            return Err(Error::usage(format!(
                "expected {} initial values, got {}",
                self.rank + 1,
                values.len()
            )));
        }
        let values = values.iter().map(|v| v.embed(&self.symbols)).collect::<Result<Vec<_>>>()?;
        Ok(InitialConditions { values })
    }

    /// Rational initial data.
    pub fn rational_initial_conditions(&self, values: &[Rational]) -> Result<InitialConditions> {
        self.initial_conditions(values.iter().map(|x| Polynomial::constant(&self.symbols, x.clone())).collect())
    }

    /// `y_0..y_r` as initial data; the context must contain those symbols.
    pub fn symbolic_initial_conditions(&self) -> Result<InitialConditions> {
        let values = (0..=self.rank)
            .map(|i| Polynomial::var(&self.symbols, &format!("y{i}")))
            .collect::<Result<Vec<_>>>()?;
        Ok(InitialConditions { values })
    }

    /// The unitriangular matrix `(h_{i-j})` relating `Lambda` to the initial data.
    pub fn h_matrix(&self) -> PolyMatrix {
        Matrix::from_fn(self.rank + 1, self.rank + 1, |i, j| self.h(i as i64 - j as i64))
            .expect("nonempty square matrix")
    }

    /// Its inverse, `((-1)^{i-j} e_{i-j})`.
    pub fn e_matrix(&self) -> PolyMatrix {
        Matrix::from_fn(self.rank + 1, self.rank + 1, |i, j| {
            if j > i {
                self.zero()
            } else if (i - j) % 2 == 0 {
                self.e(i - j)
            } else {
                self.e(i - j).negated()
            }
        })
        .expect("nonempty square matrix")
    }

    /// `Lambda_j(x) = x_j - e1 x_{j-1} + ... + (-1)^j e_j x_0`.
    pub fn lambdas(&self, inits: &InitialConditions) -> Vec<Polynomial> {
        (0..=self.rank)
            .map(|j| {
                (0..=j).fold(self.zero(), |acc, i| {
                    let term = self.e(i).times(&inits.values[j - i]);
                    if i % 2 == 0 {
                        acc.plus(&term)
                    } else {
                        acc.minus(&term)
                    }
                })
            })
            .collect()
    }

    /// The unique kernel element with `D^i g(0) = x_i`, as
    /// `g = sum Lambda_j(x) u_j`.
    pub fn cauchy_solve(&self, inits: &InitialConditions, order: usize) -> Result<CauchySolution> {
        let lambdas = self.lambdas(inits);
        let u = self.universal_solutions(order)?;
        let series = combine(&lambdas, &u);
        Ok(CauchySolution { series, lambdas })
    }

    /// Solves `U_{r+1}(D) y = rhs` with `D^k y(0) = b_k`. The particular part
    /// `sum_{n>=r+1} p_n t^n/n!` comes from the recurrence
    /// `p_{r+1+n} - e1 p_{r+n} + ... + (-1)^{r+1} e_{r+1} p_n = a_n`, with
    /// `p_0 = ... = p_r = 0`.
    pub fn solve_nonhomogeneous(
        &self,
        rhs: &DividedSeries<Polynomial>,
        inits: &InitialConditions,
        order: usize,
    ) -> Result<DividedSeries<Polynomial>> {
        let deg = self.rank + 1;
        let rhs = rhs.embed(&self.symbols)?;
        let needed = order.saturating_sub(deg);
        if order >= deg && rhs.order() < needed {
            return Err(Error::TruncationExhausted { needed, available: rhs.order() });
        }
        let mut p: Vec<Polynomial> = vec![self.zero(); order + 1];
        for idx in deg..=order {
            let n = idx - deg;
            let mut acc = rhs.coeffs()[n].clone();
            for i in 1..=deg {
                let term = self.e(i).times(&p[idx - i]);
                acc = if i % 2 == 1 { acc.plus(&term) } else { acc.minus(&term) };
            }
            p[idx] = acc;
        }
        let particular = DividedSeries::new(p)?;
        let homogeneous = self.cauchy_solve(inits, order)?.series;
        homogeneous.checked_add(&particular)
    }

    /// `e_i -> images[i-1]` for `i = 1..=r+1`. Extra symbols of the context
    /// are left unmapped.
    pub fn specialization<R: Ring>(&self, images: Vec<R>) -> Result<Substitution<R>> {
        if images.len() != self.rank + 1 {
            return Err(Error::usage(format!(
                "expected {} images for e1..e{}, got {}",
                self.rank + 1,
                self.rank + 1,
                images.len()
            )));
        }
        let one = images[0].one_like();
        Substitution::new(&self.symbols, one).with_leading(images)
    }

    /// Images `v_0..v_r` of the universal fundamental system: a fundamental
    /// system of `P(D) v = 0` for `P` the image of `U_{r+1}`.
    pub fn specialize_system<R: Ring>(&self, subst: &Substitution<R>, order: usize) -> Result<Vec<DividedSeries<R>>> {
        self.universal_solutions(order)?.iter().map(|u| u.evaluate(subst)).collect()
    }

    /// The image of `U_{r+1}(D)` under a specialisation.
    pub fn specialize_operator<R: Ring>(&self, subst: &Substitution<R>) -> Result<DifferentialOperator<R>> {
        self.operator().map_coeffs(|c| c.evaluate(subst))
    }

    pub fn root_algebra(&self) -> Arc<RootAlgebra> {
        Arc::new(RootAlgebra { rank: self.rank, e: self.e.clone() })
    }

    /// `exp(alpha t)` over `E_r[alpha]`, coefficients `alpha^n` reduced.
    pub fn exp_alpha(&self, order: usize) -> DividedSeries<AlgebraElement> {
        let alpha = AlgebraElement::alpha(&self.root_algebra());
        DividedSeries::exponential(&alpha, order)
    }

    /// `Lambda_j(alpha) = alpha^j - e1 alpha^{j-1} + ... + (-1)^j e_j`.
    pub fn lambda_alpha(&self, j: usize) -> AlgebraElement {
        let alg = self.root_algebra();
        let alpha = AlgebraElement::alpha(&alg);
        (0..=j).fold(AlgebraElement::zero(&alg), |acc, i| {
            let term = alpha.pow(j - i).scale_poly(&self.e(i));
            if i % 2 == 0 {
                acc.plus(&term)
            } else {
                acc.minus(&term)
            }
        })
    }

    /// `u_0 + Lambda_1(alpha) u_1 + ... + Lambda_r(alpha) u_r` over `E_r[alpha]`.
    pub fn euler_decomposition(&self, order: usize) -> Result<DividedSeries<AlgebraElement>> {
        let alg = self.root_algebra();
        let u = self.universal_solutions(order)?;
        let mut acc = DividedSeries::constant(AlgebraElement::zero(&alg), order);
        for (j, uj) in u.iter().enumerate() {
            let lifted = uj.map_coeffs(|c| Ok(AlgebraElement::from_poly(&alg, c.clone())))?;
            acc = acc.checked_add(&lifted.scale(&self.lambda_alpha(j)))?;
        }
        Ok(acc)
    }

    /// Verifies `exp(alpha t) = sum_j Lambda_j(alpha) u_j` coefficient-wise
    /// up to `order`.
    pub fn universal_exp_check(&self, order: usize) -> Result<bool> {
        let lhs = self.exp_alpha(order);
        let rhs = self.euler_decomposition(order)?;
        lhs.agrees_with(&rhs, order)
    }
}

/// `sum_j c_j s_j` over series of a common order.
fn combine(coeffs: &[Polynomial], series: &[DividedSeries<Polynomial>]) -> DividedSeries<Polynomial> {
    let mut acc = series[0].zero_like();
    for (c, s) in coeffs.iter().zip(series) {
        if !c.is_zero() {
            acc = acc.plus(&s.scale(c));
        }
    }
    acc
}

#[derive(Clone, Debug, PartialEq)]
pub struct KernelVerdict {
    pub holds: bool,
    /// Smallest `n` at which the recurrence fails.
    pub first_violation: Option<usize>,
    pub residual: Option<Polynomial>,
}

/// `x_0..x_r`, exactly `r + 1` values in the context's ring.
#[derive(Clone, Debug, PartialEq)]
pub struct InitialConditions {
    values: Vec<Polynomial>,
}

impl InitialConditions {
    pub fn values(&self) -> &[Polynomial] {
        &self.values
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CauchySolution {
    pub series: DividedSeries<Polynomial>,
    /// `Lambda_0..Lambda_r` with `series = sum Lambda_j u_j`.
    pub lambdas: Vec<Polynomial>,
}

/// The matrix `C[i][j] = D^j f_i (0)` of initial conditions.
pub fn initial_condition_matrix<R: Ring>(solutions: &[DividedSeries<R>]) -> Result<Matrix<R>> {
    let n = solutions.len();
    if n == 0 {
        return Err(Error::usage("no solutions given"));
    }
    for s in solutions {
        if s.order() + 1 < n {
            return Err(Error::TruncationExhausted { needed: n - 1, available: s.order() });
        }
    }
    Matrix::from_fn(n, n, |i, j| solutions[i].coeffs()[j].clone())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fundamentality {
    /// `det C` is a unit: a basis of the kernel.
    Fundamental,
    /// `det C` is nonzero but not a unit.
    IndependentNotFundamental,
    /// `det C = 0`.
    Dependent,
}

/// Classifies solutions over a polynomial Q-algebra (a field when the symbol
/// table is empty): the units are exactly the nonzero constants.
pub fn fundamental_check(c: &PolyMatrix) -> Result<(Polynomial, Fundamentality)> {
    let det = c.determinant()?;
    let verdict = if det.is_zero() {
        Fundamentality::Dependent
    } else if det.is_constant() {
        Fundamentality::Fundamental
    } else {
        Fundamentality::IndependentNotFundamental
    };
    Ok((det, verdict))
}

/// `E_r[T] / (U_{r+1}(T))`, the ring generated by a universal root `alpha`.
#[derive(Debug, PartialEq)]
pub struct RootAlgebra {
    rank: usize,
    e: Vec<Polynomial>,
}

impl RootAlgebra {
    pub fn rank(&self) -> usize {
        self.rank
    }

    fn symbols(&self) -> &Arc<SymbolTable> {
        self.e[0].symbols()
    }
}

/// `c_0 + c_1 alpha + ... + c_r alpha^r`, always fully reduced.
#[derive(Clone, Debug)]
pub struct AlgebraElement {
    algebra: Arc<RootAlgebra>,
    coeffs: Vec<Polynomial>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl AlgebraElement {
    pub fn zero(algebra: &Arc<RootAlgebra>) -> Self {
        let z = Polynomial::zero(algebra.symbols());
        AlgebraElement { algebra: algebra.clone(), coeffs: vec![z; algebra.rank + 1] }
    }

    pub fn from_poly(algebra: &Arc<RootAlgebra>, c: Polynomial) -> Self {
        let mut x = Self::zero(algebra);
        x.coeffs[0] = c;
        x
    }

    /// The class of `T`. For `r = 0` this is already `e1`.
    pub fn alpha(algebra: &Arc<RootAlgebra>) -> Self {
        Self::from_power_coeffs(algebra, {
            let mut v = vec![Polynomial::zero(algebra.symbols()); 2];
            v[1] = Polynomial::one(algebra.symbols());
            v
        })
    }

    /// Reduces an arbitrary polynomial in `alpha` (coefficient `i` on `alpha^i`).
    pub fn from_power_coeffs(algebra: &Arc<RootAlgebra>, mut c: Vec<Polynomial>) -> Self {
        let deg = algebra.rank + 1;
        let zero = Polynomial::zero(algebra.symbols());
        // alpha^{r+1} = sum_{i=1}^{r+1} (-1)^{i+1} e_i alpha^{r+1-i}
        for m in (deg..c.len()).rev() {
            let top = std::mem::replace(&mut c[m], zero.clone());
            if top.is_zero() {
                continue;
            }
            for i in 1..=deg {
                let term = algebra.e[i].times(&top);
                c[m - i] = if i % 2 == 1 { c[m - i].plus(&term) } else { c[m - i].minus(&term) };
            }
        }
        c.resize(deg, zero);
        AlgebraElement { algebra: algebra.clone(), coeffs: c }
    }

    /// Coefficients on `1, alpha, ..., alpha^r`.
    pub fn coeffs(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn context_matches(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if !self.context_matches(other) {
            return Err(Error::usage("elements of different root algebras"));
        }
        Ok(self.times(other))
    }

    pub fn scale_poly(&self, p: &Polynomial) -> Self {
        AlgebraElement {
            algebra: self.algebra.clone(),
            coeffs: self.coeffs.iter().map(|c| c.times(p)).collect(),
        }
    }

    pub fn pow(&self, n: usize) -> Self {
        (0..n).fold(self.one_like(), |acc, _| acc.times(self))
    }
}

impl Ring for AlgebraElement {
    fn zero_like(&self) -> Self {
        AlgebraElement::zero(&self.algebra)
    }

    fn one_like(&self) -> Self {
        AlgebraElement::from_poly(&self.algebra, Polynomial::one(self.algebra.symbols()))
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Polynomial::is_zero)
    }

    fn plus(&self, rhs: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        AlgebraElement { algebra: self.algebra.clone(), coeffs }
    }

    fn minus(&self, rhs: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        AlgebraElement { algebra: self.algebra.clone(), coeffs }
    }

    fn times(&self, rhs: &Self) -> Self {
        let zero = Polynomial::zero(self.algebra.symbols());
        let mut prod = vec![zero; 2 * self.algebra.rank + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] = prod[i + j].plus(&a.times(b));
                }
            }
        }
        AlgebraElement::from_power_coeffs(&self.algebra, prod)
    }

    fn negated(&self) -> Self {
        AlgebraElement { algebra: self.algebra.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    fn scaled(&self, k: &Rational) -> Self {
        AlgebraElement { algebra: self.algebra.clone(), coeffs: self.coeffs.iter().map(|c| c.scale(k)).collect() }
    }

    fn compatible(&self, rhs: &Self) -> bool {
        self.context_matches(rhs)
    }
}
