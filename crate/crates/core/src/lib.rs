//! Exact computer algebra for the universal linear ODE
//! `u^(r+1) - e1 u^(r) + ... + (-1)^(r+1) e_{r+1} u = 0` with indeterminate
//! coefficients, and for the Wronski-Schubert calculus built on its explicit
//! fundamental system.
//!
//! Power series throughout use the divided-power convention: a
//! [`DividedSeries`] stores `a_n` for the series `sum a_n t^n / n!`, so `a_n` is
//! the n-th derivative at zero and differentiation is an index shift.

pub mod combinat;
pub mod error;
pub mod exactmath;
pub mod odecore;
pub mod schurring;
pub mod series;
pub mod wronskian;

pub use error::{Error, Result};
pub use exactmath::{Matrix, PolyMatrix, Polynomial, Rational, Ring, Substitution, SymbolTable};
pub use series::{DifferentialOperator, DividedSeries};
