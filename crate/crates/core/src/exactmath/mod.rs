//! Exact scalar and polynomial arithmetic: rationals, sparse multivariate
//! polynomials, and division-free determinants.

mod matrix;
mod parse;
mod polynomial;
mod rational;
mod ring;
mod symbols;

pub use matrix::{Matrix, PolyMatrix, MAX_DET_SIZE};
pub use polynomial::{Monomial, Polynomial, Substitution};
pub use rational::Rational;
pub use ring::Ring;
pub use symbols::SymbolTable;

use crate::error::Result;

/// Exact product of two polynomials over the same symbol table.
pub fn poly_mul(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    a.checked_mul(b)
}

/// Ring-homomorphism image of `p` under per-symbol images.
pub fn poly_substitute(p: &Polynomial, images: &Substitution<Polynomial>) -> Result<Polynomial> {
    p.substitute(images)
}

/// Division-free determinant of a square polynomial matrix.
pub fn matrix_det(m: &PolyMatrix) -> Result<Polynomial> {
    m.determinant()
}
