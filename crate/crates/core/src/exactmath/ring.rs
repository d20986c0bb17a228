use std::fmt::Debug;

use super::Rational;

/// A commutative Q-algebra whose elements know how to build their own zero and
/// one. Elements of polynomial rings carry their symbol table, so the additive
/// and multiplicative identities are produced from an existing element rather
/// than from the type alone.
///
/// The arithmetic methods assume both operands live in the same ring; callers
/// that accept foreign input check [`Ring::compatible`] first.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;

    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, k: &Rational) -> Self;

    /// Whether `self` and `rhs` belong to the same coefficient ring.
    fn compatible(&self, _rhs: &Self) -> bool {
        true
    }

    fn from_rational_like(&self, k: &Rational) -> Self {
        self.one_like().scaled(k)
    }
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }

    fn one_like(&self) -> Self {
        Rational::one()
    }

    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
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
        self * k
    }
}
