//! Coefficient rings for truncated series.
//!
//! Everything downstream works over a commutative Q-algebra: plain rationals,
//! Gaussian rationals, or polynomial rings (series whose coefficients are
//! themselves polynomials in a formal parameter). The trait keeps the series
//! code generic without pulling in operator-overload bounds everywhere.

use crate::rational::Rational;

/// A commutative ring containing the rationals.
///
/// `try_invert` returns `None` for non-units, which the series code uses to
/// reject inversion of series whose constant term is not a unit.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rational(value: &Rational) -> Self;
    fn try_invert(&self) -> Option<Self>;

    fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    /// Multiplication by a rational scalar.
    fn scale(&self, factor: &Rational) -> Self {
        self.mul(&Self::from_rational(factor))
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }

    fn one() -> Self {
        num_traits::One::one()
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn from_rational(value: &Rational) -> Self {
        value.clone()
    }

    fn try_invert(&self) -> Option<Self> {
        if num_traits::Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }

    fn scale(&self, factor: &Rational) -> Self {
        self * factor
    }
}
