//! Gaussian rationals `a + b i`.

use crate::rational::{render_rational, Rational};
use crate::ring::Ring;

/// An element of Q(i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn from_real(re: Rational) -> Self {
        Self { re, im: Rational::zero() }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self { re: Rational::zero(), im: num_traits::One::one() }
    }

    pub fn conjugate(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `|z|^2`, a rational.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl Ring for GaussianRational {
    fn zero() -> Self {
        Self { re: Rational::zero(), im: Rational::zero() }
    }

    fn one() -> Self {
        Self { re: num_traits::One::one(), im: Rational::zero() }
    }

    fn add(&self, other: &Self) -> Self {
        Self { re: &self.re + &other.re, im: &self.im + &other.im }
    }

    fn sub(&self, other: &Self) -> Self {
        Self { re: &self.re - &other.re, im: &self.im - &other.im }
    }

    fn mul(&self, other: &Self) -> Self {
        Self {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    fn neg(&self) -> Self {
        Self { re: -self.re.clone(), im: -self.im.clone() }
    }

    fn from_rational(value: &Rational) -> Self {
        Self::from_real(value.clone())
    }

    fn try_invert(&self) -> Option<Self> {
        let norm = self.norm();
        if norm.is_zero() {
            return None;
        }
        let conj = self.conjugate();
        Some(Self { re: conj.re / &norm, im: conj.im / &norm })
    }
}

impl std::fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", render_rational(&self.re));
        }
        let im_mag = crate::rational::abs(&self.im);
        let sign = if self.im < Rational::zero() { "-" } else { "+" };
        let im_part = if im_mag == num_traits::One::one() {
            "i".to_owned()
        } else {
            format!("{}*i", render_rational(&im_mag))
        };
        if self.re.is_zero() {
            let lead = if sign == "-" { "-" } else { "" };
            write!(f, "{lead}{im_part}")
        } else {
            write!(f, "{} {} {}", render_rational(&self.re), sign, im_part)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn field_operations() {
        let z = GaussianRational::new(rat(3), rat(-2));
        let inv = z.try_invert().unwrap();
        assert_eq!(z.mul(&inv), GaussianRational::one());
        assert_eq!(GaussianRational::i().mul(&GaussianRational::i()), GaussianRational::one().neg());
        assert!(GaussianRational::zero().try_invert().is_none());
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussianRational::new(ratio(1, 2), rat(0)).to_string(), "1/2");
        assert_eq!(GaussianRational::new(rat(0), rat(-1)).to_string(), "-i");
        assert_eq!(GaussianRational::new(rat(2), ratio(-1, 3)).to_string(), "2 - 1/3*i");
        assert_eq!(GaussianRational::new(rat(0), ratio(1, 240)).to_string(), "1/240*i");
    }
}
