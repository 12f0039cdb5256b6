//! Integer linear forms in the torus weights `t1, t2, t3`.
//!
//! Tangent weights of the torus action are characters `t1^a t2^b t3^c`; the
//! Euler class of the corresponding line is the linear form `a t1 + b t2 + c t3`.
//! Factorizations keep these forms symbolic, so everything downstream can
//! decide divisibility questions (order along `t1 + t2 = 0`, the rank-one
//! limit) without ever expanding a polynomial.

use std::fmt;

use exact_core::rational::Rational;
use num_integer::Integer;

use crate::point::TPoint;

/// `a*t1 + b*t2 + c*t3` with integer coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearForm {
    a: i64,
    b: i64,
    c: i64,
}

impl LinearForm {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        Self { a, b, c }
    }

    /// The weight of a character monomial with exponent vector `(a, b, c)`.
    pub fn from_exponent(e: (i32, i32, i32)) -> Self {
        Self::new(e.0 as i64, e.1 as i64, e.2 as i64)
    }

    pub fn coeffs(&self) -> (i64, i64, i64) {
        (self.a, self.b, self.c)
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0 && self.c == 0
    }

    /// Split into `(content, primitive)` with `self = content * primitive`,
    /// where the primitive part has coprime coefficients and positive leading
    /// (first nonzero) coefficient. The zero form has no primitive part.
    pub fn canonical(&self) -> Option<(i64, LinearForm)> {
        if self.is_zero() {
            return None;
        }
        let g = self.a.abs().gcd(&self.b.abs()).gcd(&self.c.abs());
        let lead = [self.a, self.b, self.c].into_iter().find(|&x| x != 0).unwrap();
        let content = if lead < 0 { -g } else { g };
        Some((content, Self::new(self.a / content, self.b / content, self.c / content)))
    }

    /// True when the form is a nonzero multiple of `t1 + t2`.
    pub fn proportional_to_t12(&self) -> bool {
        self.a == self.b && self.c == 0 && self.a != 0
    }

    pub fn eval(&self, t: &TPoint) -> Rational {
        t.t1() * Rational::from_integer(self.a.into())
            + t.t2() * Rational::from_integer(self.b.into())
            + t.t3() * Rational::from_integer(self.c.into())
    }

    /// Coefficients after the substitution `t2 = -t1 + s`: the form becomes
    /// `(a - b) t1 + c t3 + b s`.
    pub fn slice_coeffs(&self) -> (i64, i64, i64) {
        (self.a - self.b, self.c, self.b)
    }

    /// Apply a permutation of the variables: coefficient `i` of the result is
    /// the coefficient of `self` at position `perm[i]`.
    pub fn permute(&self, perm: [usize; 3]) -> Self {
        let v = [self.a, self.b, self.c];
        Self::new(v[perm[0]], v[perm[1]], v[perm[2]])
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (coeff, name) in [(self.a, "t1"), (self.b, "t2"), (self.c, "t3")] {
            if coeff == 0 {
                continue;
            }
            if first {
                if coeff < 0 {
                    write!(f, "-")?;
                }
            } else if coeff < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if coeff.abs() != 1 {
                write!(f, "{}*", coeff.abs())?;
            }
            write!(f, "{name}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::rational::rat;

    #[test]
    fn canonical_extracts_content_and_sign() {
        let (k, f) = LinearForm::new(2, 2, 0).canonical().unwrap();
        assert_eq!((k, f), (2, LinearForm::new(1, 1, 0)));
        let (k, f) = LinearForm::new(-3, 0, 6).canonical().unwrap();
        assert_eq!((k, f), (-3, LinearForm::new(1, 0, -2)));
        let (k, f) = LinearForm::new(0, -1, -1).canonical().unwrap();
        assert_eq!((k, f), (-1, LinearForm::new(0, 1, 1)));
        assert!(LinearForm::new(0, 0, 0).canonical().is_none());
    }

    #[test]
    fn t12_direction_detection() {
        assert!(LinearForm::new(1, 1, 0).proportional_to_t12());
        assert!(LinearForm::new(-2, -2, 0).proportional_to_t12());
        assert!(!LinearForm::new(1, 1, 1).proportional_to_t12());
        assert!(!LinearForm::new(1, -1, 0).proportional_to_t12());
        assert!(!LinearForm::new(0, 0, 0).proportional_to_t12());
    }

    #[test]
    fn evaluation_is_linear() {
        let t = TPoint::from_integers(7, 13, -29);
        assert_eq!(LinearForm::new(1, 1, 0).eval(&t), rat(20));
        assert_eq!(LinearForm::new(2, 0, -1).eval(&t), rat(43));
        assert_eq!(LinearForm::new(0, 0, 0).eval(&t), rat(0));
    }

    #[test]
    fn slice_substitution_coefficients() {
        // t1 + t2 vanishes to first order in s, with unit slope.
        assert_eq!(LinearForm::new(1, 1, 0).slice_coeffs(), (0, 0, 1));
        assert_eq!(LinearForm::new(1, 0, 1).slice_coeffs(), (1, 1, 0));
        assert_eq!(LinearForm::new(0, 1, 0).slice_coeffs(), (-1, 0, 1));
    }

    #[test]
    fn rendering() {
        assert_eq!(LinearForm::new(1, 1, 0).to_string(), "t1 + t2");
        assert_eq!(LinearForm::new(-1, 0, 2).to_string(), "-t1 + 2*t3");
        assert_eq!(LinearForm::new(0, 1, -1).to_string(), "t2 - t3");
        assert_eq!(LinearForm::new(0, 0, 0).to_string(), "0");
    }

    #[test]
    fn permutation_moves_coefficients() {
        let f = LinearForm::new(1, 2, 3);
        assert_eq!(f.permute([1, 0, 2]), LinearForm::new(2, 1, 3));
        assert_eq!(f.permute([2, 0, 1]), LinearForm::new(3, 1, 2));
    }
}
