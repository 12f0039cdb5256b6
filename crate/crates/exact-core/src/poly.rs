//! Dense univariate polynomials over the rationals.
//!
//! Used both as a coefficient ring for series (series in `q` whose
//! coefficients are polynomials in a formal parameter) and as a plain value
//! type for numerator polynomials. Coefficients are stored from degree 0 up
//! with no trailing zeros; the zero polynomial is the empty vector.

use crate::rational::{rat, render_rational, Rational};
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(value: Rational) -> Self {
        Self::new(vec![value])
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// The monomial `c x^k`.
    pub fn monomial(coeff: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = coeff;
        Self::new(coeffs)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, degree: usize) -> Rational {
        self.coeffs.get(degree).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitutes `x -> x + shift`.
    pub fn shift_variable(&self, shift: &Rational) -> Self {
        // Horner in the shifted variable.
        let mut acc = Polynomial::new(Vec::new());
        let linear = Polynomial::new(vec![shift.clone(), num_traits::One::one()]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&linear).add(&Polynomial::constant(c.clone()));
        }
        acc
    }

    /// Polynomial in the dummy variable printed as `var`.
    pub fn render(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".to_owned();
        }
        let mut parts = Vec::new();
        for (deg, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = crate::rational::abs(c);
            let is_neg = c < &Rational::zero();
            let body = match deg {
                0 => render_rational(&mag),
                _ => {
                    let power = if deg == 1 { var.to_owned() } else { format!("{var}^{deg}") };
                    if mag == num_traits::One::one() {
                        power
                    } else {
                        format!("{}*{}", render_rational(&mag), power)
                    }
                }
            };
            if parts.is_empty() {
                parts.push(if is_neg { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{} {}", if is_neg { "-" } else { "+" }, body));
            }
        }
        parts.join(" ")
    }
}

impl Ring for Polynomial {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    fn one() -> Self {
        Self::constant(num_traits::One::one())
    }

    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + other.coeff(k));
        }
        Self::new(coeffs)
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - other.coeff(k));
        }
        Self::new(coeffs)
    }

    fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    fn from_rational(value: &Rational) -> Self {
        Self::constant(value.clone())
    }

    /// Only nonzero constants are units.
    fn try_invert(&self) -> Option<Self> {
        match self.degree() {
            Some(0) => Some(Self::constant(self.coeffs[0].recip())),
            _ => None,
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn arithmetic_and_eval() {
        let p = Polynomial::from_integers(&[1, -3, 2]); // 2x^2 - 3x + 1 = (2x-1)(x-1)
        assert_eq!(p.eval(&rat(1)), rat(0));
        assert_eq!(p.eval(&ratio(1, 2)), rat(0));
        assert_eq!(p.eval(&rat(3)), rat(10));

        let q = Polynomial::from_integers(&[0, 1]); // x
        let prod = p.mul(&q);
        assert_eq!(prod.coeff(3), rat(2));
        assert_eq!(prod.coeff(0), rat(0));
        assert_eq!(p.sub(&p), Polynomial::zero());
    }

    #[test]
    fn normalization_strips_trailing_zeros() {
        let p = Polynomial::new(vec![rat(1), rat(0), rat(0)]);
        assert_eq!(p.degree(), Some(0));
        let diff = Polynomial::from_integers(&[1, 2]).sub(&Polynomial::from_integers(&[0, 2]));
        assert_eq!(diff.degree(), Some(0));
    }

    #[test]
    fn inversion_limited_to_constants() {
        assert!(Polynomial::from_integers(&[0, 1]).try_invert().is_none());
        assert!(Polynomial::zero().try_invert().is_none());
        let c = Polynomial::constant(ratio(3, 4));
        assert_eq!(c.try_invert().unwrap(), Polynomial::constant(ratio(4, 3)));
    }

    #[test]
    fn variable_shift() {
        // (x+1)^2 = x^2 + 2x + 1 under x -> x+1 applied to x^2.
        let p = Polynomial::from_integers(&[0, 0, 1]);
        let shifted = p.shift_variable(&rat(1));
        assert_eq!(shifted, Polynomial::from_integers(&[1, 2, 1]));
        assert_eq!(p.shift_variable(&rat(0)), p);
    }

    #[test]
    fn rendering() {
        let p = Polynomial::new(vec![rat(0), ratio(-5, 2), rat(1)]);
        assert_eq!(p.render("d"), "-5/2*d + d^2");
        assert_eq!(Polynomial::zero().render("x"), "0");
        assert_eq!(Polynomial::from_integers(&[2, -1]).render("x"), "2 - x");
    }
}
