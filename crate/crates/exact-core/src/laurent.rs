//! Finite Laurent expansions: a window of coefficients starting at a possibly
//! negative exponent. Used for asymptotic expansions in `1/L` and for formal
//! power map images; this is a container with normalization, not a full ring.

use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentExpansion<R: Ring> {
    min_exp: i64,
    coeffs: Vec<R>, // coefficient of x^(min_exp + i)
}

impl<R: Ring> LaurentExpansion<R> {
    pub fn new(min_exp: i64, coeffs: Vec<R>) -> Self {
        let mut value = Self { min_exp, coeffs };
        value.normalize();
        value
    }

    fn normalize(&mut self) {
        while self.coeffs.first().is_some_and(|c| c.is_zero()) {
            self.coeffs.remove(0);
            self.min_exp += 1;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with nonzero coefficient.
    pub fn min_exp(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.min_exp)
        }
    }

    pub fn max_exp(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.min_exp + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeff(&self, exp: i64) -> R {
        let idx = exp - self.min_exp;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            R::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Iterates `(exponent, coefficient)` over the stored window.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &R)> {
        self.coeffs.iter().enumerate().map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    pub fn render(&self, var: &str, show: impl Fn(&R) -> String) -> String {
        if self.coeffs.is_empty() {
            return "0".to_owned();
        }
        let mut parts = Vec::new();
        for (exp, c) in self.terms() {
            if c.is_zero() {
                continue;
            }
            let body = match exp {
                0 => show(c),
                1 => format!("({})*{var}", show(c)),
                _ => format!("({})*{var}^{exp}", show(c)),
            };
            parts.push(body);
        }
        parts.join(" + ")
    }
}
