//! Palindromic numerator polynomials `p_s`.
//!
//! For even `s`, `p_s(t) = t^{s/2}`; for odd `s`, `p_s(t) = t^{(s-1)/2} (1+t)`.
//! These are the unique monic choices with `t^s p_s(1/t) = p_s(t)` supported
//! on one or two central monomials, and they vanish at `t = 0`.

use exact_core::poly::Polynomial;
use exact_core::rational::rat;
use exact_core::ring::Ring;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NumeratorError {
    #[error("numerator polynomials need s >= 2; the palindromic normalization breaks down at s = {0}")]
    WeightTooSmall(u32),
}

/// `p_s` bundled with its weight so the palindrome identity is checkable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumeratorPolynomial {
    weight: u32,
    poly: Polynomial,
}

impl NumeratorPolynomial {
    pub fn weight(&self) -> u32 {
        self.weight
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    /// Lowest exponent with nonzero coefficient: `floor(s/2)`.
    pub fn valuation(&self) -> usize {
        self.weight as usize / 2
    }

    /// Checks `t^s p(1/t) = p(t)`: coefficient at `t^j` equals the one at
    /// `t^{s-j}`.
    pub fn is_palindromic(&self) -> bool {
        let s = self.weight as usize;
        (0..=s).all(|j| self.poly.coeff(j) == self.poly.coeff(s - j))
    }
}

/// The numerator `p_s` of a single zeta factor.
pub fn numerator_poly(s: u32) -> Result<NumeratorPolynomial, NumeratorError> {
    if s < 2 {
        return Err(NumeratorError::WeightTooSmall(s));
    }
    let poly = if s % 2 == 0 {
        Polynomial::monomial(rat(1), s as usize / 2)
    } else {
        let half = (s as usize - 1) / 2;
        Polynomial::monomial(rat(1), half).add(&Polynomial::monomial(rat(1), half + 1))
    };
    Ok(NumeratorPolynomial { weight: s, poly })
}
