//! Truncated power series with exact coefficients.
//!
//! A `TruncatedSeries` holds coefficients of `q^0 .. q^order`. Arithmetic
//! propagates the minimum truncation order of its operands, so a computed
//! coefficient is always exact: it never silently depends on missing tail
//! terms of either input.

use crate::rational::{rat, render_rational, Rational};
use crate::ring::Ring;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("constant term is not invertible")]
    NonInvertibleConstant,
    #[error("exp requires zero constant term")]
    ExpNeedsZeroConstant,
    #[error("log requires constant term 1")]
    LogNeedsUnitConstant,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries<R: Ring> {
    coeffs: Vec<R>, // indices 0..=order
}

pub type RationalSeries = TruncatedSeries<Rational>;

impl<R: Ring> TruncatedSeries<R> {
    /// The zero series truncated at `order`.
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![R::zero(); order + 1] }
    }

    pub fn constant(value: R, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    /// `c q^k` truncated at `order`. Terms beyond the order are dropped.
    pub fn monomial(coeff: R, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = coeff;
        }
        s
    }

    /// Series with the given coefficients; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant term");
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, degree: usize) -> R {
        self.coeffs.get(degree).cloned().unwrap_or_else(R::zero)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, degree: usize, value: R) {
        assert!(degree < self.coeffs.len(), "degree beyond truncation order");
        self.coeffs[degree] = value;
    }

    pub fn add_to_coeff(&mut self, degree: usize, value: &R) {
        if degree < self.coeffs.len() {
            self.coeffs[degree] = self.coeffs[degree].add(value);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order());
        Self { coeffs: self.coeffs[..=keep].to_vec() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|k| self.coeffs[k].add(&other.coeffs[k])).collect();
        Self { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|k| self.coeffs[k].sub(&other.coeffs[k])).collect();
        Self { coeffs }
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![R::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self { coeffs }
    }

    pub fn scale_ring(&self, factor: &R) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c.mul(factor)).collect() }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c.scale(factor)).collect() }
    }

    /// Multiplication by `q^k`; coefficients pushed past the order are lost.
    pub fn shift_up(&self, k: usize) -> Self {
        let order = self.order();
        let mut coeffs = vec![R::zero(); order + 1];
        for i in k..=order {
            coeffs[i] = self.coeffs[i - k].clone();
        }
        Self { coeffs }
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let c0_inv = self.coeffs[0].try_invert().ok_or(SeriesError::NonInvertibleConstant)?;
        let order = self.order();
        let mut inv = vec![R::zero(); order + 1];
        inv[0] = c0_inv.clone();
        for n in 1..=order {
            // sum_{k=0..n} a_k b_{n-k} = 0 solved for b_n.
            let mut acc = R::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc = acc.add(&self.coeffs[k].mul(&inv[n - k]));
                }
            }
            inv[n] = acc.neg().mul(&c0_inv);
        }
        Ok(Self { coeffs: inv })
    }

    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        Ok(self.mul(&other.invert()?))
    }

    /// The derivation `q d/dq`: multiplies the `q^n` coefficient by `n`.
    pub fn q_derive(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.scale(&rat(n as i64)))
            .collect();
        Self { coeffs }
    }

    /// `exp` of a series with zero constant term, via the ODE recurrence
    /// `n e_n = sum_{j=1..n} j f_j e_{n-j}`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ExpNeedsZeroConstant);
        }
        let order = self.order();
        let mut e = vec![R::zero(); order + 1];
        e[0] = R::one();
        for n in 1..=order {
            let mut acc = R::zero();
            for j in 1..=n {
                if !self.coeffs[j].is_zero() {
                    acc = acc.add(&self.coeffs[j].scale(&rat(j as i64)).mul(&e[n - j]));
                }
            }
            e[n] = acc.scale(&rat(n as i64).recip());
        }
        Ok(Self { coeffs: e })
    }

    /// `log` of a series with constant term 1, via
    /// `n f_n = sum_{k=1..n} k g_k f_{n-k}` solved for `g_n`.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if self.coeffs[0] != R::one() {
            return Err(SeriesError::LogNeedsUnitConstant);
        }
        let order = self.order();
        let mut g = vec![R::zero(); order + 1];
        for n in 1..=order {
            let mut acc = self.coeffs[n].scale(&rat(n as i64));
            for k in 1..n {
                if !g[k].is_zero() && !self.coeffs[n - k].is_zero() {
                    acc = acc.sub(&g[k].scale(&rat(k as i64)).mul(&self.coeffs[n - k]));
                }
            }
            g[n] = acc.scale(&rat(n as i64).recip());
        }
        Ok(Self { coeffs: g })
    }

    pub fn pow(&self, mut exponent: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while exponent > 0 {
            if exponent & 1 == 1 {
                acc = acc.mul(&base);
            }
            exponent >>= 1;
            if exponent > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Equality of all coefficients up to `order` (inclusive); both series
    /// must extend at least that far.
    pub fn agrees_to(&self, other: &Self, order: usize) -> bool {
        assert!(self.order() >= order && other.order() >= order);
        (0..=order).all(|k| self.coeffs[k] == other.coeffs[k])
    }
}

impl RationalSeries {
    /// Substitutes exact rational `q0` for `q`, summing the retained terms.
    pub fn eval_rational(&self, q0: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + c;
        }
        acc
    }

    /// Compact display, e.g. `1 + 3q^2 - 1/2q^3 + O(q^5)`.
    pub fn render(&self, var: &str) -> String {
        let mut parts: Vec<String> = Vec::new();
        for (deg, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = crate::rational::abs(c);
            let neg = c < &Rational::zero();
            let body = match deg {
                0 => render_rational(&mag),
                _ => {
                    let var_pow = if deg == 1 { var.to_owned() } else { format!("{var}^{deg}") };
                    if mag == num_traits::One::one() {
                        var_pow
                    } else {
                        format!("{}*{}", render_rational(&mag), var_pow)
                    }
                }
            };
            if parts.is_empty() {
                parts.push(if neg { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{} {}", if neg { "-" } else { "+" }, body));
            }
        }
        if parts.is_empty() {
            parts.push("0".to_owned());
        }
        format!("{} + O({var}^{})", parts.join(" "), self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn geometric(order: usize) -> RationalSeries {
        // 1/(1-q)
        TruncatedSeries::from_coeffs(vec![rat(1); order + 1])
    }

    #[test]
    fn inversion_round_trip() {
        let g = geometric(12);
        let inv = g.invert().unwrap();
        let mut expected = RationalSeries::zero(12);
        expected.set_coeff(0, rat(1));
        expected.set_coeff(1, rat(-1));
        assert_eq!(inv, expected);
        assert_eq!(g.mul(&inv), RationalSeries::one(12));
    }

    #[test]
    fn inversion_requires_unit_constant() {
        let mut s = RationalSeries::zero(4);
        s.set_coeff(1, rat(1));
        assert_eq!(s.invert(), Err(SeriesError::NonInvertibleConstant));
    }

    #[test]
    fn min_order_propagation() {
        let a = geometric(10);
        let b = geometric(4);
        assert_eq!(a.add(&b).order(), 4);
        assert_eq!(a.mul(&b).order(), 4);
        assert_eq!(a.sub(&b).order(), 4);
    }

    #[test]
    fn exp_log_round_trip() {
        let mut f = RationalSeries::zero(10);
        f.set_coeff(1, rat(1));
        f.set_coeff(2, ratio(-1, 2));
        f.set_coeff(5, ratio(3, 7));
        let e = f.exp().unwrap();
        assert_eq!(e.log().unwrap(), f);
        // exp(q) has coefficients 1/n!.
        let mut q = RationalSeries::zero(6);
        q.set_coeff(1, rat(1));
        let eq = q.exp().unwrap();
        assert_eq!(eq.coeff(4), ratio(1, 24));
        assert_eq!(eq.coeff(6), ratio(1, 720));
    }

    #[test]
    fn exp_turns_sums_into_products() {
        let mut f = RationalSeries::zero(9);
        f.set_coeff(1, rat(2));
        f.set_coeff(3, ratio(1, 3));
        let mut g = RationalSeries::zero(9);
        g.set_coeff(2, rat(-1));
        g.set_coeff(4, ratio(5, 2));
        let lhs = f.add(&g).exp().unwrap();
        let rhs = f.exp().unwrap().mul(&g.exp().unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn q_derive_is_a_derivation() {
        let a = geometric(8);
        let mut b = RationalSeries::zero(8);
        b.set_coeff(0, rat(1));
        b.set_coeff(2, ratio(7, 3));
        b.set_coeff(3, rat(-4));
        let lhs = a.mul(&b).q_derive();
        let rhs = a.q_derive().mul(&b).add(&a.mul(&b.q_derive()));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn eval_and_render() {
        let mut s = RationalSeries::zero(3);
        s.set_coeff(0, rat(1));
        s.set_coeff(2, rat(3));
        s.set_coeff(3, ratio(-1, 2));
        assert_eq!(s.eval_rational(&ratio(1, 2)), rat(1) + ratio(3, 4) - ratio(1, 16));
        assert_eq!(s.render("q"), "1 + 3*q^2 - 1/2*q^3 + O(q^4)");
        assert_eq!(RationalSeries::zero(2).render("q"), "0 + O(q^3)");
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let g = geometric(9);
        assert_eq!(g.pow(0), RationalSeries::one(9));
        assert_eq!(g.pow(3), g.mul(&g).mul(&g));
        // (1-q)^-k has coefficients C(n+k-1, k-1).
        assert_eq!(g.pow(4).coeff(5), Rational::from_integer(crate::rational::binomial(8, 3)));
    }

    #[test]
    fn valuation_and_shift() {
        let mut s = RationalSeries::zero(6);
        s.set_coeff(2, rat(5));
        assert_eq!(s.valuation(), Some(2));
        assert_eq!(s.shift_up(3).valuation(), Some(5));
        assert_eq!(s.shift_up(5).valuation(), None);
        assert_eq!(RationalSeries::zero(3).valuation(), None);
    }
}
