//! Factored equivariant weights.
//!
//! A fixed-point contribution is the Euler class of minus the virtual tangent
//! character: a product of integer linear forms with (possibly negative)
//! multiplicities, times a rational scalar. Keeping the product factored is
//! what makes order-of-vanishing questions exact; nothing here ever expands
//! into a dense polynomial.

use std::collections::BTreeMap;
use std::fmt;

use exact_core::rational::Rational;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use partitions::PlanePartition;

use crate::character::virtual_tangent;
use crate::form::LinearForm;
use crate::point::TPoint;
use crate::DtError;

/// Exact integer power of a rational, with negative exponents allowed for
/// nonzero bases.
pub fn rational_power(base: &Rational, exp: i64) -> Result<Rational, DtError> {
    if exp == 0 {
        return Ok(Rational::one());
    }
    if base.is_zero() {
        if exp > 0 {
            return Ok(Rational::zero());
        }
        return Err(DtError::ZeroToNegativePower);
    }
    let positive = num_traits::pow::pow(base.clone(), exp.unsigned_abs() as usize);
    if exp >= 0 {
        Ok(positive)
    } else {
        Ok(positive.recip())
    }
}

fn integer_power(base: i64, exp: i64) -> Rational {
    let mag = BigInt::from(base).pow(exp.unsigned_abs() as u32);
    let rat = Rational::from_integer(mag);
    if exp >= 0 {
        rat
    } else {
        rat.recip()
    }
}

/// `scalar * prod_f f^multiplicity` over primitive linear forms `f`.
///
/// Forms are stored canonically (coprime coefficients, positive leading
/// coefficient); contents and signs are absorbed into the scalar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFactorization {
    scalar: Rational,
    factors: BTreeMap<LinearForm, i64>,
}

impl WeightFactorization {
    pub fn one() -> Self {
        Self { scalar: Rational::one(), factors: BTreeMap::new() }
    }

    pub fn scalar(&self) -> &Rational {
        &self.scalar
    }

    /// Primitive forms with their net multiplicities.
    pub fn factors(&self) -> impl Iterator<Item = (&LinearForm, i64)> + '_ {
        self.factors.iter().map(|(f, &m)| (f, m))
    }

    pub fn is_one(&self) -> bool {
        self.scalar.is_one() && self.factors.is_empty()
    }

    /// Multiply by `form^multiplicity`. The form must be nonzero.
    pub fn push(&mut self, form: LinearForm, multiplicity: i64) -> Result<(), DtError> {
        if multiplicity == 0 {
            return Ok(());
        }
        let (content, primitive) =
            form.canonical().ok_or(DtError::ZeroTangentWeight)?;
        if content != 1 {
            self.scalar *= integer_power(content, multiplicity);
        }
        let entry = self.factors.entry(primitive).or_insert(0);
        *entry += multiplicity;
        if *entry == 0 {
            self.factors.remove(&primitive);
        }
        Ok(())
    }

    pub fn scale(&mut self, factor: &Rational) {
        self.scalar *= factor;
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.scalar *= &other.scalar;
        for (form, mult) in other.factors() {
            let entry = out.factors.entry(*form).or_insert(0);
            *entry += mult;
            if *entry == 0 {
                out.factors.remove(form);
            }
        }
        out
    }

    /// Net multiplicity along the divisor `t1 + t2 = 0`.
    pub fn ord_t12(&self) -> i64 {
        self.factors.get(&LinearForm::new(1, 1, 0)).copied().unwrap_or(0)
    }

    /// Net degree of the rational function (each form counts its
    /// multiplicity).
    pub fn total_degree(&self) -> i64 {
        self.factors.values().sum()
    }

    /// Evaluate at a point. Errors when a denominator form vanishes there;
    /// a vanishing numerator form yields zero.
    pub fn evaluate(&self, t: &TPoint) -> Result<Rational, DtError> {
        let mut numerator_vanishes = false;
        let mut out = self.scalar.clone();
        for (form, mult) in self.factors() {
            let value = form.eval(t);
            if value.is_zero() {
                if mult < 0 {
                    return Err(DtError::DegeneratePoint { form: *form });
                }
                numerator_vanishes = true;
                continue;
            }
            out *= rational_power(&value, mult)?;
        }
        if numerator_vanishes {
            return Ok(Rational::zero());
        }
        Ok(out)
    }

    /// Rename the variables by a permutation: coefficient `i` of each form in
    /// the result reads position `perm[i]` of the original.
    pub fn permute_vars(&self, perm: [usize; 3]) -> Self {
        let mut out = Self::one();
        out.scalar = self.scalar.clone();
        for (form, mult) in self.factors() {
            out.push(form.permute(perm), mult).expect("permuted form is nonzero");
        }
        out
    }
}

impl fmt::Display for WeightFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "{}", self.scalar);
        }
        let mut first = true;
        if !self.scalar.is_one() {
            write!(f, "{}", self.scalar)?;
            first = false;
        }
        for (form, mult) in self.factors() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            let single_variable = {
                let (a, b, c) = form.coeffs();
                [a, b, c].iter().filter(|&&x| x != 0).count() == 1
            };
            if single_variable {
                write!(f, "{form}")?;
            } else {
                write!(f, "({form})")?;
            }
            if mult != 1 {
                write!(f, "^{mult}")?;
            }
        }
        Ok(())
    }
}

/// `delta = (t1 + t2)(t1 + t3)(t2 + t3) / (t1 t2 t3)`, the contribution of a
/// single box.
pub fn delta() -> WeightFactorization {
    let mut w = WeightFactorization::one();
    for (form, mult) in [
        (LinearForm::new(1, 1, 0), 1),
        (LinearForm::new(1, 0, 1), 1),
        (LinearForm::new(0, 1, 1), 1),
        (LinearForm::new(1, 0, 0), -1),
        (LinearForm::new(0, 1, 0), -1),
        (LinearForm::new(0, 0, 1), -1),
    ] {
        w.push(form, mult).unwrap();
    }
    w
}

/// Fixed-point contribution `e(-T_pi)`: each monomial of the virtual tangent
/// character with multiplicity `m` contributes its weight form to the power
/// `-m`.
pub fn contribution(pi: &PlanePartition) -> Result<WeightFactorization, DtError> {
    let tangent = virtual_tangent(pi)?;
    let mut w = WeightFactorization::one();
    for (exponent, mult) in tangent.terms() {
        w.push(LinearForm::from_exponent(exponent), -mult)?;
    }
    Ok(w)
}

/// Rank-one limit of a fixed-point contribution.
///
/// Multiplies by `t3 / (t1 + t2)`, which must cancel the unique `t1 + t2`
/// factor exactly, substitutes `t2 = -t1`, checks the result is homogeneous of
/// degree zero, cancels the `t3` factors, and evaluates at `t3 = 0`. For the
/// diagrams of rank one this recovers `(-1)^(n+1)/c` where `c` is the constant
/// height.
pub fn rank1_limit(w: &WeightFactorization) -> Result<Rational, DtError> {
    let t12 = LinearForm::new(1, 1, 0);
    let found = w.ord_t12();
    if found != 1 {
        return Err(DtError::T12OrderNotOne { found });
    }

    // Substitute t2 = -t1 in every factor except the cancelled t1 + t2; the
    // extra t3 from the prefactor joins the factor map.
    let mut scalar = w.scalar().clone();
    let mut slice: BTreeMap<LinearForm, i64> = BTreeMap::new();
    let mut push = |form: LinearForm, mult: i64, scalar: &mut Rational| {
        let (content, primitive) = form.canonical().expect("nonzero slice form");
        if content != 1 {
            *scalar *= integer_power(content, mult);
        }
        let entry = slice.entry(primitive).or_insert(0);
        *entry += mult;
        if *entry == 0 {
            slice.remove(&primitive);
        }
    };
    push(LinearForm::new(0, 0, 1), 1, &mut scalar);
    for (form, mult) in w.factors() {
        if *form == t12 {
            continue;
        }
        let (alpha, gamma, _slope) = form.slice_coeffs();
        debug_assert!(
            alpha != 0 || gamma != 0,
            "only t1 + t2 multiples vanish on the slice"
        );
        push(LinearForm::new(alpha, 0, gamma), mult, &mut scalar);
    }

    let degree: i64 = slice.values().sum();
    if degree != 0 {
        return Err(DtError::NonzeroTotalDegree { degree });
    }
    let residual_t3 = slice.get(&LinearForm::new(0, 0, 1)).copied().unwrap_or(0);
    if residual_t3 != 0 {
        return Err(DtError::ResidualThirdWeight { multiplicity: residual_t3 });
    }

    // What remains has alpha != 0 everywhere; at t3 = 0 each factor is
    // alpha * t1 and the t1 powers cancel by the degree check.
    let mut out = scalar;
    for (form, mult) in &slice {
        let (alpha, _, _) = form.coeffs();
        debug_assert!(alpha != 0, "pure t3 factors were cancelled above");
        out *= integer_power(alpha, *mult);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::rational::{rat, ratio};
    use partitions::{enumerate_pp, rank1_enumerate};

    fn single_box() -> PlanePartition {
        enumerate_pp(1).into_iter().next().unwrap()
    }

    #[test]
    fn single_box_contribution_is_delta() {
        let w = contribution(&single_box()).unwrap();
        assert_eq!(w, delta());
        assert_eq!(w.scalar(), &rat(1));
        assert_eq!(w.ord_t12(), 1);
        assert_eq!(w.total_degree(), 0);
    }

    #[test]
    fn delta_evaluates_exactly() {
        let t = TPoint::from_integers(7, 13, -29);
        // (20)(-22)(-16) / (7 * 13 * -29)
        assert_eq!(delta().evaluate(&t).unwrap(), ratio(20 * 22 * 16, -(7 * 13 * 29)));
    }

    #[test]
    fn size_two_sum_matches_quadratic_in_delta() {
        // sum over |pi| = 2 of e(-T) equals (delta^2 - 5 delta)/2, checked at
        // points; both sides are degree-zero rational functions.
        for t in [
            TPoint::from_integers(7, 13, -29),
            TPoint::from_integers(3, 5, 11),
            TPoint::new(ratio(2, 3), ratio(-5, 7), ratio(9, 4)),
        ] {
            let d = delta().evaluate(&t).unwrap();
            let expected = (&d * &d - rat(5) * &d) / rat(2);
            let mut sum = Rational::zero();
            for pi in enumerate_pp(2) {
                sum += contribution(&pi).unwrap().evaluate(&t).unwrap();
            }
            assert_eq!(sum, expected);
        }
    }

    #[test]
    fn vanishing_order_along_t12_is_the_rank() {
        for n in 1..=4u32 {
            for pi in enumerate_pp(n) {
                let w = contribution(&pi).unwrap();
                assert_eq!(w.ord_t12(), pi.total_rank() as i64, "diagram {pi}");
                assert_eq!(w.total_degree(), 0, "diagram {pi}");
            }
        }
    }

    #[test]
    fn degenerate_points_are_rejected() {
        let w = contribution(&single_box()).unwrap();
        assert!(matches!(
            w.evaluate(&TPoint::from_integers(0, 1, 2)),
            Err(DtError::DegeneratePoint { .. })
        ));
        // t1 + t2 = 0 only kills a numerator factor here.
        assert_eq!(w.evaluate(&TPoint::from_integers(1, -1, 5)).unwrap(), rat(0));
    }

    #[test]
    fn rank_one_limits_match_closed_form() {
        for n in 1..=6u32 {
            for (pi, height) in rank1_enumerate(n) {
                let w = contribution(&pi).unwrap();
                let value = rank1_limit(&w).unwrap();
                let sign = if n % 2 == 1 { 1 } else { -1 };
                assert_eq!(value, ratio(sign, height as i64), "diagram {pi}");
            }
        }
    }

    #[test]
    fn higher_rank_is_rejected_by_the_limit() {
        // The 2x2 block of height one has rank two.
        let pi = enumerate_pp(4)
            .into_iter()
            .find(|p| p.total_rank() == 2)
            .expect("a rank-two diagram of size four");
        let w = contribution(&pi).unwrap();
        assert!(matches!(rank1_limit(&w), Err(DtError::T12OrderNotOne { found: 2 })));
    }

    #[test]
    fn axis_permutations_act_on_factored_contributions() {
        let perms: [[usize; 3]; 6] =
            [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        for n in 1..=3u32 {
            for pi in enumerate_pp(n) {
                let w = contribution(&pi).unwrap();
                for perm in perms {
                    let permuted_diagram =
                        contribution(&pi.permute_axes(perm).unwrap()).unwrap();
                    assert_eq!(permuted_diagram, w.permute_vars(perm), "diagram {pi}");
                }
            }
        }
    }

    #[test]
    fn rational_powers() {
        assert_eq!(rational_power(&ratio(2, 3), 3).unwrap(), ratio(8, 27));
        assert_eq!(rational_power(&ratio(2, 3), -2).unwrap(), ratio(9, 4));
        assert_eq!(rational_power(&rat(0), 2).unwrap(), rat(0));
        // Empty product convention, needed by ch_0 at the origin box.
        assert_eq!(rational_power(&rat(0), 0).unwrap(), rat(1));
        assert!(rational_power(&rat(0), -1).is_err());
    }
}
