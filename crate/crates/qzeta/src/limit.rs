//! Numeric evaluation of `Z(s)` at a point `0 < q0 < 1`, and the limit
//! comparison `(1-q0)^{weight} Z(s)(q0)` against `2^{#odd parts} zeta(s)`.
//!
//! The evaluator runs the same chain recursion as the exact engine, but on
//! floats, with a certified geometric tail bound: each factor satisfies
//! `f(m+1) <= q^{floor(s/2)} f(m)`, so partial sums can be closed off once
//! the bound drops below the target.

use crate::composition::Composition;
use crate::mzv::{mzv_float, MzvError};
use exact_core::bigfloat::{Approx, BigFloat};
use exact_core::rational::Rational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LimitError {
    #[error("evaluation point must satisfy 0 < q0 < 1")]
    PointOutOfRange,
    #[error("classical comparison value failed: {0}")]
    Classical(#[from] MzvError),
}

/// One factor `p_s(t)/(1-t)^s` at `t = q^m`, driven by the parity split of
/// the numerator: `t^{s/2}` for even `s`, `t^{(s-1)/2}(1+t)` for odd.
fn factor_at(t: &BigFloat, s: u32, one: &BigFloat) -> BigFloat {
    let v = (s / 2) as i64;
    let num = if s % 2 == 0 {
        t.powi(v).expect("nonnegative power")
    } else {
        t.powi(v).expect("nonnegative power").mul(&one.add(t))
    };
    let den = one.sub(t).powi(s as i64).expect("nonnegative power");
    num.div(&den).expect("t < 1 so 1 - t > 0")
}

/// `Z(s)` at `q = q0` by direct summation, with a certified error bound.
pub fn zeta_q_point(s: &Composition, q0: &Rational, prec: u32) -> Result<Approx, LimitError> {
    if q0 <= &Rational::zero() || q0 >= &Rational::one() {
        return Err(LimitError::PointOutOfRange);
    }
    let wp = prec + 32;
    let q = BigFloat::from_rational(q0, wp);
    let one = BigFloat::from_i64(1, wp);
    let parts = s.parts();
    let k = parts.len();
    // Geometric decay ratio of the outermost factor.
    let v1 = (parts[0] / 2).max(1) as i64;
    let ratio = q.powi(v1).expect("nonnegative power");
    let ratio_tail = ratio.div(&one.sub(&ratio)).expect("ratio < 1");
    // prefix[j] = chain sum over levels j.. with all variables <= m - 1;
    // prefix[k] is the empty product.
    let mut prefix = vec![BigFloat::zero(wp); k + 1];
    prefix[k] = one.clone();
    let mut value = BigFloat::zero(wp);
    let mut t = one.clone();
    // Upper bound for the inner chain sums: product over inner factors of
    // their full geometric majorant f_j(1)/(1 - q^{v_j}).
    let mut inner_cap = one.clone();
    for &sj in &parts[1..] {
        let vj = (sj / 2).max(1) as i64;
        let rj = q.powi(vj).expect("nonnegative power");
        let full = factor_at(&q, sj, &one).div(&one.sub(&rj)).expect("rj < 1");
        inner_cap = inner_cap.mul(&full);
    }
    let mut f0 = one.clone();
    let threshold_shift = -(prec as i64 + 8);
    for m in 1..=50_000_000u64 {
        t = t.mul(&q);
        f0 = factor_at(&t, parts[0], &one);
        let mut fresh = Vec::with_capacity(k);
        fresh.push(f0.mul(&prefix[1]));
        for (j, &sj) in parts.iter().enumerate().skip(1) {
            fresh.push(factor_at(&t, sj, &one).mul(&prefix[j + 1]));
        }
        for j in 1..k {
            prefix[j] = prefix[j].add(&fresh[j]);
        }
        value = value.add(&fresh[0]);
        if m >= k as u64 {
            let tail = inner_cap.mul(&f0).mul(&ratio_tail);
            let target = value
                .abs()
                .mul(&BigFloat::from_scaled(num_bigint::BigInt::one(), threshold_shift, wp));
            if !value.is_zero() && tail.cmp_value(&target) == std::cmp::Ordering::Less {
                return Ok(Approx::new(value.with_precision(prec), tail.with_precision(prec)));
            }
        }
    }
    // Unreachable for any sane q0; return with the bound at the cap.
    let tail = inner_cap.mul(&f0).mul(&ratio_tail);
    Ok(Approx::new(value.with_precision(prec), tail.with_precision(prec)))
}

#[derive(Debug, Clone)]
pub struct LimitCheck {
    /// `(1-q0)^{weight} Z(s)(q0)`.
    pub lhs: BigFloat,
    /// `2^{#odd parts} zeta(s)`.
    pub rhs: BigFloat,
    /// `|lhs - rhs| / |rhs|`.
    pub relative_gap: BigFloat,
}

/// Compares the rescaled q-series at `q0` against its classical limit value.
pub fn limit_check(s: &Composition, q0: &Rational, prec: u32) -> Result<LimitCheck, LimitError> {
    let z = zeta_q_point(s, q0, prec)?;
    let scale = BigFloat::from_rational(&(Rational::one() - q0), prec)
        .powi(s.weight() as i64)
        .expect("nonnegative power");
    let lhs = scale.mul(&z.value);
    let classical = mzv_float(s.parts(), prec)?;
    let two_pow = BigFloat::from_i64(2, prec)
        .powi(s.odd_count() as i64)
        .expect("nonnegative power");
    let rhs = two_pow.mul(&classical.value);
    let relative_gap = lhs.sub(&rhs).abs().div(&rhs.abs()).expect("zeta(s) > 0");
    Ok(LimitCheck { lhs, rhs, relative_gap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::zeta_q;
    use exact_core::bigfloat::pow10;
    use exact_core::rational::{rat, ratio};
    use std::cmp::Ordering;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn point_evaluation_matches_series_coefficients() {
        // At q0 = 1/10 the truncated series with its own geometric tail bound
        // pins the value; the point evaluator must land inside.
        let q0 = ratio(1, 10);
        let prec = 128;
        let for_s: &[&[u32]] = &[&[2], &[3], &[2, 2]];
        for parts in for_s {
            let s = comp(parts);
            let direct = zeta_q_point(&s, &q0, prec).unwrap();
            let series = zeta_q(&s, 40);
            let head = BigFloat::from_rational(&series.eval_rational(&q0), prec);
            // Coefficients of Z(s) grow at most polynomially, so the series
            // tail at 1/10 is far below 10^{-30}.
            assert!(direct.within_of(&head, &pow10(-30, prec)), "Z{parts:?}");
        }
    }

    #[test]
    fn weight_three_limit_matches_two_zeta_three() {
        let check = limit_check(&comp(&[3]), &ratio(999, 1000), 160).unwrap();
        assert_eq!(check.rhs.to_decimal(7), "2.404114e0");
        assert_eq!(
            check.relative_gap.cmp_value(&BigFloat::from_rational(&ratio(5, 1000), 160)),
            Ordering::Less
        );
    }

    #[test]
    fn weight_two_limit_has_no_doubling() {
        let check = limit_check(&comp(&[2]), &ratio(999, 1000), 160).unwrap();
        // zeta(2) = 1.644934..., no odd parts.
        assert_eq!(check.rhs.to_decimal(7), "1.644934e0");
        assert_eq!(
            check.relative_gap.cmp_value(&BigFloat::from_rational(&ratio(5, 1000), 160)),
            Ordering::Less
        );
    }

    #[test]
    fn gap_shrinks_as_the_point_approaches_one() {
        let s = comp(&[3]);
        let gaps: Vec<BigFloat> = [ratio(9, 10), ratio(99, 100), ratio(999, 1000)]
            .iter()
            .map(|q0| limit_check(&s, q0, 128).unwrap().relative_gap)
            .collect();
        assert_eq!(gaps[1].cmp_value(&gaps[0]), Ordering::Less);
        assert_eq!(gaps[2].cmp_value(&gaps[1]), Ordering::Less);
    }

    #[test]
    fn depth_two_limit_is_consistent() {
        // (1-q0)^4 Z(2,2) -> zeta(2,2); both parts even so no doubling.
        let check = limit_check(&comp(&[2, 2]), &ratio(999, 1000), 160).unwrap();
        assert_eq!(
            check.relative_gap.cmp_value(&BigFloat::from_rational(&ratio(2, 100), 160)),
            Ordering::Less
        );
    }

    #[test]
    fn rejects_points_outside_unit_interval() {
        assert!(zeta_q_point(&comp(&[2]), &rat(1), 64).is_err());
        assert!(zeta_q_point(&comp(&[2]), &rat(0), 64).is_err());
        assert!(limit_check(&comp(&[2]), &ratio(3, 2), 64).is_err());
    }
}
