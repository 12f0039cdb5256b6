//! Behavior of `Z(2k+1)` as `q` approaches 1 from below. With
//! `L = -log q`,
//!
//! `Z(2k+1) ~ (2k)! zeta(2k+1) / L^{2k+1} - sum_{n>=0} c_n L^{2n-1}`,
//! `c_n = B_{2n+2k} B_{2n} / ((2n)! (2n+2k))`.
//!
//! The correction series in `L` is divergent: truncations are evaluated with
//! the first-omitted-term error heuristic, and the useful truncation order
//! grows as `q` approaches 1.

use crate::mzv::zeta_constant;
use exact_core::bernoulli::BernoulliTable;
use exact_core::bigfloat::{Approx, BigFloat};
use exact_core::rational::{factorial, rat, Rational};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AsymptoticsError {
    #[error("expansion is defined for odd weights 2k+1 with k >= 1")]
    KTooSmall,
    #[error("evaluation point must satisfy 0 < q0 < 1")]
    PointOutOfRange,
}

/// Truncated expansion data: the leading constant as a certified float, the
/// polynomial-order corrections as exact rationals.
#[derive(Debug, Clone)]
pub struct AsymptoticExpansion {
    k: u32,
    zeta_odd: Approx,
    corrections: Vec<Rational>,
}

impl AsymptoticExpansion {
    pub fn k(&self) -> u32 {
        self.k
    }

    /// `zeta(2k+1)` used in the leading term.
    pub fn zeta_odd(&self) -> &Approx {
        &self.zeta_odd
    }

    /// `(2k)! zeta(2k+1)`, the coefficient of `L^{-(2k+1)}`.
    pub fn leading(&self) -> Approx {
        let prec = self.zeta_odd.value.precision();
        let fact = BigFloat::from_rational(
            &Rational::from_integer(factorial(2 * self.k)),
            prec,
        );
        Approx::new(self.zeta_odd.value.mul(&fact), self.zeta_odd.error.mul(&fact))
    }

    /// Signed coefficient of `L^{2n-1}` for `n = 0..=terms`; the global minus
    /// sign of the expansion is already applied.
    pub fn corrections(&self) -> &[Rational] {
        &self.corrections
    }

    pub fn correction(&self, n: usize) -> Option<&Rational> {
        self.corrections.get(n)
    }
}

/// Unsigned `c_n = B_{2n+2k} B_{2n} / ((2n)! (2n+2k))`.
pub(crate) fn correction_magnitude(k: u32, n: usize, bern: &BernoulliTable) -> Rational {
    let kk = k as usize;
    let num = bern.get(2 * n + 2 * kk) * bern.get(2 * n);
    num / (Rational::from_integer(factorial(2 * n as u32)) * rat((2 * n + 2 * kk) as i64))
}

/// Expansion of `Z(2k+1)` with corrections for `n = 0..=terms`.
pub fn asymptotic_expansion(k: u32, terms: usize) -> Result<AsymptoticExpansion, AsymptoticsError> {
    if k == 0 {
        return Err(AsymptoticsError::KTooSmall);
    }
    let bern = BernoulliTable::with_max(2 * terms + 2 * k as usize);
    let corrections = (0..=terms).map(|n| -correction_magnitude(k, n, &bern)).collect();
    Ok(AsymptoticExpansion { k, zeta_odd: zeta_constant(2 * k + 1, 256), corrections })
}

#[derive(Debug, Clone)]
pub struct AsymptoticEval {
    /// Value of the truncated expansion at the evaluation point.
    pub approximation: BigFloat,
    /// Magnitude of the first omitted correction term: the usual stopping
    /// heuristic for a divergent series, not a certified bound.
    pub error_estimate: BigFloat,
    /// `L = -log q0`.
    pub log_scale: BigFloat,
}

/// Evaluates the expansion truncated after the `n = terms` correction.
pub fn asymptotic_eval(
    k: u32,
    q0: &Rational,
    terms: usize,
    prec: u32,
) -> Result<AsymptoticEval, AsymptoticsError> {
    if q0 <= &Rational::zero() || q0 >= &Rational::one() {
        return Err(AsymptoticsError::PointOutOfRange);
    }
    // One extra coefficient feeds the error heuristic.
    let expansion = asymptotic_expansion(k, terms + 1)?;
    let l = BigFloat::from_rational(&q0.recip(), prec).ln().expect("1/q0 > 1");
    let leading = expansion.leading();
    let mut value = leading
        .value
        .with_precision(prec)
        .div(&l.powi(2 * k as i64 + 1).expect("L > 0"))
        .expect("L > 0");
    for (n, c) in expansion.corrections().iter().take(terms + 1).enumerate() {
        let power = l.powi(2 * n as i64 - 1).expect("L > 0");
        value = value.add(&BigFloat::from_rational(c, prec).mul(&power));
    }
    let omitted = expansion.correction(terms + 1).expect("computed above");
    let error_estimate = BigFloat::from_rational(omitted, prec)
        .abs()
        .mul(&l.powi(2 * (terms as i64 + 1) - 1).expect("L > 0"));
    Ok(AsymptoticEval { approximation: value, error_estimate, log_scale: l })
}

/// Truncation order in `0..=cap` minimizing the error heuristic at `q0`,
/// with the winning estimate. For `q0` very close to 1 the true optimum can
/// exceed any reasonable `cap`; the scan still returns the best in range.
pub fn optimal_truncation(
    k: u32,
    q0: &Rational,
    cap: usize,
    prec: u32,
) -> Result<(usize, BigFloat), AsymptoticsError> {
    if q0 <= &Rational::zero() || q0 >= &Rational::one() {
        return Err(AsymptoticsError::PointOutOfRange);
    }
    let expansion = asymptotic_expansion(k, cap + 1)?;
    let l = BigFloat::from_rational(&q0.recip(), prec).ln().expect("1/q0 > 1");
    let mut best: Option<(usize, BigFloat)> = None;
    for m in 0..=cap {
        let omitted = expansion.correction(m + 1).expect("within cap + 1");
        let estimate = BigFloat::from_rational(omitted, prec)
            .abs()
            .mul(&l.powi(2 * (m as i64 + 1) - 1).expect("L > 0"));
        let better = match &best {
            None => true,
            Some((_, current)) => estimate.cmp_value(current) == std::cmp::Ordering::Less,
        };
        if better {
            best = Some((m, estimate));
        }
    }
    Ok(best.expect("cap scan is nonempty"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::limit::zeta_q_point;
    use crate::Composition;
    use exact_core::bigfloat::pow10;
    use exact_core::rational::ratio;
    use std::cmp::Ordering;

    #[test]
    fn first_corrections_for_weight_three() {
        let e = asymptotic_expansion(1, 3).unwrap();
        assert_eq!(e.correction(0), Some(&ratio(-1, 12)));
        assert_eq!(e.correction(1), Some(&ratio(1, 1440)));
        // c_2 = B_6 B_4 / (4! * 6) = (1/42)(-1/30)/144.
        assert_eq!(e.correction(2), Some(&ratio(1, 181440)));
    }

    #[test]
    fn corrections_match_bernoulli_products() {
        let bern = BernoulliTable::with_max(40);
        for k in 1..=3u32 {
            let e = asymptotic_expansion(k, 8).unwrap();
            for n in 0..=8usize {
                let expected = -(bern.get(2 * n + 2 * k as usize) * bern.get(2 * n))
                    / (Rational::from_integer(factorial(2 * n as u32))
                        * rat((2 * n + 2 * k as usize) as i64));
                assert_eq!(e.correction(n), Some(&expected), "k={k} n={n}");
            }
        }
        assert!(matches!(asymptotic_expansion(0, 2), Err(AsymptoticsError::KTooSmall)));
    }

    #[test]
    fn leading_constant_is_two_factorial_zeta3() {
        let e = asymptotic_expansion(1, 0).unwrap();
        // 2! zeta(3) = 2.4041138063...
        assert_eq!(e.leading().value.to_decimal(11), "2.4041138063e0");
    }

    #[test]
    fn matches_direct_summation_near_one() {
        // q0 = 0.99: truncation chosen by the error scan, compared against
        // direct summation of the q-series at the same point.
        let prec = 192;
        let q0 = ratio(99, 100);
        let (m, _) = optimal_truncation(1, &q0, 12, prec).unwrap();
        let eval = asymptotic_eval(1, &q0, m, prec).unwrap();
        let direct = zeta_q_point(&Composition::new(vec![3]).unwrap(), &q0, prec).unwrap();
        // Relative agreement to at least 6 significant digits.
        let gap = eval.approximation.sub(&direct.value).abs();
        let bound = direct.value.abs().mul(&pow10(-6, prec));
        assert_eq!(gap.cmp_value(&bound), Ordering::Less);
    }

    #[test]
    fn coarser_point_has_larger_error_estimate() {
        let prec = 128;
        let half = ratio(1, 2);
        let fine = ratio(99, 100);
        let at_half = asymptotic_eval(1, &half, 0, prec).unwrap();
        let at_fine = asymptotic_eval(1, &fine, 0, prec).unwrap();
        assert_eq!(
            at_half.error_estimate.cmp_value(&at_fine.error_estimate),
            Ordering::Greater
        );
        // M = 0 at q0 = 1/2: leading term minus the single 1/L correction.
        let l = at_half.log_scale.clone();
        let expected = asymptotic_expansion(1, 0)
            .unwrap()
            .leading()
            .value
            .div(&l.powi(3).unwrap())
            .unwrap()
            .sub(&l.powi(-1).unwrap().div(&BigFloat::from_i64(12, prec)).unwrap());
        assert_eq!(at_half.approximation.sub(&expected).abs().cmp_value(&pow10(-20, prec)), Ordering::Less);
    }

    #[test]
    fn error_estimate_is_unimodal_in_truncation_order() {
        // At q0 = 1/5 the estimates fall, bottom out strictly inside the
        // window, then rise: divergent-series behavior.
        let prec = 128;
        let q0 = ratio(1, 5);
        let estimates: Vec<BigFloat> = (0..=16)
            .map(|m| asymptotic_eval(1, &q0, m, prec).unwrap().error_estimate)
            .collect();
        let mut best = 0;
        for (i, e) in estimates.iter().enumerate() {
            if e.cmp_value(&estimates[best]) == Ordering::Less {
                best = i;
            }
        }
        assert!(best > 0 && best < 16, "optimum at {best}");
        for i in 0..best {
            assert_eq!(estimates[i + 1].cmp_value(&estimates[i]), Ordering::Less);
        }
        for i in best..16 {
            assert_eq!(estimates[i + 1].cmp_value(&estimates[i]), Ordering::Greater);
        }
        let (scan_best, _) = optimal_truncation(1, &q0, 16, prec).unwrap();
        assert_eq!(scan_best, best);
    }

    #[test]
    fn rejects_bad_points() {
        assert!(asymptotic_eval(1, &rat(1), 2, 64).is_err());
        assert!(asymptotic_eval(1, &rat(0), 2, 64).is_err());
        assert!(asymptotic_eval(1, &ratio(-1, 2), 2, 64).is_err());
    }
}
