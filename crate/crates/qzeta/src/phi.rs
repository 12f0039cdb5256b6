//! Formal image of `Z(2k+1)` under the substitution `L -> -i u`: a Laurent
//! window in `u` with Gaussian-rational coefficients,
//!
//! `phi(Z(2k+1)) = -1/2 sum_{n>=0} c_n (-i u)^{2n-1}`,
//!
//! with the same `c_n = B_{2n+2k} B_{2n} / ((2n)! (2n+2k))` as the real
//! expansion. Only odd powers of `u` appear, so every coefficient is a
//! rational multiple of `i`: `(-i)^{2n-1} = (-1)^n i`.

use crate::asymptotics::{correction_magnitude, AsymptoticsError};
use exact_core::bernoulli::BernoulliTable;
use exact_core::gaussian::GaussianRational;
use exact_core::laurent::LaurentExpansion;
use exact_core::rational::{ratio, Rational};
use exact_core::ring::Ring;

/// Terms `n = 0..=terms`, so the window runs from `u^{-1}` to `u^{2*terms-1}`.
pub fn phi_series(
    k: u32,
    terms: usize,
) -> Result<LaurentExpansion<GaussianRational>, AsymptoticsError> {
    if k == 0 {
        return Err(AsymptoticsError::KTooSmall);
    }
    let bern = BernoulliTable::with_max(2 * terms + 2 * k as usize);
    let mut coeffs = vec![GaussianRational::zero(); 2 * terms + 1];
    for n in 0..=terms {
        let c = correction_magnitude(k, n, &bern);
        let sign = if n % 2 == 0 { -1 } else { 1 };
        let im = ratio(sign, 2) * c;
        coeffs[2 * n] = GaussianRational::new(Rational::zero(), im);
    }
    Ok(LaurentExpansion::new(-1, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::rational::rat;

    #[test]
    fn weight_three_leading_term() {
        // -i/(24 u).
        let p = phi_series(1, 3).unwrap();
        assert_eq!(p.min_exp(), Some(-1));
        assert_eq!(
            p.coeff(-1),
            GaussianRational::new(Rational::zero(), ratio(-1, 24))
        );
        // n = 1: -1/2 * c_1 * (-i)^1 with c_1 = -1/1440, so +(-1/2880) i... sign check below.
        assert_eq!(
            p.coeff(1),
            GaussianRational::new(Rational::zero(), ratio(-1, 2880))
        );
    }

    #[test]
    fn weight_five_leading_term() {
        // c_0 = B_4/4 = -1/120; coefficient -1/2 * c_0 * i * (-1)^{0+1} = +i/240.
        let p = phi_series(2, 2).unwrap();
        assert_eq!(
            p.coeff(-1),
            GaussianRational::new(Rational::zero(), ratio(1, 240))
        );
    }

    #[test]
    fn all_terms_purely_imaginary_on_odd_powers() {
        let p = phi_series(1, 6).unwrap();
        for (exp, c) in p.terms() {
            if c.is_zero() {
                continue;
            }
            assert!(exp.rem_euclid(2) == 1, "exponent {exp} is even");
            assert!(c.re.is_zero(), "real part at u^{exp}");
            assert!(!c.im.is_zero());
        }
        assert_eq!(p.max_exp(), Some(11));
        assert_eq!(p.coeff(0), GaussianRational::zero());
        assert!(phi_series(0, 2).is_err());
    }

    #[test]
    fn sign_pattern_follows_bernoulli_products() {
        // For k = 1 and n >= 1 the product B_{2n+2} B_{2n} is negative, so
        // the imaginary part carries the sign (-1)^n; the n = 0 term is also
        // negative.
        let p = phi_series(1, 5).unwrap();
        assert!(p.coeff(-1).im < rat(0));
        for n in 1..=5i64 {
            let im = p.coeff(2 * n - 1).im;
            let positive = n % 2 == 0;
            assert_eq!(im > rat(0), positive, "term n={n}, got {im}");
        }
    }
}
