//! Expansion of products `prod_{m>=1} (1 - q^m)^{e_m}` as truncated series.
//!
//! Two routes are provided: a log/exp route that works over any coefficient
//! ring containing the rationals (exponents may be formal polynomials), and a
//! direct binomial route for integer exponents kept as an independent
//! cross-check.

use crate::rational::{binomial_rational, rat, Rational};
use crate::ring::Ring;
use crate::series::{SeriesError, TruncatedSeries};

/// `prod_{m=1}^{order} (1 - q^m)^{e_m}` via `exp(sum e_m log(1 - q^m))`.
///
/// `exponents[i]` is the exponent of the `(1 - q^{i+1})` factor; factors with
/// `m > order` cannot affect the result. Missing entries are treated as zero.
pub fn product_formula<R: Ring>(exponents: &[R], order: usize) -> Result<TruncatedSeries<R>, SeriesError> {
    let mut log_sum = TruncatedSeries::<R>::zero(order);
    for (idx, e) in exponents.iter().enumerate().take(order) {
        if e.is_zero() {
            continue;
        }
        let m = idx + 1;
        // log(1 - q^m) = -sum_{j>=1} q^{mj}/j.
        let mut j = 1usize;
        while m * j <= order {
            let term = e.scale(&(-rat(j as i64).recip()));
            log_sum.add_to_coeff(m * j, &term);
            j += 1;
        }
    }
    log_sum.exp()
}

/// Same product for integer exponents, expanding each factor by the binomial
/// theorem and multiplying sparsely. Independent of the log/exp route.
pub fn product_formula_int(exponents: &[i64], order: usize) -> TruncatedSeries<Rational> {
    let mut acc = TruncatedSeries::<Rational>::one(order);
    for (idx, &e) in exponents.iter().enumerate().take(order) {
        if e == 0 {
            continue;
        }
        let m = idx + 1;
        // (1 - q^m)^e = sum_k C(e, k) (-q^m)^k, finite for e >= 0 and
        // geometric-type for e < 0; either way only k <= order/m matters.
        let mut factor = TruncatedSeries::<Rational>::zero(order);
        let e_rat = rat(e);
        let mut k = 0usize;
        while m * k <= order {
            if e >= 0 && k as i64 > e {
                break;
            }
            let sign = if k % 2 == 0 { rat(1) } else { rat(-1) };
            factor.set_coeff(m * k, binomial_rational(&e_rat, k as u32) * sign);
            k += 1;
        }
        acc = acc.mul(&factor);
    }
    acc
}
