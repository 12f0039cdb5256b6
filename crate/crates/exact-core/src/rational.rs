//! Arbitrary-precision rational numbers and small integer helpers.
//!
//! `Rational` is the coefficient type used throughout the workspace. All
//! series, matrices, and localization weights are exact; floating point only
//! appears in the dedicated high-precision evaluation layer.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = num_rational::BigRational;

/// Errors from parsing numbers in `p` or `p/q` form.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseNumberError {
    #[error("empty numeric literal")]
    Empty,
    #[error("invalid integer literal `{0}`")]
    BadInteger(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`. Panics if `d == 0`; intended for literals in code.
pub fn ratio(n: i64, d: i64) -> Rational {
    assert!(d != 0, "ratio with zero denominator");
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p` or `p/q` with optional sign, e.g. `-691/2730`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseNumberError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(ParseNumberError::Empty);
    }
    let parse_int = |part: &str| -> Result<BigInt, ParseNumberError> {
        part.trim()
            .parse::<BigInt>()
            .map_err(|_| ParseNumberError::BadInteger(part.trim().to_owned()))
    };
    match text.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(text)?)),
        Some((num, den)) => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(ParseNumberError::ZeroDenominator(text.to_owned()));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Renders a rational as `p` for integers and `p/q` otherwise.
pub fn render_rational(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Exact factorial.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Binomial coefficient `C(n, k)` for big `n`.
pub fn binomial_big(n: &BigInt, k: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k {
        num *= n - BigInt::from(j);
        den *= BigInt::from(j + 1);
    }
    num / den
}

/// Binomial coefficient `C(n, k)` for machine-sized `n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Generalized binomial `C(a, k)` with rational `a`, as in `(1+x)^a`.
pub fn binomial_rational(a: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for j in 0..k {
        acc *= a - rat(j as i64);
        acc /= rat((j + 1) as i64);
    }
    acc
}

/// Sum of the `k`-th powers of the divisors of `n` (`n >= 1`).
pub fn divisor_power_sum(n: u64, k: u32) -> BigInt {
    let mut total = BigInt::zero();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            total += BigInt::from(d).pow(k);
            let other = n / d;
            if other != d {
                total += BigInt::from(other).pow(k);
            }
        }
        d += 1;
    }
    total
}

pub fn abs(value: &Rational) -> Rational {
    if value.is_negative() {
        -value.clone()
    } else {
        value.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render_round_trip() {
        for text in ["0", "7", "-3", "22/7", "-691/2730", "4/6"] {
            let r = parse_rational(text).unwrap();
            let back = parse_rational(&render_rational(&r)).unwrap();
            assert_eq!(r, back);
        }
        assert_eq!(parse_rational("4/6").unwrap(), ratio(2, 3));
        assert_eq!(render_rational(&ratio(-10, 5)), "-2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(matches!(parse_rational(""), Err(ParseNumberError::Empty)));
        assert!(parse_rational("a/2").is_err());
        assert!(matches!(
            parse_rational("1/0"),
            Err(ParseNumberError::ZeroDenominator(_))
        ));
    }

    #[test]
    fn binomial_agrees_with_factorials() {
        for n in 0..12u64 {
            for k in 0..=n {
                let via_fact = factorial(n as u32) / (factorial(k as u32) * factorial((n - k) as u32));
                assert_eq!(binomial(n, k), via_fact);
            }
        }
        assert_eq!(binomial(10, 11), BigInt::zero());
    }

    #[test]
    fn generalized_binomial_matches_integer_case() {
        for n in 0..8i64 {
            for k in 0..8u32 {
                assert_eq!(
                    binomial_rational(&rat(n), k),
                    Rational::from_integer(binomial(n as u64, k as u64))
                );
            }
        }
        // C(-1, k) = (-1)^k drives the geometric series.
        for k in 0..6u32 {
            assert_eq!(binomial_rational(&rat(-1), k), rat(if k % 2 == 0 { 1 } else { -1 }));
        }
    }

    #[test]
    fn divisor_sums_match_direct_enumeration() {
        for n in 1..=60u64 {
            for k in 0..4u32 {
                let direct: BigInt = (1..=n)
                    .filter(|d| n % d == 0)
                    .map(|d| BigInt::from(d).pow(k))
                    .sum();
                assert_eq!(divisor_power_sum(n, k), direct);
            }
        }
    }
}
