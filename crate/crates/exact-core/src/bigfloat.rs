//! Arbitrary-precision binary floating point.
//!
//! A `BigFloat` is `mantissa * 2^exp` with the mantissa normalized to exactly
//! `prec` bits (default 256). Every operation rounds to nearest at the
//! precision of its operands (ties away from zero), so each step is accurate
//! to within one unit in the last place. Callers that need certified output
//! accuracy track truncation errors explicitly via [`Approx`].

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use thiserror::Error;

use crate::rational::Rational;

pub const DEFAULT_PRECISION: u32 = 256;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FloatError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("logarithm of a non-positive value")]
    LogNonPositive,
}

#[derive(Debug, Clone)]
pub struct BigFloat {
    mantissa: BigInt,
    exp: i64,
    prec: u32,
}

impl BigFloat {
    pub fn zero(prec: u32) -> Self {
        Self { mantissa: BigInt::zero(), exp: 0, prec }
    }

    pub fn from_i64(value: i64, prec: u32) -> Self {
        Self::from_scaled(BigInt::from(value), 0, prec)
    }

    /// `mantissa * 2^exp`, normalized to `prec` bits.
    pub fn from_scaled(mantissa: BigInt, exp: i64, prec: u32) -> Self {
        let mut value = Self { mantissa, exp, prec };
        value.normalize();
        value
    }

    pub fn from_rational(value: &Rational, prec: u32) -> Self {
        let num = value.numer();
        let den = value.denom();
        if num.is_zero() {
            return Self::zero(prec);
        }
        // Shift the numerator so the quotient carries prec + 2 significant
        // bits before the final rounding.
        let shift = prec as i64 + 2 + den.bits() as i64 - num.bits() as i64;
        let shift = shift.max(0) as u64;
        let q = (num << shift) / den;
        Self::from_scaled(q, -(shift as i64), prec)
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    fn normalize(&mut self) {
        if self.mantissa.is_zero() {
            self.exp = 0;
            return;
        }
        let bits = self.mantissa.magnitude().bits();
        let prec = self.prec as u64;
        if bits > prec {
            let drop = bits - prec;
            // Round to nearest, ties away from zero.
            let half = BigInt::from(1) << (drop - 1);
            let adjust = if self.mantissa.is_negative() { -&half } else { half };
            self.mantissa = (&self.mantissa + adjust) >> drop;
            self.exp += drop as i64;
            // Rounding may carry to one extra bit.
            if self.mantissa.magnitude().bits() > prec {
                self.mantissa >>= 1;
                self.exp += 1;
            }
        } else if bits < prec {
            let up = prec - bits;
            self.mantissa <<= up;
            self.exp -= up as i64;
        }
    }

    /// Position of the leading bit: value magnitude is in `[2^(b-1), 2^b)`.
    fn leading_bit(&self) -> i64 {
        self.mantissa.magnitude().bits() as i64 + self.exp
    }

    /// Re-rounds to a different mantissa width (at most one ulp of error).
    pub fn with_precision(&self, prec: u32) -> Self {
        let mut r = self.clone();
        r.prec = prec;
        r.normalize();
        r
    }

    /// One unit in the last place. For zero, a token step far below the
    /// precision is returned so that error bumps stay positive.
    pub fn ulp(&self) -> Self {
        let e = if self.is_zero() {
            -2 * self.prec as i64
        } else {
            self.leading_bit() - self.prec as i64
        };
        Self::from_scaled(BigInt::from(1), e, self.prec)
    }

    pub fn neg(&self) -> Self {
        Self { mantissa: -&self.mantissa, exp: self.exp, prec: self.prec }
    }

    pub fn abs(&self) -> Self {
        Self { mantissa: self.mantissa.abs(), exp: self.exp, prec: self.prec }
    }

    pub fn add(&self, other: &Self) -> Self {
        let prec = self.prec.max(other.prec);
        if self.is_zero() {
            let mut r = other.clone();
            r.prec = prec;
            r.normalize();
            return r;
        }
        if other.is_zero() {
            let mut r = self.clone();
            r.prec = prec;
            r.normalize();
            return r;
        }
        // If the magnitudes are too far apart to interact at this precision,
        // return the dominant operand; the neglected term is below 1/2 ulp.
        let gap = self.leading_bit() - other.leading_bit();
        if gap > prec as i64 + 2 {
            let mut r = self.clone();
            r.prec = prec;
            r.normalize();
            return r;
        }
        if gap < -(prec as i64 + 2) {
            let mut r = other.clone();
            r.prec = prec;
            r.normalize();
            return r;
        }
        let (lo, hi) = if self.exp <= other.exp { (self, other) } else { (other, self) };
        let shifted = &hi.mantissa << (hi.exp - lo.exp) as u64;
        Self::from_scaled(shifted + &lo.mantissa, lo.exp, prec)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let prec = self.prec.max(other.prec);
        Self::from_scaled(&self.mantissa * &other.mantissa, self.exp + other.exp, prec)
    }

    pub fn div(&self, other: &Self) -> Result<Self, FloatError> {
        if other.is_zero() {
            return Err(FloatError::DivisionByZero);
        }
        let prec = self.prec.max(other.prec);
        if self.is_zero() {
            return Ok(Self::zero(prec));
        }
        let shift = prec as u64 + 2 + other.mantissa.magnitude().bits();
        let q = (&self.mantissa << shift) / &other.mantissa;
        Ok(Self::from_scaled(q, self.exp - other.exp - shift as i64, prec))
    }

    pub fn powi(&self, exponent: i64) -> Result<Self, FloatError> {
        if exponent < 0 {
            let pos = self.powi(-exponent)?;
            return Self::from_i64(1, self.prec).div(&pos);
        }
        let mut acc = Self::from_i64(1, self.prec);
        let mut base = self.clone();
        let mut e = exponent as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    pub fn cmp_value(&self, other: &Self) -> Ordering {
        let sign = |x: &Self| -> i32 {
            match x.mantissa.sign() {
                Sign::Minus => -1,
                Sign::NoSign => 0,
                Sign::Plus => 1,
            }
        };
        let (sa, sb) = (sign(self), sign(other));
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == 0 {
            return Ordering::Equal;
        }
        let (la, lb) = (self.leading_bit(), other.leading_bit());
        if la != lb {
            let mag = la.cmp(&lb);
            return if sa > 0 { mag } else { mag.reverse() };
        }
        // Same sign and same leading position: aligned mantissa compare.
        let (lo, hi) = if self.exp <= other.exp { (self, other) } else { (other, self) };
        let shifted = &hi.mantissa << (hi.exp - lo.exp) as u64;
        let cmp = if std::ptr::eq(lo, self) {
            lo.mantissa.cmp(&shifted)
        } else {
            shifted.cmp(&lo.mantissa)
        };
        cmp
    }

    /// Natural logarithm via `ln x = k ln 2 + 2 atanh((m-1)/(m+1))` with the
    /// mantissa reduced to `[1, 2)`.
    pub fn ln(&self) -> Result<Self, FloatError> {
        if self.is_zero() || self.is_negative() {
            return Err(FloatError::LogNonPositive);
        }
        let work = self.prec + 32;
        // self = m * 2^e with 2^(prec-1) <= m < 2^prec; write the real value
        // as (m / 2^(prec-1)) * 2^(e + prec - 1).
        let k = self.exp + self.prec as i64 - 1;
        let mhat = Self::from_scaled(self.mantissa.clone(), -(self.prec as i64 - 1), work);
        let one = Self::from_i64(1, work);
        let z = mhat.sub(&one).div(&mhat.add(&one))?;
        let ln_m = atanh_series(&z).mul(&Self::from_i64(2, work));
        let ln2 = ln_2(work);
        let mut result = ln_m.add(&ln2.mul(&Self::from_i64(k, work)));
        result.prec = self.prec;
        result.normalize();
        Ok(result)
    }

    /// Best-effort `f64` view; saturates on exponent overflow.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mantissa.magnitude().bits();
        let drop = bits.saturating_sub(53);
        let top = (&self.mantissa >> drop).to_i64().unwrap_or(i64::MAX) as f64;
        let scale = self.exp + drop as i64;
        top * 2f64.powi(scale.clamp(i32::MIN as i64, i32::MAX as i64) as i32)
    }

    /// Decimal rendering with `digits` significant digits, as
    /// `-d.ddd...e<k>`.
    pub fn to_decimal(&self, digits: usize) -> String {
        assert!(digits >= 1);
        if self.is_zero() {
            return "0".to_owned();
        }
        let neg = self.is_negative();
        // Estimate the decimal exponent from the binary one, then correct.
        let approx_log10 = (self.leading_bit() as f64 - 0.5) * std::f64::consts::LOG10_2;
        let mut dec_exp = approx_log10.floor() as i64; // value ~ 10^dec_exp
        let scaled_digits = |dec_exp: i64| -> BigInt {
            // round(|value| * 10^(digits-1-dec_exp))
            let pow10 = digits as i64 - 1 - dec_exp;
            let m = self.mantissa.abs();
            let mut num = m;
            let mut den = BigInt::from(1);
            if pow10 >= 0 {
                num *= BigInt::from(10).pow(pow10 as u32);
            } else {
                den *= BigInt::from(10).pow((-pow10) as u32);
            }
            if self.exp >= 0 {
                num <<= self.exp as u64;
            } else {
                den <<= (-self.exp) as u64;
            }
            (num * 2 + &den) / (den * 2)
        };
        let mut int = scaled_digits(dec_exp);
        let target_lo = BigInt::from(10).pow(digits as u32 - 1);
        let target_hi = BigInt::from(10).pow(digits as u32);
        while int >= target_hi {
            dec_exp += 1;
            int = scaled_digits(dec_exp);
        }
        while int < target_lo {
            dec_exp -= 1;
            int = scaled_digits(dec_exp);
        }
        let body = int.to_string();
        let (head, tail) = body.split_at(1);
        let sign = if neg { "-" } else { "" };
        if tail.is_empty() {
            format!("{sign}{head}e{dec_exp}")
        } else {
            format!("{sign}{head}.{tail}e{dec_exp}")
        }
    }
}

/// `atanh(z) = sum z^(2j+1)/(2j+1)` for `|z| <= 1/3`.
fn atanh_series(z: &BigFloat) -> BigFloat {
    let prec = z.precision();
    let mut acc = BigFloat::zero(prec);
    if z.is_zero() {
        return acc;
    }
    let z2 = z.mul(z);
    let mut power = z.clone();
    let mut j = 0i64;
    // Terms shrink at least geometrically by 1/9; stop once they fall below
    // the working precision.
    let floor_bit = z.leading_bit() - prec as i64 - 8;
    loop {
        let term = power.div(&BigFloat::from_i64(2 * j + 1, prec)).expect("odd divisor");
        acc = acc.add(&term);
        power = power.mul(&z2);
        j += 1;
        if power.is_zero() || power.leading_bit() < floor_bit {
            break;
        }
    }
    acc
}

/// `ln 2 = 2 atanh(1/3)`.
pub fn ln_2(prec: u32) -> BigFloat {
    let third = BigFloat::from_i64(1, prec).div(&BigFloat::from_i64(3, prec)).expect("3 != 0");
    atanh_series(&third).mul(&BigFloat::from_i64(2, prec))
}

/// A value with an explicit upper bound on its total error (truncation plus
/// rounding), both at the same precision.
#[derive(Debug, Clone)]
pub struct Approx {
    pub value: BigFloat,
    pub error: BigFloat,
}

impl Approx {
    pub fn exact(value: BigFloat) -> Self {
        let prec = value.precision();
        Self { value, error: BigFloat::zero(prec) }
    }

    pub fn new(value: BigFloat, error: BigFloat) -> Self {
        debug_assert!(!error.is_negative());
        Self { value, error }
    }

    /// Whether `|self - other|` is certainly within `tol`, given both error
    /// bounds.
    pub fn agrees_with(&self, other: &Approx, tol: &BigFloat) -> bool {
        let diff = self.value.sub(&other.value).abs();
        let budget = tol.add(&self.error).add(&other.error);
        diff.cmp_value(&budget) != Ordering::Greater
    }

    /// Whether the interval `value ± error` lies within `tol` of `target`.
    pub fn within_of(&self, target: &BigFloat, tol: &BigFloat) -> bool {
        let diff = self.value.sub(target).abs().add(&self.error);
        diff.cmp_value(tol) != Ordering::Greater
    }
}

/// Convenience: `10^exp` as a float, e.g. for tolerances like `1e-6`.
pub fn pow10(exp: i64, prec: u32) -> BigFloat {
    BigFloat::from_i64(10, prec).powi(exp).expect("10^k never divides by zero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{parse_rational, ratio};

    fn assert_close(x: &BigFloat, decimal: &str, digits: usize) {
        assert_eq!(x.to_decimal(digits), decimal);
    }

    #[test]
    fn rational_round_trip_and_decimal() {
        let x = BigFloat::from_rational(&ratio(1, 3), 128);
        assert_close(&x, "3.3333333333333333333333333333333333e-1", 35);
        let y = BigFloat::from_rational(&ratio(-22, 7), 128);
        assert!(y.is_negative());
        assert_eq!(y.abs().to_decimal(10), "3.142857143e0");
        assert_eq!(BigFloat::from_i64(1000, 64).to_decimal(4), "1.000e3");
    }

    #[test]
    fn arithmetic_accuracy() {
        let prec = 192;
        let a = BigFloat::from_rational(&ratio(1, 7), prec);
        let b = BigFloat::from_rational(&ratio(1, 11), prec);
        let sum = a.add(&b);
        let expected = BigFloat::from_rational(&ratio(18, 77), prec);
        let diff = sum.sub(&expected).abs();
        // Error within a few ulps of 18/77 at 192 bits.
        let bound = BigFloat::from_rational(&parse_rational("1/1000000000000000000000000000000000000000000000000000000").unwrap(), prec);
        assert_eq!(diff.cmp_value(&bound), Ordering::Less);
    }

    #[test]
    fn wide_magnitude_gap_addition() {
        let prec = 64;
        let big = BigFloat::from_scaled(BigInt::from(1), 400, prec);
        let small = BigFloat::from_scaled(BigInt::from(1), -400, prec);
        let sum = big.add(&small);
        assert_eq!(sum.cmp_value(&big), Ordering::Equal);
        assert_eq!(big.cmp_value(&small), Ordering::Greater);
        assert_eq!(small.neg().cmp_value(&small), Ordering::Less);
    }

    #[test]
    fn ln_matches_reference_digits() {
        // ln 2 and ln 10 to 50 digits.
        let l2 = ln_2(256);
        assert_eq!(
            l2.to_decimal(50),
            "6.9314718055994530941723212145817656807550013436026e-1"
        );
        let l10 = BigFloat::from_i64(10, 256).ln().unwrap();
        assert_eq!(
            l10.to_decimal(50),
            "2.3025850929940456840179914546843642076011014886288e0"
        );
        // ln(1) = 0 and domain errors.
        assert!(BigFloat::from_i64(1, 128).ln().unwrap().is_zero());
        assert!(BigFloat::from_i64(0, 128).ln().is_err());
        assert!(BigFloat::from_i64(-3, 128).ln().is_err());
    }

    #[test]
    fn powi_and_division() {
        let prec = 128;
        let x = BigFloat::from_rational(&ratio(3, 2), prec);
        let cube = x.powi(3).unwrap();
        let expected = BigFloat::from_rational(&ratio(27, 8), prec);
        assert_eq!(cube.cmp_value(&expected), Ordering::Equal);
        let inv = x.powi(-2).unwrap();
        let expected = BigFloat::from_rational(&ratio(4, 9), prec);
        assert_eq!(inv.sub(&expected).abs().cmp_value(&pow10(-30, prec)), Ordering::Less);
        assert!(BigFloat::zero(prec).powi(-1).is_err());
    }

    #[test]
    fn approx_agreement() {
        let prec = 128;
        let a = Approx::new(BigFloat::from_rational(&ratio(1, 3), prec), pow10(-20, prec));
        let b = Approx::new(BigFloat::from_rational(&ratio(33334, 100000), prec), pow10(-20, prec));
        assert!(a.agrees_with(&b, &pow10(-4, prec)));
        assert!(!a.agrees_with(&b, &pow10(-8, prec)));
        assert!(a.within_of(&BigFloat::from_rational(&ratio(1, 3), prec), &pow10(-19, prec)));
    }
}
