//! JSON encoding of rational series: `{"order": N, "coeffs": ["p/q", ...]}`.
//!
//! Coefficients are decimal strings (`p` or `p/q`) so arbitrary precision
//! survives the round trip; the coefficient list always has `order + 1`
//! entries.

use crate::rational::{parse_rational, render_rational};
use crate::series::RationalSeries;
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesJsonError {
    #[error("expected a JSON object with `order` and `coeffs`")]
    Shape,
    #[error("`order` must be a nonnegative integer")]
    BadOrder,
    #[error("`coeffs` must hold order+1 strings")]
    BadLength,
    #[error("bad coefficient at index {0}: {1}")]
    BadCoefficient(usize, String),
}

pub fn series_to_json(series: &RationalSeries) -> Value {
    json!({
        "order": series.order(),
        "coeffs": series.coeffs().iter().map(render_rational).collect::<Vec<_>>(),
    })
}

pub fn series_from_json(value: &Value) -> Result<RationalSeries, SeriesJsonError> {
    let obj = value.as_object().ok_or(SeriesJsonError::Shape)?;
    let order = obj
        .get("order")
        .and_then(Value::as_u64)
        .ok_or(SeriesJsonError::BadOrder)? as usize;
    let coeffs = obj
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or(SeriesJsonError::Shape)?;
    if coeffs.len() != order + 1 {
        return Err(SeriesJsonError::BadLength);
    }
    let mut parsed = Vec::with_capacity(order + 1);
    for (i, c) in coeffs.iter().enumerate() {
        let text = c.as_str().ok_or_else(|| SeriesJsonError::BadCoefficient(i, "not a string".into()))?;
        let r = parse_rational(text).map_err(|e| SeriesJsonError::BadCoefficient(i, e.to_string()))?;
        parsed.push(r);
    }
    Ok(RationalSeries::from_coeffs(parsed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn round_trip() {
        let mut s = RationalSeries::zero(5);
        s.set_coeff(1, rat(1));
        s.set_coeff(3, ratio(-7, 3));
        let v = series_to_json(&s);
        assert_eq!(v["order"], 5);
        assert_eq!(v["coeffs"][3], "-7/3");
        assert_eq!(series_from_json(&v).unwrap(), s);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(series_from_json(&serde_json::json!([1, 2])).is_err());
        assert!(series_from_json(&serde_json::json!({"order": 2, "coeffs": ["1"]})).is_err());
        assert!(series_from_json(&serde_json::json!({"order": 0, "coeffs": ["x"]})).is_err());
        assert!(series_from_json(&serde_json::json!({"order": -1, "coeffs": []})).is_err());
    }
}
