//! Conjectured graded dimensions from the generating function
//!
//! ```text
//!     1 / (1 - t^2 - t^3 - t^4 - t^5 + t^8 + t^9 + t^10 + t^11 + t^12)
//! ```
//!
//! expanded by its linear recurrence. These are the numbers the computed
//! dimension profiles are compared against; agreement is a test outcome,
//! not an assumption.

use exact_core::rational::rat;
use exact_core::series::RationalSeries;

/// Coefficients of the denominator polynomial, degree 0 through 12.
pub const DENOMINATOR: [i64; 13] = [1, 0, -1, -1, -1, -1, 0, 0, 1, 1, 1, 1, 1];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    /// `h_0..h_W` from the recurrence.
    pub gr_dims: Vec<usize>,
    /// Partial sums `D_w = h_0 + ... + h_w`.
    pub filtered_dims: Vec<usize>,
}

/// Expands the generating function through `t^max_weight`.
///
/// The recurrence is `h_n = h_{n-2} + h_{n-3} + h_{n-4} + h_{n-5} - h_{n-8}
/// - h_{n-9} - h_{n-10} - h_{n-11} - h_{n-12}` with `h_0 = 1` and `h_n = 0`
/// for `n < 0`.
pub fn hilbert_coeffs(max_weight: u32) -> HilbertData {
    let w = max_weight as usize;
    let mut h = vec![0i64; w + 1];
    h[0] = 1;
    for n in 1..=w {
        let mut acc = 0i64;
        for (d, &c) in DENOMINATOR.iter().enumerate().skip(1) {
            if d <= n {
                acc -= c * h[n - d];
            }
        }
        h[n] = acc;
    }
    let gr_dims: Vec<usize> = h
        .iter()
        .map(|&x| usize::try_from(x).expect("the expansion stays nonnegative here"))
        .collect();
    let filtered_dims = gr_dims
        .iter()
        .scan(0usize, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect();
    HilbertData { gr_dims, filtered_dims }
}

/// The denominator as a truncated q-series, for the inversion oracle.
pub fn denominator_series(order: usize) -> RationalSeries {
    let mut s = RationalSeries::zero(order);
    for (d, &c) in DENOMINATOR.iter().enumerate() {
        if d <= order {
            s.set_coeff(d, rat(c));
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_coefficients() {
        let data = hilbert_coeffs(10);
        assert_eq!(data.gr_dims[..6], [1, 0, 1, 1, 2, 3]);
        assert_eq!(data.gr_dims[8], 9);
        assert_eq!(data.gr_dims[10], 21);
        assert_eq!(data.gr_dims, vec![1, 0, 1, 1, 2, 3, 4, 7, 9, 15, 21]);
    }

    #[test]
    fn filtered_dims_are_partial_sums() {
        let data = hilbert_coeffs(8);
        assert_eq!(data.filtered_dims, vec![1, 1, 2, 3, 5, 8, 12, 19, 28]);
    }

    #[test]
    fn recurrence_matches_series_inversion() {
        let order = 60;
        let inverted = denominator_series(order).invert().unwrap();
        let data = hilbert_coeffs(order as u32);
        for n in 0..=order {
            assert_eq!(inverted.coeff(n), rat(data.gr_dims[n] as i64), "t^{n}");
        }
    }
}
