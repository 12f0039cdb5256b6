//! Exact arithmetic foundation: arbitrary-precision rationals, truncated
//! power series over pluggable coefficient rings, univariate polynomials,
//! Gaussian rationals, Bernoulli numbers, infinite-product expansion, and an
//! arbitrary-precision binary float with error-carrying results.
//!
//! Design rules:
//! - everything upstream of the float layer is exact; nothing rounds,
//! - series arithmetic propagates the minimum truncation order, so stored
//!   coefficients are always true coefficients,
//! - floats carry their mantissa width and results that matter carry an
//!   explicit error bound ([`bigfloat::Approx`]).

pub mod bernoulli;
pub mod bigfloat;
pub mod gaussian;
pub mod json;
pub mod laurent;
pub mod poly;
pub mod product;
pub mod rational;
pub mod ring;
pub mod series;

pub use bernoulli::BernoulliTable;
pub use bigfloat::{Approx, BigFloat, DEFAULT_PRECISION};
pub use gaussian::GaussianRational;
pub use laurent::LaurentExpansion;
pub use poly::Polynomial;
pub use rational::{parse_rational, rat, ratio, render_rational, Rational};
pub use ring::Ring;
pub use series::{RationalSeries, SeriesError, TruncatedSeries};
