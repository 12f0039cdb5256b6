//! Localization sums: descendent brackets as q-series at a fixed torus point.

use exact_core::rational::Rational;
use exact_core::series::RationalSeries;
use num_traits::{One, Zero};
use partitions::{enumerate_pp, PlanePartition};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::descendents::insertion_value;
use crate::form::LinearForm;
use crate::point::TPoint;
use crate::weights::{contribution, WeightFactorization};
use crate::DtError;

/// Fixed-point data through a given number of boxes: the diagrams of each
/// size together with their factored contributions. Building the
/// factorizations once lets every evaluation and genericity check reuse them.
pub struct LocalizationContext {
    nmax: usize,
    diagrams: Vec<Vec<PlanePartition>>,
    weights: Vec<Vec<WeightFactorization>>,
}

impl LocalizationContext {
    pub fn new(nmax: usize) -> Result<Self, DtError> {
        let mut diagrams = Vec::with_capacity(nmax + 1);
        let mut weights = Vec::with_capacity(nmax + 1);
        for n in 0..=nmax {
            let level = enumerate_pp(n as u32);
            let mut level_weights = Vec::with_capacity(level.len());
            for pi in &level {
                level_weights.push(contribution(pi)?);
            }
            diagrams.push(level);
            weights.push(level_weights);
        }
        Ok(Self { nmax, diagrams, weights })
    }

    pub fn nmax(&self) -> usize {
        self.nmax
    }

    pub fn diagrams(&self, n: usize) -> &[PlanePartition] {
        &self.diagrams[n]
    }

    pub fn weights(&self, n: usize) -> &[WeightFactorization] {
        &self.weights[n]
    }

    /// Every primitive tangent weight form appearing up to `nmax` boxes.
    pub fn all_forms(&self) -> impl Iterator<Item = &LinearForm> + '_ {
        self.weights.iter().flatten().flat_map(|w| w.factors().map(|(f, _)| f))
    }

    /// A point is generic when no tangent weight form vanishes there,
    /// numerator or denominator alike, and no coordinate is zero.
    pub fn is_generic(&self, t: &TPoint) -> bool {
        t.has_nonzero_coords() && self.all_forms().all(|f| !f.eval(t).is_zero())
    }

    /// Draw generic rational points with a seeded generator. Coordinates are
    /// `sign * num / den` with `num, den` in `[2, 997]`; non-generic draws are
    /// rejected and redrawn.
    pub fn sample_points(&self, seed: u64, count: usize) -> Result<Vec<TPoint>, DtError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut points = Vec::with_capacity(count);
        let mut attempts = 0usize;
        let max_attempts = 1000 * count.max(1);
        while points.len() < count {
            attempts += 1;
            if attempts > max_attempts {
                return Err(DtError::SamplingFailed { attempts });
            }
            let mut coord = || {
                let num: i64 = rng.gen_range(2..=997);
                let den: i64 = rng.gen_range(2..=997);
                let sign: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
                Rational::new((sign * num).into(), den.into())
            };
            let candidate = TPoint::new(coord(), coord(), coord());
            if self.is_generic(&candidate) {
                points.push(candidate);
            }
        }
        Ok(points)
    }

    /// The bracket of a descendent insertion at a point:
    ///
    /// coefficient of `q^n` is `(-1)^n sum_{|pi| = n} e(-T_pi) prod_i ch_{k_i}(pi)`.
    ///
    /// The empty insertion gives the vacuum series with constant term one.
    pub fn bracket_series(
        &self,
        ks: &[u32],
        twist: Option<&LinearForm>,
        t: &TPoint,
    ) -> Result<BracketSeries, DtError> {
        let mut series = RationalSeries::zero(self.nmax);
        let constant = if ks.is_empty() { Rational::one() } else { Rational::zero() };
        series.set_coeff(0, constant);
        for n in 1..=self.nmax {
            let mut sum = Rational::zero();
            for (pi, weight) in self.diagrams[n].iter().zip(&self.weights[n]) {
                sum += weight.evaluate(t)? * insertion_value(pi, ks, twist, t)?;
            }
            if n % 2 == 1 {
                sum = -sum;
            }
            series.set_coeff(n, sum);
        }
        Ok(BracketSeries { point: t.clone(), series })
    }

    pub fn vacuum(&self, t: &TPoint) -> Result<BracketSeries, DtError> {
        self.bracket_series(&[], None, t)
    }
}

/// A bracket q-series together with the point it was evaluated at.
#[derive(Clone, Debug, PartialEq)]
pub struct BracketSeries {
    point: TPoint,
    series: RationalSeries,
}

impl BracketSeries {
    pub fn new(point: TPoint, series: RationalSeries) -> Self {
        Self { point, series }
    }

    pub fn point(&self) -> &TPoint {
        &self.point
    }

    pub fn series(&self) -> &RationalSeries {
        &self.series
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }
}

/// Divide a bracket by the vacuum bracket at the same point.
pub fn normalize(
    bracket: &BracketSeries,
    vacuum: &BracketSeries,
) -> Result<BracketSeries, DtError> {
    if bracket.point != vacuum.point {
        return Err(DtError::PointMismatch);
    }
    let order = bracket.order().min(vacuum.order());
    let series = bracket.series.truncate(order).div(&vacuum.series.truncate(order))?;
    Ok(BracketSeries { point: bracket.point.clone(), series })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::delta;
    use exact_core::product::product_formula;
    use exact_core::rational::rat;

    #[test]
    fn vacuum_matches_the_euler_product() {
        let ctx = LocalizationContext::new(5).unwrap();
        for t in ctx.sample_points(7, 3).unwrap() {
            assert!(ctx.is_generic(&t));
            let d = delta().evaluate(&t).unwrap();
            let exponents: Vec<Rational> =
                (1..=5).map(|m| &d * Rational::from_integer(m.into())).collect();
            let product = product_formula(&exponents, 5).unwrap();
            assert_eq!(ctx.vacuum(&t).unwrap().series(), &product);
        }
    }

    #[test]
    fn vacuum_truncation_closed_form() {
        // 1 - delta q + (delta^2 - 5 delta)/2 q^2 + ...
        let ctx = LocalizationContext::new(2).unwrap();
        let t = TPoint::from_integers(7, 13, -29);
        let d = delta().evaluate(&t).unwrap();
        let vacuum = ctx.vacuum(&t).unwrap();
        assert_eq!(vacuum.series().coeff(0), rat(1));
        assert_eq!(vacuum.series().coeff(1), -&d);
        assert_eq!(vacuum.series().coeff(2), (&d * &d - rat(5) * &d) / rat(2));
    }

    #[test]
    fn normalized_ch0_is_minus_delta_times_weight_three_zeta() {
        let ctx = LocalizationContext::new(6).unwrap();
        let t = ctx.sample_points(9, 1).unwrap().pop().unwrap();
        let vacuum = ctx.vacuum(&t).unwrap();
        let ch0 = ctx.bracket_series(&[0], None, &t).unwrap();
        let normalized = normalize(&ch0, &vacuum).unwrap();

        let d = delta().evaluate(&t).unwrap();
        let comp = qzeta::Composition::new(vec![3]).unwrap();
        let expected = qzeta::zeta_q(&comp, 6).scale(&-d);
        assert_eq!(normalized.series(), &expected);
    }

    #[test]
    fn normalized_ch0_is_the_logarithmic_derivative_of_the_vacuum() {
        // <ch_0>' = q d/dq log <1>: both sides count boxes against the
        // vacuum measure.
        let ctx = LocalizationContext::new(6).unwrap();
        for t in ctx.sample_points(17, 2).unwrap() {
            let vacuum = ctx.vacuum(&t).unwrap();
            let ch0 = ctx.bracket_series(&[0], None, &t).unwrap();
            let normalized = normalize(&ch0, &vacuum).unwrap();
            let log_derivative = vacuum.series().log().unwrap().q_derive();
            assert_eq!(normalized.series(), &log_derivative);
        }
    }

    #[test]
    fn sampling_is_deterministic_and_generic() {
        let ctx = LocalizationContext::new(3).unwrap();
        let a = ctx.sample_points(42, 3).unwrap();
        let b = ctx.sample_points(42, 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 3);
        for t in &a {
            assert!(ctx.is_generic(t));
        }
        let c = ctx.sample_points(43, 3).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn normalization_requires_matching_points() {
        let ctx = LocalizationContext::new(2).unwrap();
        let t1 = TPoint::from_integers(7, 13, -29);
        let t2 = TPoint::from_integers(3, 5, 11);
        let a = ctx.vacuum(&t1).unwrap();
        let b = ctx.vacuum(&t2).unwrap();
        assert!(matches!(normalize(&a, &b), Err(DtError::PointMismatch)));
    }
}
