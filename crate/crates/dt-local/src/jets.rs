//! Laurent jets along the slice `t2 = -t1 + s`.
//!
//! Substituting `t2 = -t1 + s` turns every tangent weight into a linear jet
//! `alpha + beta s`, with `alpha = 0` exactly for the multiples of `t1 + t2`.
//! Carrying truncated Laurent series in `s` through the whole localization
//! sum measures the order of vanishing of each q-coefficient along the
//! divisor `t1 + t2 = 0` without expanding any polynomials.
//!
//! A jet knows a window of coefficients and, crucially, how far that window
//! can be trusted: sums and products of truncations shrink the trustworthy
//! range, and a valuation is only reported as exact when a nonzero
//! coefficient sits inside it.

use std::collections::HashMap;
use std::fmt;

use exact_core::rational::{factorial, Rational};
use exact_core::ring::Ring;
use exact_core::series::TruncatedSeries;
use partitions::PlanePartition;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bracket::LocalizationContext;
use crate::connected::cumulant_combination;
use crate::descendents::box_weight;
use crate::form::LinearForm;
use crate::weights::{rational_power, WeightFactorization};
use crate::DtError;

/// Window width for inexact jets. Vanishing orders in play are bounded by the
/// box count, so a dozen coefficients leave ample slack.
pub const JET_WIDTH: usize = 12;

/// A truncated Laurent series in `s`.
///
/// Invariants: `coeffs` starts with a nonzero entry (leading zeros are folded
/// into `min_exp`); the value vanishes below `min_exp`; exact jets carry no
/// trailing zeros and describe the value completely, inexact jets are only
/// trusted on `[min_exp, min_exp + coeffs.len())`.
#[derive(Clone, Debug, PartialEq)]
pub struct SJet {
    min_exp: i64,
    coeffs: Vec<Rational>,
    exact: bool,
}

impl SJet {
    fn normalized(mut min_exp: i64, mut coeffs: Vec<Rational>, exact: bool) -> Self {
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            Some(k) => {
                coeffs.drain(..k);
                min_exp += k as i64;
            }
            None => {
                min_exp += coeffs.len() as i64;
                coeffs.clear();
            }
        }
        if exact {
            while coeffs.last().is_some_and(|c| c.is_zero()) {
                coeffs.pop();
            }
            if coeffs.is_empty() {
                min_exp = 0;
            }
        }
        Self { min_exp, coeffs, exact }
    }

    /// The exact linear jet `alpha + beta s`.
    pub fn linear(alpha: Rational, beta: Rational) -> Self {
        Self::normalized(0, vec![alpha, beta], true)
    }

    pub fn constant(value: Rational) -> Self {
        Self::normalized(0, vec![value], true)
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// Exclusive upper end of the trusted window; `None` means every
    /// coefficient is known.
    fn end(&self) -> Option<i64> {
        if self.exact {
            None
        } else {
            Some(self.min_exp + self.coeffs.len() as i64)
        }
    }

    fn coeff_at(&self, exp: i64) -> Rational {
        if exp < self.min_exp {
            return Rational::zero();
        }
        let idx = (exp - self.min_exp) as usize;
        match self.coeffs.get(idx) {
            Some(c) => c.clone(),
            None => {
                debug_assert!(self.exact, "read past the trusted window");
                Rational::zero()
            }
        }
    }

    pub fn pow(&self, exponent: u64) -> Self {
        let mut out = Self::one();
        for _ in 0..exponent {
            out = out.mul(self);
        }
        out
    }

    /// Order of vanishing in `s`, as far as the trusted window shows.
    pub fn valuation(&self) -> JetOrder {
        if self.is_zero() {
            JetOrder::Zero
        } else if self.coeffs.is_empty() {
            JetOrder::AtLeast(self.min_exp)
        } else {
            JetOrder::Exactly(self.min_exp)
        }
    }
}

impl Ring for SJet {
    fn zero() -> Self {
        Self { min_exp: 0, coeffs: Vec::new(), exact: true }
    }

    fn one() -> Self {
        Self { min_exp: 0, coeffs: vec![Rational::one()], exact: true }
    }

    fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let min = self.min_exp.min(other.min_exp);
        let exact = self.exact && other.exact;
        let end = match (self.end(), other.end()) {
            (None, None) => {
                self.min_exp.max(other.min_exp)
                    + self.coeffs.len().max(other.coeffs.len()) as i64
            }
            (Some(e), None) | (None, Some(e)) => e,
            (Some(a), Some(b)) => a.min(b),
        };
        let coeffs = (min..end.max(min))
            .map(|e| self.coeff_at(e) + other.coeff_at(e))
            .collect();
        Self::normalized(min, coeffs, exact)
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let min = self.min_exp + other.min_exp;
        let exact = self.exact && other.exact;
        let len = if exact {
            self.coeffs.len() + other.coeffs.len() - 1
        } else {
            let mut bound = usize::MAX;
            if let Some(e) = self.end() {
                bound = bound.min((e - self.min_exp) as usize);
            }
            if let Some(e) = other.end() {
                bound = bound.min((e - other.min_exp) as usize);
            }
            bound
        };
        let mut coeffs = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        Self::normalized(min, coeffs, exact)
    }

    fn neg(&self) -> Self {
        Self {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            exact: self.exact,
        }
    }

    fn from_rational(value: &Rational) -> Self {
        Self::normalized(0, vec![value.clone()], true)
    }

    fn try_invert(&self) -> Option<Self> {
        if self.coeffs.is_empty() {
            return None; // zero, or valuation unresolved within the window
        }
        let lead = self.coeffs[0].clone().recip();
        if self.exact && self.coeffs.len() == 1 {
            return Some(Self {
                min_exp: -self.min_exp,
                coeffs: vec![lead],
                exact: true,
            });
        }
        let len = if self.exact { JET_WIDTH } else { self.coeffs.len() };
        let mut inv = vec![Rational::zero(); len];
        inv[0] = lead.clone();
        for k in 1..len {
            let mut acc = Rational::zero();
            for i in 1..=k {
                let a = match self.coeffs.get(i) {
                    Some(c) => c,
                    None => break,
                };
                acc += a * &inv[k - i];
            }
            inv[k] = -acc * &lead;
        }
        Some(Self { min_exp: -self.min_exp, coeffs: inv, exact: false })
    }

    fn is_zero(&self) -> bool {
        self.exact && self.coeffs.is_empty()
    }

    fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
            exact: self.exact,
        }
    }
}

/// Outcome of reading a vanishing order off a truncated jet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JetOrder {
    /// A nonzero coefficient sits at this exponent.
    Exactly(i64),
    /// Every trusted coefficient below this exponent vanishes.
    AtLeast(i64),
    /// The jet is identically zero.
    Zero,
}

impl JetOrder {
    /// Lower bound on the order of vanishing, `None` for identically zero.
    pub fn floor(&self) -> Option<i64> {
        match self {
            JetOrder::Exactly(v) | JetOrder::AtLeast(v) => Some(*v),
            JetOrder::Zero => None,
        }
    }
}

impl fmt::Display for JetOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JetOrder::Exactly(v) => write!(f, "{v}"),
            JetOrder::AtLeast(v) => write!(f, ">={v}"),
            JetOrder::Zero => write!(f, "zero"),
        }
    }
}

/// A sample point `(t1, t3)` on the slice `t2 = -t1 + s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlicePoint {
    t1: Rational,
    t3: Rational,
}

impl SlicePoint {
    pub fn new(t1: Rational, t3: Rational) -> Self {
        Self { t1, t3 }
    }

    pub fn from_integers(t1: i64, t3: i64) -> Self {
        Self::new(Rational::from_integer(t1.into()), Rational::from_integer(t3.into()))
    }

    pub fn t1(&self) -> &Rational {
        &self.t1
    }

    pub fn t3(&self) -> &Rational {
        &self.t3
    }
}

impl fmt::Display for SlicePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(t1 = {}, t3 = {})", self.t1, self.t3)
    }
}

fn slice_alpha(form: &LinearForm, p: &SlicePoint) -> Rational {
    let (alpha_t1, alpha_t3, _) = form.slice_coeffs();
    p.t1() * Rational::from_integer(alpha_t1.into())
        + p.t3() * Rational::from_integer(alpha_t3.into())
}

/// `(alpha + beta s)^exp` expanded directly: binomial coefficients for
/// positive powers, the geometric/negative binomial window for negative
/// ones. Much cheaper than repeated jet multiplication.
pub fn linear_jet_power(alpha: &Rational, beta: &Rational, exp: i64) -> Result<SJet, DtError> {
    if exp == 0 {
        return Ok(SJet::one());
    }
    if alpha.is_zero() && beta.is_zero() {
        if exp > 0 {
            return Ok(SJet::zero());
        }
        return Err(DtError::ZeroToNegativePower);
    }
    if alpha.is_zero() {
        let coeff = rational_power(beta, exp)?;
        return Ok(SJet::normalized(exp, vec![coeff], true));
    }
    if beta.is_zero() {
        return Ok(SJet::constant(rational_power(alpha, exp)?));
    }
    let step = beta / alpha;
    let mut running = rational_power(alpha, exp)?;
    if exp > 0 {
        let m = exp as usize;
        let mut coeffs = Vec::with_capacity(m + 1);
        coeffs.push(running.clone());
        for i in 1..=m {
            running = running * &step
                * Rational::from_integer(((m - i + 1) as i64).into())
                / Rational::from_integer((i as i64).into());
            coeffs.push(running.clone());
        }
        Ok(SJet::normalized(0, coeffs, true))
    } else {
        let k = exp.unsigned_abs() as i64;
        let mut coeffs = Vec::with_capacity(JET_WIDTH);
        coeffs.push(running.clone());
        for i in 1..JET_WIDTH as i64 {
            running = running * -&step
                * Rational::from_integer((k - 1 + i).into())
                / Rational::from_integer(i.into());
            coeffs.push(running.clone());
        }
        Ok(SJet::normalized(0, coeffs, false))
    }
}

/// Jet of a weight form on the slice: `alpha + beta s`.
pub fn form_jet(form: &LinearForm, p: &SlicePoint) -> SJet {
    let (_, _, slope) = form.slice_coeffs();
    SJet::linear(slice_alpha(form, p), Rational::from_integer(slope.into()))
}

/// A slice point is generic when no tangent weight form off the `t1 + t2`
/// direction vanishes at `s = 0`.
pub fn slice_is_generic(ctx: &LocalizationContext, p: &SlicePoint) -> bool {
    if p.t1().is_zero() || p.t3().is_zero() {
        return false;
    }
    ctx.all_forms()
        .all(|f| f.proportional_to_t12() || !slice_alpha(f, p).is_zero())
}

/// Seeded generic slice points. Integer coordinates keep the jet
/// coefficients small; genericity is still enforced by rejection.
pub fn sample_slices(
    ctx: &LocalizationContext,
    seed: u64,
    count: usize,
) -> Result<Vec<SlicePoint>, DtError> {
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
            let sign: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
            Rational::from_integer((sign * num).into())
        };
        let candidate = SlicePoint::new(coord(), coord());
        if slice_is_generic(ctx, &candidate) {
            points.push(candidate);
        }
    }
    Ok(points)
}

/// Jet of a factored contribution on the slice.
pub fn contribution_jet(w: &WeightFactorization, p: &SlicePoint) -> Result<SJet, DtError> {
    let mut jet = SJet::constant(w.scalar().clone());
    for (form, mult) in w.factors() {
        let alpha = slice_alpha(form, p);
        if alpha.is_zero() && !form.proportional_to_t12() {
            return Err(DtError::DegenerateSlice { form: *form });
        }
        let (_, _, slope) = form.slice_coeffs();
        let power = linear_jet_power(&alpha, &Rational::from_integer(slope.into()), mult)?;
        jet = jet.mul(&power);
    }
    Ok(jet)
}

/// Jet of `ch_k(pi)` on the slice.
pub fn descendent_jet(
    pi: &PlanePartition,
    k: u32,
    twist: Option<&LinearForm>,
    p: &SlicePoint,
) -> SJet {
    let (twist_alpha, twist_beta) = match twist {
        Some(f) => {
            let (_, _, slope) = f.slice_coeffs();
            (slice_alpha(f, p), Rational::from_integer(slope.into()))
        }
        None => (Rational::zero(), Rational::zero()),
    };
    let mut sum = SJet::zero();
    for b in pi.boxes() {
        let w = box_weight(b);
        let (_, _, slope) = w.slice_coeffs();
        let alpha = slice_alpha(&w, p) + &twist_alpha;
        let beta = Rational::from_integer(slope.into()) + &twist_beta;
        let power = linear_jet_power(&alpha, &beta, k as i64)
            .expect("nonnegative powers cannot fail");
        sum = sum.add(&power);
    }
    sum.scale(&Rational::from_integer(factorial(k)).recip())
}

/// Bracket q-series with jet coefficients on the slice.
pub fn bracket_jet_series(
    ctx: &LocalizationContext,
    ks: &[u32],
    twist: Option<&LinearForm>,
    p: &SlicePoint,
) -> Result<TruncatedSeries<SJet>, DtError> {
    let mut series = TruncatedSeries::<SJet>::zero(ctx.nmax());
    if ks.is_empty() {
        series.set_coeff(0, SJet::one());
    }
    for n in 1..=ctx.nmax() {
        let mut sum = SJet::zero();
        for (pi, weight) in ctx.diagrams(n).iter().zip(ctx.weights(n)) {
            let mut term = contribution_jet(weight, p)?;
            for &k in ks {
                term = term.mul(&descendent_jet(pi, k, twist, p));
            }
            sum = sum.add(&term);
        }
        if n % 2 == 1 {
            sum = sum.neg();
        }
        series.set_coeff(n, sum);
    }
    Ok(series)
}

/// Connected normalized bracket with jet coefficients.
pub fn connected_jet_bracket(
    ctx: &LocalizationContext,
    ks: &[u32],
    twist: Option<&LinearForm>,
    p: &SlicePoint,
) -> Result<TruncatedSeries<SJet>, DtError> {
    let vacuum = bracket_jet_series(ctx, &[], twist, p)?;
    let mut memo: HashMap<Vec<u32>, TruncatedSeries<SJet>> = HashMap::new();
    let mut moment = |indices: &[usize]| -> Result<TruncatedSeries<SJet>, DtError> {
        let mut subset: Vec<u32> = indices.iter().map(|&i| ks[i]).collect();
        subset.sort_unstable();
        if let Some(found) = memo.get(&subset) {
            return Ok(found.clone());
        }
        let raw = bracket_jet_series(ctx, &subset, twist, p)?;
        let normalized = raw.div(&vacuum)?;
        memo.insert(subset, normalized.clone());
        Ok(normalized)
    };
    cumulant_combination(ks.len(), ctx.nmax(), &mut moment)
}

/// Orders of vanishing along `t1 + t2 = 0` for one q-coefficient, as read at
/// each sample slice.
#[derive(Clone, Debug)]
pub struct CoefficientOrder {
    pub n: usize,
    pub per_point: Vec<JetOrder>,
}

impl CoefficientOrder {
    /// The common reading, when every sample point agrees.
    pub fn agreed(&self) -> Option<JetOrder> {
        let first = *self.per_point.first()?;
        self.per_point.iter().all(|o| *o == first).then_some(first)
    }
}

/// Vanishing profile of a connected bracket along `t1 + t2 = 0`.
#[derive(Clone, Debug)]
pub struct T12Profile {
    pub insertion: Vec<u32>,
    pub orders: Vec<CoefficientOrder>,
}

impl T12Profile {
    /// True when every coefficient reads the same order at every sample
    /// point. Disagreement means some sample slice was special; it is
    /// reported rather than resolved.
    pub fn consistent(&self) -> bool {
        self.orders.iter().all(|c| c.agreed().is_some())
    }

    /// Lower bound for the vanishing order over all coefficients; `None`
    /// when the bracket vanished identically.
    pub fn depth_floor(&self) -> Option<i64> {
        self.orders
            .iter()
            .filter_map(|c| c.agreed().and_then(|o| o.floor()))
            .min()
    }
}

/// Measure how fast each q-coefficient of the connected bracket vanishes
/// along `t1 + t2 = 0`, reading the jets at several sample slices.
pub fn t12_profile(
    ctx: &LocalizationContext,
    ks: &[u32],
    twist: Option<&LinearForm>,
    slices: &[SlicePoint],
) -> Result<T12Profile, DtError> {
    let mut orders: Vec<CoefficientOrder> = (1..=ctx.nmax())
        .map(|n| CoefficientOrder { n, per_point: Vec::new() })
        .collect();
    for p in slices {
        let connected = connected_jet_bracket(ctx, ks, twist, p)?;
        for entry in orders.iter_mut() {
            entry.per_point.push(connected.coeff(entry.n).valuation());
        }
    }
    Ok(T12Profile { insertion: ks.to_vec(), orders })
}
