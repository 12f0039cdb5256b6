//! Evaluation engines for sum templates.
//!
//! Two engines share the factor-expansion helper but differ in how they walk
//! the index set:
//!
//! - `ChainDp`: dynamic programming for chain-shaped templates (one
//!   single-variable factor per variable). Partial sums over the inner tail
//!   of the chain are memoized as truncated series indexed by the strict
//!   upper bound on the next variable. Cost is polynomial in the order.
//! - `Enumerate`: direct enumeration of index tuples, bounded by the
//!   per-variable valuation weights. Exponential in the variable count but
//!   fully general; also serves as a cross-check for the DP path.

use crate::template::{SumSemantics, SumTemplate, TemplateError};
use exact_core::poly::Polynomial;
use exact_core::rational::rat;
use exact_core::ring::Ring;
use exact_core::series::RationalSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    /// ChainDp when the template allows it, otherwise Enumerate.
    Auto,
    ChainDp,
    Enumerate,
}

/// Evaluates the template as a series truncated at `order`.
pub fn multisum(template: &SumTemplate, order: usize) -> RationalSeries {
    multisum_with(template, order, Engine::Auto).expect("Auto engine accepts any valid template")
}

pub fn multisum_with(
    template: &SumTemplate,
    order: usize,
    engine: Engine,
) -> Result<RationalSeries, TemplateError> {
    match engine {
        Engine::Auto => {
            if template.is_chain_shaped() {
                chain_dp(template, order)
            } else {
                Ok(enumerate(template, order))
            }
        }
        Engine::ChainDp => chain_dp(template, order),
        Engine::Enumerate => Ok(enumerate(template, order)),
    }
}

/// Dense expansion of `p(x)/(1-x)^s` at `x = q^m`, truncated at `order`.
///
/// Uses `(1-y)^{-s} = sum_i C(i+s-1, s-1) y^i` with the binomial coefficient
/// updated incrementally, then spreads the numerator terms over it.
fn factor_series(numerator: &Polynomial, den_power: u32, m: usize, order: usize) -> RationalSeries {
    let mut result = RationalSeries::zero(order);
    if m == 0 {
        // Unreachable for valid templates (forms are nonzero and variables
        // start at 1); kept defensive.
        return result;
    }
    let s = den_power as i64;
    let mut binom = rat(1); // C(i+s-1, s-1) at i=0
    let mut i = 0usize;
    while m * i <= order {
        if !binom.is_zero() {
            for j in 0..=numerator.degree().unwrap_or(0) {
                let c = numerator.coeff(j);
                if c.is_zero() {
                    continue;
                }
                let exp = m * (i + j);
                if exp <= order {
                    result.add_to_coeff(exp, &(c * &binom));
                }
            }
        }
        i += 1;
        // C(i+s-1, s-1) = C(i-1+s-1, s-1) * (i+s-1)/i
        binom = binom * rat(i as i64 + s - 1) / rat(i as i64);
    }
    result
}

/// DP over the chain `n_1 > n_2 > ... > n_k >= 1`, innermost variable first.
///
/// `prefix[b]` after processing variable `j` holds
/// `sum over chains n_j > ... > n_k with n_j <= b` of the factor product, so
/// the next variable out multiplies `factor(n_{j-1})` by `prefix[n_{j-1}-1]`.
fn chain_dp(template: &SumTemplate, order: usize) -> Result<RationalSeries, TemplateError> {
    if !template.is_chain_shaped() {
        return Err(TemplateError::NotChainShaped);
    }
    let k = template.vars();
    // prefix[b] = sum over inner chains bounded by b; None at the innermost
    // level, where the empty product is 1 for every bound.
    let mut prefix: Option<Vec<RationalSeries>> = None;
    let one = RationalSeries::one(order);
    for j in (0..k).rev() {
        let factor = &template.factors()[j];
        let v = factor.num_valuation().max(1);
        // The factor at n_j = m has q-valuation v*m, so larger m cannot touch
        // coefficients up to `order`.
        let cutoff = order / v;
        let mut new_prefix = Vec::with_capacity(cutoff + 1);
        new_prefix.push(RationalSeries::zero(order)); // bound 0: empty sum
        let mut running = RationalSeries::zero(order);
        for m in 1..=cutoff {
            let inner: &RationalSeries = match &prefix {
                None => &one,
                // Inner sums are complete past their own cutoff.
                Some(p) => p.get(m - 1).unwrap_or_else(|| p.last().expect("nonempty prefix")),
            };
            if !inner.is_zero() {
                let f = factor_series(&factor.numerator, factor.den_power, m, order);
                running = running.add(&f.mul(inner));
            }
            new_prefix.push(running.clone());
        }
        prefix = Some(new_prefix);
    }
    Ok(prefix.expect("k >= 1").pop().expect("bound-0 entry always present"))
}

/// Direct enumeration of index tuples with budget pruning.
///
/// Every tuple contributing at or below `order` satisfies
/// `sum_i w_i n_i <= order` with `w_i` the per-variable valuation weights
/// (all >= 1 for a valid template), plus the chain constraints if any.
fn enumerate(template: &SumTemplate, order: usize) -> RationalSeries {
    let k = template.vars();
    let weights = template.variable_weights();
    // Minimal value of variable j: 1 when free, room for the strictly
    // decreasing tail when chained.
    let floors: Vec<usize> = (0..k)
        .map(|j| match template.semantics() {
            SumSemantics::Free => 1,
            SumSemantics::Chain => k - j,
        })
        .collect();
    // suffix_min[i] = minimal budget spent by variables i..k.
    let mut suffix_min = vec![0usize; k + 1];
    for j in (0..k).rev() {
        suffix_min[j] = suffix_min[j + 1] + weights[j] * floors[j];
    }

    let mut state = Walk {
        template,
        weights: &weights,
        floors: &floors,
        suffix_min: &suffix_min,
        assignment: vec![0usize; k],
        order,
        total: RationalSeries::zero(order),
    };
    state.descend(0, 0);
    state.total
}

struct Walk<'a> {
    template: &'a SumTemplate,
    weights: &'a [usize],
    floors: &'a [usize],
    suffix_min: &'a [usize],
    assignment: Vec<usize>,
    order: usize,
    total: RationalSeries,
}

impl Walk<'_> {
    fn descend(&mut self, var: usize, spent: usize) {
        let k = self.template.vars();
        if var == k {
            self.accumulate_tuple();
            return;
        }
        let upper_chain = match self.template.semantics() {
            SumSemantics::Chain if var > 0 => self.assignment[var - 1] - 1,
            _ => usize::MAX,
        };
        let mut n = self.floors[var];
        while n <= upper_chain && spent + self.weights[var] * n + self.suffix_min[var + 1] <= self.order {
            self.assignment[var] = n;
            self.descend(var + 1, spent + self.weights[var] * n);
            n += 1;
        }
    }

    fn accumulate_tuple(&mut self) {
        let mut term = RationalSeries::one(self.order);
        for f in self.template.factors() {
            let m: usize = f
                .form
                .iter()
                .zip(self.assignment.iter())
                .map(|(&a, &n)| a as usize * n)
                .sum();
            term = term.mul(&factor_series(&f.numerator, f.den_power, m, self.order));
            if term.is_zero() {
                return;
            }
        }
        self.total = self.total.add(&term);
    }
}
