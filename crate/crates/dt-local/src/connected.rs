//! Connected (cumulant) brackets from normalized moment brackets.

use std::collections::HashMap;

use exact_core::rational::{factorial, Rational};
use exact_core::ring::Ring;
use exact_core::series::TruncatedSeries;

use crate::bracket::{normalize, BracketSeries, LocalizationContext};
use crate::form::LinearForm;
use crate::point::TPoint;
use crate::DtError;

/// All set partitions of `{0, .., m-1}`, each as a list of sorted blocks.
/// Element `i` is placed into every existing block or a fresh one, so the
/// count follows the Bell numbers.
pub fn set_partitions(m: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = vec![vec![]];
    for i in 0..m {
        let mut next = Vec::new();
        for partition in &out {
            for b in 0..=partition.len() {
                let mut extended = partition.clone();
                if b == partition.len() {
                    extended.push(vec![i]);
                } else {
                    extended[b].push(i);
                }
                next.push(extended);
            }
        }
        out = next;
    }
    out
}

/// Moebius combination over set partitions:
///
/// `connected = sum_P (-1)^(|P|-1) (|P|-1)! prod_{B in P} moment(B)`
///
/// where `moment` maps a sorted index subset to a normalized moment series.
/// For a product measure the result vanishes for two or more indices, which
/// is the defining property of cumulants.
pub fn cumulant_combination<R: Ring, E>(
    count: usize,
    order: usize,
    moment: &mut dyn FnMut(&[usize]) -> Result<TruncatedSeries<R>, E>,
) -> Result<TruncatedSeries<R>, E> {
    if count == 0 {
        return Ok(TruncatedSeries::one(order));
    }
    let mut total = TruncatedSeries::<R>::zero(order);
    for partition in set_partitions(count) {
        let blocks = partition.len();
        let mut term = TruncatedSeries::<R>::one(order);
        for block in &partition {
            term = term.mul(&moment(block)?.truncate(order));
        }
        let mut prefactor = Rational::from_integer(factorial(blocks as u32 - 1));
        if blocks % 2 == 0 {
            prefactor = -prefactor;
        }
        total = total.add(&term.scale(&prefactor));
    }
    Ok(total)
}

/// Connected normalized bracket of a descendent insertion at a point.
pub fn connected_bracket(
    ctx: &LocalizationContext,
    ks: &[u32],
    twist: Option<&LinearForm>,
    t: &TPoint,
) -> Result<BracketSeries, DtError> {
    let vacuum = ctx.vacuum(t)?;
    let mut memo: HashMap<Vec<u32>, TruncatedSeries<Rational>> = HashMap::new();
    let mut moment = |indices: &[usize]| -> Result<TruncatedSeries<Rational>, DtError> {
        let mut subset: Vec<u32> = indices.iter().map(|&i| ks[i]).collect();
        subset.sort_unstable();
        if let Some(found) = memo.get(&subset) {
            return Ok(found.clone());
        }
        let raw = ctx.bracket_series(&subset, twist, t)?;
        let normalized = normalize(&raw, &vacuum)?;
        memo.insert(subset, normalized.series().clone());
        Ok(normalized.series().clone())
    };
    let series = cumulant_combination(ks.len(), ctx.nmax(), &mut moment)?;
    Ok(BracketSeries::new(t.clone(), series))
}
