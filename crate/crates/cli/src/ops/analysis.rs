//! Numerical verbs: the divergent expansion near q = 1 and the classical
//! limit of the rescaled series.

use std::cmp::Ordering;

use serde_json::json;

use exact_core::bigfloat::BigFloat;
use qzeta::{asymptotic_eval, limit_check, optimal_truncation, zeta_q_point, Composition};

use crate::args::{AsympArgs, LimitArgs};
use crate::parse::{parse_composition, parse_rational_arg, parse_rational_list};
use crate::report::{Check, Report};
use crate::CliError;

/// Leading decimal digits of agreement suggested by a relative gap.
fn agreement_digits(relative: &BigFloat, prec: u32) -> i64 {
    if relative.is_zero() {
        // All computed digits agree; report the working precision.
        return (f64::from(prec) * std::f64::consts::LOG10_2).floor() as i64;
    }
    (-relative.to_f64().log10()).floor() as i64
}

pub fn run_asymp(args: &AsympArgs) -> Result<Report, CliError> {
    if args.k == 0 {
        return Err(CliError::Usage(
            "the expansion needs k >= 1 (weight 2k + 1 >= 3)".to_owned(),
        ));
    }
    let q0 = parse_rational_arg(&args.q0)?;
    let prec = args.prec;
    let mut report = Report::new("asymp");
    report.param("k", args.k);
    report.param("weight", 2 * args.k + 1);
    report.param("q0", &args.q0);
    report.param("prec", prec);
    report.param("cap", args.cap);

    let comp = Composition::new(vec![2 * args.k + 1]).expect("odd weight >= 3");
    let reference = zeta_q_point(&comp, &q0, prec)?;
    let (best, best_estimate) = optimal_truncation(args.k, &q0, args.cap, prec)?;

    let mut table = vec![vec!["m".to_owned(), "error".to_owned(), "estimate".to_owned()]];
    let mut estimates = Vec::with_capacity(args.cap + 1);
    for m in 0..=args.cap {
        let eval = asymptotic_eval(args.k, &q0, m, prec)?;
        // The measured error saturates at the working-precision floor;
        // the estimate is the exact stopping heuristic.
        let error = eval.approximation.sub(&reference.value).abs();
        report.line(format!(
            "m={m:>3}  error {}  estimate {}",
            error.to_decimal(3),
            eval.error_estimate.to_decimal(3)
        ));
        table.push(vec![m.to_string(), error.to_decimal(6), eval.error_estimate.to_decimal(6)]);
        estimates.push(eval.error_estimate);
    }

    let at_best = asymptotic_eval(args.k, &q0, best, prec)?;
    let relative = at_best
        .approximation
        .sub(&reference.value)
        .abs()
        .div(&reference.value.abs())
        .expect("Z(2k+1)(q0) > 0");
    let digits = agreement_digits(&relative, prec);
    report.check(Check::of(
        "optimal truncation accuracy",
        digits >= i64::from(args.min_digits),
        format!(
            "truncating at m = {best} (estimate argmin) reproduces the direct value to {digits} digits"
        ),
    ));

    let falling = estimates[..=best]
        .windows(2)
        .all(|w| w[1].cmp_value(&w[0]) == Ordering::Less);
    let rising = estimates[best..]
        .windows(2)
        .all(|w| w[1].cmp_value(&w[0]) == Ordering::Greater);
    let shape = if best == args.cap {
        format!("estimates still falling at the cap m = {best}; the turnover lies beyond it")
    } else {
        format!("estimates fall to the minimum at m = {best}, then rise: divergent-series shape")
    };
    report.check(Check::of("error profile unimodality", falling && rising, shape));

    report.set_table(table);
    report.set_payload(json!({
        "k": args.k,
        "q0": args.q0,
        "reference": reference.value.to_decimal(20),
        "bestEstimateAt": best,
        "bestEstimate": best_estimate.to_decimal(6),
        "approximation": at_best.approximation.to_decimal(20),
        "agreementDigits": digits,
    }));
    Ok(report)
}

pub fn run_limit(args: &LimitArgs) -> Result<Report, CliError> {
    let comp = parse_composition(&args.s)?;
    let points = parse_rational_list(&args.q0)?;
    if points.is_empty() {
        return Err(CliError::Usage("limit needs at least one q0".to_owned()));
    }
    let max_gap = parse_rational_arg(&args.max_gap)?;
    let prec = args.prec;
    let mut report = Report::new("limit");
    report.param("s", &comp);
    report.param("q0", &args.q0);
    report.param("prec", prec);
    report.param("max-gap", &args.max_gap);

    let mut table = vec![vec![
        "q0".to_owned(),
        "scaled".to_owned(),
        "limit".to_owned(),
        "relative_gap".to_owned(),
    ]];
    let mut gaps = Vec::with_capacity(points.len());
    for (q0, text) in points.iter().zip(args.q0.split(',')) {
        let check = limit_check(&comp, q0, prec)?;
        report.line(format!(
            "q0={}  scaled {}  limit {}  gap {}",
            text.trim(),
            check.lhs.to_decimal(12),
            check.rhs.to_decimal(12),
            check.relative_gap.to_decimal(3)
        ));
        table.push(vec![
            text.trim().to_owned(),
            check.lhs.to_decimal(12),
            check.rhs.to_decimal(12),
            check.relative_gap.to_decimal(6),
        ]);
        gaps.push(check.relative_gap);
    }

    if gaps.len() >= 2 {
        let shrinking = gaps.windows(2).all(|w| w[1].cmp_value(&w[0]) == Ordering::Less);
        report.check(Check::of(
            "gap decreases toward q = 1",
            shrinking,
            format!("{} points, each closer to the classical value than the last", gaps.len()),
        ));
    }
    let final_gap = gaps.last().expect("at least one point");
    let bound = BigFloat::from_rational(&max_gap, prec);
    report.check(Check::of(
        "final gap under the tolerance",
        final_gap.cmp_value(&bound) == Ordering::Less,
        format!("relative gap {} at the last point", final_gap.to_decimal(3)),
    ));

    report.set_table(table);
    report.set_payload(json!({
        "s": comp.to_string(),
        "gaps": gaps.iter().map(|g| g.to_decimal(6)).collect::<Vec<_>>(),
    }));
    Ok(report)
}
