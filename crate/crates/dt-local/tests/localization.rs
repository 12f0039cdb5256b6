//! End-to-end checks of the localization pipeline through the public API.

use dt_local::{
    contribution, delta, normalize, rank1_limit, LocalizationContext, TPoint,
};
use exact_core::product::product_formula;
use exact_core::rational::{rat, ratio, Rational};
use partitions::{enumerate_pp, rank1_enumerate};

#[test]
fn vanishing_order_along_t12_matches_the_rank_statistic() {
    for n in 1..=5u32 {
        for pi in enumerate_pp(n) {
            let w = contribution(&pi).unwrap();
            assert_eq!(w.ord_t12(), pi.total_rank() as i64, "diagram {pi}");
        }
    }
}

#[test]
fn rank_one_limits_through_six_boxes() {
    for n in 1..=6u32 {
        for (pi, height) in rank1_enumerate(n) {
            let value = rank1_limit(&contribution(&pi).unwrap()).unwrap();
            let sign = if n % 2 == 1 { 1 } else { -1 };
            assert_eq!(value, ratio(sign, height as i64), "diagram {pi}");
        }
    }
}

#[test]
fn vacuum_series_agrees_with_the_delta_power_product() {
    let ctx = LocalizationContext::new(5).unwrap();
    for t in ctx.sample_points(2024, 3).unwrap() {
        let d = delta().evaluate(&t).unwrap();
        let exponents: Vec<Rational> =
            (1..=5).map(|m| &d * Rational::from_integer(m.into())).collect();
        let product = product_formula(&exponents, 5).unwrap();
        assert_eq!(ctx.vacuum(&t).unwrap().series(), &product);
    }
}

#[test]
fn brackets_are_symmetric_under_axis_permutations() {
    // The fixed-point set is stable under relabeling the axes, so every
    // bracket without insertions is a symmetric function of the point.
    let ctx = LocalizationContext::new(4).unwrap();
    let t = ctx.sample_points(99, 1).unwrap().pop().unwrap();
    let base = ctx.vacuum(&t).unwrap();
    for perm in [[1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]] {
        let permuted = t.permute(perm);
        assert!(ctx.is_generic(&permuted));
        let series = ctx.vacuum(&permuted).unwrap();
        assert_eq!(series.series(), base.series(), "perm {perm:?}");
    }
}

#[test]
fn normalized_brackets_observe_the_vacuum_constant_term() {
    let ctx = LocalizationContext::new(4).unwrap();
    let t = ctx.sample_points(7, 1).unwrap().pop().unwrap();
    let vacuum = ctx.vacuum(&t).unwrap();
    let raw = ctx.bracket_series(&[2], None, &t).unwrap();
    let normalized = normalize(&raw, &vacuum).unwrap();
    assert_eq!(normalized.series().coeff(0), rat(0));
    assert_eq!(normalized.order(), 4);
}
