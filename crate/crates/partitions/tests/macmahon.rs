//! Enumeration counts against the product generating function
//! `prod_m (1 - q^m)^(-m)`, computed independently with exact series
//! arithmetic.

use exact_core::rational::rat;
use exact_core::series::RationalSeries;
use partitions::enumerate_pp;

fn macmahon_series(order: usize) -> RationalSeries {
    let mut acc = RationalSeries::one(order);
    for m in 1..=order {
        let one_minus_qm = RationalSeries::one(order).sub(&RationalSeries::monomial(
            rat(1),
            m,
            order,
        ));
        let factor = one_minus_qm.pow(m as u64).invert().expect("unit constant term");
        acc = acc.mul(&factor);
    }
    acc
}

#[test]
fn counts_match_the_generating_function_through_twelve() {
    let series = macmahon_series(12);
    for n in 0..=12u32 {
        let count = enumerate_pp(n).len();
        assert_eq!(series.coeff(n as usize), rat(count as i64), "pp({n})");
    }
}
