//! Membership of connected descendent brackets in the odd-generator algebra.
//!
//! The expectation under test: the connected normalized bracket of
//! `ch_{k_1} .. ch_{k_m}` lies, coefficient ring aside, in the span of
//! monomials in the generators `(q d/dq)^l Z(2k+1)` of 3D weight at most
//! `2 + sum (k_i + 1)`, with divisibility by the box factor visible as
//! vanishing along `t1 + t2 = 0`. At any fixed generic torus point the
//! bracket is an honest q-series, so the span test is exact linear algebra;
//! the profile of vanishing orders supplies the depth reading.

use relations::{oqz_basis, stable_span_membership, Membership, MonomialLabel, SeriesCache};

use crate::bracket::LocalizationContext;
use crate::connected::connected_bracket;
use crate::jets::{sample_slices, t12_profile, T12Profile};
use crate::point::TPoint;
use crate::DtError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conjecture3Verdict {
    /// Every sampled point produced a stabilized certificate and the
    /// vanishing profile is consistent.
    Supported,
    /// Some sampled point admits no expression in the basis at the tested
    /// order, or a candidate failed its recheck.
    Refuted,
    /// Mixed or unresolved outcomes; nothing definitive either way.
    Inconclusive,
}

/// Span test outcome at one torus point.
#[derive(Clone, Debug)]
pub struct PointOutcome {
    pub point: TPoint,
    pub membership: Membership,
}

#[derive(Clone, Debug)]
pub struct Conjecture3Report {
    pub insertion: Vec<u32>,
    pub weight_bound: u32,
    pub basis: Vec<MonomialLabel>,
    pub order: usize,
    pub margin: usize,
    pub points: Vec<PointOutcome>,
    pub profile: T12Profile,
    pub verdict: Conjecture3Verdict,
}

impl Conjecture3Report {
    pub fn is_supported(&self) -> bool {
        self.verdict == Conjecture3Verdict::Supported
    }
}

/// Run the membership and vanishing-order battery for one insertion.
///
/// `order + margin` coefficients of the bracket are needed, so `nmax` must
/// cover them; `points` torus points and two slice points are drawn from the
/// seed with genericity rejection.
pub fn conjecture3_test(
    ks: &[u32],
    nmax: usize,
    order: usize,
    margin: usize,
    seed: u64,
    points: usize,
) -> Result<Conjecture3Report, DtError> {
    if order + margin > nmax {
        return Err(DtError::InsufficientOrder { needed: order + margin, have: nmax });
    }
    let ctx = LocalizationContext::new(nmax)?;
    let weight_bound: u32 = 2 + ks.iter().map(|&k| k + 1).sum::<u32>();
    let basis = oqz_basis(weight_bound, 1);

    let mut cache = SeriesCache::new();
    let mut outcomes = Vec::with_capacity(points);
    for t in ctx.sample_points(seed, points)? {
        let connected = connected_bracket(&ctx, ks, None, &t)?;
        let membership =
            stable_span_membership(connected.series(), &basis, order, margin, &mut cache);
        outcomes.push(PointOutcome { point: t, membership });
    }

    let slices = sample_slices(&ctx, seed, 2)?;
    let profile = t12_profile(&ctx, ks, None, &slices)?;

    let verdict = if outcomes.iter().all(|o| o.membership.is_member()) && profile.consistent()
    {
        Conjecture3Verdict::Supported
    } else if outcomes
        .iter()
        .any(|o| matches!(o.membership, Membership::NotInSpan { .. } | Membership::Refuted(_)))
    {
        Conjecture3Verdict::Refuted
    } else {
        Conjecture3Verdict::Inconclusive
    };

    Ok(Conjecture3Report {
        insertion: ks.to_vec(),
        weight_bound,
        basis,
        order,
        margin,
        points: outcomes,
        profile,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::delta;

    #[test]
    fn ch0_is_minus_delta_times_the_weight_three_generator() {
        let report = conjecture3_test(&[0], 6, 4, 2, 23, 2).unwrap();
        assert!(report.is_supported());
        assert_eq!(report.weight_bound, 3);
        // Weight bound three leaves exactly the depth-one monomial Z(3).
        assert_eq!(report.basis.len(), 1);
        assert_eq!(report.basis[0].to_string(), "Z(3)");

        for outcome in &report.points {
            let cert = outcome.membership.certificate().expect("member");
            let coeff = cert.coefficient_of(&report.basis[0]).expect("Z(3) coefficient");
            let d = delta().evaluate(&outcome.point).unwrap();
            assert_eq!(coeff, &(-d));
        }
        assert_eq!(report.profile.depth_floor(), Some(1));
    }

    #[test]
    fn ch1_runs_against_the_weight_four_basis() {
        let report = conjecture3_test(&[1], 6, 4, 2, 31, 2).unwrap();
        assert_eq!(report.weight_bound, 4);
        // Generators Z(3) and its q-derivative, both depth one.
        let shown: Vec<String> = report.basis.iter().map(|l| l.to_string()).collect();
        assert!(shown.contains(&"Z(3)".to_string()), "{shown:?}");
        assert!(shown.contains(&"D Z(3)".to_string()), "{shown:?}");
        // The run is recorded either way; a supported verdict must come with
        // certificates at every point.
        if report.is_supported() {
            for outcome in &report.points {
                assert!(outcome.membership.certificate().is_some());
            }
        }
    }

    #[test]
    fn insufficient_order_is_rejected() {
        assert!(matches!(
            conjecture3_test(&[0], 4, 4, 2, 1, 1),
            Err(DtError::InsufficientOrder { needed: 6, have: 4 })
        ));
    }

    #[test]
    fn basis_weights_respect_the_bound() {
        let report = conjecture3_test(&[0, 0], 6, 4, 2, 51, 1).unwrap();
        assert_eq!(report.weight_bound, 4);
        for label in &report.basis {
            assert!(label.weight() <= 4);
            assert!(label.degree() >= 1);
        }
    }
}
