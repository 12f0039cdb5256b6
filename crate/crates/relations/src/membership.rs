//! Finite-order relation certificates.
//!
//! A certificate never claims more than it checked: `candidate` means the
//! stated combination vanishes (or reproduces the target) through `q^N` for
//! the recorded N, and `refuted-at-order-M` means an earlier candidate
//! failed once more coefficients were compared. Truncation can fake a
//! relation but never hide one, so a failed solve is definitive: raising
//! the order only adds equations.

use std::fmt;

use exact_core::rational::{render_rational, Rational};
use exact_core::series::RationalSeries;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::cache::SeriesCache;
use crate::labels::MonomialLabel;
use crate::matrix::ExactMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateStatus {
    Candidate,
    RefutedAtOrder(usize),
}

impl fmt::Display for CertificateStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateStatus::Candidate => write!(f, "candidate"),
            CertificateStatus::RefutedAtOrder(m) => write!(f, "refuted-at-order-{m}"),
        }
    }
}

/// A linear combination of labeled series checked coefficientwise through
/// `q^verified_order`. Labels with zero coefficient are dropped, so the
/// support is exactly what is stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCertificate {
    labels: Vec<MonomialLabel>,
    coefficients: Vec<Rational>,
    verified_order: usize,
    status: CertificateStatus,
}

impl RelationCertificate {
    pub fn new(
        labels: Vec<MonomialLabel>,
        coefficients: Vec<Rational>,
        verified_order: usize,
        status: CertificateStatus,
    ) -> Self {
        assert_eq!(labels.len(), coefficients.len(), "one coefficient per label");
        let (labels, coefficients) = labels
            .into_iter()
            .zip(coefficients)
            .filter(|(_, c)| !c.is_zero())
            .unzip();
        Self { labels, coefficients, verified_order, status }
    }

    pub fn labels(&self) -> &[MonomialLabel] {
        &self.labels
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn verified_order(&self) -> usize {
        self.verified_order
    }

    pub fn status(&self) -> &CertificateStatus {
        &self.status
    }

    pub fn is_candidate(&self) -> bool {
        self.status == CertificateStatus::Candidate
    }

    /// Support is empty exactly when the certified combination is 0.
    pub fn is_trivial(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn coefficient_of(&self, label: &MonomialLabel) -> Option<&Rational> {
        self.labels.iter().position(|l| l == label).map(|i| &self.coefficients[i])
    }

    /// The combination as a series at the requested order.
    pub fn evaluate(&self, order: usize, cache: &mut SeriesCache) -> RationalSeries {
        let mut acc = RationalSeries::zero(order);
        for (label, coeff) in self.labels.iter().zip(&self.coefficients) {
            acc = acc.add(&cache.monomial_series(label, order).scale(coeff));
        }
        acc
    }

    pub fn to_json(&self) -> Value {
        json!({
            "labels": self.labels.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "coefficients": self.coefficients.iter().map(render_rational).collect::<Vec<_>>(),
            "verifiedOrder": self.verified_order,
            "status": self.status.to_string(),
        })
    }

    /// Human-readable combination, e.g. `Z(4) + 2*Z(2,2) - Z(2)^2`.
    pub fn render(&self) -> String {
        if self.labels.is_empty() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (i, (label, coeff)) in self.labels.iter().zip(&self.coefficients).enumerate() {
            let mag = coeff.abs();
            if i == 0 {
                if coeff.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if coeff.is_negative() { " - " } else { " + " });
            }
            if mag.is_one() {
                out.push_str(&label.to_string());
            } else {
                out.push_str(&format!("{}*{}", render_rational(&mag), label));
            }
        }
        out
    }
}

/// Rows are q-coefficients `0..=order`, one column per label.
pub fn coefficient_matrix(
    labels: &[MonomialLabel],
    order: usize,
    cache: &mut SeriesCache,
) -> ExactMatrix {
    let columns: Vec<Vec<Rational>> = labels
        .iter()
        .map(|l| cache.monomial_series(l, order).coeffs().to_vec())
        .collect();
    ExactMatrix::from_columns(&columns).expect("columns share the order")
}

/// Exact coefficients expressing `target` in the span of `basis` through
/// `q^order`, or `None` if the truncated system is inconsistent (which no
/// higher order can repair).
pub fn span_membership(
    target: &RationalSeries,
    basis: &[MonomialLabel],
    order: usize,
    cache: &mut SeriesCache,
) -> Option<RelationCertificate> {
    let mut columns: Vec<Vec<Rational>> = basis
        .iter()
        .map(|l| cache.monomial_series(l, order).coeffs().to_vec())
        .collect();
    let target = target.truncate(order);
    assert!(target.order() >= order, "target series is too short for the requested order");
    columns.push(target.coeffs().to_vec());
    let matrix = ExactMatrix::from_columns(&columns).expect("columns share the order");
    let kernel = matrix.rank_kernel().kernel;
    let last = basis.len();
    let witness = kernel.iter().find(|v| !v[last].is_zero())?;
    let coefficients: Vec<Rational> =
        witness[..last].iter().map(|c| -c / &witness[last]).collect();
    Some(RelationCertificate::new(
        basis.to_vec(),
        coefficients,
        order,
        CertificateStatus::Candidate,
    ))
}

/// Outcome of a stabilized membership test.
#[derive(Debug, Clone)]
pub enum Membership {
    /// Expressed in the basis and re-verified at the higher order.
    Member(RelationCertificate),
    /// The linear system is inconsistent at this order; definitive.
    NotInSpan { order: usize },
    /// A candidate at the lower order failed the recheck and no solution
    /// exists at the higher order.
    Refuted(RelationCertificate),
}

impl Membership {
    pub fn certificate(&self) -> Option<&RelationCertificate> {
        match self {
            Membership::Member(c) | Membership::Refuted(c) => Some(c),
            Membership::NotInSpan { .. } => None,
        }
    }

    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }
}

/// Solves at `order`, then re-verifies the coefficients against `margin`
/// extra q-coefficients. `target` must carry at least `order + margin`
/// coefficients.
pub fn stable_span_membership(
    target: &RationalSeries,
    basis: &[MonomialLabel],
    order: usize,
    margin: usize,
    cache: &mut SeriesCache,
) -> Membership {
    let high = order + margin;
    assert!(target.order() >= high, "target needs {high} coefficients for the recheck");
    let Some(cert) = span_membership(target, basis, order, cache) else {
        return Membership::NotInSpan { order };
    };
    let residual = target.truncate(high).sub(&cert.evaluate(high, cache));
    if residual.is_zero() {
        return Membership::Member(RelationCertificate::new(
            cert.labels.clone(),
            cert.coefficients.clone(),
            high,
            CertificateStatus::Candidate,
        ));
    }
    match span_membership(target, basis, high, cache) {
        Some(better) => Membership::Member(better),
        None => Membership::Refuted(RelationCertificate::new(
            cert.labels.clone(),
            cert.coefficients.clone(),
            order,
            CertificateStatus::RefutedAtOrder(high),
        )),
    }
}

/// Rank of the label matrix and one candidate relation per kernel vector,
/// verified through `q^order`.
pub fn relation_kernel(
    labels: &[MonomialLabel],
    order: usize,
    cache: &mut SeriesCache,
) -> (usize, Vec<RelationCertificate>) {
    let rk = coefficient_matrix(labels, order, cache).rank_kernel();
    let certificates = rk
        .kernel
        .into_iter()
        .map(|v| {
            RelationCertificate::new(labels.to_vec(), v, order, CertificateStatus::Candidate)
        })
        .collect();
    (rk.rank, certificates)
}

/// Kernel with a stabilization check: certificates are emitted only when
/// the rank agrees between `order` and `order + margin`, and they are the
/// higher-order kernel, so each one is verified through `q^(order+margin)`.
#[derive(Debug)]
pub struct StableKernel {
    pub rank: usize,
    pub stabilized: bool,
    pub certificates: Vec<RelationCertificate>,
}

pub fn stable_relation_kernel(
    labels: &[MonomialLabel],
    order: usize,
    margin: usize,
    cache: &mut SeriesCache,
) -> StableKernel {
    let high = order + margin;
    let (rank_high, certificates) = relation_kernel(labels, high, cache);
    let rank_low = coefficient_matrix(labels, order, cache).rank_kernel().rank;
    let stabilized = rank_low == rank_high;
    StableKernel {
        rank: rank_high,
        stabilized,
        certificates: if stabilized { certificates } else { Vec::new() },
    }
}
