//! Structural audits over discovered relations.
//!
//! Three checks: the span of monomials is stable under `q d/dq` (which
//! raises weight by two), every relation is supported on a single weight
//! parity, and no `Z(s)` falls into the span of strictly smaller weight.
//! Each audit reports per-item outcomes; nothing is assumed.

use qzeta::Composition;

use crate::cache::SeriesCache;
use crate::labels::{monomial_basis, LabelError, MonomialLabel};
use crate::membership::{
    span_membership, stable_span_membership, Membership, RelationCertificate,
};

/// One monomial's derivative, located (or not) in the span two weights up.
#[derive(Debug)]
pub struct ClosureEntry {
    pub label: MonomialLabel,
    pub weight: u32,
    pub outcome: ClosureOutcome,
}

#[derive(Debug)]
pub enum ClosureOutcome {
    /// The derivative is identically zero (the constant monomial).
    ZeroDerivative,
    Expressed(RelationCertificate),
    NotInSpan { order: usize },
    Refuted(RelationCertificate),
}

#[derive(Debug)]
pub struct ClosureReport {
    pub order: usize,
    pub margin: usize,
    pub entries: Vec<ClosureEntry>,
}

impl ClosureReport {
    pub fn all_closed(&self) -> bool {
        self.entries.iter().all(|e| {
            matches!(e.outcome, ClosureOutcome::ZeroDerivative | ClosureOutcome::Expressed(_))
        })
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClosureEntry> {
        self.entries.iter().filter(|e| {
            !matches!(e.outcome, ClosureOutcome::ZeroDerivative | ClosureOutcome::Expressed(_))
        })
    }
}

/// For every monomial of weight `w <= max_weight` in parts `[lo, hi]`,
/// seeks `q d/dq` of its series in the weight `w + 2` span.
pub fn derivative_closure(
    max_weight: u32,
    lo: u32,
    hi: u32,
    order: usize,
    margin: usize,
    cache: &mut SeriesCache,
) -> Result<ClosureReport, LabelError> {
    let labels = monomial_basis(max_weight, lo, hi)?;
    let mut entries = Vec::with_capacity(labels.len());
    for label in labels {
        let weight = label.weight();
        let outcome = if label.is_one() {
            ClosureOutcome::ZeroDerivative
        } else {
            let target = cache.monomial_series(&label, order + margin).q_derive();
            let basis = monomial_basis(weight + 2, lo, hi)?;
            match stable_span_membership(&target, &basis, order, margin, cache) {
                Membership::Member(cert) => ClosureOutcome::Expressed(cert),
                Membership::NotInSpan { order } => ClosureOutcome::NotInSpan { order },
                Membership::Refuted(cert) => ClosureOutcome::Refuted(cert),
            }
        };
        entries.push(ClosureEntry { label, weight, outcome });
    }
    Ok(ClosureReport { order, margin, entries })
}

/// Weight-parity homogeneity of a relation's support.
#[derive(Debug)]
pub struct ParityEntry {
    pub weights: Vec<u32>,
    pub homogeneous: bool,
}

#[derive(Debug)]
pub struct ParityReport {
    pub entries: Vec<ParityEntry>,
}

impl ParityReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.homogeneous)
    }
}

/// Checks each relation is supported on monomials of one weight parity.
pub fn parity_audit(certificates: &[RelationCertificate]) -> ParityReport {
    let entries = certificates
        .iter()
        .map(|cert| {
            let weights: Vec<u32> = cert.labels().iter().map(MonomialLabel::weight).collect();
            let homogeneous = weights.windows(2).all(|w| w[0] % 2 == w[1] % 2);
            ParityEntry { weights, homogeneous }
        })
        .collect();
    ParityReport { entries }
}

/// Whether `Z(s)` escapes the span of monomials of weight `< weight(s)`.
#[derive(Debug)]
pub struct MinimalWeightReport {
    pub composition: Composition,
    pub order: usize,
    /// `None` means the audit passed: no smaller-weight expression exists.
    pub expression: Option<RelationCertificate>,
}

impl MinimalWeightReport {
    pub fn passes(&self) -> bool {
        self.expression.is_none()
    }
}

pub fn minimal_weight_audit(
    s: &Composition,
    order: usize,
    cache: &mut SeriesCache,
) -> MinimalWeightReport {
    let below = s.weight() - 1;
    let basis = monomial_basis(below, 2, below.max(2)).expect("valid range by construction");
    let target = cache.zeta_series(s, order);
    let expression = span_membership(&target, &basis, order, cache);
    MinimalWeightReport { composition: s.clone(), order, expression }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labels::Generator;
    use crate::membership::{relation_kernel, CertificateStatus};
    use exact_core::rational::rat;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn z(parts: &[u32]) -> MonomialLabel {
        MonomialLabel::single(Generator::zeta(comp(parts)))
    }

    #[test]
    fn weight_two_closure_succeeds() {
        let mut cache = SeriesCache::new();
        let report = derivative_closure(2, 2, 5, 30, 20, &mut cache).unwrap();
        assert_eq!(report.entries.len(), 2);
        assert!(report.all_closed());
        let z2 = report
            .entries
            .iter()
            .find(|e| e.label == z(&[2]))
            .expect("Z(2) is in the weight-2 basis");
        let ClosureOutcome::Expressed(cert) = &z2.outcome else {
            panic!("expected an expression for the derivative of Z(2)");
        };
        // The weight-4 basis is over-complete (it contains one relation),
        // so only the reproduced series is pinned, not the coefficients.
        let reproduced = cert.evaluate(50, &mut cache);
        let target = cache.zeta_series(&comp(&[2]), 50).q_derive();
        assert!(reproduced.sub(&target).is_zero());
        assert!(cert.labels().iter().all(|l| l.weight() <= 4));
        let one = report.entries.iter().find(|e| e.label.is_one()).unwrap();
        assert!(matches!(one.outcome, ClosureOutcome::ZeroDerivative));
    }

    #[test]
    fn weight_three_closure_reports_an_outcome() {
        // No expected value here: the report must complete and classify the
        // derivative of Z(3) one way or the other.
        let mut cache = SeriesCache::new();
        let report = derivative_closure(3, 2, 5, 40, 20, &mut cache).unwrap();
        let entry = report.entries.iter().find(|e| e.label == z(&[3])).unwrap();
        match &entry.outcome {
            ClosureOutcome::Expressed(cert) => assert!(cert.is_candidate()),
            ClosureOutcome::NotInSpan { order } => assert_eq!(*order, 40),
            other => panic!("unexpected outcome {other:?}"),
        }
    }

    #[test]
    fn discovered_relations_have_homogeneous_parity() {
        let mut cache = SeriesCache::new();
        let labels = vec![
            z(&[4]),
            z(&[6]),
            z(&[3, 3]),
            MonomialLabel::new(vec![
                Generator::zeta(comp(&[3])),
                Generator::zeta(comp(&[3])),
            ]),
        ];
        let (rank, certs) = relation_kernel(&labels, 40, &mut cache);
        assert_eq!(rank, 3);
        assert_eq!(certs.len(), 1);
        // Z(3)^2 = 2 Z(3,3) + Z(4) + 4 Z(6): support weights 4, 6, 6, 6.
        let report = parity_audit(&certs);
        assert!(report.all_pass());
        assert_eq!(report.entries[0].weights.len(), 4);
    }

    #[test]
    fn mixed_parity_is_flagged() {
        let fabricated = RelationCertificate::new(
            vec![z(&[2]), z(&[3])],
            vec![rat(1), rat(-1)],
            10,
            CertificateStatus::Candidate,
        );
        let report = parity_audit(&[fabricated]);
        assert!(!report.all_pass());
        assert_eq!(report.entries[0].weights, vec![2, 3]);
    }

    #[test]
    fn single_values_escape_smaller_weight_spans() {
        let mut cache = SeriesCache::new();
        for parts in [&[2][..], &[4][..], &[2, 3][..]] {
            let report = minimal_weight_audit(&comp(parts), 100, &mut cache);
            assert!(report.passes(), "Z{parts:?} should not drop weight");
        }
    }
}
