//! Relation discovery among multiple q-zeta values.
//!
//! Everything here is exact. Series of labeled monomials (products of Z
//! values and their q-derivatives) become columns of rational matrices;
//! fraction-free elimination produces ranks, kernels, and membership
//! certificates valid through a stated truncation order. On top of that
//! sit the quasi-shuffle expansion of products, filtered dimension
//! profiles with a stabilization check, the conjectured graded dimensions
//! from their generating function, and audits for derivative closure,
//! parity homogeneity, and weight minimality.

pub mod audits;
pub mod cache;
pub mod dims;
pub mod hilbert;
pub mod labels;
pub mod matrix;
pub mod membership;
pub mod stuffle;

pub use audits::{
    derivative_closure, minimal_weight_audit, parity_audit, ClosureEntry, ClosureOutcome,
    ClosureReport, MinimalWeightReport, ParityEntry, ParityReport,
};
pub use cache::SeriesCache;
pub use dims::{filtered_dims, DimsError, FilteredDims, SpanReading};
pub use hilbert::{denominator_series, hilbert_coeffs, HilbertData};
pub use labels::{
    all_compositions, monomial_basis, oqz_basis, Generator, LabelError, MonomialLabel,
};
pub use matrix::{ExactMatrix, MatrixError, RankKernel};
pub use membership::{
    coefficient_matrix, relation_kernel, span_membership, stable_relation_kernel,
    stable_span_membership, CertificateStatus, Membership, RelationCertificate, StableKernel,
};
pub use stuffle::{diagonal_reduce, stuffle_product};
