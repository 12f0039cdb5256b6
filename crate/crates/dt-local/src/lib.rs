//! Equivariant localization on affine 3-space with its torus action.
//!
//! Monomial ideals are indexed by plane partitions; each fixed point carries
//! a virtual tangent character whose Euler class is kept as a factored
//! product of integer linear forms in the torus weights. On top of that sit
//! descendent brackets (localization q-series at a rational torus point),
//! their connected versions, rank-one limits, vanishing-order profiles along
//! `t1 + t2 = 0`, and span tests of connected brackets against the odd
//! q-zeta generator algebra.
//!
//! Contributions are never expanded into polynomials: divisibility and
//! limit questions are answered on the factored form or on truncated Laurent
//! jets, and series identities are checked at sampled generic points.

pub mod bracket;
pub mod character;
pub mod conjecture3;
pub mod connected;
pub mod descendents;
pub mod form;
pub mod jets;
pub mod point;
pub mod weights;

pub use bracket::{normalize, BracketSeries, LocalizationContext};
pub use character::{character_of, virtual_tangent, Character};
pub use conjecture3::{
    conjecture3_test, Conjecture3Report, Conjecture3Verdict, PointOutcome,
};
pub use connected::{connected_bracket, cumulant_combination, set_partitions};
pub use descendents::{box_weight, descendent_value, insertion_value};
pub use form::LinearForm;
pub use jets::{
    bracket_jet_series, connected_jet_bracket, contribution_jet, descendent_jet, form_jet,
    sample_slices, slice_is_generic, t12_profile, CoefficientOrder, JetOrder, SJet,
    SlicePoint, T12Profile, JET_WIDTH,
};
pub use point::TPoint;
pub use weights::{contribution, delta, rank1_limit, rational_power, WeightFactorization};

use thiserror::Error;

/// Failures of localization computations.
#[derive(Debug, Error)]
pub enum DtError {
    /// A tangent character term with zero exponent vector: its weight
    /// vanishes identically and the Euler class is undefined.
    #[error("virtual tangent character has a fixed (zero weight) term")]
    ZeroTangentWeight,

    /// The tangent character must have virtual rank zero.
    #[error("virtual tangent character has rank {rank}, expected zero")]
    VirtualRankNonzero { rank: i64 },

    /// Exact evaluation hit `0^negative`.
    #[error("zero raised to a negative power")]
    ZeroToNegativePower,

    /// A denominator weight vanishes at the evaluation point.
    #[error("weight form {form} vanishes at the evaluation point")]
    DegeneratePoint { form: LinearForm },

    /// A denominator weight vanishes identically on the slice at this
    /// sample point.
    #[error("weight form {form} vanishes on the slice t2 = -t1 + s at this sample point")]
    DegenerateSlice { form: LinearForm },

    /// The rank-one limit needs a simple zero along `t1 + t2 = 0`.
    #[error("order along t1 + t2 = 0 is {found}, the rank-one limit needs exactly 1")]
    T12OrderNotOne { found: i64 },

    /// The rank-one limit must be scale invariant.
    #[error("slice of the contribution has total degree {degree}, expected zero")]
    NonzeroTotalDegree { degree: i64 },

    /// Leftover `t3` weight after the prefactor cancellation.
    #[error("residual t3 multiplicity {multiplicity} in the rank-one limit")]
    ResidualThirdWeight { multiplicity: i64 },

    /// Series from different torus points cannot be combined.
    #[error("bracket series were evaluated at different points")]
    PointMismatch,

    /// Rejection sampling did not find a generic point.
    #[error("no generic point found after {attempts} attempts")]
    SamplingFailed { attempts: usize },

    /// The localization order cannot support the requested check.
    #[error("check needs {needed} q-coefficients but only {have} were computed")]
    InsufficientOrder { needed: usize, have: usize },

    /// Truncated series arithmetic failed (non-unit constant term).
    #[error(transparent)]
    Series(#[from] exact_core::series::SeriesError),
}
