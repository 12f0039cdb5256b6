//! Filtered dimension profiles.
//!
//! `D_w` is the exact rank of the coefficient matrix of all admissible
//! labels of weight at most `w`, truncated at `q^order`. The graded numbers
//! reported are first differences of the filtered ranks; no grading is
//! assumed. Two readings of "spanned by" are supported: products of Z
//! values, or single Z values plus constants.

use thiserror::Error;

use crate::cache::SeriesCache;
use crate::labels::{all_compositions, monomial_basis, Generator, LabelError, MonomialLabel};
use crate::membership::coefficient_matrix;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DimsError {
    #[error("check order {check_order} must exceed the base order {order}")]
    BadOrders { order: usize, check_order: usize },
    #[error(transparent)]
    Label(#[from] LabelError),
}

/// Which set of series spans the weight-w subspace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpanReading {
    /// Monomials in the Z values: the subalgebra they generate.
    Products,
    /// Single Z values and the constant 1 only.
    SinglesOnly,
}

impl SpanReading {
    pub fn labels(self, weight: u32, lo: u32, hi: u32) -> Result<Vec<MonomialLabel>, LabelError> {
        match self {
            SpanReading::Products => monomial_basis(weight, lo, hi),
            SpanReading::SinglesOnly => {
                if lo < 2 || hi < lo {
                    return Err(LabelError::BadPartsRange(lo, hi));
                }
                let mut labels = vec![MonomialLabel::one()];
                labels.extend(
                    all_compositions(weight, lo, hi)
                        .into_iter()
                        .map(|c| MonomialLabel::single(Generator::Zeta(c))),
                );
                Ok(labels)
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct FilteredDims {
    pub reading: SpanReading,
    pub order: usize,
    pub check_order: usize,
    /// `dims[w]` is the rank of the weight-`<= w` label matrix at `order`.
    pub dims: Vec<usize>,
    /// Whether the rank at `order` matches the rank at `check_order`.
    pub stabilized: Vec<bool>,
    /// First differences of `dims`; `gr_dims[0] = dims[0]`.
    pub gr_dims: Vec<usize>,
}

impl FilteredDims {
    pub fn all_stabilized(&self) -> bool {
        self.stabilized.iter().all(|&s| s)
    }
}

pub fn filtered_dims(
    max_weight: u32,
    lo: u32,
    hi: u32,
    order: usize,
    check_order: usize,
    reading: SpanReading,
    cache: &mut SeriesCache,
) -> Result<FilteredDims, DimsError> {
    if check_order <= order {
        return Err(DimsError::BadOrders { order, check_order });
    }
    let mut dims = Vec::with_capacity(max_weight as usize + 1);
    let mut stabilized = Vec::with_capacity(max_weight as usize + 1);
    for w in 0..=max_weight {
        let labels = reading.labels(w, lo, hi)?;
        let rank_low = coefficient_matrix(&labels, order, cache).rank_kernel().rank;
        let rank_high = coefficient_matrix(&labels, check_order, cache).rank_kernel().rank;
        dims.push(rank_low);
        stabilized.push(rank_low == rank_high);
    }
    let gr_dims = dims
        .iter()
        .enumerate()
        .map(|(w, &d)| if w == 0 { d } else { d - dims[w - 1] })
        .collect();
    Ok(FilteredDims { reading, order, check_order, dims, stabilized, gr_dims })
}
