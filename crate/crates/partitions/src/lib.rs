//! Partitions in two and three dimensions.
//!
//! 2D partitions, skew diagrams with an exact border-strip (rim hook) rank,
//! and plane partitions with their level-set chains and total rank. The
//! rank searches are exhaustive and memoized; everything is exact and
//! intended for the small sizes that localization sums visit.

use thiserror::Error;

pub mod partition2d;
pub mod plane;
pub mod skew;

pub use partition2d::Partition2D;
pub use plane::{enumerate_pp, rank1_enumerate, LevelDecomposition, PlanePartition};
pub use skew::{skew_rank, SkewDiagram};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotWeaklyDecreasing(Vec<u32>),
    #[error("zero part before a positive one")]
    InteriorZero,
    #[error("inner shape is not contained in the outer shape")]
    InnerNotContained,
    #[error("height rows do not form a partition base")]
    RaggedHeights,
    #[error("zero height at cell ({0}, {1})")]
    ZeroHeight(usize, usize),
    #[error("heights must decrease weakly along rows and columns")]
    NonMonotoneHeights,
    #[error("box set is not closed downward")]
    NotBoxClosed,
}
