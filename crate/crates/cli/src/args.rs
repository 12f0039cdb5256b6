//! Command-line surface.
//!
//! A run is fully determined by the command, its flags, the seed, and the
//! cache state; nothing reads the clock or the environment beyond the
//! documented cache directory variable.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

pub const DEFAULT_SEED: u64 = 2026;

#[derive(Debug, Parser)]
#[command(
    name = "qzeta",
    version,
    about = "Exact workbench for multiple q-zeta values and equivariant point counts on affine 3-space"
)]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,

    /// Directory for the on-disk series cache; no caching when unset.
    #[arg(long, global = true, env = "QZETA_CACHE_DIR", value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,

    /// Also write the full JSON report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,

    /// Stdout rendering; csv covers flat coefficient tables only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Include wall-clock timing in the report (off keeps reports byte-stable).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Evaluate a multiple q-zeta series or a custom nested sum.
    Z(ZArgs),
    /// Expand a product of two values in the quasi-shuffle algebra and verify it.
    Stuffle(StuffleArgs),
    /// Linear-relation queries over monomials in the Z values.
    Relations {
        #[command(subcommand)]
        action: RelationsAction,
    },
    /// Filtered span dimensions by weight, with a stabilization reading.
    Dims(DimsArgs),
    /// Dimension battery against the conjectured generating function.
    Conjecture1(Conjecture1Args),
    /// Plane partition enumeration and rank statistics.
    Pp(PpArgs),
    /// Equivariant localization checks for points on affine 3-space.
    Dt {
        #[command(subcommand)]
        action: DtAction,
    },
    /// Evaluate the divergent expansion of Z(2k+1) near q = 1.
    Asymp(AsympArgs),
    /// Compare (1-q0)^weight Z(s)(q0) against its classical limit.
    Limit(LimitArgs),
    /// Inspect or clear the on-disk series cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Debug, Args)]
pub struct ZArgs {
    /// Composition, e.g. `Z(3,2,2)` or `3,2,2`.
    #[arg(long, value_name = "COMP", conflicts_with = "template")]
    pub s: Option<String>,

    /// Nested sum template, e.g. `num=x; den=2; L=n1 | num=x; den=2; L=n2`.
    #[arg(long, value_name = "TEMPLATE")]
    pub template: Option<String>,

    /// Sum template variables over independent ranges instead of a chain.
    #[arg(long)]
    pub free: bool,

    /// Truncation order (series through q^N).
    #[arg(long = "order", short = 'N', default_value_t = 200)]
    pub order: usize,

    /// Cross-check the evaluation against the direct nested enumeration.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Args)]
pub struct StuffleArgs {
    /// Left factor composition.
    #[arg(long, value_name = "COMP")]
    pub a: String,

    /// Right factor composition.
    #[arg(long, value_name = "COMP")]
    pub b: String,

    /// Verification order for the expansion.
    #[arg(long = "order", short = 'N', default_value_t = 50)]
    pub order: usize,
}

#[derive(Debug, Subcommand)]
pub enum RelationsAction {
    /// Seek one series inside a span of monomials in the Z values.
    Membership(MembershipArgs),
    /// Audit that q d/dq maps every monomial into the span two weights up.
    Closure(ClosureArgs),
}

#[derive(Debug, Args)]
pub struct MembershipArgs {
    /// Target composition, e.g. `Z(8)`.
    #[arg(long, value_name = "COMP")]
    pub target: String,

    /// Apply q d/dq to the target this many times first.
    #[arg(long, default_value_t = 0, value_name = "L")]
    pub derive: usize,

    /// Weight cap for the spanning monomials; default: target weight plus
    /// two per derivative.
    #[arg(long, value_name = "W")]
    pub max_weight: Option<u32>,

    /// Part range `lo,hi` for the compositions generating the span.
    #[arg(long, value_name = "LO,HI")]
    pub parts: Option<String>,

    /// Solve order.
    #[arg(long = "order", short = 'N', default_value_t = 200)]
    pub order: usize,

    /// Extra coefficients a candidate must also match.
    #[arg(long, default_value_t = 20)]
    pub margin: usize,

    /// Assert the expected outcome; the verdict fails when it differs.
    #[arg(long, value_enum, default_value_t = Expectation::Member)]
    pub expect: Expectation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Expectation {
    /// The target must lie in the span.
    Member,
    /// The target must escape the span.
    Absent,
}

#[derive(Debug, Args)]
pub struct ClosureArgs {
    /// Audit every monomial of weight up to this bound.
    #[arg(long, default_value_t = 6, value_name = "W")]
    pub max_weight: u32,

    /// Part range `lo,hi`; the default reaches two above the weight cap so
    /// the derivative spans include their top single values.
    #[arg(long, value_name = "LO,HI")]
    pub parts: Option<String>,

    /// Solve order.
    #[arg(long = "order", short = 'N', default_value_t = 80)]
    pub order: usize,

    /// Extra coefficients a candidate must also match.
    #[arg(long, default_value_t = 20)]
    pub margin: usize,
}

#[derive(Debug, Args)]
pub struct DimsArgs {
    /// Top weight of the profile.
    #[arg(long, default_value_t = 8, value_name = "W")]
    pub max_weight: u32,

    /// Rank order.
    #[arg(long = "order", short = 'N', default_value_t = 300)]
    pub order: usize,

    /// Stabilization order; default: order + 20.
    #[arg(long, value_name = "M")]
    pub check_order: Option<usize>,

    /// Span reading: monomials in the Z values, or single values only.
    #[arg(long, value_enum, default_value_t = Reading::Products)]
    pub reading: Reading,

    /// Part range `lo,hi`; default `2,max(2, max_weight)`.
    #[arg(long, value_name = "LO,HI")]
    pub parts: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Reading {
    Products,
    Singles,
}

#[derive(Debug, Args)]
pub struct Conjecture1Args {
    /// Top weight of the comparison.
    #[arg(long, default_value_t = 8, value_name = "W")]
    pub max_weight: u32,

    /// Rank order.
    #[arg(long = "order", short = 'N', default_value_t = 300)]
    pub order: usize,

    /// Stabilization order; default: order + 20.
    #[arg(long, value_name = "M")]
    pub check_order: Option<usize>,
}

#[derive(Debug, Args)]
pub struct PpArgs {
    /// Top size for the counting battery.
    #[arg(long, default_value_t = 10, value_name = "N")]
    pub max_n: u32,

    /// List every diagram of this size instead of running the battery.
    #[arg(long, value_name = "N")]
    pub list: Option<u32>,

    /// Report statistics for one diagram given as rows of heights, e.g. `2 1 / 1`.
    #[arg(long, value_name = "DIAGRAM", conflicts_with = "list")]
    pub diagram: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum DtAction {
    /// Verify a localization identity exactly.
    Verify(DtVerifyArgs),
    /// Span evidence for connected descendent series in the odd-weight algebra.
    Conjecture3(Conjecture3Args),
}

#[derive(Debug, Args)]
pub struct DtVerifyArgs {
    /// Which identity to check.
    #[arg(long, value_enum)]
    pub check: DtCheck,

    /// Largest box count entering the computation.
    #[arg(long, default_value_t = 5)]
    pub nmax: usize,

    /// Explicit torus weights `t1,t2,t3` (repeatable); sampled when absent.
    #[arg(long, value_name = "T1,T2,T3")]
    pub t: Vec<String>,

    /// Seed for sampled points.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Number of sampled points when no explicit point is given.
    #[arg(long, default_value_t = 3)]
    pub points: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DtCheck {
    /// Empty bracket against the closed product over delta powers.
    Vacuum,
    /// Normalized degree-zero descendent bracket against -delta Z(3).
    Ch0,
    /// Vanishing order along t1 + t2 equals the total rank, exhaustively.
    Ord,
    /// Rank-one limits against the signed reciprocal height.
    Rank1,
}

#[derive(Debug, Args)]
pub struct Conjecture3Args {
    /// Descendent indices of the insertion, e.g. `0` or `1,2`.
    #[arg(long, value_name = "K,K,...", default_value = "0")]
    pub ks: String,

    /// Largest box count entering the brackets.
    #[arg(long, default_value_t = 5)]
    pub nmax: usize,

    /// Membership order; default: nmax - margin.
    #[arg(long = "order", short = 'N')]
    pub order: Option<usize>,

    /// Extra coefficients a candidate must also match.
    #[arg(long, default_value_t = 2)]
    pub margin: usize,

    /// Seed for sampled points and slices.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Number of sampled evaluation points.
    #[arg(long, default_value_t = 2)]
    pub points: usize,
}

#[derive(Debug, Args)]
pub struct AsympArgs {
    /// Index k of the value Z(2k+1).
    #[arg(long, default_value_t = 1)]
    pub k: u32,

    /// Evaluation point in (0, 1).
    #[arg(long, default_value = "99/100", value_name = "Q0")]
    pub q0: String,

    /// Working precision in bits.
    #[arg(long, default_value_t = 256)]
    pub prec: u32,

    /// Largest truncation scanned for the optimum.
    #[arg(long, default_value_t = 40)]
    pub cap: usize,

    /// Significant digits the optimal truncation must reproduce.
    #[arg(long, default_value_t = 6)]
    pub min_digits: u32,
}

#[derive(Debug, Args)]
pub struct LimitArgs {
    /// Composition, e.g. `Z(3)`.
    #[arg(long, value_name = "COMP", default_value = "Z(3)")]
    pub s: String,

    /// Evaluation schedule approaching 1.
    #[arg(long, default_value = "9/10,99/100,999/1000", value_name = "Q0,Q0,...")]
    pub q0: String,

    /// Working precision in bits.
    #[arg(long, default_value_t = 256)]
    pub prec: u32,

    /// Relative gap the final point must beat.
    #[arg(long, default_value = "1/200", value_name = "GAP")]
    pub max_gap: String,
}

#[derive(Debug, Subcommand)]
pub enum CacheAction {
    /// Print the effective cache directory.
    Path,
    /// List stored entries.
    Ls,
    /// Remove every stored entry.
    Clear,
}
