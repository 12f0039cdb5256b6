//! Rational evaluation points for the torus weights.

use std::fmt;

use exact_core::rational::{ratio, Rational};
use num_traits::Zero;

/// A rational point `(t1, t2, t3)` at which weight factorizations are
/// evaluated. Genericity (no tangent weight vanishing) is checked by the
/// localization context, not here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TPoint {
    t1: Rational,
    t2: Rational,
    t3: Rational,
}

impl TPoint {
    pub fn new(t1: Rational, t2: Rational, t3: Rational) -> Self {
        Self { t1, t2, t3 }
    }

    /// Convenience constructor from integer coordinates.
    pub fn from_integers(t1: i64, t2: i64, t3: i64) -> Self {
        Self::new(ratio(t1, 1), ratio(t2, 1), ratio(t3, 1))
    }

    pub fn t1(&self) -> &Rational {
        &self.t1
    }

    pub fn t2(&self) -> &Rational {
        &self.t2
    }

    pub fn t3(&self) -> &Rational {
        &self.t3
    }

    pub fn coords(&self) -> [&Rational; 3] {
        [&self.t1, &self.t2, &self.t3]
    }

    /// True when every coordinate is nonzero. A zero coordinate kills every
    /// monomial weight along that axis, so such points are never generic.
    pub fn has_nonzero_coords(&self) -> bool {
        !self.t1.is_zero() && !self.t2.is_zero() && !self.t3.is_zero()
    }

    /// Permute the coordinates: index `i` of the result reads coordinate
    /// `perm[i]` of `self`.
    pub fn permute(&self, perm: [usize; 3]) -> Self {
        let coords = self.coords();
        Self::new(coords[perm[0]].clone(), coords[perm[1]].clone(), coords[perm[2]].clone())
    }
}

impl fmt::Display for TPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.t1, self.t2, self.t3)
    }
}
