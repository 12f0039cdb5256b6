//! Index compositions for multiple q-zeta values.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CompositionError {
    #[error("a composition needs at least one part")]
    Empty,
    #[error("part {value} at position {position} is below 2; every index part must be at least 2 (a part of 1 makes the coefficientwise sum divergent)")]
    PartTooSmall { position: usize, value: u32 },
}

/// The index `s = (s_1, ..., s_k)` of a multiple q-zeta value, all parts >= 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self, CompositionError> {
        if parts.is_empty() {
            return Err(CompositionError::Empty);
        }
        for (position, &value) in parts.iter().enumerate() {
            if value < 2 {
                return Err(CompositionError::PartTooSmall { position, value });
            }
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    pub fn odd_count(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// Lowest exponent with a nonzero coefficient in the q-expansion: the
    /// chain `n_i = k - i + 1` minimizes `sum n_i * floor(s_i / 2)`.
    pub fn min_valuation(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &s)| (self.depth() - i) * (s as usize / 2))
            .sum()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "Z({})", parts.join(","))
    }
}
