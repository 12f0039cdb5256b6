//! Integer partitions as weakly decreasing part lists.

use std::fmt;

use crate::PartitionError;

/// Canonical form: strictly positive parts, weakly decreasing, no trailing
/// zeros stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition2D {
    parts: Vec<u32>,
}

impl Partition2D {
    /// Trailing zeros are stripped; an increase anywhere is an error.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotWeaklyDecreasing(parts));
        }
        if parts.contains(&0) {
            return Err(PartitionError::InteriorZero);
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Length of row `i`, zero beyond the last row.
    pub fn row(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Rowwise containment: `self` fits inside `other`.
    pub fn contained_in(&self, other: &Self) -> bool {
        self.parts.iter().enumerate().all(|(i, &p)| p <= other.row(i))
    }

    /// 0-indexed cells `(row, col)`.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j)))
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        (j as u32) < self.row(i)
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.row(0) as usize;
        let parts = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&p| p as usize > j).count() as u32)
            .collect();
        Self { parts }
    }

    /// Side of the largest square fitting in the diagram.
    pub fn durfee_side(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p as usize > i)
            .count()
    }

    /// `true` when the shape is `(a, 1, 1, ..., 1)`; the empty shape is not
    /// a hook.
    pub fn is_hook(&self) -> bool {
        !self.parts.is_empty() && self.parts.iter().skip(1).all(|&p| p == 1)
    }

    /// All partitions of `n` in lexicographically decreasing order.
    pub fn enumerate(n: u32) -> Vec<Partition2D> {
        fn extend(remaining: u32, cap: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition2D>) {
            if remaining == 0 {
                out.push(Partition2D { parts: acc.clone() });
                return;
            }
            for p in (1..=cap.min(remaining)).rev() {
                acc.push(p);
                extend(remaining - p, p, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        extend(n, n.max(1), &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition2D {
        Partition2D::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn canonical_form() {
        assert_eq!(p(&[3, 2, 0, 0]).parts(), &[3, 2]);
        assert!(Partition2D::new(vec![2, 3]).is_err());
        assert!(Partition2D::new(vec![2, 0, 1]).is_err());
        assert!(p(&[]).is_empty());
        assert_eq!(p(&[4, 2, 1]).size(), 7);
    }

    #[test]
    fn conjugation_is_an_involution() {
        for n in 0..=8u32 {
            for lambda in Partition2D::enumerate(n) {
                let twice = lambda.conjugate().conjugate();
                assert_eq!(twice, lambda);
                assert_eq!(lambda.conjugate().size(), lambda.size());
            }
        }
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
    }

    #[test]
    fn enumeration_counts_match_euler() {
        // Partition numbers 1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42.
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(Partition2D::enumerate(n as u32).len(), count, "p({n})");
        }
    }

    #[test]
    fn durfee_sides() {
        assert_eq!(Partition2D::empty().durfee_side(), 0);
        assert_eq!(p(&[1]).durfee_side(), 1);
        assert_eq!(p(&[2, 2]).durfee_side(), 2);
        assert_eq!(p(&[5, 1, 1]).durfee_side(), 1);
        assert_eq!(p(&[4, 3, 3, 2]).durfee_side(), 3);
    }

    #[test]
    fn hooks_and_containment() {
        assert!(p(&[3, 1, 1]).is_hook());
        assert!(p(&[1]).is_hook());
        assert!(!p(&[2, 2]).is_hook());
        assert!(!Partition2D::empty().is_hook());
        assert!(p(&[2, 1]).contained_in(&p(&[3, 1])));
        assert!(!p(&[2, 2]).contained_in(&p(&[3, 1])));
    }
}
