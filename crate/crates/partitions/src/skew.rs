//! Skew diagrams and the border-strip rank.
//!
//! The rank of a skew diagram is the least number of border strips (rim
//! hooks: connected, no 2x2 square) into which it decomposes, where every
//! intermediate removal leaves a valid skew diagram. The search is
//! exhaustive over removable strips with the results memoized; small shapes
//! only, exactness over cleverness.

use std::collections::HashMap;

use crate::partition2d::Partition2D;
use crate::PartitionError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewDiagram {
    outer: Partition2D,
    inner: Partition2D,
}

impl SkewDiagram {
    pub fn new(outer: Partition2D, inner: Partition2D) -> Result<Self, PartitionError> {
        if !inner.contained_in(&outer) {
            return Err(PartitionError::InnerNotContained);
        }
        Ok(Self { outer, inner })
    }

    pub fn straight(outer: Partition2D) -> Self {
        Self { outer, inner: Partition2D::empty() }
    }

    pub fn outer(&self) -> &Partition2D {
        &self.outer
    }

    pub fn inner(&self) -> &Partition2D {
        &self.inner
    }

    pub fn size(&self) -> u64 {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// 0-indexed cells of `outer` not in `inner`.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.outer.rows())
            .flat_map(|i| {
                (self.inner.row(i) as usize..self.outer.row(i) as usize).map(move |j| (i, j))
            })
            .collect()
    }

    pub fn conjugate(&self) -> Self {
        Self { outer: self.outer.conjugate(), inner: self.inner.conjugate() }
    }
}

/// Partitions `nu` with `inner <= nu < outer` such that `outer/nu` is a
/// border strip.
///
/// A strip occupying rows `r1..=r2` overlaps each consecutive row pair in
/// exactly one column, which forces `nu_i = outer_{i+1} - 1` inside the
/// range; only the start column of the last row is free.
fn strip_removals(outer: &Partition2D, inner: &Partition2D) -> Vec<Partition2D> {
    let mut out = Vec::new();
    let rows = outer.rows();
    for r2 in 0..rows {
        let lo = inner.row(r2).max(outer.row(r2 + 1));
        for last_start in lo..outer.row(r2) {
            for r1 in (0..=r2).rev() {
                // Rows r1..r2 take the forced value; reject when it dips
                // below the inner shape, and stop extending upward.
                if r1 < r2 && outer.row(r1 + 1) < inner.row(r1) + 1 {
                    break;
                }
                let mut parts: Vec<u32> = outer.parts().to_vec();
                for i in r1..r2 {
                    parts[i] = outer.row(i + 1) - 1;
                }
                parts[r2] = last_start;
                let nu = Partition2D::new(parts).expect("forced values stay decreasing");
                out.push(nu);
            }
        }
    }
    out
}

/// Minimal number of border strips decomposing the diagram.
pub fn skew_rank(diagram: &SkewDiagram) -> usize {
    fn solve(
        outer: &Partition2D,
        inner: &Partition2D,
        memo: &mut HashMap<Partition2D, usize>,
    ) -> usize {
        if outer == inner {
            return 0;
        }
        if let Some(&r) = memo.get(outer) {
            return r;
        }
        let best = strip_removals(outer, inner)
            .iter()
            .map(|nu| 1 + solve(nu, inner, memo))
            .min()
            .expect("a nonempty diagram always has a removable strip");
        memo.insert(outer.clone(), best);
        best
    }
    let mut memo = HashMap::new();
    solve(&diagram.outer, &diagram.inner, &mut memo)
}
