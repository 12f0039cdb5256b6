//! Plane partitions: monotone height functions over a 2D base.

use std::collections::BTreeSet;
use std::fmt;

use crate::partition2d::Partition2D;
use crate::skew::{skew_rank, SkewDiagram};
use crate::PartitionError;

/// Heights `pi[i][j] >= 1` on the cells of `base`, weakly decreasing along
/// rows and columns. The size is the number of stacked boxes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanePartition {
    base: Partition2D,
    heights: Vec<Vec<u32>>,
}

impl PlanePartition {
    pub fn new(heights: Vec<Vec<u32>>) -> Result<Self, PartitionError> {
        let base = Partition2D::new(heights.iter().map(|r| r.len() as u32).collect())
            .map_err(|_| PartitionError::RaggedHeights)?;
        if base.rows() != heights.len() {
            // A trailing empty row was stripped by the base constructor.
            return Err(PartitionError::RaggedHeights);
        }
        for (i, row) in heights.iter().enumerate() {
            for (j, &h) in row.iter().enumerate() {
                if h == 0 {
                    return Err(PartitionError::ZeroHeight(i, j));
                }
                if j + 1 < row.len() && row[j + 1] > h {
                    return Err(PartitionError::NonMonotoneHeights);
                }
                if let Some(below) = heights.get(i + 1).and_then(|r| r.get(j)) {
                    if *below > h {
                        return Err(PartitionError::NonMonotoneHeights);
                    }
                }
            }
        }
        Ok(Self { base, heights })
    }

    pub fn empty() -> Self {
        Self { base: Partition2D::empty(), heights: Vec::new() }
    }

    pub fn base(&self) -> &Partition2D {
        &self.base
    }

    pub fn heights(&self) -> &[Vec<u32>] {
        &self.heights
    }

    pub fn height(&self, i: usize, j: usize) -> u32 {
        self.heights.get(i).and_then(|r| r.get(j)).copied().unwrap_or(0)
    }

    pub fn size(&self) -> u64 {
        self.heights.iter().flatten().map(|&h| u64::from(h)).sum()
    }

    pub fn max_height(&self) -> u32 {
        self.heights.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    /// 0-indexed boxes `(i, j, k)` with `k < height(i, j)`.
    pub fn boxes(&self) -> Vec<(u32, u32, u32)> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for (i, row) in self.heights.iter().enumerate() {
            for (j, &h) in row.iter().enumerate() {
                for k in 0..h {
                    out.push((i as u32, j as u32, k));
                }
            }
        }
        out
    }

    /// Rebuilds a plane partition from a set of boxes; fails unless the set
    /// is closed downward in all three directions.
    pub fn from_boxes(boxes: &BTreeSet<(u32, u32, u32)>) -> Result<Self, PartitionError> {
        let rows = boxes.iter().map(|&(i, _, _)| i + 1).max().unwrap_or(0);
        let mut heights = vec![Vec::new(); rows as usize];
        for i in 0..rows {
            let cols = boxes
                .iter()
                .filter(|&&(bi, _, _)| bi == i)
                .map(|&(_, j, _)| j + 1)
                .max()
                .unwrap_or(0);
            for j in 0..cols {
                let h = boxes.iter().filter(|&&(bi, bj, _)| bi == i && bj == j).count() as u32;
                // Downward closure in k means the count is the height.
                let closed = (0..h).all(|k| boxes.contains(&(i, j, k)));
                if !closed {
                    return Err(PartitionError::NotBoxClosed);
                }
                heights[i as usize].push(h);
            }
        }
        Self::new(heights).map_err(|_| PartitionError::NotBoxClosed)
    }

    /// Applies a permutation of the three axes to the box set.
    pub fn permute_axes(&self, perm: [usize; 3]) -> Result<Self, PartitionError> {
        let boxes: BTreeSet<(u32, u32, u32)> = self
            .boxes()
            .into_iter()
            .map(|b| {
                let b = [b.0, b.1, b.2];
                (b[perm[0]], b[perm[1]], b[perm[2]])
            })
            .collect();
        Self::from_boxes(&boxes)
    }

    /// Superlevel partitions `level(c) = {(i,j) : height >= c}` for
    /// `c = 1..=max_height`, a weakly decreasing chain.
    pub fn level_sets(&self) -> LevelDecomposition {
        let levels = (1..=self.max_height())
            .map(|c| {
                Partition2D::new(
                    self.heights
                        .iter()
                        .map(|row| row.iter().take_while(|&&h| h >= c).count() as u32)
                        .collect(),
                )
                .expect("superlevel rows stay weakly decreasing")
            })
            .collect();
        LevelDecomposition { levels }
    }

    /// Sum of border-strip ranks over the level quotients.
    pub fn total_rank(&self) -> usize {
        let chain = self.level_sets();
        let mut rank = 0;
        for c in 0..chain.levels.len() {
            let inner = chain.levels.get(c + 1).cloned().unwrap_or_else(Partition2D::empty);
            let quotient = SkewDiagram::new(chain.levels[c].clone(), inner)
                .expect("level sets are nested");
            rank += skew_rank(&quotient);
        }
        rank
    }
}

impl fmt::Display for PlanePartition {
    /// Rows of heights separated by slashes, e.g. `2 1 / 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.heights.is_empty() {
            return write!(f, "-");
        }
        let rows: Vec<String> = self
            .heights
            .iter()
            .map(|row| {
                row.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
            })
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelDecomposition {
    levels: Vec<Partition2D>,
}

impl LevelDecomposition {
    pub fn levels(&self) -> &[Partition2D] {
        &self.levels
    }

    pub fn total_size(&self) -> u64 {
        self.levels.iter().map(Partition2D::size).sum()
    }
}

/// Every plane partition of size `n`, exactly once, by recursive height
/// assignment over each base shape.
pub fn enumerate_pp(n: u32) -> Vec<PlanePartition> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(PlanePartition::empty());
        return out;
    }
    for cells in 1..=n {
        for base in Partition2D::enumerate(cells) {
            assign_heights(&base, n, &mut out);
        }
    }
    out
}

/// Monotone heights >= 1 on `base` summing to `total`, row-major with
/// pruning by the remaining cell count.
fn assign_heights(base: &Partition2D, total: u32, out: &mut Vec<PlanePartition>) {
    let cells: Vec<(usize, usize)> = base.cells().collect();
    let mut heights: Vec<Vec<u32>> =
        base.parts().iter().map(|&p| vec![0; p as usize]).collect();
    fn extend(
        cells: &[(usize, usize)],
        idx: usize,
        remaining: u32,
        heights: &mut Vec<Vec<u32>>,
        out: &mut Vec<PlanePartition>,
    ) {
        let left = (cells.len() - idx) as u32;
        if left == 0 {
            if remaining == 0 {
                out.push(
                    PlanePartition::new(heights.clone()).expect("construction is monotone"),
                );
            }
            return;
        }
        if remaining < left {
            return;
        }
        let (i, j) = cells[idx];
        let cap_row = if j > 0 { heights[i][j - 1] } else { u32::MAX };
        let cap_col = if i > 0 { heights[i - 1][j] } else { u32::MAX };
        // Later cells each need at least one box.
        let cap_budget = remaining - (left - 1);
        let cap = cap_row.min(cap_col).min(cap_budget);
        for h in 1..=cap {
            heights[i][j] = h;
            extend(cells, idx + 1, remaining - h, heights, out);
        }
        heights[i][j] = 0;
    }
    extend(&cells, 0, total, &mut heights, out);
}

/// All plane partitions of size `n` with total rank 1, each tagged with its
/// constant height: a hook base under a constant height `c` dividing `n`.
pub fn rank1_enumerate(n: u32) -> Vec<(PlanePartition, u32)> {
    let mut out = Vec::new();
    for c in 1..=n {
        if n % c != 0 {
            continue;
        }
        let cells = n / c;
        for arm in 1..=cells {
            let mut parts = vec![arm];
            parts.extend(std::iter::repeat(1).take((cells - arm) as usize));
            let base = Partition2D::new(parts).expect("hooks are partitions");
            let heights = base.parts().iter().map(|&p| vec![c; p as usize]).collect();
            let pp = PlanePartition::new(heights).expect("constant heights are monotone");
            out.push((pp, c));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn pp(heights: &[&[u32]]) -> PlanePartition {
        PlanePartition::new(heights.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn validation_rejects_bad_heights() {
        assert!(PlanePartition::new(vec![vec![1, 2]]).is_err());
        assert!(PlanePartition::new(vec![vec![1], vec![2]]).is_err());
        assert!(PlanePartition::new(vec![vec![2, 0]]).is_err());
        assert!(PlanePartition::new(vec![vec![1], vec![1, 1]]).is_err());
        assert!(PlanePartition::new(vec![vec![2, 1], vec![1]]).is_ok());
    }

    #[test]
    fn counts_match_the_macmahon_product() {
        // Coefficients of prod (1-q^m)^(-m).
        let expected = [1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(enumerate_pp(n as u32).len(), count, "pp({n})");
        }
    }

    #[test]
    fn enumeration_is_duplicate_free() {
        for n in 0..=7u32 {
            let all = enumerate_pp(n);
            let set: BTreeSet<_> = all.iter().cloned().collect();
            assert_eq!(set.len(), all.len());
            assert!(all.iter().all(|p| p.size() == u64::from(n)));
        }
    }

    #[test]
    fn level_sets_read_off_heights() {
        let single = pp(&[&[1]]);
        assert_eq!(single.level_sets().levels(), &[Partition2D::new(vec![1]).unwrap()]);

        let two_one = pp(&[&[2, 1]]);
        let chain = two_one.level_sets();
        assert_eq!(
            chain.levels(),
            &[Partition2D::new(vec![2]).unwrap(), Partition2D::new(vec![1]).unwrap()]
        );
        assert_eq!(chain.total_size(), two_one.size());

        let column = pp(&[&[3]]);
        assert_eq!(column.level_sets().levels().len(), 3);
        assert!(column.level_sets().levels().iter().all(|l| l.size() == 1));
    }

    #[test]
    fn total_rank_examples() {
        assert_eq!(pp(&[&[1]]).total_rank(), 1);
        assert_eq!(pp(&[&[2, 1]]).total_rank(), 2);
        assert_eq!(pp(&[&[1, 1], &[1]]).total_rank(), 1);
        assert_eq!(pp(&[&[1, 1], &[1, 1]]).total_rank(), 2);
    }

    #[test]
    fn total_rank_bounds() {
        for n in 1..=6u32 {
            for p in enumerate_pp(n) {
                let rank = p.total_rank();
                assert!(rank >= 1);
                assert!(rank as u64 <= p.size());
                assert_eq!(p.level_sets().total_size(), p.size());
            }
        }
    }

    #[test]
    fn rank1_counts_are_divisor_sums() {
        // sigma_1(n) for n = 1..10.
        let expected = [1, 3, 4, 7, 6, 12, 8, 15, 13, 18];
        for (i, &count) in expected.iter().enumerate() {
            let n = i as u32 + 1;
            let found = rank1_enumerate(n);
            assert_eq!(found.len(), count, "sigma_1({n})");
            for (p, c) in &found {
                assert_eq!(p.size(), u64::from(n));
                assert_eq!(p.max_height(), *c);
                assert!(p.base().is_hook());
            }
        }
    }

    #[test]
    fn rank_one_classification_is_exact() {
        for n in 1..=8u32 {
            let by_rank: BTreeSet<PlanePartition> = enumerate_pp(n)
                .into_iter()
                .filter(|p| p.total_rank() == 1)
                .collect();
            let classified: BTreeSet<PlanePartition> =
                rank1_enumerate(n).into_iter().map(|(p, _)| p).collect();
            assert_eq!(by_rank, classified, "n = {n}");
        }
    }

    #[test]
    fn axis_permutations_preserve_size() {
        let p = pp(&[&[3, 2], &[2, 1]]);
        let perms = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        for perm in perms {
            let q = p.permute_axes(perm).unwrap();
            assert_eq!(q.size(), p.size());
        }
        // Swapping the first two axes transposes the base.
        let t = p.permute_axes([1, 0, 2]).unwrap();
        assert_eq!(t.base(), &p.base().conjugate());
        // The identity returns the same object.
        assert_eq!(p.permute_axes([0, 1, 2]).unwrap(), p);
    }

    #[test]
    fn boxes_round_trip() {
        for n in 0..=5u32 {
            for p in enumerate_pp(n) {
                let set: BTreeSet<_> = p.boxes().into_iter().collect();
                assert_eq!(set.len() as u64, p.size());
                assert_eq!(PlanePartition::from_boxes(&set).unwrap(), p);
            }
        }
    }

    #[test]
    fn text_rendering() {
        assert_eq!(pp(&[&[2, 1], &[1]]).to_string(), "2 1 / 1");
        assert_eq!(PlanePartition::empty().to_string(), "-");
    }
}
