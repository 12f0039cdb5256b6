//! Exact rational matrices with fraction-free rank and right-kernel
//! computation.
//!
//! Elimination clears row denominators first (row scaling changes neither
//! rank nor right kernel), then runs one-step fraction-free reduction over
//! integers: cross-multiply, subtract, divide by the previous pivot. The
//! division is exact because every intermediate entry is a minor of the
//! original matrix, which keeps growth polynomial instead of exponential.

use exact_core::rational::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("row {0} has {1} entries, expected {2}")]
    RaggedRow(usize, usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Rational>>,
}

impl ExactMatrix {
    pub fn new(data: Vec<Vec<Rational>>) -> Result<Self, MatrixError> {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        for (i, row) in data.iter().enumerate() {
            if row.len() != cols {
                return Err(MatrixError::RaggedRow(i, row.len(), cols));
            }
        }
        Ok(Self { rows, cols, data })
    }

    /// Columns given as equal-length vectors.
    pub fn from_columns(columns: &[Vec<Rational>]) -> Result<Self, MatrixError> {
        let rows = columns.first().map_or(0, Vec::len);
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(MatrixError::RaggedRow(j, col.len(), rows));
            }
        }
        let data = (0..rows)
            .map(|i| columns.iter().map(|c| c[i].clone()).collect())
            .collect();
        Ok(Self { rows, cols: columns.len(), data })
    }

    pub fn identity(n: usize) -> Self {
        let data = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                    .collect()
            })
            .collect();
        Self { rows: n, cols: n, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.data[i][j]
    }

    /// `self * v` for a column vector.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        self.data
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Exact rank and a basis of the right kernel.
    pub fn rank_kernel(&self) -> RankKernel {
        // Integer copy with cleared row denominators.
        let mut m: Vec<Vec<BigInt>> = self
            .data
            .iter()
            .map(|row| {
                let lcm = row
                    .iter()
                    .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                row.iter()
                    .map(|x| x.numer() * (&lcm / x.denom()))
                    .collect()
            })
            .collect();
        let rows = self.rows;
        let cols = self.cols;
        let mut pivot_cols = Vec::new();
        let mut prev_pivot = BigInt::one();
        let mut r = 0usize;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            for i in r + 1..rows {
                if m[i][c].is_zero() && m[r][c].is_one() && prev_pivot.is_one() {
                    continue;
                }
                for j in c + 1..cols {
                    let t = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                    m[i][j] = t / &prev_pivot;
                }
                m[i][c] = BigInt::zero();
            }
            prev_pivot = m[r][c].clone();
            pivot_cols.push(c);
            r += 1;
        }
        let rank = pivot_cols.len();
        // Back-substitution over the echelon form: one kernel vector per
        // free column.
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; cols];
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = Some(row);
            }
            v
        };
        let mut kernel = Vec::new();
        for f in 0..cols {
            if pivot_of_col[f].is_some() {
                continue;
            }
            let mut x = vec![Rational::zero(); cols];
            x[f] = Rational::one();
            for (row, &pc) in pivot_cols.iter().enumerate().rev() {
                if pc > f {
                    continue;
                }
                let mut acc = Rational::zero();
                for j in pc + 1..cols {
                    if !x[j].is_zero() && !m[row][j].is_zero() {
                        acc += Rational::from_integer(m[row][j].clone()) * &x[j];
                    }
                }
                x[pc] = -acc / Rational::from_integer(m[row][pc].clone());
            }
            kernel.push(normalize_vector(x));
        }
        RankKernel { rank, kernel }
    }
}

/// Scales a rational vector to coprime integers with a positive first
/// nonzero entry; purely cosmetic, the span is unchanged.
fn normalize_vector(v: Vec<Rational>) -> Vec<Rational> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let gcd = if gcd.is_zero() { BigInt::one() } else { gcd };
    let sign = ints
        .iter()
        .find(|x| !x.is_zero())
        .map_or(BigInt::one(), |x| if x.is_negative() { -BigInt::one() } else { BigInt::one() });
    ints.into_iter()
        .map(|x| Rational::from_integer(x / &gcd * &sign))
        .collect()
}

#[derive(Debug, Clone)]
pub struct RankKernel {
    pub rank: usize,
    /// Basis of `{v : M v = 0}`, normalized to coprime integer entries.
    pub kernel: Vec<Vec<Rational>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_core::rational::{rat, ratio};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn int_matrix(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::new(
            rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn identity_has_full_rank() {
        let rk = ExactMatrix::identity(3).rank_kernel();
        assert_eq!(rk.rank, 3);
        assert!(rk.kernel.is_empty());
    }

    #[test]
    fn duplicated_column_gives_difference_kernel() {
        // Columns 0 and 1 equal: kernel contains (1, -1, 0).
        let m = int_matrix(&[&[1, 1, 2], &[3, 3, 5], &[7, 7, 11]]);
        let rk = m.rank_kernel();
        assert_eq!(rk.rank, 2);
        assert_eq!(rk.kernel, vec![vec![rat(1), rat(-1), rat(0)]]);
    }

    #[test]
    fn rectangular_and_rational_entries() {
        let m = ExactMatrix::new(vec![
            vec![ratio(1, 2), ratio(1, 3), rat(1)],
            vec![ratio(1, 4), ratio(1, 6), ratio(1, 2)],
        ])
        .unwrap();
        // Second row is half the first: rank 1, kernel dimension 2.
        let rk = m.rank_kernel();
        assert_eq!(rk.rank, 1);
        assert_eq!(rk.kernel.len(), 2);
        for v in &rk.kernel {
            assert!(m.apply(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn kernel_vectors_annihilate_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..25 {
            let rows = rng.gen_range(1..7);
            let cols = rng.gen_range(1..7);
            let data: Vec<Vec<Rational>> = (0..rows)
                .map(|_| (0..cols).map(|_| ratio(rng.gen_range(-6..7), rng.gen_range(1..4))).collect())
                .collect();
            let m = ExactMatrix::new(data).unwrap();
            let rk = m.rank_kernel();
            assert_eq!(rk.rank + rk.kernel.len(), cols, "rank-nullity");
            for v in &rk.kernel {
                assert!(m.apply(v).iter().all(|x| x.is_zero()), "kernel exactness");
                assert!(v.iter().any(|x| !x.is_zero()));
            }
        }
    }

    #[test]
    fn ragged_input_rejected() {
        assert!(matches!(
            ExactMatrix::new(vec![vec![rat(1)], vec![rat(1), rat(2)]]),
            Err(MatrixError::RaggedRow(1, 2, 1))
        ));
        let cols = ExactMatrix::from_columns(&[vec![rat(1), rat(2)], vec![rat(3)]]);
        assert!(cols.is_err());
    }

    #[test]
    fn from_columns_round_trip() {
        let m = ExactMatrix::from_columns(&[vec![rat(1), rat(2)], vec![rat(3), rat(4)]]).unwrap();
        assert_eq!(m.rows(), 2);
        assert_eq!(m.cols(), 2);
        assert_eq!(m.at(0, 1), &rat(3));
        assert_eq!(m.at(1, 0), &rat(2));
        assert_eq!(m.rank_kernel().rank, 2);
    }
}
