//! Dense matrices over arbitrary-precision integers.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// A dense, row-major matrix of [`BigInt`] entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { 1 } else { 0 })
    }

    /// Builds a matrix by evaluating `f(row, col)` for every entry.
    pub fn from_fn<T, F>(rows: usize, cols: usize, mut f: F) -> Self
    where
        T: Into<BigInt>,
        F: FnMut(usize, usize) -> T,
    {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j).into());
            }
        }
        IntegerMatrix {
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix from row vectors. Panics if the rows are ragged.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "ragged rows in IntegerMatrix::from_rows"
        );
        Self::from_fn(rows.len(), cols, |i, j| rows[i][j].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        &self.entries[row * self.cols + col]
    }

    pub(crate) fn set(&mut self, row: usize, col: usize, value: BigInt) {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        self.entries[row * self.cols + col] = value;
    }

    pub fn row(&self, row: usize) -> &[BigInt] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, col).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Keeps only the listed rows, in the listed order.
    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Self::from_fn(rows.len(), self.cols, |i, j| self.get(rows[i], j).clone())
    }

    /// Horizontal concatenation. All parts must share the row count `rows`.
    pub fn hconcat(rows: usize, parts: &[&IntegerMatrix]) -> Self {
        assert!(parts.iter().all(|p| p.rows == rows), "row count mismatch");
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let mut offset = 0;
        for part in parts {
            for i in 0..rows {
                for j in 0..part.cols {
                    out.set(i, offset + j, part.get(i, j).clone());
                }
            }
            offset += part.cols;
        }
        out
    }

    /// Multiplies every entry by `k`.
    pub fn scaled(&self, k: &BigInt) -> Self {
        IntegerMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * k).collect(),
        }
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .sum()
    }

    /// Exact rank via fraction-free (Bareiss) elimination.
    ///
    /// Every intermediate division is exact, so entries stay integral and no
    /// tolerance is involved.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut prev_pivot = BigInt::one();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(pivot_row) = (rank..self.rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, pivot_row);
            let pivot = a[rank][col].clone();
            let (upper, lower) = a.split_at_mut(rank + 1);
            let pivot_row = &upper[rank];
            for row in lower {
                let factor = row[col].clone();
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x = (&pivot * &*x - &factor * p) / &prev_pivot;
                }
            }
            prev_pivot = pivot;
            rank += 1;
        }
        rank
    }

    /// True when the columns are linearly independent.
    pub fn has_full_column_rank(&self) -> bool {
        self.cols <= self.rows && self.rank() == self.cols
    }

    /// Multiplies by an integer column vector.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }
}

impl Mul for &IntegerMatrix {
    type Output = IntegerMatrix;

    fn mul(self, rhs: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntegerMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    out.entries[idx] += a * rhs.get(k, j);
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntegerMatrix({}x{}) ", self.rows, self.cols)?;
        f.debug_list()
            .entries((0..self.rows).map(|i| self.row(i)))
            .finish()
    }
}

/// One row per line, entries separated by single spaces.
impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntegerMatrix {
        IntegerMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(IntegerMatrix::identity(4).rank(), 4);
        assert_eq!(IntegerMatrix::zeros(3, 5).rank(), 0);
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(m(&[&[0, 1, 2], &[0, 0, 3], &[0, 0, 0]]).rank(), 2);
        assert_eq!(m(&[&[1, 1], &[-1, 1], &[0, -2]]).rank(), 2);
        assert_eq!(IntegerMatrix::zeros(0, 3).rank(), 0);
    }

    #[test]
    fn rank_needs_row_swap() {
        assert_eq!(m(&[&[0, 1], &[1, 0]]).rank(), 2);
        assert_eq!(m(&[&[0, 0, 1], &[0, 2, 0], &[3, 0, 0]]).rank(), 3);
    }

    #[test]
    fn rank_with_large_entries_is_exact() {
        // 2^80 and 2^80+1 in one column: a float solver would collapse them.
        let big: BigInt = BigInt::from(1u8) << 80;
        let a = IntegerMatrix::from_fn(2, 2, |i, j| match (i, j) {
            (0, 0) => big.clone(),
            (0, 1) => big.clone() + 1,
            (1, 0) => big.clone(),
            _ => big.clone(),
        });
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn product_and_transpose() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(&a * &b, m(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.transpose(), m(&[&[1, 3], &[2, 4]]));
        assert_eq!(a.trace(), BigInt::from(5));
    }

    #[test]
    fn hconcat_and_select() {
        let a = m(&[&[1], &[2]]);
        let b = m(&[&[3, 4], &[5, 6]]);
        let c = IntegerMatrix::hconcat(2, &[&a, &b]);
        assert_eq!(c, m(&[&[1, 3, 4], &[2, 5, 6]]));
        assert_eq!(c.select_rows(&[1]), m(&[&[2, 5, 6]]));
    }
}
