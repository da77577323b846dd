//! Exact Gaussian elimination over the rationals.
//!
//! Everything here is fraction-preserving: no pivot-size heuristics, no
//! rounding. The pivot rule is deterministic (first nonzero entry in column
//! order) so nullspace bases are reproducible across runs and platforms.

use std::ops::{Index, IndexMut};

use num::{One, Zero};
use thiserror::Error;

use crate::rational::Rat;

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

/// Error from [`RatMat::solve`]: the system has no unique solution.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("linear system is singular (no unique solution)")]
pub struct SingularSystem;

impl RatMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    /// Builds from row vectors; all rows must share a length.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == ncols),
            "ragged rows in matrix constructor"
        );
        RatMat {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Reduces in place to reduced row echelon form; returns the pivot columns.
    ///
    /// Pivot rule: for each column in order, the first row (top to bottom)
    /// with a nonzero entry.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivot_cols = Vec::new();
        let mut next_row = 0;
        for col in 0..self.cols {
            if next_row == self.rows {
                break;
            }
            let Some(pivot_row) =
                (next_row..self.rows).find(|&r| !self[(r, col)].is_zero())
            else {
                continue;
            };
            self.swap_rows(pivot_row, next_row);
            let inv = self[(next_row, col)].clone().recip();
            self.scale_row(next_row, &inv);
            for r in 0..self.rows {
                if r != next_row && !self[(r, col)].is_zero() {
                    let factor = self[(r, col)].clone();
                    self.sub_scaled_row(r, next_row, &factor);
                }
            }
            pivot_cols.push(col);
            next_row += 1;
        }
        pivot_cols
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Basis of the right nullspace, one vector per free column in ascending
    /// column order, with the free coordinate set to one.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let mut reduced = self.clone();
        let pivot_cols = reduced.rref();
        let mut basis = Vec::with_capacity(self.cols - pivot_cols.len());
        let mut pivot_iter = pivot_cols.iter().copied().peekable();
        let mut free_cols = Vec::new();
        for col in 0..self.cols {
            if pivot_iter.peek() == Some(&col) {
                pivot_iter.next();
            } else {
                free_cols.push(col);
            }
        }
        for free in free_cols {
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (row, &pivot_col) in pivot_cols.iter().enumerate() {
                v[pivot_col] = -reduced[(row, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Unique solution of `self * x = rhs` for a square system.
    pub fn solve(&self, rhs: &[Rat]) -> Result<Vec<Rat>, SingularSystem> {
        assert_eq!(self.rows, rhs.len(), "right-hand side length mismatch");
        if self.rows != self.cols {
            return Err(SingularSystem);
        }
        let n = self.rows;
        let mut aug = RatMat::zeros(n, n + 1);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n)] = rhs[r].clone();
        }
        let pivots = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| i != c) {
            return Err(SingularSystem);
        }
        Ok((0..n).map(|r| aug[(r, n)].clone()).collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, row: usize, factor: &Rat) {
        for c in 0..self.cols {
            let idx = row * self.cols + c;
            if !self.data[idx].is_zero() {
                self.data[idx] = &self.data[idx] * factor;
            }
        }
    }

    /// `row_dst -= factor * row_src`.
    fn sub_scaled_row(&mut self, dst: usize, src: usize, factor: &Rat) {
        for c in 0..self.cols {
            let adj = &self.data[src * self.cols + c] * factor;
            self.data[dst * self.cols + c] -= adj;
        }
    }
}

impl Index<(usize, usize)> for RatMat {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for RatMat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rat {
        &mut self.data[r * self.cols + c]
    }
}
