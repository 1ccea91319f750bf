//! Dense matrices of exact rationals with Gaussian elimination.
//!
//! The elimination here is plain rational (divide by the pivot), which is
//! exact because [`Rational`] arithmetic is exact. Pivots are chosen as the
//! first non-zero entry in the leftmost unresolved column, so echelon form,
//! rank, pivot columns and the nullspace basis are all deterministic.

use crate::rational::Rational;

/// Row-major matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![Rational::ZERO; rows * cols],
        }
    }

    /// Builds a matrix from rows. Panics if the rows are ragged or empty.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Matrix {
        assert!(!rows.is_empty(), "matrix needs at least one row");
        let cols = rows[0].len();
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "all rows must have equal length"
        );
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| a * b)
                    .sum::<Rational>()
            })
            .collect()
    }

    /// Reduces `self` in place to reduced row echelon form.
    ///
    /// Returns the pivot columns in order; the rank is their count.
    pub fn reduce_to_rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(src) = (pivot_row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(pivot_row, src);
            let inv = self.get(pivot_row, col).recip();
            for c in col..self.cols {
                let v = self.get(pivot_row, c) * inv;
                self.set(pivot_row, c, v);
            }
            for r in 0..self.rows {
                if r == pivot_row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col);
                for c in col..self.cols {
                    let v = self.get(r, c) - factor * self.get(pivot_row, c);
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().reduce_to_rref().len()
    }

    /// Exact basis of the right nullspace.
    ///
    /// One vector per non-pivot column, in ascending column order: the free
    /// variable is set to 1, the other free variables to 0, and the pivot
    /// variables are read off the reduced echelon form.
    pub fn nullspace_basis(&self) -> Vec<Vec<Rational>> {
        let mut rref = self.clone();
        let pivots = rref.reduce_to_rref();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut vec = vec![Rational::ZERO; self.cols];
            vec[free] = Rational::ONE;
            for (row, &pc) in pivots.iter().enumerate() {
                vec[pc] = -rref.get(row, free);
            }
            basis.push(vec);
        }
        basis
    }

    /// Solves `self * x = rhs` when the solution is unique.
    ///
    /// Returns `None` when the system is singular (no solution, or more
    /// than one). Works for rectangular systems: uniqueness requires the
    /// coefficient rank to equal the number of columns, and solvability
    /// requires the augmented system to be consistent.
    pub fn solve_unique(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(rhs.len(), self.rows, "rhs length must match row count");
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for (r, &rhs_value) in rhs.iter().enumerate() {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, self.cols, rhs_value);
        }
        let pivots = aug.reduce_to_rref();
        // A pivot in the rhs column means the system is inconsistent.
        if pivots.contains(&self.cols) {
            return None;
        }
        if pivots.len() != self.cols {
            return None;
        }
        let mut x = vec![Rational::ZERO; self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(row, self.cols);
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            let (va, vb) = (self.get(a, c), self.get(b, c));
            self.set(a, c, vb);
            self.set(b, c, va);
        }
    }
}
