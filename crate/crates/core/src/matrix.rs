//! Dense matrices of exact rationals.
//!
//! Matrices are value-semantic and immutable: every operation returns a new
//! matrix, so values can be shared freely across threads. The text form is
//! rows separated by `;` and entries by `,`, e.g. `30,20,100;25,30,60`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A dense row-major m×n matrix of [`Scalar`] entries, m, n ≥ 1.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    /// Build from a list of equally long rows.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::Shape(
                "matrix needs at least one row and column".into(),
            ));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("rows have unequal lengths".into()));
        }
        let row_count = rows.len();
        Ok(Matrix {
            rows: row_count,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Build an m×n matrix from an entry function.
    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut entry: impl FnMut(usize, usize) -> Scalar,
    ) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Shape(
                "matrix needs at least one row and column".into(),
            ));
        }
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(entry(i, j));
            }
        }
        Ok(Matrix {
            rows,
            cols,
            entries,
        })
    }

    /// The n×n identity.
    pub fn identity(n: usize) -> Result<Self> {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        })
    }

    /// Parse the canonical text form `a,b;c,d`.
    pub fn parse(text: &str) -> Result<Self> {
        let rows = text
            .trim()
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(Scalar::parse)
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
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

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        assert!(
            row < self.rows && col < self.cols,
            "entry index out of range"
        );
        &self.entries[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[Scalar] {
        assert!(row < self.rows, "row index out of range");
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    /// Exact product rows-by-columns; fails unless `self.cols == rhs.rows`.
    pub fn mat_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut sum = Scalar::zero();
            for k in 0..self.cols {
                sum = sum + self.get(i, k) * rhs.get(k, j);
            }
            sum
        })
    }

    /// Entrywise sum; shapes must match.
    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Shape(format!(
                "cannot add {}x{} and {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Matrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + rhs.get(i, j))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
            .expect("shape preserved")
    }

    /// Row replacement `R_target <- R_target + h * R_source`; rows are
    /// 0-indexed. Replacing a row with a multiple of itself is rejected.
    pub fn row_replace(&self, target: usize, source: usize, h: &Scalar) -> Result<Matrix> {
        if target >= self.rows {
            return Err(Error::IndexOutOfRange {
                index: target,
                limit: self.rows,
            });
        }
        if source >= self.rows {
            return Err(Error::IndexOutOfRange {
                index: source,
                limit: self.rows,
            });
        }
        if target == source {
            return Err(Error::InvalidOperation(
                "row replacement requires distinct target and source rows".into(),
            ));
        }
        Matrix::from_fn(self.rows, self.cols, |i, j| {
            if i == target {
                self.get(i, j) + h * self.get(source, j)
            } else {
                self.get(i, j).clone()
            }
        })
    }

    /// Matrix-vector product; the vector length must equal `cols`.
    pub fn mul_vec(&self, vector: &[Scalar]) -> Result<Vec<Scalar>> {
        if vector.len() != self.cols {
            return Err(Error::Shape(format!(
                "cannot apply {}x{} to a vector of length {}",
                self.rows,
                self.cols,
                vector.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut sum = Scalar::zero();
                for (j, x) in vector.iter().enumerate() {
                    sum = sum + self.get(i, j) * x;
                }
                sum
            })
            .collect())
    }

    /// Sum of the diagonal; fails for non-square matrices.
    pub fn trace(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::Shape("trace requires a square matrix".into()));
        }
        let mut sum = Scalar::zero();
        for i in 0..self.rows {
            sum = sum + self.get(i, i);
        }
        Ok(sum)
    }
}

impl fmt::Display for Matrix {
    /// Canonical text form: rows joined by `;`, entries by `,`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(";")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[{}]", self)
    }
}

impl FromStr for Matrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Matrix::parse(s)
    }
}
