use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::grid::GridPoint;
use crate::scalar::Scalar;

/// Dense row-major matrix over an exact scalar.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    /// Builds from row vectors; every row must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            if row.len() != cols {
                return Err(Error::LengthMismatch { expected: cols, found: row.len() });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: nrows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> impl Iterator<Item = &[T]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Matrix product; `None` on a shape mismatch.
    pub fn mul(&self, rhs: &Matrix<T>) -> Option<Matrix<T>> {
        if self.cols != rhs.rows {
            return None;
        }
        Some(Matrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(T::zero(), |acc, k| {
                acc + self.get(i, k).clone() * rhs.get(k, j).clone()
            })
        }))
    }

    pub fn scale(&self, c: &T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v.clone() * c.clone()).collect(),
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Columns reordered so that new column `j` is old column `order[j]`.
    pub fn select_columns(&self, order: &[usize]) -> Matrix<T> {
        Matrix::from_fn(self.rows, order.len(), |i, j| self.get(i, order[j]).clone())
    }

    /// Rows reordered so that new row `i` is old row `order[i]`.
    pub fn select_rows(&self, order: &[usize]) -> Matrix<T> {
        Matrix::from_fn(order.len(), self.cols, |i, j| self.get(order[i], j).clone())
    }

    /// One row per line, entries as `p/q` separated by spaces.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for row in self.row_vecs() {
            let cells: Vec<String> = row
                .iter()
                .map(|v| {
                    let q = v.to_rational();
                    format!("{}/{}", q.numer(), q.denom())
                })
                .collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
        out
    }
}

/// A matrix whose rows and columns are indexed by grid points.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledMatrix<T> {
    row_labels: Vec<GridPoint>,
    col_labels: Vec<GridPoint>,
    entries: Matrix<T>,
}

impl<T: Scalar> LabeledMatrix<T> {
    pub fn new(row_labels: Vec<GridPoint>, col_labels: Vec<GridPoint>, entries: Matrix<T>) -> Result<Self> {
        if entries.rows() != row_labels.len() {
            return Err(Error::LengthMismatch { expected: row_labels.len(), found: entries.rows() });
        }
        if entries.cols() != col_labels.len() {
            return Err(Error::LengthMismatch { expected: col_labels.len(), found: entries.cols() });
        }
        check_distinct("row", &row_labels)?;
        check_distinct("column", &col_labels)?;
        Ok(LabeledMatrix { row_labels, col_labels, entries })
    }

    /// Fills entry `(alpha, beta)` with `f(alpha, beta)`.
    pub fn tabulate(
        row_labels: Vec<GridPoint>,
        col_labels: Vec<GridPoint>,
        f: impl Fn(&GridPoint, &GridPoint) -> T,
    ) -> Result<Self> {
        let entries = Matrix::from_fn(row_labels.len(), col_labels.len(), |i, j| {
            f(&row_labels[i], &col_labels[j])
        });
        LabeledMatrix::new(row_labels, col_labels, entries)
    }

    pub fn row_labels(&self) -> &[GridPoint] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[GridPoint] {
        &self.col_labels
    }

    pub fn entries(&self) -> &Matrix<T> {
        &self.entries
    }

    pub fn into_entries(self) -> Matrix<T> {
        self.entries
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> LabeledMatrix<U> {
        LabeledMatrix {
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
            entries: self.entries.map(f),
        }
    }

    pub fn transpose(&self) -> Self {
        LabeledMatrix {
            row_labels: self.col_labels.clone(),
            col_labels: self.row_labels.clone(),
            entries: self.entries.transpose(),
        }
    }

    /// Product; the column labels of `self` must equal the row labels of `rhs`.
    pub fn mul(&self, rhs: &LabeledMatrix<T>) -> Result<Self> {
        if self.col_labels != rhs.row_labels {
            return Err(Error::LengthMismatch { expected: self.col_labels.len(), found: rhs.row_labels.len() });
        }
        let entries = self.entries.mul(&rhs.entries).expect("shapes checked through labels");
        Ok(LabeledMatrix {
            row_labels: self.row_labels.clone(),
            col_labels: rhs.col_labels.clone(),
            entries,
        })
    }

    pub fn scale(&self, c: &T) -> Self {
        LabeledMatrix {
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
            entries: self.entries.scale(c),
        }
    }

    pub fn dump(&self) -> String {
        self.entries.dump()
    }
}

fn check_distinct(axis: &'static str, labels: &[GridPoint]) -> Result<()> {
    let mut seen = HashSet::with_capacity(labels.len());
    for l in labels {
        if !seen.insert(l) {
            return Err(Error::DuplicateLabel { axis, label: l.to_string() });
        }
    }
    Ok(())
}
