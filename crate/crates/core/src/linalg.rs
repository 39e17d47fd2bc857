//! Exact rational matrices: just enough dense and sparse elimination for
//! Hom spaces, projective covers and kernels.

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Scalar = BigRational;

pub fn scalar(n: i64) -> Scalar {
    BigRational::from_integer(n.into())
}

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let v = out.get(r, c) + a * b;
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }

    /// Horizontal concatenation.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Matrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out.set(self.rows + r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if pr != row {
                for c in 0..self.cols {
                    self.data
                        .swap(pr * self.cols + c, row * self.cols + c);
                }
            }
            let inv = self.get(row, col).recip();
            for c in col..self.cols {
                let v = self.get(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).clone();
                    for c in col..self.cols {
                        let v = self.get(r, c) - &factor * self.get(row, c);
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Columns form a basis of `{ x : Ax = 0 }`.
    pub fn nullspace(&self) -> Matrix {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols)
            .filter(|c| !pivots.contains(c))
            .collect();
        let mut out = Matrix::zeros(self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            out.set(fc, j, Scalar::one());
            for (r, &pc) in pivots.iter().enumerate() {
                out.set(pc, j, -m.get(r, fc).clone());
            }
        }
        out
    }

    /// Any `X` with `self * X = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows);
        let mut aug = self.hstack(b);
        let pivots = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.cols, b.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                x.set(pc, c, aug.get(r, self.cols + c).clone());
            }
        }
        Some(x)
    }
}

/// Incremental sparse rank via elimination against stored pivot rows. Rows
/// are fed one at a time; suited to very sparse intertwining systems.
pub struct SparseRank {
    // pivot column -> reduced row (sorted by column, leading entry 1)
    pivots: std::collections::BTreeMap<usize, Vec<(usize, Scalar)>>,
}

impl SparseRank {
    pub fn new() -> Self {
        SparseRank {
            pivots: Default::default(),
        }
    }

    pub fn add_row(&mut self, mut row: Vec<(usize, Scalar)>) {
        row.retain(|(_, v)| !v.is_zero());
        row.sort_by_key(|&(c, _)| c);
        loop {
            let Some(&(lead, ref coeff)) = row.first() else {
                return;
            };
            let coeff = coeff.clone();
            match self.pivots.get(&lead) {
                None => {
                    let inv = coeff.recip();
                    for (_, v) in row.iter_mut() {
                        *v = &*v * &inv;
                    }
                    self.pivots.insert(lead, row);
                    return;
                }
                Some(pivot) => {
                    row = sub_scaled(&row, pivot, &coeff);
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Default for SparseRank {
    fn default() -> Self {
        Self::new()
    }
}

/// `row - factor * pivot`, both sorted sparse rows.
fn sub_scaled(
    row: &[(usize, Scalar)],
    pivot: &[(usize, Scalar)],
    factor: &Scalar,
) -> Vec<(usize, Scalar)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let mut i = 0;
    let mut j = 0;
    while i < row.len() || j < pivot.len() {
        if j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0) {
            out.push(row[i].clone());
            i += 1;
        } else if i == row.len() || pivot[j].0 < row[i].0 {
            out.push((pivot[j].0, -factor * &pivot[j].1));
            j += 1;
        } else {
            let v = &row[i].1 - factor * &pivot[j].1;
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
