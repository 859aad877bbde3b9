//! Dense real linear algebra sized for desk-scale regression problems.
//!
//! Everything here operates on plain row-major `f64` storage: reduced
//! Householder QR, Cholesky factorization with an O(k^2) append-column
//! update, triangular solves, and singular values via one-sided Jacobi.
//! All routines are pure functions of their inputs.

use crate::error::{Error, Result};

/// Relative rank tolerance for QR: a pivot below `RANK_TOL` times the
/// largest initial column norm flags the matrix as rank deficient.
pub const RANK_TOL: f64 = 1e-10;

/// Symmetry tolerance accepted by [`cholesky`].
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Slack tolerance for [`chol_append`]: the append is rejected when
/// `1 - |v|^2` falls at or below this value.
pub const APPEND_TOL: f64 = 1e-12;

/// Convergence threshold for the one-sided Jacobi sweep in
/// [`singular_values`].
pub const JACOBI_TOL: f64 = 1e-14;

/// Dense matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    /// Builds a matrix from row-major data.
    ///
    /// Panics if `data.len() != rows * cols` or either dimension is zero.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        assert_eq!(
            data.len(),
            rows * cols,
            "data length {} does not match {}x{}",
            data.len(),
            rows,
            cols
        );
        Self { rows, cols, data }
    }

    /// Builds a matrix from a closure over (row, col).
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self::from_vec(rows, cols, data)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_vec(rows, cols, vec![0.0; rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    pub fn transpose(&self) -> DenseMatrix {
        DenseMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// `self * v` for a vector of length `cols`.
    pub fn matvec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.cols, "matvec dimension mismatch");
        let mut out = vec![0.0; self.rows];
        for i in 0..self.rows {
            out[i] = dot(self.row(i), v);
        }
        out
    }

    /// `self^T * v` for a vector of length `rows`.
    pub fn transpose_matvec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.rows, "transpose_matvec dimension mismatch");
        let mut out = vec![0.0; self.cols];
        for i in 0..self.rows {
            let vi = v[i];
            if vi != 0.0 {
                for (o, &x) in out.iter_mut().zip(self.row(i)) {
                    *o += vi * x;
                }
            }
        }
        out
    }

    /// `self * other`.
    pub fn matmul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, other.rows, "matmul dimension mismatch");
        let mut out = DenseMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a != 0.0 {
                    for j in 0..other.cols {
                        out.data[i * other.cols + j] += a * other.get(k, j);
                    }
                }
            }
        }
        out
    }

    /// Gram matrix `self^T * self`.
    pub fn gram(&self) -> DenseMatrix {
        let mut g = DenseMatrix::zeros(self.cols, self.cols);
        for i in 0..self.rows {
            let r = self.row(i);
            for a in 0..self.cols {
                let ra = r[a];
                if ra != 0.0 {
                    for b in a..self.cols {
                        g.data[a * self.cols + b] += ra * r[b];
                    }
                }
            }
        }
        for a in 0..self.cols {
            for b in 0..a {
                g.data[a * self.cols + b] = g.data[b * self.cols + a];
            }
        }
        g
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Copies the rows indexed by `idx` (in the given order) into a new matrix.
    pub fn select_rows(&self, idx: &[usize]) -> DenseMatrix {
        DenseMatrix::from_fn(idx.len(), self.cols, |i, j| self.get(idx[i], j))
    }
}

/// Reduced QR factors of an n x m matrix with n >= m.
#[derive(Debug, Clone)]
pub struct QrFactors {
    /// n x m matrix with orthonormal columns.
    pub q: DenseMatrix,
    /// m x m upper triangular with strictly positive diagonal.
    pub r: DenseMatrix,
}

impl QrFactors {
    /// Least-squares solution of `min |y - X z|` via `R z = Q^T y`.
    pub fn solve_ls(&self, y: &[f64]) -> Result<Vec<f64>> {
        if y.len() != self.q.rows() {
            return Err(Error::DimensionMismatch(format!(
                "rhs length {} vs {} matrix rows",
                y.len(),
                self.q.rows()
            )));
        }
        let qty = self.q.transpose_matvec(y);
        back_substitute(&self.r, &qty)
    }
}

/// Lower-triangular Cholesky factor of a Gram matrix.
#[derive(Debug, Clone)]
pub struct CholFactor {
    /// k x k lower triangular with positive diagonal.
    pub l: DenseMatrix,
}

impl CholFactor {
    pub fn dim(&self) -> usize {
        self.l.rows()
    }

    /// Solves `L w = b` (forward substitution).
    pub fn forward_solve(&self, b: &[f64]) -> Result<Vec<f64>> {
        let n = self.dim();
        if b.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "rhs length {} vs factor dimension {}",
                b.len(),
                n
            )));
        }
        let mut w = vec![0.0; n];
        for i in 0..n {
            let mut s = b[i];
            for j in 0..i {
                s -= self.l.get(i, j) * w[j];
            }
            w[i] = s / self.l.get(i, i);
        }
        Ok(w)
    }

    /// Solves `L^T z = b` (backward substitution).
    pub fn backward_solve(&self, b: &[f64]) -> Result<Vec<f64>> {
        let n = self.dim();
        if b.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "rhs length {} vs factor dimension {}",
                b.len(),
                n
            )));
        }
        let mut z = vec![0.0; n];
        for i in (0..n).rev() {
            let mut s = b[i];
            for j in i + 1..n {
                s -= self.l.get(j, i) * z[j];
            }
            z[i] = s / self.l.get(i, i);
        }
        Ok(z)
    }

    /// Solves `L L^T z = b`.
    pub fn solve(&self, b: &[f64]) -> Result<Vec<f64>> {
        let w = self.forward_solve(b)?;
        self.backward_solve(&w)
    }

    /// Grows the factor by one column whose Gram cross terms against the
    /// already-factored columns are `cross` and whose squared norm is 1.
    ///
    /// Used when the appended column is a standard-basis vector: solve
    /// `L v = cross`, set `b = sqrt(1 - |v|^2)`, and extend `L` with the
    /// row `(v^T, b)`. Costs O(k^2); no refactorization.
    pub fn append_unit_column(&self, cross: &[f64]) -> Result<CholFactor> {
        let k = self.dim();
        let v = self.forward_solve(cross)?;
        let slack = 1.0 - dot(&v, &v);
        if slack <= APPEND_TOL {
            return Err(Error::DegenerateAppend { slack });
        }
        let b = slack.sqrt();
        let mut l = DenseMatrix::zeros(k + 1, k + 1);
        for i in 0..k {
            for j in 0..=i {
                l.set(i, j, self.l.get(i, j));
            }
        }
        for (j, &vj) in v.iter().enumerate() {
            l.set(k, j, vj);
        }
        l.set(k, k, b);
        Ok(CholFactor { l })
    }
}

/// Dot product.
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Euclidean norm.
pub fn norm2(v: &[f64]) -> f64 {
    dot(v, v).sqrt()
}

/// Largest absolute entry of a vector.
pub fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0, |m, x| m.max(x.abs()))
}

/// Reduced QR decomposition of a full-column-rank matrix via Householder
/// reflections with the positive-diagonal sign convention, so the factors
/// are unique.
pub fn qr_reduced(x: &DenseMatrix) -> Result<QrFactors> {
    qr_reduced_with_tol(x, RANK_TOL)
}

/// [`qr_reduced`] with an explicit relative rank tolerance.
pub fn qr_reduced_with_tol(x: &DenseMatrix, rank_tol: f64) -> Result<QrFactors> {
    let (n, m) = (x.rows(), x.cols());
    if n < m {
        return Err(Error::DimensionMismatch(format!(
            "qr_reduced needs rows >= cols, got {}x{}",
            n, m
        )));
    }
    if !x.is_finite() {
        return Err(Error::NonFinite("qr_reduced input".into()));
    }

    // Working copy reduced in place to R; reflectors stored below the diagonal.
    let mut a = x.clone();
    let mut betas = vec![0.0; m];
    let scale = (0..m)
        .map(|j| norm2(&a.col(j)))
        .fold(0.0f64, f64::max)
        .max(f64::MIN_POSITIVE);
    let tol = rank_tol * scale;

    for j in 0..m {
        // Householder vector for column j below row j.
        let mut sigma = 0.0;
        for i in j..n {
            sigma += a.get(i, j) * a.get(i, j);
        }
        let alpha = sigma.sqrt();
        if alpha <= tol {
            return Err(Error::RankDeficient {
                col: j,
                pivot: alpha,
                tol,
            });
        }
        let a0 = a.get(j, j);
        // Stable sign choice avoids cancellation.
        let pivot = if a0 >= 0.0 { -alpha } else { alpha };
        let v0 = a0 - pivot;
        let vnorm2 = sigma - a0 * a0 + v0 * v0;
        let beta = 2.0 / vnorm2;

        // Apply the reflector to the trailing columns.
        for c in j + 1..m {
            let mut s = v0 * a.get(j, c);
            for i in j + 1..n {
                s += a.get(i, j) * a.get(i, c);
            }
            s *= beta;
            let new = a.get(j, c) - s * v0;
            a.set(j, c, new);
            for i in j + 1..n {
                let val = a.get(i, c) - s * a.get(i, j);
                a.set(i, c, val);
            }
        }
        a.set(j, j, pivot);
        // Store the reflector (v0 on the diagonal slot is implicit; the
        // below-diagonal part already holds v[j+1..]).
        betas[j] = beta;
        // Stash v0 in place of the zeroed subdiagonal start: we keep it in a
        // side vector instead to leave R's diagonal intact.
        v0s[j] = v0;
    }

    unreachable!()
}

#[cfg(test)]
mod tests {}
