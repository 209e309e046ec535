//! Small dense real linear algebra used by the samplers.
//!
//! Everything here works on `f64` in row-major storage and is sized for
//! ambient dimensions up to a few dozen; nothing is blocked or vectorised.

use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

#[cfg(test)]
mod tests;

/// Maximum deviation of `<c_i, c_j>` from the Kronecker delta for a frame.
pub const ORTHONORMAL_TOL: f64 = 1e-10;
/// Maximum entry of `P^2 - P` (and of `|trace(P) - k|`) for a projection.
pub const IDEMPOTENT_TOL: f64 = 1e-9;
/// Default residual threshold for [`gram_schmidt`].
pub const DEPENDENCE_TOL: f64 = 1e-10;

/// A dense real matrix stored row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_row_major(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<f64>]) -> Result<Self> {
        let cols = columns.len();
        let rows = columns.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows, cols);
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: c.len(),
                });
            }
            for (i, &x) in c.iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.data
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn columns(&self) -> Vec<Vec<f64>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self[(i, l)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(l, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[f64]) -> Result<Vec<f64>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| dot(&self.data[i * self.cols..(i + 1) * self.cols], v))
            .collect())
    }

    pub fn trace(&self) -> f64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// Largest absolute entry of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Numerical rank by Gaussian elimination with partial pivoting; pivots
    /// with magnitude at most `tol` count as zero.
    pub fn rank(&self, tol: f64) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..a.cols {
            if rank == a.rows {
                break;
            }
            let (pivot_row, pivot) =
                (rank..a.rows)
                    .map(|r| (r, a[(r, col)].abs()))
                    .fold(
                        (rank, -1.0),
                        |best, cur| if cur.1 > best.1 { cur } else { best },
                    );
            if pivot <= tol {
                continue;
            }
            for j in 0..a.cols {
                a.data.swap(rank * a.cols + j, pivot_row * a.cols + j);
            }
            for r in rank + 1..a.rows {
                let factor = a[(r, col)] / a[(rank, col)];
                if factor != 0.0 {
                    for j in col..a.cols {
                        let v = a[(rank, j)];
                        a[(r, j)] -= factor * v;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Submatrix of the given row range (all columns).
    pub fn row_block(&self, rows: std::ops::Range<usize>) -> Self {
        let data = self.data[rows.start * self.cols..rows.end * self.cols].to_vec();
        Self {
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }
}

impl std::ops::Index<(usize, usize)> for DenseMatrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

/// An orthonormal k-frame in R^n.
#[derive(Clone, Debug, PartialEq)]
pub struct Frame {
    ambient_dim: usize,
    columns: Vec<Vec<f64>>,
}

impl Frame {
    pub(crate) fn from_orthonormal(ambient_dim: usize, columns: Vec<Vec<f64>>) -> Self {
        debug_assert!(columns.iter().all(|c| c.len() == ambient_dim));
        Self {
            ambient_dim,
            columns,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn count(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Vec<f64>] {
        &self.columns
    }

    pub fn to_matrix(&self) -> DenseMatrix {
        DenseMatrix::from_columns(&self.columns).expect("frame columns share a dimension")
    }

    /// Largest deviation of the Gram matrix from the identity.
    pub fn orthonormality_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, a) in self.columns.iter().enumerate() {
            for (j, b) in self.columns.iter().enumerate() {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot(a, b) - target).abs());
            }
        }
        worst
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Orthonormalizes `vectors` in order with modified Gram-Schmidt followed by
/// a second re-orthogonalization pass.
///
/// The span of the first `i` outputs equals the span of the first `i` inputs
/// for every `i`, so flag-dependent structure (echelon zero patterns) survives.
pub fn gram_schmidt(vectors: &[Vec<f64>], tolerance: f64) -> Result<Frame> {
    let n = vectors.first().map_or(0, Vec::len);
    if vectors.is_empty() || n == 0 {
        return Err(Error::InvalidParams(
            "gram_schmidt needs at least one nonempty vector".into(),
        ));
    }
    if vectors.len() > n {
        return Err(Error::InvalidParams(format!(
            "cannot orthonormalize {} vectors in R^{n}",
            vectors.len()
        )));
    }
    let mut columns: Vec<Vec<f64>> = Vec::with_capacity(vectors.len());
    for (index, v) in vectors.iter().enumerate() {
        if v.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: v.len(),
            });
        }
        let mut w = v.clone();
        for pass in 0..2 {
            for q in &columns {
                let c = dot(q, &w);
                for (wi, qi) in w.iter_mut().zip(q) {
                    *wi -= c * qi;
                }
            }
            let residual = norm(&w);
            if pass == 0 && residual < tolerance {
                return Err(Error::LinearDependence { index, residual });
            }
        }
        let len = norm(&w);
        w.iter_mut().for_each(|x| *x /= len);
        columns.push(w);
    }
    Ok(Frame {
        ambient_dim: n,
        columns,
    })
}

/// Fills a vector with i.i.d. standard normal entries.
pub fn gaussian_vector<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<f64> {
    (0..n).map(|_| rng.sample(StandardNormal)).collect()
}

/// Draws a Haar-distributed orthogonal matrix.
///
/// Orthonormalizing the columns of a standard Gaussian matrix in order is the
/// QR factorization whose triangular factor has positive diagonal, which is
/// exactly the sign convention that makes `Q` Haar.
pub fn random_orthogonal<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DenseMatrix {
    assert!(n >= 1, "random_orthogonal needs n >= 1");
    loop {
        let cols: Vec<Vec<f64>> = (0..n).map(|_| gaussian_vector(n, rng)).collect();
        if let Ok(frame) = gram_schmidt(&cols, DEPENDENCE_TOL) {
            return frame.to_matrix();
        }
    }
}

/// Orthogonal projection `A A^T` onto the span of an orthonormal frame.
///
/// Only the upper triangle is computed; the lower is a mirror so the result is
/// exactly symmetric.
pub fn projection_matrix(frame: &Frame) -> DenseMatrix {
    let n = frame.ambient_dim;
    let mut p = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v: f64 = frame.columns.iter().map(|c| c[i] * c[j]).sum();
            p[(i, j)] = v;
            p[(j, i)] = v;
        }
    }
    p
}

/// Euclidean distance; on flattened matrices this is the Frobenius distance.
pub fn euclidean_distance(p: &[f64], q: &[f64]) -> Result<f64> {
    if p.len() != q.len() {
        return Err(Error::DimensionMismatch {
            expected: p.len(),
            found: q.len(),
        });
    }
    Ok(distance(p, q))
}

#[inline]
pub(crate) fn distance(p: &[f64], q: &[f64]) -> f64 {
    p.iter()
        .zip(q)
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt()
}
