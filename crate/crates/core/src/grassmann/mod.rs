//! Schubert-cell combinatorics of `G_k(R^n)` and point-cloud samplers on the
//! projection-matrix embedding.
//!
//! A k-plane `X` is represented by the `n x n` matrix of orthogonal projection
//! onto `X`: symmetric, idempotent, trace `k`. Flattened row-major this puts
//! `G_k(R^n)` inside `R^{n^2}` with the Frobenius metric.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{DenseMatrix, IDEMPOTENT_TOL};

mod embed;
mod sample;
mod space;


pub use embed::{
    rp2_embed_r4, rp2_embed_r5, sample_rp2_r4, sample_rp2_r5, sample_so3, sample_unit_sphere,
};
pub use sample::{
    biased_counts, cell_basis, sample_biased, sample_cell, sample_uniform, Proportions,
    MAX_RESAMPLES,
};
pub use space::Space;

/// `(n, k)` for the Grassmannian of k-planes in R^n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GrassmannParams {
    n: usize,
    k: usize,
}

impl GrassmannParams {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidParams(format!(
                "need 1 <= k <= n, got n={n} k={k}"
            )));
        }
        Ok(Self { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Manifold dimension `k(n-k)`.
    pub fn dimension(&self) -> usize {
        self.k * (self.n - self.k)
    }
}

/// A strictly increasing k-tuple `1 <= s_1 < ... < s_k <= n` naming a
/// Schubert cell.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SchubertSymbol(Vec<usize>);

impl SchubertSymbol {
    pub fn new(entries: Vec<usize>, params: GrassmannParams) -> Result<Self> {
        if entries.len() != params.k {
            return Err(Error::InvalidParams(format!(
                "Schubert symbol for k={} needs {} entries, got {}",
                params.k,
                params.k,
                entries.len()
            )));
        }
        let increasing = entries.windows(2).all(|w| w[0] < w[1]);
        let in_range = entries.first().is_some_and(|&e| e >= 1)
            && entries.last().is_some_and(|&e| e <= params.n);
        if !increasing || !in_range {
            return Err(Error::InvalidParams(format!(
                "{entries:?} is not strictly increasing within 1..={}",
                params.n
            )));
        }
        Ok(Self(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// Cell dimension `sum_i (s_i - i)`.
    pub fn cell_dimension(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &s)| s - (i + 1)).sum()
    }
}

impl fmt::Display for SchubertSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// All `C(n, k)` Schubert symbols in lexicographic order.
pub fn schubert_symbols(params: GrassmannParams) -> Vec<SchubertSymbol> {
    let (n, k) = (params.n, params.k);
    let mut out = Vec::new();
    let mut current: Vec<usize> = (1..=k).collect();
    loop {
        out.push(SchubertSymbol(current.clone()));
        // Advance to the next combination: rightmost entry that can still grow.
        let Some(i) = (0..k).rev().find(|&i| current[i] < n - (k - 1 - i)) else {
            break;
        };
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
    out
}

/// Cell dimension of a symbol; see [`SchubertSymbol::cell_dimension`].
pub fn cell_dimension(sigma: &SchubertSymbol) -> usize {
    sigma.cell_dimension()
}

/// Mod-2 Betti numbers by degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BettiProfile(pub Vec<usize>);

impl BettiProfile {
    pub fn degrees(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, degree: usize) -> usize {
        self.0.get(degree).copied().unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for BettiProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for BettiProfile {
    type Err = Error;

    /// Accepts whitespace- or comma-separated nonnegative integers.
    fn from_str(s: &str) -> Result<Self> {
        let betti = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::parse(1, format!("bad Betti number {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if betti.is_empty() {
            return Err(Error::parse(1, "empty Betti profile"));
        }
        Ok(BettiProfile(betti))
    }
}

/// Mod-2 homology of `G_k(R^n)` in degrees `0..=top_dim`: one generator per
/// Schubert cell, since every cellular boundary map vanishes mod 2.
pub fn betti_mod2(params: GrassmannParams, top_dim: usize) -> Result<BettiProfile> {
    if top_dim > params.dimension() {
        return Err(Error::InvalidParams(format!(
            "top_dim {top_dim} exceeds manifold dimension {}",
            params.dimension()
        )));
    }
    let mut betti = vec![0; top_dim + 1];
    for sigma in schubert_symbols(params) {
        let d = sigma.cell_dimension();
        if d <= top_dim {
            betti[d] += 1;
        }
    }
    Ok(BettiProfile(betti))
}

/// A point of `G_k(R^n)` as an exactly symmetric projection matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectionPoint {
    params: GrassmannParams,
    matrix: DenseMatrix,
}

impl ProjectionPoint {
    pub(crate) fn new_unchecked(params: GrassmannParams, matrix: DenseMatrix) -> Self {
        Self { params, matrix }
    }

    /// Wraps a matrix after checking symmetry, idempotency and trace.
    pub fn new(params: GrassmannParams, matrix: DenseMatrix) -> Result<Self> {
        let p = Self { params, matrix };
        p.check()?;
        Ok(p)
    }

    pub fn params(&self) -> GrassmannParams {
        self.params
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.matrix
    }

    /// Row-major coordinates in `R^{n^2}`.
    pub fn coords(&self) -> &[f64] {
        self.matrix.as_slice()
    }

    pub fn symmetry_error(&self) -> f64 {
        self.matrix.max_abs_diff(&self.matrix.transpose())
    }

    pub fn idempotency_error(&self) -> f64 {
        let sq = self.matrix.matmul(&self.matrix).expect("square");
        sq.max_abs_diff(&self.matrix)
    }

    pub fn trace_error(&self) -> f64 {
        (self.matrix.trace() - self.params.k as f64).abs()
    }

    pub fn check(&self) -> Result<()> {
        let n = self.params.n;
        if self.matrix.rows() != n || self.matrix.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: self.matrix.rows() * self.matrix.cols(),
            });
        }
        if self.symmetry_error() != 0.0 {
            return Err(Error::InvalidParams("projection is not symmetric".into()));
        }
        if self.idempotency_error() >= IDEMPOTENT_TOL {
            return Err(Error::InvalidParams("projection is not idempotent".into()));
        }
        if self.trace_error() >= IDEMPOTENT_TOL {
            return Err(Error::InvalidParams(
                "projection trace differs from k".into(),
            ));
        }
        Ok(())
    }
}
