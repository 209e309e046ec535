use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_distr::StandardNormal;

use super::{schubert_symbols, GrassmannParams, ProjectionPoint, SchubertSymbol};
use crate::error::{Error, Result};
use crate::linalg::{
    gaussian_vector, gram_schmidt, projection_matrix, random_orthogonal, DenseMatrix, Frame,
    DEPENDENCE_TOL,
};

/// Gram-Schmidt failures tolerated per point before giving up.
pub const MAX_RESAMPLES: usize = 100;

const PROPORTION_SUM_TOL: f64 = 1e-9;

/// Uniform ("naive") sampling: orthonormalize `k` Gaussian vectors and take
/// the projection onto their span. Lands in the top cell almost surely.
pub fn sample_uniform<R: Rng + ?Sized>(
    params: GrassmannParams,
    count: usize,
    rng: &mut R,
) -> Result<Vec<ProjectionPoint>> {
    if count == 0 {
        return Err(Error::InvalidParams("sample count must be positive".into()));
    }
    (0..count).map(|_| uniform_point(params, rng)).collect()
}

fn uniform_point<R: Rng + ?Sized>(params: GrassmannParams, rng: &mut R) -> Result<ProjectionPoint> {
    let mut last = None;
    for _ in 0..MAX_RESAMPLES {
        let vectors: Vec<Vec<f64>> = (0..params.k())
            .map(|_| gaussian_vector(params.n(), rng))
            .collect();
        match gram_schmidt(&vectors, DEPENDENCE_TOL) {
            Ok(frame) => {
                return Ok(ProjectionPoint::new_unchecked(
                    params,
                    projection_matrix(&frame),
                ))
            }
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

/// The `n x k` echelon matrix whose column space lies in the cell `e(sigma)`.
///
/// Column `i` has a 1 in row `s_i`, zeros below it and in the pivot rows of
/// earlier columns, and standard normal entries elsewhere above the pivot.
/// That leaves exactly `d(sigma)` free entries.
pub fn cell_basis<R: Rng + ?Sized>(
    params: GrassmannParams,
    sigma: &SchubertSymbol,
    rng: &mut R,
) -> DenseMatrix {
    let (n, k) = (params.n(), params.k());
    assert_eq!(sigma.entries().len(), k, "symbol does not match params");
    let mut b = DenseMatrix::zeros(n, k);
    let pivots: Vec<usize> = sigma.entries().iter().map(|s| s - 1).collect();
    for (col, &pivot) in pivots.iter().enumerate() {
        for row in 0..pivot {
            if !pivots[..col].contains(&row) {
                b[(row, col)] = rng.sample(StandardNormal);
            }
        }
        b[(pivot, col)] = 1.0;
    }
    b
}

/// One point from the Schubert cell `e(sigma)`, conjugated by a fresh Haar
/// orthogonal matrix: `X (B B^T) X^T` with `B` orthonormalized.
pub fn sample_cell<R: Rng + ?Sized>(
    params: GrassmannParams,
    sigma: &SchubertSymbol,
    rng: &mut R,
) -> ProjectionPoint {
    let b = cell_basis(params, sigma, rng);
    // Every pivot is 1 on a row that earlier columns do not touch, so the
    // residuals are at least 1 and this cannot fail.
    let frame =
        gram_schmidt(&b.columns(), DEPENDENCE_TOL).expect("echelon columns are independent");
    let x = random_orthogonal(params.n(), rng);
    let rotated: Vec<Vec<f64>> = frame
        .columns()
        .iter()
        .map(|c| x.mul_vec(c).expect("dimensions agree"))
        .collect();
    let rotated = Frame::from_orthonormal(params.n(), rotated);
    ProjectionPoint::new_unchecked(params, projection_matrix(&rotated))
}

/// Fraction of the sample requested from each cell dimension.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Proportions(pub BTreeMap<usize, f64>);

impl Proportions {
    pub fn new(entries: impl IntoIterator<Item = (usize, f64)>) -> Self {
        Self(entries.into_iter().collect())
    }
}

impl FromStr for Proportions {
    type Err = Error;

    /// Parses `dim:fraction` pairs separated by commas, e.g. `1:0.05,2:0.3`.
    fn from_str(s: &str) -> Result<Self> {
        let mut map = BTreeMap::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (dim, frac) = part.split_once(':').ok_or_else(|| {
                Error::InvalidProportions(format!("expected dim:fraction, got {part:?}"))
            })?;
            let dim: usize = dim
                .trim()
                .parse()
                .map_err(|_| Error::InvalidProportions(format!("bad cell dimension {dim:?}")))?;
            let frac: f64 = frac
                .trim()
                .parse()
                .map_err(|_| Error::InvalidProportions(format!("bad fraction {frac:?}")))?;
            if map.insert(dim, frac).is_some() {
                return Err(Error::InvalidProportions(format!(
                    "dimension {dim} given twice"
                )));
            }
        }
        Ok(Self(map))
    }
}

impl fmt::Display for Proportions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (d, p)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}:{p}")?;
        }
        Ok(())
    }
}

/// Splits `count` across cell dimensions by the largest-remainder method.
/// Ties in the remainder go to the smaller dimension.
pub fn biased_counts(
    params: GrassmannParams,
    count: usize,
    proportions: &Proportions,
) -> Result<BTreeMap<usize, usize>> {
    let top = params.dimension();
    let mut sum = 0.0;
    for (&dim, &frac) in &proportions.0 {
        if !frac.is_finite() || frac < 0.0 {
            return Err(Error::InvalidProportions(format!(
                "fraction {frac} for dimension {dim}"
            )));
        }
        if frac > 0.0 && dim > top {
            return Err(Error::InvalidProportions(format!(
                "no cells of dimension {dim} in a manifold of dimension {top}"
            )));
        }
        sum += frac;
    }
    if (sum - 1.0).abs() > PROPORTION_SUM_TOL {
        return Err(Error::InvalidProportions(format!(
            "fractions sum to {sum}, not 1"
        )));
    }

    let exact: Vec<(usize, f64)> = proportions
        .0
        .iter()
        .filter(|(_, &f)| f > 0.0)
        .map(|(&d, &f)| (d, count as f64 * f))
        .collect();
    let mut counts: BTreeMap<usize, usize> = exact
        .iter()
        .map(|&(d, x)| (d, x.floor() as usize))
        .collect();
    let assigned: usize = counts.values().sum();
    let remaining = count.saturating_sub(assigned);
    let mut by_remainder = exact;
    by_remainder.sort_by(|a, b| {
        (b.1 - b.1.floor())
            .total_cmp(&(a.1 - a.1.floor()))
            .then(a.0.cmp(&b.0))
    });
    for (d, _) in by_remainder.into_iter().take(remaining) {
        *counts.get_mut(&d).expect("present") += 1;
    }
    Ok(counts)
}

/// Schubert-biased sampling. Each cell dimension receives its share of
/// `count`; within a dimension the share is split evenly over the cells, with
/// any remainder going to distinct cells chosen uniformly at random.
///
/// Points come out grouped by dimension, then by symbol.
pub fn sample_biased<R: Rng + ?Sized>(
    params: GrassmannParams,
    count: usize,
    proportions: &Proportions,
    rng: &mut R,
) -> Result<Vec<ProjectionPoint>> {
    if count == 0 {
        return Err(Error::InvalidParams("sample count must be positive".into()));
    }
    let per_dim = biased_counts(params, count, proportions)?;
    let symbols = schubert_symbols(params);
    let mut out = Vec::with_capacity(count);
    for (&dim, &dim_count) in &per_dim {
        let cells: Vec<&SchubertSymbol> = symbols
            .iter()
            .filter(|s| s.cell_dimension() == dim)
            .collect();
        let m = cells.len();
        let mut per_cell = vec![dim_count / m; m];
        for i in rand::seq::index::sample(rng, m, dim_count % m) {
            per_cell[i] += 1;
        }
        for (sigma, &c) in cells.iter().zip(&per_cell) {
            for _ in 0..c {
                out.push(sample_cell(params, sigma, rng));
            }
        }
    }
    Ok(out)
}
