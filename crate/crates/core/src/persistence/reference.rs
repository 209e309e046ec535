//! Slow rank-based references for checking the reduction engines.

use super::{BoundaryMatrix, Pairing};
use crate::complexes::Filtration;
use crate::grassmann::BettiProfile;

/// Rank over Z/2 of the given columns (bitsets of equal length).
pub fn rank_mod2(columns: impl IntoIterator<Item = Vec<u64>>) -> usize {
    let mut basis: Vec<Vec<u64>> = Vec::new();
    for mut col in columns {
        for b in &basis {
            let pivot = leading_bit(b).expect("basis vectors are nonzero");
            if col[pivot / 64] >> (pivot % 64) & 1 == 1 {
                for (x, y) in col.iter_mut().zip(b) {
                    *x ^= y;
                }
            }
        }
        if leading_bit(&col).is_some() {
            basis.push(col);
        }
    }
    basis.len()
}

fn leading_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .rev()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + 63 - w.leading_zeros() as usize)
}

fn bitset(len: usize, rows: impl IntoIterator<Item = usize>) -> Vec<u64> {
    let mut v = vec![0u64; len.div_ceil(64).max(1)];
    for r in rows {
        v[r / 64] |= 1 << (r % 64);
    }
    v
}

/// Betti numbers in degrees `0..=max_degree` of the subcomplex of simplices
/// with value at most `r`, as `n_d - rank(boundary_d) - rank(boundary_{d+1})`.
pub fn sublevel_betti(matrix: &BoundaryMatrix, r: f64, max_degree: usize) -> BettiProfile {
    let k = (0..matrix.len())
        .take_while(|&j| matrix.value(j) <= r)
        .count();
    let rank = |d: usize| {
        if d == 0 {
            return 0;
        }
        rank_mod2(
            (0..k)
                .filter(|&j| matrix.dim(j) == d)
                .map(|j| bitset(k, matrix.column(j).iter().map(|&x| x as usize))),
        )
    };
    let ranks: Vec<usize> = (0..=max_degree + 1).map(rank).collect();
    BettiProfile(
        (0..=max_degree)
            .map(|d| (0..k).filter(|&j| matrix.dim(j) == d).count() - ranks[d] - ranks[d + 1])
            .collect(),
    )
}

/// Convenience wrapper of [`sublevel_betti`] on a filtration.
pub fn filtration_betti(
    filtration: &Filtration,
    r: f64,
    max_degree: usize,
) -> crate::Result<BettiProfile> {
    Ok(sublevel_betti(
        &super::build_boundary(filtration)?,
        r,
        max_degree,
    ))
}

/// Pairing from ranks of lower-left submatrices: `(i, j)` is a pair exactly
/// when `r(i, j) - r(i + 1, j) - r(i, j - 1) + r(i + 1, j - 1) = 1`, where
/// `r(i, j)` is the rank of rows `i..` and columns `..=j`. Cubic in size per
/// rank, so only for tiny matrices.
pub fn pairing_by_rank(matrix: &BoundaryMatrix) -> Pairing {
    let n = matrix.len();
    let r = |i: usize, j: Option<usize>| -> usize {
        let Some(j) = j else { return 0 };
        rank_mod2((0..=j).map(|c| {
            bitset(
                n,
                matrix
                    .column(c)
                    .iter()
                    .map(|&x| x as usize)
                    .filter(|&x| x >= i),
            )
        }))
    };
    let mut pairs = Vec::new();
    let mut is_low = vec![false; n];
    let mut is_zero = vec![false; n];
    for j in 0..n {
        let prev = j.checked_sub(1);
        is_zero[j] = r(0, Some(j)) == r(0, prev);
        for i in 0..j {
            if r(i, Some(j)) + r(i + 1, prev) == r(i + 1, Some(j)) + r(i, prev) + 1 {
                pairs.push((i, j));
                is_low[i] = true;
            }
        }
    }
    let essential = (0..n).filter(|&j| is_zero[j] && !is_low[j]).collect();
    Pairing::from_parts(pairs, essential)
}
