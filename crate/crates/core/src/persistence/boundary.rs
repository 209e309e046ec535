use rayon::prelude::*;
use smallvec::SmallVec;

use crate::complexes::Filtration;
use crate::error::{Error, Result};

/// Sparse Z/2 boundary matrix in compressed-column form.
///
/// Column `j` is simplex `j` of the filtration and lists the positions of its
/// facets in increasing order.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryMatrix {
    offsets: Vec<usize>,
    rows: Vec<u32>,
    dims: Vec<u8>,
    values: Vec<f64>,
}

impl BoundaryMatrix {
    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn column(&self, j: usize) -> &[u32] {
        &self.rows[self.offsets[j]..self.offsets[j + 1]]
    }

    pub fn dim(&self, j: usize) -> usize {
        self.dims[j] as usize
    }

    pub fn value(&self, j: usize) -> f64 {
        self.values[j]
    }

    /// Largest column dimension (0 when empty).
    pub fn max_dim(&self) -> usize {
        self.dims.iter().copied().max().unwrap_or(0) as usize
    }

    /// Transpose restricted to rows of dimension `lo..=hi`: for each such
    /// simplex, the positions of its cofacets in increasing order. Other rows
    /// get empty lists.
    pub(crate) fn cofacets(&self, lo: usize, hi: usize) -> (Vec<usize>, Vec<u32>) {
        let n = self.len();
        let wanted = |j: usize| (lo + 1..=hi + 1).contains(&self.dim(j));
        let mut counts = vec![0usize; n + 1];
        for j in (0..n).filter(|&j| wanted(j)) {
            for &r in self.column(j) {
                counts[r as usize + 1] += 1;
            }
        }
        for i in 0..n {
            counts[i + 1] += counts[i];
        }
        let mut fill = counts.clone();
        let mut out = vec![0u32; counts[n]];
        for j in (0..n).filter(|&j| wanted(j)) {
            for &r in self.column(j) {
                out[fill[r as usize]] = j as u32;
                fill[r as usize] += 1;
            }
        }
        (counts, out)
    }
}

/// Boundary matrix of a filtration.
pub fn build_boundary(filtration: &Filtration) -> Result<BoundaryMatrix> {
    let simplices = filtration.simplices();
    if simplices.len() > u32::MAX as usize {
        return Err(Error::ResourceLimit {
            cap: u32::MAX as usize,
        });
    }
    let index = filtration.index_map();
    let columns: Vec<SmallVec<[u32; 8]>> = simplices
        .par_iter()
        .map(|s| {
            let mut col = SmallVec::new();
            for facet in s.facets() {
                match index.get(facet.as_slice()) {
                    Some(&pos) => col.push(pos as u32),
                    None => {
                        return Err(Error::MissingFace {
                            simplex: s.vertices().to_vec(),
                        })
                    }
                }
            }
            col.sort_unstable();
            Ok(col)
        })
        .collect::<Result<_>>()?;
    let mut offsets = Vec::with_capacity(columns.len() + 1);
    offsets.push(0);
    let mut rows = Vec::with_capacity(columns.iter().map(SmallVec::len).sum());
    for col in &columns {
        rows.extend_from_slice(col);
        offsets.push(rows.len());
    }
    Ok(BoundaryMatrix {
        offsets,
        rows,
        dims: simplices.iter().map(|s| s.dim() as u8).collect(),
        values: simplices.iter().map(|s| s.value()).collect(),
    })
}
