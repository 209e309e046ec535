use rayon::prelude::*;

use super::{flag_filtration, Filtration, PointCloud, Vertex};
use crate::error::{Error, Result};

/// Vietoris-Rips filtration: edge value is the pairwise distance, kept when
/// strictly below `r_max`; simplices up to dimension `max_dim`.
pub fn vietoris_rips(cloud: &PointCloud, r_max: f64, max_dim: usize) -> Result<Filtration> {
    vietoris_rips_capped(cloud, r_max, max_dim, usize::MAX)
}

/// [`vietoris_rips`] that gives up with `ResourceLimit` past `cap` simplices.
pub fn vietoris_rips_capped(
    cloud: &PointCloud,
    r_max: f64,
    max_dim: usize,
    cap: usize,
) -> Result<Filtration> {
    if cloud.is_empty() {
        return Err(Error::EmptyCloud);
    }
    if r_max.is_nan() || r_max <= 0.0 {
        return Err(Error::InvalidParams(format!(
            "r_max must be positive, got {r_max}"
        )));
    }
    let n = cloud.len();
    let edges: Vec<(Vertex, Vertex, f64)> = if max_dim == 0 {
        Vec::new()
    } else {
        (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                (i + 1..n).filter_map(move |j| {
                    let d = cloud.distance(i, j);
                    (d < r_max).then_some((i as Vertex, j as Vertex, d))
                })
            })
            .collect()
    };
    flag_filtration(n, &edges, max_dim, cap)
}
