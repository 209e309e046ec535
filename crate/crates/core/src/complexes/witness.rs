use rand::Rng;
use rayon::prelude::*;

use super::{flag_filtration, Filtration, PointCloud, Vertex};
use crate::error::{Error, Result};

/// Landmark indices into a cloud, with the landmark-to-point distance table.
#[derive(Clone, Debug, PartialEq)]
pub struct LandmarkSet {
    indices: Vec<usize>,
    cloud_len: usize,
    /// Row `i` holds the distances from landmark `i` to every cloud point.
    distances: Vec<f64>,
}

impl LandmarkSet {
    /// Landmarks given explicitly (for example read back from a file).
    pub fn from_indices(cloud: &PointCloud, indices: Vec<usize>) -> Result<Self> {
        let n = cloud.len();
        if indices.is_empty() {
            return Err(Error::InvalidParams("landmark set is empty".into()));
        }
        if indices.len() > n {
            return Err(Error::CountTooLarge {
                requested: indices.len(),
                available: n,
            });
        }
        let mut seen = vec![false; n];
        for &i in &indices {
            if i >= n {
                return Err(Error::InvalidParams(format!(
                    "landmark index {i} outside a cloud of {n} points"
                )));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidParams(format!("landmark index {i} repeated")));
            }
        }
        let distances = indices
            .par_iter()
            .flat_map_iter(|&l| distance_row(cloud, l))
            .collect();
        Ok(Self {
            indices,
            cloud_len: n,
            distances,
        })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn cloud_len(&self) -> usize {
        self.cloud_len
    }

    /// Distance from landmark `landmark` (position in the set) to cloud point `point`.
    pub fn distance(&self, landmark: usize, point: usize) -> f64 {
        self.distances[landmark * self.cloud_len + point]
    }

    pub fn row(&self, landmark: usize) -> &[f64] {
        &self.distances[landmark * self.cloud_len..(landmark + 1) * self.cloud_len]
    }
}

fn distance_row(cloud: &PointCloud, from: usize) -> impl Iterator<Item = f64> + '_ {
    (0..cloud.len()).map(move |j| cloud.distance(from, j))
}

fn check_count(cloud: &PointCloud, count: usize) -> Result<()> {
    if cloud.is_empty() {
        return Err(Error::EmptyCloud);
    }
    if count == 0 {
        return Err(Error::InvalidParams(
            "landmark count must be positive".into(),
        ));
    }
    if count > cloud.len() {
        return Err(Error::CountTooLarge {
            requested: count,
            available: cloud.len(),
        });
    }
    Ok(())
}

/// Maxmin landmarks with a uniformly random first landmark.
pub fn maxmin_landmarks<R: Rng + ?Sized>(
    cloud: &PointCloud,
    count: usize,
    rng: &mut R,
) -> Result<LandmarkSet> {
    check_count(cloud, count)?;
    let first = rng.random_range(0..cloud.len());
    maxmin_landmarks_from(cloud, count, first)
}

/// Maxmin landmarks starting from `first`: each new landmark is the
/// non-landmark point farthest from the chosen set, ties to the smallest index.
pub fn maxmin_landmarks_from(
    cloud: &PointCloud,
    count: usize,
    first: usize,
) -> Result<LandmarkSet> {
    check_count(cloud, count)?;
    let n = cloud.len();
    if first >= n {
        return Err(Error::InvalidParams(format!(
            "seed index {first} outside a cloud of {n} points"
        )));
    }
    let mut indices = Vec::with_capacity(count);
    let mut distances = Vec::with_capacity(count * n);
    let mut chosen = vec![false; n];
    let mut nearest = vec![f64::INFINITY; n];
    let mut next = first;
    loop {
        indices.push(next);
        chosen[next] = true;
        let row_start = distances.len();
        distances.extend(distance_row(cloud, next));
        if indices.len() == count {
            break;
        }
        for (d, &fresh) in nearest.iter_mut().zip(&distances[row_start..]) {
            *d = d.min(fresh);
        }
        let mut best: Option<(usize, f64)> = None;
        for (j, &d) in nearest.iter().enumerate() {
            if !chosen[j] && best.is_none_or(|(_, bd)| d > bd) {
                best = Some((j, d));
            }
        }
        next = best.expect("count <= n leaves a candidate").0;
    }
    Ok(LandmarkSet {
        indices,
        cloud_len: n,
        distances,
    })
}

/// `count` distinct landmarks drawn uniformly without replacement.
pub fn random_landmarks<R: Rng + ?Sized>(
    cloud: &PointCloud,
    count: usize,
    rng: &mut R,
) -> Result<LandmarkSet> {
    check_count(cloud, count)?;
    let indices = rand::seq::index::sample(rng, cloud.len(), count).into_vec();
    LandmarkSet::from_indices(cloud, indices)
}

/// Least `R` at which one witness with landmark distances `far` (the larger
/// of the pair) and `nearest_other` (closest remaining landmark) supports an
/// edge, evaluated as the rounded difference `far - nearest_other`.
pub fn witness_edge_threshold(far: f64, nearest_other: f64) -> f64 {
    far - nearest_other
}

/// Lazy witness filtration on the landmarks.
///
/// Edge `(l, l')` enters at the least `R >= 0` such that some cloud point `x`
/// has `d(x,l), d(x,l') <= R + min{ d(x,l'') : l'' != l, l' }`; with only two
/// landmarks that minimum is over nothing and the edge enters at 0. Higher
/// simplices follow the flag rule. Edges entering above `r_max` are dropped.
/// Vertex `i` of the result is landmark `i` of the set.
pub fn witness_filtration(
    landmarks: &LandmarkSet,
    r_max: f64,
    max_dim: usize,
) -> Result<Filtration> {
    witness_filtration_capped(landmarks, r_max, max_dim, usize::MAX)
}

pub fn witness_filtration_capped(
    landmarks: &LandmarkSet,
    r_max: f64,
    max_dim: usize,
    cap: usize,
) -> Result<Filtration> {
    let l = landmarks.len();
    if l < 2 {
        return Err(Error::TooFewLandmarks(l));
    }
    if r_max.is_nan() || r_max < 0.0 {
        return Err(Error::InvalidParams(format!(
            "r_max must be >= 0, got {r_max}"
        )));
    }
    let thresholds = edge_thresholds(landmarks);
    let mut edges = Vec::new();
    if max_dim > 0 {
        let mut k = 0;
        for a in 0..l {
            for b in a + 1..l {
                let value = if thresholds[k] > 0.0 {
                    thresholds[k]
                } else {
                    0.0
                };
                if value <= r_max {
                    edges.push((a as Vertex, b as Vertex, value));
                }
                k += 1;
            }
        }
    }
    flag_filtration(l, &edges, max_dim, cap)
}

/// Minimum over witnesses of the per-witness threshold, for every landmark
/// pair in row-major upper-triangular order.
fn edge_thresholds(landmarks: &LandmarkSet) -> Vec<f64> {
    let l = landmarks.len();
    let pairs = l * (l - 1) / 2;
    if l == 2 {
        return vec![f64::NEG_INFINITY];
    }
    (0..landmarks.cloud_len())
        .into_par_iter()
        .fold(
            || vec![f64::INFINITY; pairs],
            |mut best, x| {
                let column: Vec<f64> = (0..l).map(|i| landmarks.distance(i, x)).collect();
                let nearest = three_nearest(&column);
                let mut k = 0;
                for a in 0..l {
                    for b in a + 1..l {
                        let other = nearest
                            .iter()
                            .find(|&&i| i != a && i != b)
                            .map(|&i| column[i])
                            .expect("three distinct landmarks");
                        let t = witness_edge_threshold(column[a].max(column[b]), other);
                        if t < best[k] {
                            best[k] = t;
                        }
                        k += 1;
                    }
                }
                best
            },
        )
        .reduce(
            || vec![f64::INFINITY; pairs],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x = x.min(y);
                }
                a
            },
        )
}

/// Indices of the three smallest entries (ties to the smaller index).
fn three_nearest(column: &[f64]) -> [usize; 3] {
    let mut order: Vec<usize> = (0..column.len()).collect();
    let key = |i: &usize| (column[*i], *i);
    order.select_nth_unstable_by(2, |a, b| {
        key(a).partial_cmp(&key(b)).expect("finite distances")
    });
    let mut top = [order[0], order[1], order[2]];
    top.sort_by(|a, b| key(a).partial_cmp(&key(b)).expect("finite distances"));
    top
}
