//! Low-dimensional embeddings used for the projective-space experiments.

use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{gaussian_vector, random_orthogonal};

const UNIT_TOL: f64 = 1e-10;

fn check_unit(p: [f64; 3]) -> Result<()> {
    let norm = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
    if (norm - 1.0).abs() > UNIT_TOL {
        return Err(Error::NotUnit { norm });
    }
    Ok(())
}

/// `(x, y, z) -> (xy, xz, y^2 - z^2, 2yz)`, an even map `S^2 -> R^4` that
/// factors through `RP^2`.
pub fn rp2_embed_r4(p: [f64; 3]) -> Result<[f64; 4]> {
    check_unit(p)?;
    let [x, y, z] = p;
    Ok([x * y, x * z, y * y - z * z, 2.0 * y * z])
}

/// The isometric (Veronese-type) embedding `RP^2 -> R^5`; its image lies on
/// the sphere of radius `1/sqrt(3)`.
pub fn rp2_embed_r5(p: [f64; 3]) -> Result<[f64; 5]> {
    check_unit(p)?;
    let [x, y, z] = p;
    let (xx, yy, zz) = (x * x, y * y, z * z);
    Ok([
        y * z,
        x * z,
        x * y,
        0.5 * (xx - yy),
        (xx + yy - 2.0 * zz) / (2.0 * 3f64.sqrt()),
    ])
}

/// Uniform point on `S^2` (normalized Gaussian).
pub fn sample_unit_sphere<R: Rng + ?Sized>(rng: &mut R) -> [f64; 3] {
    loop {
        let g = gaussian_vector(3, rng);
        let norm = (g[0] * g[0] + g[1] * g[1] + g[2] * g[2]).sqrt();
        if norm > 1e-12 {
            return [g[0] / norm, g[1] / norm, g[2] / norm];
        }
    }
}

pub fn sample_rp2_r4<R: Rng + ?Sized>(count: usize, rng: &mut R) -> Vec<[f64; 4]> {
    (0..count)
        .map(|_| rp2_embed_r4(sample_unit_sphere(rng)).expect("sphere sample is unit"))
        .collect()
}

pub fn sample_rp2_r5<R: Rng + ?Sized>(count: usize, rng: &mut R) -> Vec<[f64; 5]> {
    (0..count)
        .map(|_| rp2_embed_r5(sample_unit_sphere(rng)).expect("sphere sample is unit"))
        .collect()
}

/// Haar-random rotations in `SO(3)`, flattened row-major into `R^9`.
///
/// A Haar orthogonal draw with determinant -1 has its first column negated,
/// which maps Haar measure on `O(3) \ SO(3)` onto Haar measure on `SO(3)`.
pub fn sample_so3<R: Rng + ?Sized>(count: usize, rng: &mut R) -> Vec<[f64; 9]> {
    (0..count)
        .map(|_| {
            let q = random_orthogonal(3, rng);
            let mut m: [f64; 9] = q.as_slice().try_into().expect("3x3");
            if det3(&m) < 0.0 {
                for row in 0..3 {
                    m[row * 3] = -m[row * 3];
                }
            }
            m
        })
        .collect()
}

pub(crate) fn det3(m: &[f64; 9]) -> f64 {
    m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6])
        + m[2] * (m[3] * m[7] - m[4] * m[6])
}
