use std::fmt;
use std::str::FromStr;

use rand::Rng;

use super::embed::{sample_rp2_r4, sample_rp2_r5, sample_so3};
use super::sample::{sample_biased, sample_uniform, Proportions};
use super::{betti_mod2, BettiProfile, GrassmannParams};
use crate::error::{Error, Result};

/// A manifold the pipeline knows how to sample, together with its embedding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    /// `G_k(R^n)` as projection matrices in `R^{n^2}`.
    Grassmann(GrassmannParams),
    /// `RP^2` in `R^4`.
    Rp2R4,
    /// `RP^2` isometrically in `R^5`.
    Rp2R5,
    /// `RP^3` as `SO(3)` in `R^9`.
    Rp3,
}

impl Space {
    /// The Grassmannian whose Schubert cells give the target homology;
    /// `RP^m` is `G_1(R^{m+1})`.
    pub fn homology_model(&self) -> GrassmannParams {
        match self {
            Space::Grassmann(p) => *p,
            Space::Rp2R4 | Space::Rp2R5 => GrassmannParams::new(3, 1).expect("valid"),
            Space::Rp3 => GrassmannParams::new(4, 1).expect("valid"),
        }
    }

    pub fn manifold_dimension(&self) -> usize {
        self.homology_model().dimension()
    }

    pub fn ambient_dimension(&self) -> usize {
        match self {
            Space::Grassmann(p) => p.n() * p.n(),
            Space::Rp2R4 => 4,
            Space::Rp2R5 => 5,
            Space::Rp3 => 9,
        }
    }

    /// Mod-2 Betti numbers of the manifold in degrees `0..=top_dim`.
    pub fn target(&self, top_dim: usize) -> Result<BettiProfile> {
        betti_mod2(self.homology_model(), top_dim)
    }

    /// Draws `count` points. `proportions` selects Schubert-biased sampling
    /// and is only meaningful for Grassmannians.
    pub fn sample<R: Rng + ?Sized>(
        &self,
        count: usize,
        proportions: Option<&Proportions>,
        rng: &mut R,
    ) -> Result<Vec<Vec<f64>>> {
        if count == 0 {
            return Err(Error::InvalidParams("sample count must be positive".into()));
        }
        if proportions.is_some() && !matches!(self, Space::Grassmann(_)) {
            return Err(Error::InvalidParams(format!(
                "cell proportions only apply to Grassmannians, not {self}"
            )));
        }
        Ok(match self {
            Space::Grassmann(p) => {
                let points = match proportions {
                    Some(props) => sample_biased(*p, count, props, rng)?,
                    None => sample_uniform(*p, count, rng)?,
                };
                points.into_iter().map(|pt| pt.coords().to_vec()).collect()
            }
            Space::Rp2R4 => sample_rp2_r4(count, rng)
                .into_iter()
                .map(Vec::from)
                .collect(),
            Space::Rp2R5 => sample_rp2_r5(count, rng)
                .into_iter()
                .map(Vec::from)
                .collect(),
            Space::Rp3 => sample_so3(count, rng).into_iter().map(Vec::from).collect(),
        })
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Grassmann(p) => write!(f, "g{}r{}", p.k(), p.n()),
            Space::Rp2R4 => f.write_str("rp2-r4"),
            Space::Rp2R5 => f.write_str("rp2-r5"),
            Space::Rp3 => f.write_str("rp3"),
        }
    }
}

impl FromStr for Space {
    type Err = Error;

    /// `rp2-r4`, `rp2-r5`, `rp3` (or `so3`), or `g<k>r<n>` such as `g2r4`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "rp2-r4" => Ok(Space::Rp2R4),
            "rp2-r5" => Ok(Space::Rp2R5),
            "rp3" | "so3" => Ok(Space::Rp3),
            other => {
                let bad = || Error::InvalidParams(format!("unknown space {s:?}"));
                let rest = other.strip_prefix('g').ok_or_else(bad)?;
                let (k, n) = rest.split_once('r').ok_or_else(bad)?;
                let k: usize = k.parse().map_err(|_| bad())?;
                let n: usize = n.parse().map_err(|_| bad())?;
                Ok(Space::Grassmann(GrassmannParams::new(n, k)?))
            }
        }
    }
}
