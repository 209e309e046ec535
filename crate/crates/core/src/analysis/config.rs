use std::path::PathBuf;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::grassmann::{Proportions, Space};

/// Default simplex cap for pipeline runs.
pub const DEFAULT_CAP: usize = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LandmarkMethod {
    Maxmin,
    Random,
}

impl std::str::FromStr for LandmarkMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "maxmin" => Ok(Self::Maxmin),
            "random" => Ok(Self::Random),
            _ => Err(Error::InvalidParams(format!(
                "landmark method must be maxmin or random, got {s:?}"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComplexKind {
    Rips,
    Witness {
        landmarks: usize,
        method: LandmarkMethod,
    },
}

/// One experiment: sample a space, build a filtration, compute its barcode
/// and look for windows with the space's homology.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub space: Space,
    pub points: usize,
    pub complex: ComplexKind,
    /// Largest filtration value built.
    pub r_max: f64,
    /// Highest homological degree computed; simplices go one dimension higher.
    pub max_dim: usize,
    /// Highest degree compared against the target.
    pub top_dim: usize,
    pub seed: u64,
    pub proportions: Option<Proportions>,
    pub output: PathBuf,
    pub cap: usize,
}

/// Flat TOML form of [`ExperimentConfig`].
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFields {
    pub space: String,
    pub points: usize,
    pub complex: String,
    pub r_max: Option<f64>,
    pub max_dim: usize,
    pub top_dim: Option<usize>,
    pub landmarks: Option<usize>,
    pub landmark_method: Option<String>,
    #[serde(default)]
    pub seed: u64,
    pub proportions: Option<String>,
    pub output: Option<PathBuf>,
    pub cap: Option<usize>,
}

impl ConfigFields {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| {
            let line = e.span().map_or(0, |s| {
                text[..s.start.min(text.len())].lines().count().max(1)
            });
            Error::parse(line, e.message().to_string())
        })
    }
}

impl ExperimentConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        Self::from_fields(ConfigFields::from_toml(text)?)
    }

    /// Checks the fields and fills defaults: `r_max` per space and complex,
    /// `top_dim` as `max_dim` capped at the manifold dimension, output `out`.
    pub fn from_fields(f: ConfigFields) -> Result<Self> {
        let space: Space = f.space.parse()?;
        let complex = match f.complex.as_str() {
            "rips" | "vr" => {
                if f.landmarks.is_some() || f.landmark_method.is_some() {
                    return Err(Error::InvalidParams(
                        "landmark settings only apply to the witness complex".into(),
                    ));
                }
                ComplexKind::Rips
            }
            "witness" => {
                let landmarks = f.landmarks.ok_or_else(|| {
                    Error::InvalidParams("witness complex needs a landmark count".into())
                })?;
                if landmarks < 2 {
                    return Err(Error::TooFewLandmarks(landmarks));
                }
                let method = f.landmark_method.as_deref().unwrap_or("maxmin").parse()?;
                ComplexKind::Witness { landmarks, method }
            }
            other => {
                return Err(Error::InvalidParams(format!(
                    "complex must be rips or witness, got {other:?}"
                )));
            }
        };
        if f.points == 0 {
            return Err(Error::InvalidParams("points must be positive".into()));
        }
        if let ComplexKind::Witness { landmarks, .. } = complex {
            if landmarks > f.points {
                return Err(Error::CountTooLarge {
                    requested: landmarks,
                    available: f.points,
                });
            }
        }
        let r_max = f.r_max.unwrap_or_else(|| default_r_max(space, complex));
        if r_max.is_nan() || r_max <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "r_max must be positive, got {r_max}"
            )));
        }
        let top_dim = f
            .top_dim
            .unwrap_or(f.max_dim.min(space.manifold_dimension()));
        if top_dim > space.manifold_dimension() {
            return Err(Error::InvalidParams(format!(
                "top_dim {top_dim} exceeds the dimension {} of {space}",
                space.manifold_dimension()
            )));
        }
        if top_dim > f.max_dim {
            return Err(Error::InvalidParams(format!(
                "top_dim {top_dim} exceeds max_dim {}",
                f.max_dim
            )));
        }
        let proportions = f.proportions.as_deref().map(str::parse).transpose()?;
        Ok(Self {
            space,
            points: f.points,
            complex,
            r_max,
            max_dim: f.max_dim,
            top_dim,
            seed: f.seed,
            proportions,
            output: f.output.unwrap_or_else(|| PathBuf::from("out")),
            cap: f.cap.unwrap_or(DEFAULT_CAP),
        })
    }
}

/// A parameter range covering where the homology of each built-in space
/// typically appears for the sample sizes in the examples.
pub fn default_r_max(space: Space, complex: ComplexKind) -> f64 {
    match (space, complex) {
        (_, ComplexKind::Witness { .. }) => 0.5,
        (Space::Rp2R4, _) => 1.0,
        (Space::Rp2R5, _) => 1.0,
        (Space::Rp3, _) => 2.4,
        (Space::Grassmann(_), _) => 1.0,
    }
}
