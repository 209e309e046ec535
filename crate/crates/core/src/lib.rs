//! Approximate triangulations of Grassmann manifolds.
//!
//! Sample a point cloud on `G_k(R^n)` (or one of the projective-space
//! embeddings), build a Vietoris-Rips or witness filtration on it, compute
//! persistent homology over `Z/2`, and report the parameter windows where the
//! complex has the homology of the manifold.

pub mod analysis;
pub mod complexes;
pub mod error;
pub mod grassmann;
pub mod io;
pub mod linalg;
pub mod persistence;
pub mod svg;

pub use error::{Error, Result};
