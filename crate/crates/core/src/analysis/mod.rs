//! Reading a barcode for the parameter ranges where the complex has the
//! homology of the sampled manifold, and exporting the complex there.

use crate::complexes::{Filtration, Simplex};
use crate::grassmann::BettiProfile;
use crate::persistence::{betti_at, Barcode};

mod config;
mod pipeline;


pub use config::{
    default_r_max, ComplexKind, ConfigFields, ExperimentConfig, LandmarkMethod, DEFAULT_CAP,
};
pub use pipeline::{choose_landmarks, landmark_rng, run_pipeline, sample_rng, PipelineOutput};

/// Half-open parameter range `[start, end)`; `end` may be infinite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Window {
    pub start: f64,
    pub end: f64,
}

impl Window {
    pub fn width(&self) -> f64 {
        self.end - self.start
    }

    pub fn contains(&self, r: f64) -> bool {
        self.start <= r && r < self.end
    }

    /// A finite point inside the window.
    pub fn midpoint(&self) -> f64 {
        if self.end.is_finite() {
            self.start + (self.end - self.start) / 2.0
        } else {
            self.start + 1.0
        }
    }

    pub fn intersects(&self, lo: f64, hi: f64) -> bool {
        self.start <= hi && lo < self.end
    }
}

/// Where the Betti profile of a barcode equals a target.
#[derive(Clone, Debug, PartialEq)]
pub struct WindowReport {
    pub target: BettiProfile,
    /// Degrees `0..=top_dim` are compared.
    pub top_dim: usize,
    /// Sorted distinct finite birth and death values.
    pub critical_values: Vec<f64>,
    /// Maximal matching ranges, sorted and disjoint.
    pub windows: Vec<Window>,
}

impl WindowReport {
    pub fn found(&self) -> bool {
        !self.windows.is_empty()
    }

    /// The widest window, earliest on ties.
    pub fn widest(&self) -> Option<Window> {
        self.windows
            .iter()
            .copied()
            .fold(None, |best: Option<Window>, w| match best {
                Some(b) if b.width() >= w.width() => Some(b),
                _ => Some(w),
            })
    }

    /// Windows cut at `r_max`, beyond which the filtration was not built.
    pub fn clipped(mut self, r_max: f64) -> Self {
        self.windows = self
            .windows
            .into_iter()
            .filter(|w| w.start < r_max)
            .map(|w| Window {
                start: w.start,
                end: w.end.min(r_max),
            })
            .collect();
        self
    }
}

fn profile_matches(profile: &BettiProfile, target: &BettiProfile, top_dim: usize) -> bool {
    (0..=top_dim).all(|d| profile.get(d) == target.get(d))
}

/// Exact windows for `r >= 0`. The profile is constant on each piece between
/// consecutive critical values (closed at the left end), so one evaluation
/// per piece decides it; adjacent matching pieces are merged.
pub fn matching_windows(barcode: &Barcode, target: &BettiProfile, top_dim: usize) -> WindowReport {
    let critical_values = barcode.critical_values();
    let mut starts = vec![0.0];
    starts.extend(critical_values.iter().copied().filter(|&v| v > 0.0));
    let mut windows: Vec<Window> = Vec::new();
    for (i, &start) in starts.iter().enumerate() {
        let end = starts.get(i + 1).copied().unwrap_or(f64::INFINITY);
        if !profile_matches(&betti_at(barcode, start), target, top_dim) {
            continue;
        }
        match windows.last_mut() {
            Some(last) if last.end == start => last.end = end,
            _ => windows.push(Window { start, end }),
        }
    }
    WindowReport {
        target: target.clone(),
        top_dim,
        critical_values,
        windows,
    }
}

/// The subcomplex of simplices with value at most `r`, in filtration order.
pub fn export_complex(filtration: &Filtration, r: f64) -> Vec<Simplex> {
    filtration.simplices()[..filtration.count_at(r)].to_vec()
}
