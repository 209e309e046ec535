use super::{build_boundary, cohomology_pairing, BoundaryMatrix, Pairing};
use crate::complexes::Filtration;
use crate::error::{Error, Result};
use crate::grassmann::BettiProfile;

/// A bar `[birth, death)`; `death` is `f64::INFINITY` for an essential class.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    pub birth: f64,
    pub death: f64,
}

impl Interval {
    pub fn new(birth: f64, death: f64) -> Self {
        Self { birth, death }
    }

    pub fn is_infinite(&self) -> bool {
        self.death == f64::INFINITY
    }

    /// Closed at birth, open at death.
    pub fn contains(&self, r: f64) -> bool {
        self.birth <= r && r < self.death
    }

    pub fn length(&self) -> f64 {
        self.death - self.birth
    }
}

/// Bars grouped by homological degree, each group sorted by birth then death.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Barcode {
    degrees: Vec<Vec<Interval>>,
}

impl Barcode {
    /// Bars for degrees `0..degree_count`. Zero-length bars are dropped.
    pub fn new(
        degree_count: usize,
        bars: impl IntoIterator<Item = (usize, Interval)>,
    ) -> Result<Self> {
        let mut degrees = vec![Vec::new(); degree_count];
        for (degree, bar) in bars {
            if degree >= degree_count {
                return Err(Error::InvalidParams(format!(
                    "bar in degree {degree} but only {degree_count} degrees"
                )));
            }
            if !bar.birth.is_finite() || bar.death.is_nan() || bar.death < bar.birth {
                return Err(Error::InvalidParams(format!(
                    "bad interval [{}, {})",
                    bar.birth, bar.death
                )));
            }
            if bar.death > bar.birth {
                degrees[degree].push(bar);
            }
        }
        for bars in &mut degrees {
            bars.sort_by(|a, b| {
                a.birth
                    .total_cmp(&b.birth)
                    .then(a.death.total_cmp(&b.death))
            });
        }
        Ok(Self { degrees })
    }

    /// Bars from a pairing, keeping degrees `0..=max_degree`.
    pub fn from_pairing(matrix: &BoundaryMatrix, pairing: &Pairing, max_degree: usize) -> Self {
        let finite = pairing.pairs().iter().map(|&(b, d)| {
            (
                matrix.dim(b),
                Interval::new(matrix.value(b), matrix.value(d)),
            )
        });
        let infinite = pairing
            .essential()
            .iter()
            .map(|&b| (matrix.dim(b), Interval::new(matrix.value(b), f64::INFINITY)));
        let bars = finite
            .chain(infinite)
            .filter(|&(degree, _)| degree <= max_degree);
        Self::new(max_degree + 1, bars).expect("filtration values are finite and ordered")
    }

    /// Number of degrees covered (bars may be absent in some of them).
    pub fn degree_count(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree(&self, degree: usize) -> &[Interval] {
        self.degrees.get(degree).map_or(&[], Vec::as_slice)
    }

    /// All bars as `(degree, interval)`, by degree.
    pub fn iter(&self) -> impl Iterator<Item = (usize, Interval)> + '_ {
        self.degrees
            .iter()
            .enumerate()
            .flat_map(|(d, bars)| bars.iter().map(move |&b| (d, b)))
    }

    pub fn len(&self) -> usize {
        self.degrees.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Sorted distinct finite births and deaths.
    pub fn critical_values(&self) -> Vec<f64> {
        let mut values: Vec<f64> = self
            .iter()
            .flat_map(|(_, b)| [b.birth, b.death])
            .filter(|v| v.is_finite())
            .collect();
        values.sort_by(f64::total_cmp);
        values.dedup();
        values
    }
}

/// Barcode of `filtration` in degrees `0..=max_degree`. Classes still alive
/// at the last simplex get infinite bars, so a truncated filtration reports
/// late classes as essential.
pub fn barcodes(filtration: &Filtration, max_degree: usize) -> Result<Barcode> {
    let matrix = build_boundary(filtration)?;
    let pairing = cohomology_pairing(&matrix, max_degree);
    Ok(Barcode::from_pairing(&matrix, &pairing, max_degree))
}

/// Number of bars alive at `r` in each degree.
pub fn betti_at(barcode: &Barcode, r: f64) -> BettiProfile {
    BettiProfile(
        (0..barcode.degree_count())
            .map(|d| barcode.degree(d).iter().filter(|b| b.contains(r)).count())
            .collect(),
    )
}
