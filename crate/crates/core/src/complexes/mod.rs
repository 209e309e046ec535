//! Filtered simplicial complexes on point clouds.
//!
//! Both builders produce flag (clique) filtrations: an edge gets a value from
//! the geometry, and a higher simplex enters when its last edge does.

use std::cmp::Ordering;

use rustc_hash::FxHashMap;
use smallvec::SmallVec;

use crate::error::{Error, Result};

mod clique;
mod cloud;
mod rips;
mod witness;


pub use clique::flag_filtration;
pub use cloud::PointCloud;
pub use rips::{vietoris_rips, vietoris_rips_capped};
pub use witness::{
    maxmin_landmarks, maxmin_landmarks_from, random_landmarks, witness_edge_threshold,
    witness_filtration, witness_filtration_capped, LandmarkSet,
};

pub type Vertex = u32;
pub(crate) type VertexList = SmallVec<[Vertex; 6]>;

/// A simplex with its filtration value.
#[derive(Clone, Debug, PartialEq)]
pub struct Simplex {
    vertices: VertexList,
    value: f64,
}

impl Simplex {
    /// `vertices` must be strictly increasing; `value` finite and nonnegative.
    pub fn new(vertices: &[Vertex], value: f64) -> Result<Self> {
        if vertices.is_empty() || !vertices.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidParams(format!(
                "simplex vertices {vertices:?} must be nonempty and strictly increasing"
            )));
        }
        if !value.is_finite() || value < 0.0 {
            return Err(Error::InvalidParams(format!(
                "simplex value {value} must be finite and >= 0"
            )));
        }
        Ok(Self {
            vertices: vertices.into(),
            value,
        })
    }

    pub(crate) fn from_parts(vertices: VertexList, value: f64) -> Self {
        Self { vertices, value }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    /// Facets in the order obtained by dropping vertex 0, 1, ...
    pub fn facets(&self) -> impl Iterator<Item = VertexList> + '_ {
        let len = if self.vertices.len() > 1 {
            self.vertices.len()
        } else {
            0
        };
        (0..len).map(move |skip| {
            self.vertices
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &v)| v)
                .collect()
        })
    }
}

/// The canonical order: value, then dimension, then lexicographic vertices.
pub fn canonical_cmp(a: &Simplex, b: &Simplex) -> Ordering {
    a.value
        .total_cmp(&b.value)
        .then(a.vertices.len().cmp(&b.vertices.len()))
        .then_with(|| a.vertices.cmp(&b.vertices))
}

/// Simplices in canonical order, every face before its cofaces.
#[derive(Clone, Debug, PartialEq)]
pub struct Filtration {
    simplices: Vec<Simplex>,
    vertex_count: usize,
}

impl Filtration {
    /// Sorts `simplices` canonically and checks that every vertex index is in
    /// range, no simplex repeats, and every facet is present with a value no
    /// larger than its coface.
    pub fn new(vertex_count: usize, mut simplices: Vec<Simplex>) -> Result<Self> {
        simplices.sort_by(canonical_cmp);
        let f = Self {
            simplices,
            vertex_count,
        };
        f.validate()?;
        Ok(f)
    }

    pub(crate) fn from_sorted_unchecked(vertex_count: usize, simplices: Vec<Simplex>) -> Self {
        debug_assert!(simplices
            .windows(2)
            .all(|w| canonical_cmp(&w[0], &w[1]) == Ordering::Less));
        Self {
            simplices,
            vertex_count,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let index = self.index_map();
        if index.len() != self.simplices.len() {
            let mut seen = FxHashMap::default();
            for (pos, s) in self.simplices.iter().enumerate() {
                if seen.insert(s.vertices(), pos).is_some() {
                    return Err(Error::Unordered { position: pos });
                }
            }
        }
        for (pos, s) in self.simplices.iter().enumerate() {
            if s.vertices.iter().any(|&v| v as usize >= self.vertex_count) {
                return Err(Error::InvalidParams(format!(
                    "simplex {:?} uses a vertex outside 0..{}",
                    s.vertices(),
                    self.vertex_count
                )));
            }
            if pos > 0 && canonical_cmp(&self.simplices[pos - 1], s) != Ordering::Less {
                return Err(Error::Unordered { position: pos });
            }
            for facet in s.facets() {
                match index.get(facet.as_slice()) {
                    None => {
                        return Err(Error::MissingFace {
                            simplex: s.vertices().to_vec(),
                        })
                    }
                    Some(&fpos) if fpos >= pos => return Err(Error::Unordered { position: pos }),
                    Some(_) => {}
                }
            }
        }
        Ok(())
    }

    pub(crate) fn index_map(&self) -> FxHashMap<&[Vertex], usize> {
        let mut map = FxHashMap::with_capacity_and_hasher(self.simplices.len(), Default::default());
        for (i, s) in self.simplices.iter().enumerate() {
            map.insert(s.vertices(), i);
        }
        map
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    pub fn into_simplices(self) -> Vec<Simplex> {
        self.simplices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// Largest simplex dimension present (0 for an empty filtration).
    pub fn max_dim(&self) -> usize {
        self.simplices.iter().map(Simplex::dim).max().unwrap_or(0)
    }

    /// Number of simplices of each dimension.
    pub fn counts_by_dim(&self) -> Vec<usize> {
        let mut counts = vec![0; self.max_dim() + 1];
        for s in &self.simplices {
            counts[s.dim()] += 1;
        }
        counts
    }

    /// Number of simplices with value at most `r` (a prefix of the order).
    pub fn count_at(&self, r: f64) -> usize {
        self.simplices.partition_point(|s| s.value <= r)
    }
}
