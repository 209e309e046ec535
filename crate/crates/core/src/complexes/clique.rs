use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering as AtomicOrdering};

use rayon::prelude::*;

use super::{canonical_cmp, Filtration, Simplex, Vertex, VertexList};
use crate::error::{Error, Result};

/// Clique (flag) expansion of a weighted graph.
///
/// Vertices enter at 0, each edge `(u, v, value)` at its value, and every
/// clique of at most `max_dim + 1` vertices at the largest value among its
/// edges. Fails with `ResourceLimit` as soon as more than `cap` simplices
/// would be produced.
pub fn flag_filtration(
    vertex_count: usize,
    edges: &[(Vertex, Vertex, f64)],
    max_dim: usize,
    cap: usize,
) -> Result<Filtration> {
    if vertex_count > cap {
        return Err(Error::ResourceLimit { cap });
    }
    // Upper adjacency: neighbours greater than the vertex, sorted.
    let mut upper: Vec<Vec<(Vertex, f64)>> = vec![Vec::new(); vertex_count];
    for &(a, b, value) in edges {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        assert!(
            lo != hi && (hi as usize) < vertex_count,
            "bad edge ({a}, {b})"
        );
        upper[lo as usize].push((hi, value));
    }
    for list in &mut upper {
        list.sort_by_key(|&(v, _)| v);
        list.dedup_by_key(|&mut (v, _)| v);
    }

    let produced = AtomicUsize::new(vertex_count);
    let overflow = AtomicBool::new(false);
    let per_root: Vec<Vec<Simplex>> = (0..vertex_count)
        .into_par_iter()
        .map(|root| {
            let mut out = Vec::new();
            if max_dim == 0 || overflow.load(AtomicOrdering::Relaxed) {
                return out;
            }
            let mut expander = Expander {
                upper: &upper,
                max_dim,
                cap,
                produced: &produced,
                overflow: &overflow,
                out: &mut out,
                local: 0,
            };
            let mut clique: VertexList = smallvec::smallvec![root as Vertex];
            expander.expand(&mut clique, 0.0, &upper[root]);
            expander.flush();
            out
        })
        .collect();
    if overflow.load(AtomicOrdering::Relaxed) {
        return Err(Error::ResourceLimit { cap });
    }

    let total = vertex_count + per_root.iter().map(Vec::len).sum::<usize>();
    let mut simplices = Vec::with_capacity(total);
    simplices.extend(
        (0..vertex_count).map(|v| Simplex::from_parts(smallvec::smallvec![v as Vertex], 0.0)),
    );
    for chunk in per_root {
        simplices.extend(chunk);
    }
    simplices.par_sort_unstable_by(canonical_cmp);
    Ok(Filtration::from_sorted_unchecked(vertex_count, simplices))
}

const FLUSH_EVERY: usize = 4096;

struct Expander<'a> {
    upper: &'a [Vec<(Vertex, f64)>],
    max_dim: usize,
    cap: usize,
    produced: &'a AtomicUsize,
    overflow: &'a AtomicBool,
    out: &'a mut Vec<Simplex>,
    local: usize,
}

impl Expander<'_> {
    /// `candidates` are the common upper neighbours of `clique`, each paired
    /// with the largest edge value joining it to the clique.
    fn expand(&mut self, clique: &mut VertexList, value: f64, candidates: &[(Vertex, f64)]) {
        for (i, &(v, edge_max)) in candidates.iter().enumerate() {
            if self.overflow.load(AtomicOrdering::Relaxed) {
                return;
            }
            let new_value = value.max(edge_max);
            clique.push(v);
            self.out
                .push(Simplex::from_parts(clique.clone(), new_value));
            self.local += 1;
            if self.local >= FLUSH_EVERY {
                self.flush();
            }
            if clique.len() <= self.max_dim {
                let next = intersect(&candidates[i + 1..], &self.upper[v as usize]);
                if !next.is_empty() {
                    self.expand(clique, new_value, &next);
                }
            }
            clique.pop();
        }
    }

    fn flush(&mut self) {
        let before = self.produced.fetch_add(self.local, AtomicOrdering::Relaxed);
        if before + self.local > self.cap {
            self.overflow.store(true, AtomicOrdering::Relaxed);
        }
        self.local = 0;
    }
}

/// Sorted-merge intersection, keeping the larger of the two edge values.
fn intersect(candidates: &[(Vertex, f64)], neighbours: &[(Vertex, f64)]) -> Vec<(Vertex, f64)> {
    let mut out = Vec::with_capacity(candidates.len().min(neighbours.len()));
    let (mut i, mut j) = (0, 0);
    while i < candidates.len() && j < neighbours.len() {
        let (a, va) = candidates[i];
        let (b, vb) = neighbours[j];
        match a.cmp(&b) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push((a, va.max(vb)));
                i += 1;
                j += 1;
            }
        }
    }
    out
}
