//! Persistent homology with Z/2 coefficients.
//!
//! A filtration becomes a sparse boundary matrix whose column reduction pairs
//! each dying simplex with the simplex that created the class it kills.
//! Three engines compute that pairing and agree exactly: plain left-to-right
//! reduction, the same with clearing, and a cohomology reduction with clearing
//! (used by [`barcodes`]) whose degree-0 part is a union-find.

mod barcode;
mod boundary;
mod reduce;
pub mod reference;


pub use barcode::{barcodes, betti_at, Barcode, Interval};
pub use boundary::{build_boundary, BoundaryMatrix};
pub use reduce::{cohomology_pairing, reduce, reduce_naive, Pairing};
