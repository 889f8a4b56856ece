//! Simplicial complexes as facet sets over a ground set of at most 64 vertices.

mod complex;
mod face;
mod parse;

pub use complex::{Core, FreeFacePair, SimplicialComplex};
pub use face::{maximal_elements, minimal_elements, Face, Vertices, MAX_VERTICES};
