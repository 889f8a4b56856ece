//! Simplicial homology over prime fields, relative homology of contrastar
//! pairs, and the Cohen-Macaulay family of link conditions.

mod chain;
mod conditions;
mod field;
mod matrix;

pub use chain::{
    contrastar_betti, induced_map_rank, reduced_betti, relative_betti, relative_map_certificate,
    relative_map_is_surjective, ChainComplexOverField, DegreeDim, HomologyProfile, RankCertificate,
};
pub use conditions::{
    buchsbaum_star_refutation, is_cohen_macaulay, is_doubly_cohen_macaulay, is_gorenstein,
    is_gorenstein_star, Refutation,
};
pub use field::{is_prime, PrimeField};
pub use matrix::Matrix;
