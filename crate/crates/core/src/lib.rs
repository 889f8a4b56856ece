//! Principal generation of Cartier algebras of complete Stanley-Reisner rings.
//!
//! For a simplicial complex `Δ` on `[n]` with Stanley-Reisner ideal `I_Δ`,
//! the Cartier algebra of `S/I_Δ` is either principally generated or
//! infinitely generated. This crate decides which, two ways:
//!
//! - [`classifier::classify_via_ideal`] compares the monomial ideals
//!   `I^[q] : I` and `I^[q] + ((∏_{i∈V} x_i)^{q-1})`;
//! - [`classifier::classify_via_free_face`] looks for a free face in the
//!   core of `Δ`.
//!
//! The [`homology`] module supplies simplicial homology over GF(p) and the
//! Cohen-Macaulay, doubly Cohen-Macaulay and Gorenstein* tests, each of
//! which is a sufficient condition for principal generation.

pub mod classifier;
pub mod error;
pub mod homology;
pub mod monomial;
pub mod simplicial;

pub use error::{Error, Result};
