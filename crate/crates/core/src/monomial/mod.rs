//! Monomials and monomial ideals: minimal generators, sums, intersections,
//! colon ideals and Frobenius powers.

mod ideal;
mod term;

pub(crate) use ideal::parse_header;
pub use ideal::MonomialIdeal;
pub use term::{Monomial, EXPONENT_CAP};
