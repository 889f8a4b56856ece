use thiserror::Error;

use crate::simplicial::Face;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("ground set size {0} is outside 1..=64")]
    GroundSetSize(usize),
    #[error("vertex {vertex} is outside the ground set [1, {n}]")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{0} is not a face of the complex")]
    NotAFace(Face),
    #[error("({free_face}, {facet}) is not a free-face pair of the complex")]
    NotAFreePair { free_face: Face, facet: Face },
    #[error("operation would produce the void complex")]
    VoidComplex,
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("exponent overflow (cap is {cap})")]
    ExponentOverflow { cap: u32 },
    #[error("generator {0} is not squarefree")]
    NotSquarefree(String),
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("{sub} is not contained in {sup}")]
    NotContained { sub: Face, sup: Face },
    #[error("subcomplex is not contained in the complex")]
    NotASubcomplex,
    #[error("witness construction needs every vertex to divide a minimal generator (support {support:?}, n = {n})")]
    ConeVertexPresent { support: Vec<usize>, n: usize },
    #[error("Frobenius exponent q = {0} must be at least {1}")]
    BadFrobeniusExponent(u32, u32),
    #[error("exhaustive enumeration supports n <= {max}, got {n}")]
    TooLargeForExhaustive { n: usize, max: usize },
    #[error("density {0} must lie strictly between 0 and 1")]
    BadDensity(f64),
    #[error("random sample needs at least {candidates} candidate facets (limit {max})")]
    SampleTooLarge { candidates: u64, max: u64 },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("criteria disagree: {0}")]
    Inconsistency(String),
}
