//! Deciding principal generation of the Cartier algebra of `S/I_Δ`, by the
//! colon-ideal identity and by the free-face criterion, plus generators of
//! test complexes and the harness that checks the two against each other.

mod classify;
mod correspondence;
mod cross_validate;
mod generate;

pub use classify::{
    classify, classify_via_free_face, classify_via_ideal, witness_monomial, ClassificationReport,
    Method, Verdict,
};
pub use correspondence::{complex_of_ideal, ideal_of_complex};
pub use cross_validate::{
    cross_validate, cross_validate_with, trial_seed, witness_contract_holds, Counterexample,
    CrossValidationConfig, CrossValidationReport, GroundSetStats, SourceKind, DEFAULT_DENSITIES,
};
pub use generate::{enumerate_complexes, random_complex, ComplexEnumerator, EXHAUSTIVE_MAX_N};
