use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::classify::{
    classify_via_free_face, classify_via_ideal, witness_monomial, ClassificationReport, Verdict,
};
use super::correspondence::ideal_of_complex;
use super::generate::{enumerate_complexes, random_complex, EXHAUSTIVE_MAX_N};
use crate::error::Result;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::simplicial::{Face, SimplicialComplex};

/// Densities cycled through by trial index for random complexes.
pub const DEFAULT_DENSITIES: [f64; 5] = [0.08, 0.15, 0.25, 0.4, 0.6];

#[derive(Clone, Debug, PartialEq)]
pub struct CrossValidationConfig {
    /// Ground sets enumerated exhaustively.
    pub exhaustive_ns: Vec<usize>,
    /// Ground sets sampled at random.
    pub random_ns: Vec<usize>,
    pub trials_per_n: usize,
    pub seed: u64,
    /// Extra Frobenius exponents whose verdicts must match `q = 2`.
    pub q_sweep: Vec<u32>,
    pub densities: Vec<f64>,
}

impl Default for CrossValidationConfig {
    fn default() -> Self {
        CrossValidationConfig {
            exhaustive_ns: (1..=EXHAUSTIVE_MAX_N).collect(),
            random_ns: vec![6, 7, 8],
            trials_per_n: 10_000,
            seed: 42,
            q_sweep: Vec::new(),
            densities: DEFAULT_DENSITIES.to_vec(),
        }
    }
}

/// Seed for trial `index` on ground set `n`.
pub fn trial_seed(seed: u64, n: usize, index: u64) -> u64 {
    seed ^ ((n as u64) << 48) ^ index
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SourceKind {
    Exhaustive,
    Random,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroundSetStats {
    pub n: usize,
    pub source: SourceKind,
    pub complexes: usize,
    pub principally_generated: usize,
    pub infinitely_generated: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: usize,
    pub trial: usize,
    pub facets: Vec<Face>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrossValidationReport {
    pub per_n: Vec<GroundSetStats>,
    pub total: usize,
    pub mismatches: Vec<Counterexample>,
    pub witness_checks: usize,
    pub witness_violations: Vec<Counterexample>,
    pub q_sweep: Vec<u32>,
    pub q_sweep_checks: usize,
    pub q_sweep_mismatches: Vec<Counterexample>,
    #[serde(skip)]
    pub runtime: Duration,
}

impl CrossValidationReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
            && self.witness_violations.is_empty()
            && self.q_sweep_mismatches.is_empty()
    }
}

#[derive(Default)]
struct TrialOutcome {
    verdict: Option<Verdict>,
    mismatch: Option<String>,
    witness_checked: bool,
    witness_violation: Option<String>,
    q_checks: usize,
    q_mismatch: Option<String>,
}

/// Checks the witness contract on the core: `m ∈ I^[2] : I` and `m ∉ I^[2] + (x^1)`.
pub fn witness_contract_holds(core: &SimplicialComplex, witness: &Monomial) -> Result<bool> {
    let ideal = ideal_of_complex(core);
    let frob = ideal.frobenius_power(2)?;
    let lhs = frob.colon(&ideal)?;
    let rhs = frob.add(&MonomialIdeal::principal(Monomial::from_face(
        core.n(),
        core.ground_set(),
    )))?;
    Ok(lhs.contains(witness)? && !rhs.contains(witness)?)
}

fn run_trial<F>(complex: &SimplicialComplex, q_sweep: &[u32], free_face: &F) -> TrialOutcome
where
    F: Fn(&SimplicialComplex) -> ClassificationReport,
{
    let mut out = TrialOutcome::default();
    let by_ideal = match classify_via_ideal(complex, 2) {
        Ok(r) => r,
        Err(e) => {
            out.mismatch = Some(format!("ideal criterion failed: {e}"));
            return out;
        }
    };
    let by_face = free_face(complex);
    out.verdict = Some(by_face.verdict);
    if by_ideal.verdict != by_face.verdict {
        let show = |i: &Option<MonomialIdeal>| {
            i.as_ref().map_or("-".to_string(), MonomialIdeal::to_string)
        };
        let pair = by_face.free_face_witness.map_or("none".to_string(), |p| {
            format!("{} in {}", p.free_face, p.facet)
        });
        out.mismatch = Some(format!(
            "ideal says {}, free face says {}; lhs {}, rhs {}, free pair {pair}",
            by_ideal.verdict.tag(),
            by_face.verdict.tag(),
            show(&by_ideal.colon_lhs),
            show(&by_ideal.colon_rhs),
        ));
    }
    if by_face.verdict == Verdict::InfinitelyGenerated {
        out.witness_checked = true;
        let core = &by_face.core.complex;
        let verdict = core
            .free_faces()
            .first()
            .ok_or_else(|| "no free face in core".to_string())
            .and_then(|pair| witness_monomial(core, pair).map_err(|e| e.to_string()))
            .and_then(|m| match witness_contract_holds(core, &m) {
                Ok(true) => Ok(()),
                Ok(false) => Err(format!(
                    "witness {m} breaks the membership contract on core {core}"
                )),
                Err(e) => Err(e.to_string()),
            });
        if let Err(detail) = verdict {
            out.witness_violation = Some(detail);
        }
    }
    for &q in q_sweep.iter().filter(|&&q| q != 2) {
        out.q_checks += 1;
        match classify_via_ideal(complex, q) {
            Ok(r) if r.verdict == by_ideal.verdict => {}
            Ok(r) => {
                out.q_mismatch = Some(format!(
                    "q = {q} says {}, q = 2 says {}",
                    r.verdict.tag(),
                    by_ideal.verdict.tag()
                ));
                break;
            }
            Err(e) => {
                out.q_mismatch = Some(format!("q = {q} failed: {e}"));
                break;
            }
        }
    }
    out
}

/// Mechanised check that the ideal criterion and the free-face criterion agree.
pub fn cross_validate(config: &CrossValidationConfig) -> Result<CrossValidationReport> {
    cross_validate_with(config, classify_via_free_face)
}

/// As [`cross_validate`], with a replaceable free-face classifier.
pub fn cross_validate_with<F>(
    config: &CrossValidationConfig,
    free_face: F,
) -> Result<CrossValidationReport>
where
    F: Fn(&SimplicialComplex) -> ClassificationReport + Sync,
{
    let start = Instant::now();
    let mut batches: Vec<(usize, SourceKind, Vec<SimplicialComplex>)> = Vec::new();
    for &n in &config.exhaustive_ns {
        batches.push((n, SourceKind::Exhaustive, enumerate_complexes(n)?.collect()));
    }
    for &n in &config.random_ns {
        let complexes = (0..config.trials_per_n)
            .map(|i| {
                let density = config.densities[i % config.densities.len()];
                random_complex(n, density, trial_seed(config.seed, n, i as u64))
            })
            .collect::<Result<Vec<_>>>()?;
        batches.push((n, SourceKind::Random, complexes));
    }

    let mut report = CrossValidationReport {
        per_n: Vec::new(),
        total: 0,
        mismatches: Vec::new(),
        witness_checks: 0,
        witness_violations: Vec::new(),
        q_sweep: config.q_sweep.clone(),
        q_sweep_checks: 0,
        q_sweep_mismatches: Vec::new(),
        runtime: Duration::ZERO,
    };
    for (n, source, complexes) in batches {
        let outcomes: Vec<TrialOutcome> = complexes
            .par_iter()
            .map(|d| run_trial(d, &config.q_sweep, &free_face))
            .collect();
        let mut stats = GroundSetStats {
            n,
            source,
            complexes: complexes.len(),
            principally_generated: 0,
            infinitely_generated: 0,
        };
        for (trial, (d, o)) in complexes.iter().zip(outcomes).enumerate() {
            match o.verdict {
                Some(Verdict::PrincipallyGenerated) => stats.principally_generated += 1,
                Some(Verdict::InfinitelyGenerated) => stats.infinitely_generated += 1,
                None => {}
            }
            let example = |detail: String| Counterexample {
                n,
                trial,
                facets: d.facets().to_vec(),
                detail,
            };
            if let Some(detail) = o.mismatch {
                report.mismatches.push(example(detail));
            }
            if o.witness_checked {
                report.witness_checks += 1;
            }
            if let Some(detail) = o.witness_violation {
                report.witness_violations.push(example(detail));
            }
            report.q_sweep_checks += o.q_checks;
            if let Some(detail) = o.q_mismatch {
                report.q_sweep_mismatches.push(example(detail));
            }
        }
        report.total += stats.complexes;
        report.per_n.push(stats);
    }
    report.runtime = start.elapsed();
    Ok(report)
}
