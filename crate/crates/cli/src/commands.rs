use std::fmt::Write;

use serde_json::{json, Value};
use thiserror::Error;

use cartier_core::classifier::{
    classify as classify_complex, classify_via_free_face, cross_validate_with,
    ClassificationReport, CrossValidationConfig, CrossValidationReport, Method, SourceKind,
    Verdict, EXHAUSTIVE_MAX_N,
};
use cartier_core::homology::{
    buchsbaum_star_refutation, is_cohen_macaulay, is_doubly_cohen_macaulay, is_gorenstein_star,
    reduced_betti, PrimeField, Refutation,
};
use cartier_core::monomial::{Monomial, MonomialIdeal};
use cartier_core::simplicial::{Face, FreeFacePair, SimplicialComplex};

use crate::input::Input;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INPUT_ERROR: u8 = 1;
pub const EXIT_INCONSISTENT: u8 = 2;
pub const EXIT_INFINITELY_GENERATED: u8 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot tell the format of {0} from its extension; pass --format facets|ideal")]
    UnknownFormat(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] cartier_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(cartier_core::Error::Inconsistency(_)) => EXIT_INCONSISTENT,
            _ => EXIT_INPUT_ERROR,
        }
    }
}

/// What a command prints on stdout, and the process exit code.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

type CmdResult = Result<Outcome, CliError>;

fn ok(stdout: String) -> CmdResult {
    Ok(Outcome {
        stdout,
        code: EXIT_OK,
    })
}

fn render_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values built from json! always render");
    s.push('\n');
    s
}

fn faces_line(faces: &[Face]) -> String {
    faces
        .iter()
        .map(Face::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn pair_json(p: &FreeFacePair) -> Value {
    json!({ "free_face": p.free_face, "facet": p.facet })
}

fn generator_strings(i: &MonomialIdeal) -> Vec<String> {
    i.generators().iter().map(Monomial::to_string).collect()
}

pub fn classify(input: &Input, method: Method, q: u32, as_json: bool) -> CmdResult {
    let complex = input.complex()?;
    let report = classify_complex(&complex, method, q)?;
    let code = match report.verdict {
        Verdict::PrincipallyGenerated => EXIT_OK,
        Verdict::InfinitelyGenerated => EXIT_INFINITELY_GENERATED,
    };
    let stdout = if as_json {
        render_json(&report.to_json_value())
    } else {
        classify_text(&report)
    };
    Ok(Outcome { stdout, code })
}

fn classify_text(r: &ClassificationReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "verdict: {} ({})", r.verdict.tag(), r.verdict);
    let _ = writeln!(s, "n: {}", r.n);
    let _ = writeln!(s, "V: {}", r.support);
    let _ = writeln!(s, "cone vertices: {}", r.core.cone);
    let _ = writeln!(s, "core facets: {}", faces_line(r.core.complex.facets()));
    if let Some(p) = r.free_face_witness {
        let _ = writeln!(s, "free face: {} in facet {}", p.free_face, p.facet);
    }
    if let Some(m) = &r.monomial_witness {
        let _ = writeln!(s, "witness monomial (core coordinates): {m}");
        if r.core_used {
            if let Some(lifted) = r.lifted_witness() {
                let _ = writeln!(s, "witness monomial (original labels): {lifted}");
            }
        }
    }
    if let (Some(lhs), Some(rhs)) = (&r.colon_lhs, &r.colon_rhs) {
        let _ = writeln!(s, "colon lhs: {lhs}");
        let _ = writeln!(s, "colon rhs: {rhs}");
        let offending = r.offending_generators();
        if !offending.is_empty() {
            let list: Vec<String> = offending.iter().map(Monomial::to_string).collect();
            let _ = writeln!(s, "offending generators: {}", list.join(", "));
        }
    }
    s
}

pub fn free_faces(complex: &SimplicialComplex, as_json: bool) -> CmdResult {
    let pairs = complex.free_faces();
    if as_json {
        return ok(render_json(&Value::Array(
            pairs.iter().map(pair_json).collect(),
        )));
    }
    let mut s = String::new();
    if pairs.is_empty() {
        s.push_str("no free faces\n");
    }
    for p in &pairs {
        let _ = writeln!(s, "{} in {}", p.free_face, p.facet);
    }
    ok(s)
}

pub fn collapse(complex: &SimplicialComplex, as_json: bool) -> CmdResult {
    let (result, steps) = complex.collapse_greedy();
    if as_json {
        return ok(render_json(&json!({
            "steps": steps.iter().map(pair_json).collect::<Vec<_>>(),
            "facets": result.facets(),
        })));
    }
    let mut s = String::new();
    for (k, p) in steps.iter().enumerate() {
        let _ = writeln!(s, "step {}: remove {} and {}", k + 1, p.free_face, p.facet);
    }
    let _ = writeln!(s, "facets: {}", faces_line(result.facets()));
    ok(s)
}

pub fn core(complex: &SimplicialComplex, as_json: bool) -> CmdResult {
    let core = complex.core();
    let support = complex.support_vertices();
    if as_json {
        return ok(render_json(&json!({
            "V": support,
            "cone": core.cone,
            "vertex_map": core.vertex_map,
            "facets": core.complex.facets(),
        })));
    }
    let map: Vec<String> = core
        .vertex_map
        .iter()
        .enumerate()
        .map(|(k, v)| format!("{}->{v}", k + 1))
        .collect();
    let mut s = String::new();
    let _ = writeln!(s, "V: {support}");
    let _ = writeln!(s, "cone: {}", core.cone);
    let _ = writeln!(s, "index map: {}", map.join(" "));
    let _ = writeln!(s, "facets: {}", faces_line(core.complex.facets()));
    ok(s)
}

pub fn nonfaces(complex: &SimplicialComplex, as_json: bool) -> CmdResult {
    let nonfaces = complex.minimal_nonfaces();
    if as_json {
        return ok(render_json(&json!(nonfaces)));
    }
    ok(nonfaces.iter().map(|f| format!("{f}\n")).collect())
}

pub fn colon(ideal: &MonomialIdeal, q: u32, as_json: bool) -> CmdResult {
    if q < 2 {
        return Err(CliError::Usage(format!("--q must be at least 2, got {q}")));
    }
    if ideal.is_zero() {
        if as_json {
            return ok(render_json(&json!({
                "q": q, "zero_ideal": true, "lhs": [], "rhs": [], "equal": true, "offending": [], "verdict": "pg",
            })));
        }
        return ok(
            "ideal is zero (the complex is a full simplex): nothing to compare, verdict pg\n"
                .to_string(),
        );
    }
    let support = ideal
        .generators()
        .iter()
        .fold(Face::EMPTY, |acc, g| acc.union(g.supp()));
    let frob = ideal.frobenius_power(q)?;
    let lhs = frob.colon(ideal)?;
    let rhs = frob.add(&MonomialIdeal::principal(
        Monomial::from_face(ideal.n(), support).pow(q - 1)?,
    ))?;
    let offending: Vec<Monomial> = lhs
        .generators()
        .iter()
        .filter(|g| !rhs.contains(g).unwrap_or(false))
        .cloned()
        .collect();
    let equal = offending.is_empty();
    if as_json {
        return ok(render_json(&json!({
            "q": q,
            "zero_ideal": false,
            "lhs": generator_strings(&lhs),
            "rhs": generator_strings(&rhs),
            "equal": equal,
            "offending": offending.iter().map(Monomial::to_string).collect::<Vec<_>>(),
        })));
    }
    let mut s = String::new();
    let _ = writeln!(s, "lhs: {lhs}");
    let _ = writeln!(s, "rhs: {rhs}");
    if equal {
        s.push_str("equal: true\n");
    } else {
        let list: Vec<String> = offending.iter().map(Monomial::to_string).collect();
        let _ = writeln!(s, "equal: false\noffending: {}", list.join(", "));
    }
    ok(s)
}

pub fn homology(complex: &SimplicialComplex, field: PrimeField, as_json: bool) -> CmdResult {
    let profile = reduced_betti(complex, field);
    if as_json {
        return ok(render_json(&json!(profile.entries())));
    }
    let mut s = String::new();
    for e in profile.entries() {
        let _ = writeln!(s, "H~_{}({field}): {}", e.degree, e.dim);
    }
    ok(s)
}

pub fn property(
    complex: &SimplicialComplex,
    field: PrimeField,
    name: &str,
    as_json: bool,
) -> CmdResult {
    let holds = match name {
        "cm" => is_cohen_macaulay(complex, field),
        "2cm" => is_doubly_cohen_macaulay(complex, field),
        "gorenstein-star" => is_gorenstein_star(complex, field),
        other => unreachable!("unknown property {other}"),
    };
    if as_json {
        return ok(render_json(
            &json!({ "property": name, "field": field.characteristic(), "holds": holds }),
        ));
    }
    ok(format!("{name} over {field}: {holds}\n"))
}

pub fn bstar_refute(complex: &SimplicialComplex, field: PrimeField, as_json: bool) -> CmdResult {
    let refutation = buchsbaum_star_refutation(complex, field);
    if as_json {
        return ok(render_json(
            &json!({ "field": field.characteristic(), "refutation": refutation }),
        ));
    }
    let d = complex.dimension();
    ok(match refutation {
        Some(Refutation::FreeFace { pair, certificate }) => format!(
            "not Buchsbaum* over {field}\nfree face: {} in facet {}\nmap H_{d}(cost {}) -> H_{d}(cost {}): rank {} onto dimension {}\n",
            pair.free_face, pair.facet, pair.free_face, pair.facet, certificate.rank, certificate.target_dim
        ),
        Some(Refutation::ConeVertex { vertex }) => {
            format!("not Buchsbaum* over {field}\ncone over vertex {vertex}\n")
        }
        None => format!("no refutation found over {field} (inconclusive)\n"),
    })
}

pub struct CrossValidateOptions {
    pub seed: u64,
    pub trials: usize,
    pub q_sweep: Vec<u32>,
    pub n: Option<usize>,
    pub exhaustive: bool,
    pub json: bool,
    pub inject_fault: bool,
}

/// Free-face classifier with a deliberate defect, to show the harness notices.
fn faulty_free_face(complex: &SimplicialComplex) -> ClassificationReport {
    let mut report = classify_via_free_face(complex);
    if complex.facets().len() == 2 {
        report.verdict = match report.verdict {
            Verdict::PrincipallyGenerated => Verdict::InfinitelyGenerated,
            Verdict::InfinitelyGenerated => Verdict::PrincipallyGenerated,
        };
    }
    report
}

pub fn cross_validate(opts: &CrossValidateOptions) -> CmdResult {
    let mut config = CrossValidationConfig {
        seed: opts.seed,
        trials_per_n: opts.trials,
        q_sweep: opts.q_sweep.clone(),
        ..Default::default()
    };
    match opts.n {
        Some(n) if n <= EXHAUSTIVE_MAX_N || opts.exhaustive => {
            config.exhaustive_ns = vec![n];
            config.random_ns = vec![];
        }
        Some(n) => {
            config.exhaustive_ns = vec![];
            config.random_ns = vec![n];
        }
        None if opts.exhaustive => config.random_ns = vec![],
        None => {}
    }
    let report = if opts.inject_fault {
        cross_validate_with(&config, faulty_free_face)?
    } else {
        cross_validate_with(&config, classify_via_free_face)?
    };
    let code = if report.is_clean() {
        EXIT_OK
    } else {
        EXIT_INCONSISTENT
    };
    let stdout = if opts.json {
        render_json(&serde_json::to_value(&report).expect("report is serializable"))
    } else {
        cross_validate_text(&report)
    };
    Ok(Outcome { stdout, code })
}

fn cross_validate_text(r: &CrossValidationReport) -> String {
    let mut s = String::new();
    for st in &r.per_n {
        let source = match st.source {
            SourceKind::Exhaustive => "exhaustive",
            SourceKind::Random => "random",
        };
        let _ = writeln!(
            s,
            "n = {} ({source}): {} complexes, {} pg, {} infgen",
            st.n, st.complexes, st.principally_generated, st.infinitely_generated
        );
    }
    let _ = writeln!(s, "total: {}", r.total);
    let _ = writeln!(s, "mismatches: {}", r.mismatches.len());
    let _ = writeln!(
        s,
        "witness checks: {}, violations: {}",
        r.witness_checks,
        r.witness_violations.len()
    );
    if !r.q_sweep.is_empty() {
        let qs: Vec<String> = r.q_sweep.iter().map(u32::to_string).collect();
        let _ = writeln!(
            s,
            "q sweep {}: {} checks, mismatches: {}",
            qs.join(","),
            r.q_sweep_checks,
            r.q_sweep_mismatches.len()
        );
    }
    let groups = [
        ("mismatch", &r.mismatches),
        ("witness violation", &r.witness_violations),
        ("q sweep mismatch", &r.q_sweep_mismatches),
    ];
    for (label, examples) in groups {
        for c in examples {
            let _ = writeln!(
                s,
                "{label}: n = {}, trial {}, facets {}: {}",
                c.n,
                c.trial,
                faces_line(&c.facets),
                c.detail
            );
        }
    }
    s
}
