use std::fmt;

use serde::Serialize;

use super::correspondence::ideal_of_complex;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::simplicial::{Core, Face, FreeFacePair, SimplicialComplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    #[serde(rename = "pg")]
    PrincipallyGenerated,
    #[serde(rename = "infgen")]
    InfinitelyGenerated,
}

impl Verdict {
    pub fn tag(self) -> &'static str {
        match self {
            Verdict::PrincipallyGenerated => "pg",
            Verdict::InfinitelyGenerated => "infgen",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::PrincipallyGenerated => "principally generated",
            Verdict::InfinitelyGenerated => "infinitely generated",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Method {
    Ideal,
    FreeFace,
    #[default]
    Both,
}

/// Outcome of a classification together with the evidence each criterion produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub verdict: Verdict,
    pub method: Method,
    /// Frobenius exponent used by the ideal criterion.
    pub q: u32,
    pub n: usize,
    /// Support vertices `V`, in original labels.
    pub support: Face,
    /// The core, whose labels `1..=|V|` map to `V` in increasing order.
    pub core: Core,
    pub core_used: bool,
    /// First free-face pair of the core, in original labels.
    pub free_face_witness: Option<FreeFacePair>,
    /// Witness monomial in core coordinates.
    pub monomial_witness: Option<Monomial>,
    pub colon_lhs: Option<MonomialIdeal>,
    pub colon_rhs: Option<MonomialIdeal>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    verdict: Verdict,
    n: usize,
    #[serde(rename = "V")]
    support: Vec<usize>,
    core_facets: &'a [Face],
    free_face: Option<Face>,
    facet: Option<Face>,
    witness_monomial: Option<String>,
    colon_lhs: Vec<String>,
    colon_rhs: Vec<String>,
}

impl ClassificationReport {
    fn base(complex: &SimplicialComplex, method: Method, q: u32) -> Self {
        let core = complex.core();
        ClassificationReport {
            verdict: Verdict::PrincipallyGenerated,
            method,
            q,
            n: complex.n(),
            support: complex.support_vertices(),
            core_used: complex.support_vertices() != complex.ground_set(),
            core,
            free_face_witness: None,
            monomial_witness: None,
            colon_lhs: None,
            colon_rhs: None,
        }
    }

    /// The witness monomial moved to the ambient ring through the core's vertex map.
    pub fn lifted_witness(&self) -> Option<Monomial> {
        let m = self.monomial_witness.as_ref()?;
        let mut exps = vec![0u32; self.n];
        for (k, &e) in m.exponents().iter().enumerate() {
            exps[self.core.vertex_map[k] - 1] = e;
        }
        Monomial::new(exps).ok()
    }

    /// Generators of the colon ideal missing from the right-hand side.
    pub fn offending_generators(&self) -> Vec<Monomial> {
        match (&self.colon_lhs, &self.colon_rhs) {
            (Some(lhs), Some(rhs)) => lhs
                .generators()
                .iter()
                .filter(|g| !rhs.contains(g).unwrap_or(false))
                .cloned()
                .collect(),
            _ => Vec::new(),
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let strings = |i: &Option<MonomialIdeal>| -> Vec<String> {
            i.as_ref()
                .map(|i| i.generators().iter().map(|g| g.to_string()).collect())
                .unwrap_or_default()
        };
        let json = ReportJson {
            verdict: self.verdict,
            n: self.n,
            support: self.support.to_vec(),
            core_facets: self.core.complex.facets(),
            free_face: self.free_face_witness.map(|p| p.free_face),
            facet: self.free_face_witness.map(|p| p.facet),
            witness_monomial: self.monomial_witness.as_ref().map(|m| m.to_string()),
            colon_lhs: strings(&self.colon_lhs),
            colon_rhs: strings(&self.colon_rhs),
        };
        serde_json::to_value(json).expect("report is always serializable")
    }
}

/// `∏_{i ∈ V} x_i`.
fn support_product(n: usize, support: Face) -> Monomial {
    Monomial::from_face(n, support)
}

/// Tests `I^[q] : I = I^[q] + ((∏_{i∈V} x_i)^{q-1})`.
pub fn classify_via_ideal(complex: &SimplicialComplex, q: u32) -> Result<ClassificationReport> {
    if q < 2 {
        return Err(Error::BadFrobeniusExponent(q, 2));
    }
    let mut report = ClassificationReport::base(complex, Method::Ideal, q);
    let ideal = ideal_of_complex(complex);
    if ideal.is_zero() {
        // full simplex: R = S is regular
        return Ok(report);
    }
    let frob = ideal.frobenius_power(q)?;
    let lhs = frob.colon(&ideal)?;
    let extra = support_product(complex.n(), report.support).pow(q - 1)?;
    let rhs = frob.add(&MonomialIdeal::principal(extra))?;
    report.verdict = if lhs == rhs {
        Verdict::PrincipallyGenerated
    } else {
        Verdict::InfinitelyGenerated
    };
    report.colon_lhs = Some(lhs);
    report.colon_rhs = Some(rhs);
    Ok(report)
}

/// Principally generated iff the core has no free face.
pub fn classify_via_free_face(complex: &SimplicialComplex) -> ClassificationReport {
    let mut report = ClassificationReport::base(complex, Method::FreeFace, 2);
    if let Some(pair) = report.core.complex.free_faces().into_iter().next() {
        report.verdict = Verdict::InfinitelyGenerated;
        report.monomial_witness =
            Some(witness_monomial(&report.core.complex, &pair).expect("core has full support"));
        report.free_face_witness = Some(FreeFacePair {
            free_face: report.core.lift_face(pair.free_face),
            facet: report.core.lift_face(pair.facet),
        });
    }
    report
}

/// `(∏_{i∈F} x_i²) · (∏_{i∉F∪{j}} x_i)` for a free face `F` with facet `F ∪ {j}`.
///
/// Requires every vertex to be a support vertex; pass the core otherwise.
pub fn witness_monomial(complex: &SimplicialComplex, pair: &FreeFacePair) -> Result<Monomial> {
    if complex.support_vertices() != complex.ground_set() {
        return Err(Error::ConeVertexPresent {
            support: complex.support_vertices().to_vec(),
            n: complex.n(),
        });
    }
    if !complex.is_free_pair(pair) {
        return Err(Error::NotAFreePair {
            free_face: pair.free_face,
            facet: pair.facet,
        });
    }
    let apex = pair.apex();
    let exps = (1..=complex.n())
        .map(|i| {
            if pair.free_face.contains(i) {
                2
            } else if i == apex {
                0
            } else {
                1
            }
        })
        .collect();
    Monomial::new(exps)
}

/// Runs the selected criteria; with [`Method::Both`] a disagreement is an error.
pub fn classify(
    complex: &SimplicialComplex,
    method: Method,
    q: u32,
) -> Result<ClassificationReport> {
    match method {
        Method::Ideal => classify_via_ideal(complex, q),
        Method::FreeFace => Ok(classify_via_free_face(complex)),
        Method::Both => {
            let ideal = classify_via_ideal(complex, q)?;
            let face = classify_via_free_face(complex);
            if ideal.verdict != face.verdict {
                return Err(Error::Inconsistency(format!(
                    "complex {complex}: ideal test (q = {q}) says {}, free-face test says {}; lhs {:?}, rhs {:?}, free face {:?}",
                    ideal.verdict.tag(),
                    face.verdict.tag(),
                    ideal.colon_lhs,
                    ideal.colon_rhs,
                    face.free_face_witness,
                )));
            }
            Ok(ClassificationReport {
                method: Method::Both,
                free_face_witness: face.free_face_witness,
                monomial_witness: face.monomial_witness,
                ..ideal
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(facets: &[&[usize]], n: usize) -> SimplicialComplex {
        SimplicialComplex::from_facet_lists(facets, n).unwrap()
    }

    fn face(vs: &[usize]) -> Face {
        Face::from_vertices(vs.iter().copied(), 64).unwrap()
    }

    fn ideal(gens: &[&str], n: usize) -> MonomialIdeal {
        MonomialIdeal::minimize(n, gens.iter().map(|g| Monomial::parse(g, n).unwrap())).unwrap()
    }

    fn nonpure() -> SimplicialComplex {
        cx(
            &[
                &[1, 2, 3],
                &[1, 2, 4],
                &[1, 3, 4],
                &[2, 3, 4],
                &[1, 5],
                &[2, 5],
            ],
            5,
        )
    }

    /// Cone over vertex 2, so principally generated after the core reduction.
    fn path3() -> SimplicialComplex {
        cx(&[&[1, 2], &[2, 3]], 3)
    }

    fn path4() -> SimplicialComplex {
        cx(&[&[1, 2], &[2, 3], &[3, 4]], 4)
    }

    #[test]
    fn ideal_criterion_fixtures() {
        assert_eq!(
            classify_via_ideal(&nonpure(), 2).unwrap().verdict,
            Verdict::PrincipallyGenerated
        );

        let r = classify_via_ideal(&cx(&[&[1, 3], &[2]], 3), 2).unwrap();
        assert_eq!(r.verdict, Verdict::InfinitelyGenerated);
        assert_eq!(
            r.colon_lhs.as_ref().unwrap(),
            &ideal(&["x1^2*x2", "x1*x2*x3", "x2*x3^2"], 3)
        );
        assert_eq!(
            r.colon_rhs.as_ref().unwrap(),
            &ideal(&["x1^2*x2^2", "x2^2*x3^2", "x1*x2*x3"], 3)
        );
        let offending: Vec<String> = r
            .offending_generators()
            .iter()
            .map(|m| m.to_string())
            .collect();
        assert_eq!(offending, ["x1^2*x2", "x2*x3^2"]);

        let r = classify_via_ideal(&cx(&[&[1, 2], &[1, 3], &[2, 3]], 3), 2).unwrap();
        assert_eq!(r.verdict, Verdict::PrincipallyGenerated);
        assert_eq!(r.colon_lhs, Some(ideal(&["x1*x2*x3"], 3)));
        assert_eq!(r.colon_rhs, Some(ideal(&["x1*x2*x3"], 3)));

        // the product runs over V = {1, 3} only
        let r = classify_via_ideal(&path3(), 2).unwrap();
        assert_eq!(r.verdict, Verdict::PrincipallyGenerated);
        assert_eq!(r.colon_rhs, Some(ideal(&["x1*x3"], 3)));

        assert!(classify_via_ideal(&path3(), 1).is_err());
    }

    #[test]
    fn free_face_criterion_fixtures() {
        assert_eq!(
            classify_via_free_face(&nonpure()).verdict,
            Verdict::PrincipallyGenerated
        );

        let r = classify_via_free_face(&path4());
        assert_eq!(r.verdict, Verdict::InfinitelyGenerated);
        assert_eq!(
            r.free_face_witness,
            Some(FreeFacePair {
                free_face: face(&[1]),
                facet: face(&[1, 2])
            })
        );
        assert!(!r.core_used);

        // path3 has free faces itself, but its core is two isolated points
        assert!(!path3().free_faces().is_empty());
        let r = classify_via_free_face(&path3());
        assert_eq!(r.verdict, Verdict::PrincipallyGenerated);
        assert_eq!(r.core.vertex_map, vec![1, 3]);

        let cone = cx(&[&[1, 2, 4], &[2, 3, 4], &[1, 3, 4]], 4);
        assert!(!cone.free_faces().is_empty());
        let r = classify_via_free_face(&cone);
        assert_eq!(r.verdict, Verdict::PrincipallyGenerated);
        assert!(r.core_used);
    }

    #[test]
    fn witness_fixtures() {
        let p = FreeFacePair {
            free_face: face(&[1]),
            facet: face(&[1, 2]),
        };
        assert_eq!(
            witness_monomial(&path4(), &p).unwrap().to_string(),
            "x1^2*x3*x4"
        );
        let d = cx(&[&[1, 3], &[2]], 3);
        let p = FreeFacePair {
            free_face: face(&[1]),
            facet: face(&[1, 3]),
        };
        assert_eq!(witness_monomial(&d, &p).unwrap().to_string(), "x1^2*x2");

        let bad = FreeFacePair {
            free_face: face(&[2]),
            facet: face(&[1, 2]),
        };
        assert!(matches!(
            witness_monomial(&path4(), &bad),
            Err(Error::NotAFreePair { .. })
        ));
        let p = FreeFacePair {
            free_face: face(&[1]),
            facet: face(&[1, 2]),
        };
        assert!(matches!(
            witness_monomial(&path3(), &p),
            Err(Error::ConeVertexPresent { .. })
        ));
    }

    #[test]
    fn combined_classification() {
        let r = classify(&nonpure(), Method::Both, 2).unwrap();
        assert_eq!(r.verdict, Verdict::PrincipallyGenerated);

        let r = classify(&path4(), Method::Both, 2).unwrap();
        assert_eq!(r.verdict, Verdict::InfinitelyGenerated);
        assert!(r.free_face_witness.is_some());
        let w = r.lifted_witness().unwrap();
        assert_eq!(w.to_string(), "x1^2*x3*x4");
        assert!(r.colon_lhs.as_ref().unwrap().contains(&w).unwrap());
        assert!(!r.colon_rhs.as_ref().unwrap().contains(&w).unwrap());

        let r = classify(&SimplicialComplex::simplex(3).unwrap(), Method::Both, 2).unwrap();
        assert_eq!(r.verdict, Verdict::PrincipallyGenerated);
        assert_eq!(r.core.complex.n(), 0);
        assert!(r.colon_lhs.is_none());

        assert_eq!(
            classify(&path3(), Method::Both, 4).unwrap().verdict,
            Verdict::PrincipallyGenerated
        );
    }

    #[test]
    fn witness_is_reported_in_core_coordinates() {
        // path4 on {1,3,5,6}, coned over 2 and 4
        let d = cx(&[&[1, 2, 3, 4], &[2, 3, 4, 5], &[2, 4, 5, 6]], 6);
        let r = classify(&d, Method::Both, 2).unwrap();
        assert_eq!(r.verdict, Verdict::InfinitelyGenerated);
        assert!(r.core_used);
        assert_eq!(
            r.free_face_witness,
            Some(FreeFacePair {
                free_face: face(&[1]),
                facet: face(&[1, 3])
            })
        );
        assert_eq!(
            r.monomial_witness.as_ref().unwrap().to_string(),
            "x1^2*x3*x4"
        );
        let lifted = r.lifted_witness().unwrap();
        assert_eq!(lifted.to_string(), "x1^2*x5*x6");
        assert!(r.colon_lhs.as_ref().unwrap().contains(&lifted).unwrap());
        assert!(!r.colon_rhs.as_ref().unwrap().contains(&lifted).unwrap());
    }

    #[test]
    fn json_shape() {
        let v = classify(&path4(), Method::Both, 2).unwrap().to_json_value();
        let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        keys.sort();
        let mut expected = [
            "verdict",
            "n",
            "V",
            "core_facets",
            "free_face",
            "facet",
            "witness_monomial",
            "colon_lhs",
            "colon_rhs",
        ];
        expected.sort();
        assert_eq!(keys, expected);
        assert_eq!(v["verdict"], "infgen");
        assert_eq!(v["n"], 4);
        assert_eq!(v["V"], serde_json::json!([1, 2, 3, 4]));
        assert_eq!(
            v["core_facets"],
            serde_json::json!([[1, 2], [2, 3], [3, 4]])
        );
        assert_eq!(v["free_face"], serde_json::json!([1]));
        assert_eq!(v["facet"], serde_json::json!([1, 2]));
        assert_eq!(v["witness_monomial"], "x1^2*x3*x4");
        assert_ne!(v["colon_lhs"], v["colon_rhs"]);

        let v = classify(&nonpure(), Method::FreeFace, 2)
            .unwrap()
            .to_json_value();
        assert_eq!(v["verdict"], "pg");
        assert!(v["free_face"].is_null());
        assert!(v["witness_monomial"].is_null());
        assert_eq!(v["colon_lhs"], serde_json::json!([]));
    }
}
