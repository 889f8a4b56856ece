use serde::Serialize;

use super::chain::{reduced_betti, relative_map_certificate, RankCertificate};
use super::field::PrimeField;
use crate::simplicial::{FreeFacePair, SimplicialComplex};

/// Reisner's criterion: every link has vanishing reduced homology below its dimension.
pub fn is_cohen_macaulay(complex: &SimplicialComplex, field: PrimeField) -> bool {
    complex.faces().into_iter().all(|f| {
        let link = complex.link(f).expect("f is a face");
        let h = reduced_betti(&link, field);
        (-1..link.dimension()).all(|i| h.get(i) == 0)
    })
}

/// Cohen-Macaulay, and every vertex deletion is Cohen-Macaulay of the same dimension.
pub fn is_doubly_cohen_macaulay(complex: &SimplicialComplex, field: PrimeField) -> bool {
    is_cohen_macaulay(complex, field)
        && (1..=complex.n()).all(|v| {
            let del = complex.deletion(v).expect("v is in range");
            del.dimension() == complex.dimension() && is_cohen_macaulay(&del, field)
        })
}

/// Every link has reduced homology concentrated in its top degree, where it is one-dimensional.
pub fn is_gorenstein_star(complex: &SimplicialComplex, field: PrimeField) -> bool {
    complex.faces().into_iter().all(|f| {
        let link = complex.link(f).expect("f is a face");
        let top = link.dimension();
        let h = reduced_betti(&link, field);
        (-1..top).all(|i| h.get(i) == 0) && h.get(top) == 1
    })
}

/// Gorenstein complexes are exactly joins of a Gorenstein* core with a simplex.
pub fn is_gorenstein(complex: &SimplicialComplex, field: PrimeField) -> bool {
    is_gorenstein_star(&complex.core().complex, field)
}

/// Evidence that a complex cannot be Buchsbaum*.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Refutation {
    /// The complex is a cone over this vertex.
    ConeVertex { vertex: usize },
    /// `H_d(Δ, cost F) → H_d(Δ, cost G)` fails to be surjective for `d = dim Δ`.
    FreeFace {
        pair: FreeFacePair,
        certificate: RankCertificate,
    },
}

/// One-sided test: `Some` proves the complex is not Buchsbaum*, `None` proves nothing.
/// A rank certificate is preferred over a cone vertex when both exist.
pub fn buchsbaum_star_refutation(
    complex: &SimplicialComplex,
    field: PrimeField,
) -> Option<Refutation> {
    let d = complex.dimension();
    let by_free_face = complex.free_faces().into_iter().find_map(|pair| {
        let certificate =
            relative_map_certificate(complex, pair.free_face, pair.facet, d, field).ok()?;
        (!certificate.is_surjective()).then_some(Refutation::FreeFace { pair, certificate })
    });
    by_free_face.or_else(|| {
        complex
            .cone_vertices()
            .vertices()
            .next()
            .map(|vertex| Refutation::ConeVertex { vertex })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::Face;

    fn face(vs: &[usize]) -> Face {
        Face::from_vertices(vs.iter().copied(), 64).unwrap()
    }

    fn cx(facets: &[&[usize]], n: usize) -> SimplicialComplex {
        SimplicialComplex::from_facet_lists(facets, n).unwrap()
    }

    fn hollow() -> SimplicialComplex {
        cx(&[&[1, 2], &[1, 3], &[2, 3]], 3)
    }

    fn path() -> SimplicialComplex {
        cx(&[&[1, 2], &[2, 3]], 3)
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

    fn tetra_boundary() -> SimplicialComplex {
        cx(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]], 4)
    }

    #[test]
    fn cohen_macaulay_examples() {
        let k = PrimeField::GF2;
        assert!(is_cohen_macaulay(&path(), k));
        assert!(!is_cohen_macaulay(&cx(&[&[1, 2], &[3, 4]], 4), k));
        assert!(is_cohen_macaulay(&hollow(), k));
        assert!(is_cohen_macaulay(
            &SimplicialComplex::empty_face_only(2).unwrap(),
            k
        ));
        assert!(!is_cohen_macaulay(&nonpure(), k));
    }

    #[test]
    fn doubly_cohen_macaulay_examples() {
        let k = PrimeField::GF2;
        assert!(is_doubly_cohen_macaulay(&hollow(), k));
        assert!(!is_doubly_cohen_macaulay(&path(), k));
        assert!(!is_doubly_cohen_macaulay(&nonpure(), k));
        assert!(is_doubly_cohen_macaulay(&tetra_boundary(), PrimeField::GF3));
    }

    #[test]
    fn gorenstein_star_examples() {
        let k = PrimeField::GF2;
        assert!(is_gorenstein_star(&hollow(), k));
        assert!(!is_gorenstein_star(
            &SimplicialComplex::simplex(3).unwrap(),
            k
        ));
        assert!(is_gorenstein_star(&tetra_boundary(), k));
        assert!(!is_gorenstein_star(&path(), k));
        let cone = cx(&[&[1, 2, 4], &[2, 3, 4], &[1, 3, 4]], 4);
        assert!(!is_gorenstein_star(&cone, k));
        assert!(is_gorenstein(&cone, k));
    }

    #[test]
    fn refutation_examples() {
        let k = PrimeField::GF2;
        let solid = SimplicialComplex::simplex(3).unwrap();
        let free_face = |f: &[usize], g: &[usize], rank, target_dim| {
            Some(Refutation::FreeFace {
                pair: FreeFacePair {
                    free_face: face(f),
                    facet: face(g),
                },
                certificate: RankCertificate { rank, target_dim },
            })
        };
        assert_eq!(
            buchsbaum_star_refutation(&solid, k),
            free_face(&[1, 2], &[1, 2, 3], 0, 1)
        );
        assert_eq!(buchsbaum_star_refutation(&hollow(), k), None);
        let cone = cx(&[&[1, 2, 4], &[2, 3, 4], &[1, 3, 4]], 4);
        assert_eq!(
            buchsbaum_star_refutation(&cone, k),
            free_face(&[1, 2], &[1, 2, 4], 0, 1)
        );
        // in a point the empty face is free
        let point = cx(&[&[1]], 1);
        assert_eq!(
            buchsbaum_star_refutation(&point, k),
            free_face(&[], &[1], 0, 1)
        );

        // a triangle closed into a cycle by two edges: no cone vertex, free edges
        let two = cx(&[&[1, 2, 3], &[3, 4], &[1, 4]], 4);
        match buchsbaum_star_refutation(&two, k) {
            Some(Refutation::FreeFace { pair, certificate }) => {
                assert_eq!(
                    pair,
                    FreeFacePair {
                        free_face: face(&[1, 2]),
                        facet: face(&[1, 2, 3])
                    }
                );
                assert_eq!(
                    certificate,
                    RankCertificate {
                        rank: 0,
                        target_dim: 1
                    }
                );
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
