use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::simplicial::{maximal_elements, Face, SimplicialComplex};

/// The Stanley-Reisner ideal, generated by the minimal non-faces.
pub fn ideal_of_complex(complex: &SimplicialComplex) -> MonomialIdeal {
    let n = complex.n();
    MonomialIdeal::minimize(
        n,
        complex
            .minimal_nonfaces()
            .into_iter()
            .map(|f| Monomial::from_face(n, f)),
    )
    .expect("generators share the ambient n")
}

/// The complex of sets containing no generator support.
///
/// Facets are grown by splitting: starting from `[n]`, every candidate that
/// contains a generator's support is replaced by its one-vertex deletions
/// along that support.
pub fn complex_of_ideal(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if let Some(g) = ideal.generators().iter().find(|g| !g.is_squarefree()) {
        return Err(Error::NotSquarefree(g.to_string()));
    }
    let n = ideal.n();
    if n == 0 || n > crate::simplicial::MAX_VERTICES {
        return Err(Error::GroundSetSize(n));
    }
    let mut candidates = vec![Face::full(n)];
    for g in ideal.generators() {
        let support = g.supp();
        let mut next = Vec::with_capacity(candidates.len());
        for c in candidates {
            if support.is_subset_of(c) {
                next.extend(support.vertices().map(|v| c.without(v)));
            } else {
                next.push(c);
            }
        }
        candidates = maximal_elements(next);
    }
    SimplicialComplex::new(candidates, n)
}
