use std::collections::HashMap;

use serde::Serialize;

use super::field::PrimeField;
use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::simplicial::{Face, SimplicialComplex};

/// Simplicial chains of a complex modulo the chains of a subcomplex.
///
/// Degrees run from `-1` (the empty face) to `dim Δ`; the basis in each
/// degree is the graded-lex ordered list of faces that survive the quotient.
/// Boundary signs come from the ascending vertex orientation.
#[derive(Clone, Debug)]
pub struct ChainComplexOverField {
    field: PrimeField,
    /// `bases[d + 1]` holds the faces of dimension `d`.
    bases: Vec<Vec<Face>>,
    /// `boundaries[d + 1]` is `∂_d : C_d → C_{d-1}`; the entry for `d = -1` is empty.
    boundaries: Vec<Matrix>,
}

/// Dimensions of homology by degree. Equality compares dimensions in every
/// degree, so profiles stored over different degree ranges can be equal.
#[derive(Clone, Debug)]
pub struct HomologyProfile {
    pub min_degree: isize,
    pub dims: Vec<usize>,
}

impl PartialEq for HomologyProfile {
    fn eq(&self, other: &Self) -> bool {
        let lo = self.min_degree.min(other.min_degree);
        let hi = self.max_degree().max(other.max_degree());
        (lo..=hi).all(|d| self.get(d) == other.get(d))
    }
}

impl Eq for HomologyProfile {}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeDim {
    pub degree: isize,
    pub dim: usize,
}

impl HomologyProfile {
    /// Dimension in degree `d`, zero outside the stored range.
    pub fn get(&self, d: isize) -> usize {
        if d < self.min_degree {
            return 0;
        }
        self.dims
            .get((d - self.min_degree) as usize)
            .copied()
            .unwrap_or(0)
    }

    pub fn entries(&self) -> Vec<DegreeDim> {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &dim)| DegreeDim {
                degree: self.min_degree + k as isize,
                dim,
            })
            .collect()
    }

    pub fn max_degree(&self) -> isize {
        self.min_degree + self.dims.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// `Σ (-1)^d dim H_d`.
    pub fn euler_characteristic(&self) -> i64 {
        self.entries()
            .iter()
            .map(|e| {
                if e.degree.rem_euclid(2) == 0 {
                    e.dim as i64
                } else {
                    -(e.dim as i64)
                }
            })
            .sum()
    }
}

impl ChainComplexOverField {
    /// Chains on the faces of `complex` for which `excluded` is false.
    pub fn quotient<X: Fn(Face) -> bool>(
        complex: &SimplicialComplex,
        excluded: X,
        field: PrimeField,
    ) -> Self {
        let top = complex.dimension();
        let mut bases = vec![Vec::new(); (top + 2) as usize];
        for f in complex.faces() {
            if !excluded(f) {
                bases[f.len()].push(f);
            }
        }
        let index: Vec<HashMap<Face, usize>> = bases
            .iter()
            .map(|b| b.iter().enumerate().map(|(i, &f)| (f, i)).collect())
            .collect();
        let mut boundaries = vec![Matrix::zeros(0, 0)];
        for size in 1..bases.len() {
            let mut m = Matrix::zeros(bases[size - 1].len(), bases[size].len());
            for (c, &f) in bases[size].iter().enumerate() {
                for (pos, v) in f.vertices().enumerate() {
                    if let Some(&r) = index[size - 1].get(&f.without(v)) {
                        m.set(r, c, field.sign(pos));
                    }
                }
            }
            boundaries.push(m);
        }
        let chain = ChainComplexOverField {
            field,
            bases,
            boundaries,
        };
        debug_assert!(chain.boundary_squared_is_zero());
        chain
    }

    /// The augmented chain complex, whose homology is reduced homology.
    pub fn augmented(complex: &SimplicialComplex, field: PrimeField) -> Self {
        Self::quotient(complex, |_| false, field)
    }

    /// Chains of `complex` relative to `sub`.
    pub fn relative(
        complex: &SimplicialComplex,
        sub: &SimplicialComplex,
        field: PrimeField,
    ) -> Result<Self> {
        if sub.n() != complex.n() || !sub.facets().iter().all(|f| complex.is_face(*f)) {
            return Err(Error::NotASubcomplex);
        }
        Ok(Self::quotient(complex, |f| sub.is_face(f), field))
    }

    /// Chains relative to the contrastar of `face`; faces not containing it are killed.
    pub fn relative_to_contrastar(
        complex: &SimplicialComplex,
        face: Face,
        field: PrimeField,
    ) -> Result<Self> {
        if !complex.is_face(face) {
            return Err(Error::NotAFace(face));
        }
        Ok(Self::quotient(complex, |f| !face.is_subset_of(f), field))
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn top_degree(&self) -> isize {
        self.bases.len() as isize - 2
    }

    pub fn basis(&self, d: isize) -> &[Face] {
        self.bases
            .get((d + 1) as usize)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// `∂_d`, or `None` outside `0..=top_degree`.
    pub fn boundary(&self, d: isize) -> Option<&Matrix> {
        if d < 0 {
            return None;
        }
        self.boundaries.get((d + 1) as usize)
    }

    pub fn boundary_squared_is_zero(&self) -> bool {
        (1..=self.top_degree()).all(|d| {
            let (a, b) = (self.boundary(d - 1).unwrap(), self.boundary(d).unwrap());
            a.rows() == 0 || b.cols() == 0 || a.mul(b, self.field).is_zero()
        })
    }

    fn boundary_rank(&self, d: isize) -> usize {
        self.boundary(d).map_or(0, |m| m.rank(self.field))
    }

    pub fn betti(&self, d: isize) -> usize {
        self.basis(d).len() - self.boundary_rank(d) - self.boundary_rank(d + 1)
    }

    /// Homology from the lowest nonempty degree up to the top degree.
    pub fn homology(&self) -> HomologyProfile {
        let top = self.top_degree();
        let low = (-1..=top)
            .find(|&d| !self.basis(d).is_empty())
            .unwrap_or(top.max(-1));
        let mut ranks: Vec<usize> = (-1..=top + 1).map(|d| self.boundary_rank(d)).collect();
        ranks.push(0);
        let dims = (low..=top)
            .map(|d| {
                let i = (d + 1) as usize;
                self.bases[i].len() - ranks[i] - ranks[i + 1]
            })
            .collect();
        HomologyProfile {
            min_degree: low,
            dims,
        }
    }
}

/// Rank of the map on degree-`d` homology induced by the projection from
/// `source` onto `target`, where the target basis is a subset of the source
/// basis (a further quotient).
pub fn induced_map_rank(
    source: &ChainComplexOverField,
    target: &ChainComplexOverField,
    d: isize,
) -> usize {
    let k = source.field;
    let src = source.basis(d);
    let tgt = target.basis(d);
    if tgt.is_empty() || src.is_empty() {
        return 0;
    }
    let cycles: Vec<Vec<u32>> = match source.boundary(d) {
        Some(m) if m.rows() > 0 => m.nullspace(k),
        _ => (0..src.len())
            .map(|i| {
                let mut v = vec![0; src.len()];
                v[i] = 1;
                v
            })
            .collect(),
    };
    let tgt_index: HashMap<Face, usize> = tgt.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let project = |v: &Vec<u32>| {
        let mut out = vec![0u32; tgt.len()];
        for (i, &x) in v.iter().enumerate() {
            if let Some(&j) = tgt_index.get(&src[i]) {
                out[j] = x;
            }
        }
        out
    };
    let boundaries: Vec<Vec<u32>> = match target.boundary(d + 1) {
        Some(m) => (0..m.cols()).map(|c| m.column(c)).collect(),
        None => Vec::new(),
    };
    let mut combined: Vec<Vec<u32>> = cycles.iter().map(project).collect();
    combined.extend(boundaries.iter().cloned());
    let with_cycles = Matrix::from_columns(tgt.len(), &combined).rank(k);
    let boundary_rank = Matrix::from_columns(tgt.len(), &boundaries).rank(k);
    with_cycles - boundary_rank
}

pub fn reduced_betti(complex: &SimplicialComplex, field: PrimeField) -> HomologyProfile {
    let h = ChainComplexOverField::augmented(complex, field).homology();
    debug_assert_eq!(h.min_degree, -1);
    h
}

/// Relative homology `H_*(Δ, Γ; K)`.
pub fn relative_betti(
    complex: &SimplicialComplex,
    sub: &SimplicialComplex,
    field: PrimeField,
) -> Result<HomologyProfile> {
    Ok(ChainComplexOverField::relative(complex, sub, field)?.homology())
}

/// `H_*(Δ, cost_Δ(F); K)`. For `F = ∅` the contrastar is void and this is
/// reduced homology of `Δ`.
pub fn contrastar_betti(
    complex: &SimplicialComplex,
    face: Face,
    field: PrimeField,
) -> Result<HomologyProfile> {
    Ok(ChainComplexOverField::relative_to_contrastar(complex, face, field)?.homology())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RankCertificate {
    pub rank: usize,
    pub target_dim: usize,
}

impl RankCertificate {
    pub fn is_surjective(&self) -> bool {
        self.rank == self.target_dim
    }
}

/// The map `H_d(Δ, cost F; K) → H_d(Δ, cost G; K)` for `F ⊆ G`.
pub fn relative_map_certificate(
    complex: &SimplicialComplex,
    free_face: Face,
    facet: Face,
    d: isize,
    field: PrimeField,
) -> Result<RankCertificate> {
    if !free_face.is_subset_of(facet) {
        return Err(Error::NotContained {
            sub: free_face,
            sup: facet,
        });
    }
    let source = ChainComplexOverField::relative_to_contrastar(complex, free_face, field)?;
    let target = ChainComplexOverField::relative_to_contrastar(complex, facet, field)?;
    Ok(RankCertificate {
        rank: induced_map_rank(&source, &target, d),
        target_dim: target.betti(d),
    })
}

pub fn relative_map_is_surjective(
    complex: &SimplicialComplex,
    free_face: Face,
    facet: Face,
    d: isize,
    field: PrimeField,
) -> Result<(bool, RankCertificate)> {
    let cert = relative_map_certificate(complex, free_face, facet, d, field)?;
    Ok((cert.is_surjective(), cert))
}
