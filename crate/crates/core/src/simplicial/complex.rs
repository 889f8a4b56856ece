use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use super::face::{maximal_elements, Face, MAX_VERTICES};
use crate::error::{Error, Result};

/// A nonvoid simplicial complex on the ground set `[n]`, stored by its facets.
///
/// The facet list is always an antichain in graded-lex order. Vertices `i`
/// with `{i}` not a face are allowed. The complex `{∅}` has the single facet
/// `∅`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Face>,
}

/// A free face together with the unique facet containing it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FreeFacePair {
    pub free_face: Face,
    pub facet: Face,
}

impl FreeFacePair {
    /// The vertex `i` with `facet = free_face ∪ {i}`.
    pub fn apex(&self) -> usize {
        self.facet
            .difference(self.free_face)
            .vertices()
            .next()
            .expect("facet is strictly larger")
    }
}

/// The restriction of a complex to its support vertices, relabelled `1..=|V|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Core {
    pub complex: SimplicialComplex,
    /// `vertex_map[k - 1]` is the original label of core vertex `k`.
    pub vertex_map: Vec<usize>,
    /// Vertices lying in every facet of the original complex.
    pub cone: Face,
    /// Ground set size of the original complex.
    pub ambient_n: usize,
}

impl Core {
    /// Maps a face in core labels back to original labels.
    pub fn lift_face(&self, face: Face) -> Face {
        face.vertices()
            .fold(Face::EMPTY, |acc, k| acc.with(self.vertex_map[k - 1]))
    }

    /// Maps a face in original labels into core labels, dropping cone vertices.
    pub fn project_face(&self, face: Face) -> Face {
        self.vertex_map
            .iter()
            .enumerate()
            .filter(|(_, &v)| face.contains(v))
            .fold(Face::EMPTY, |acc, (k, _)| acc.with(k + 1))
    }

    /// Rebuilds `core * 2^cone` on the original ground set.
    pub fn join(&self) -> SimplicialComplex {
        let facets = self
            .complex
            .facets()
            .iter()
            .map(|&f| self.lift_face(f).union(self.cone))
            .collect();
        SimplicialComplex::from_antichain_unchecked(self.ambient_n, facets)
    }
}

impl SimplicialComplex {
    /// Builds a complex from arbitrary generating faces, keeping the maximal ones.
    pub fn new<I: IntoIterator<Item = Face>>(facets: I, n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::GroundSetSize(n));
        }
        let ground = Face::full(n);
        let mut list = Vec::new();
        for f in facets {
            if !f.is_subset_of(ground) {
                let vertex = f.difference(ground).vertices().next().unwrap_or(0);
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            list.push(f);
        }
        Ok(Self::from_generators_unchecked(n, list))
    }

    /// Builds a complex from facet lists given as 1-based vertex labels.
    pub fn from_facet_lists<L: AsRef<[usize]>>(facet_list: &[L], n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::GroundSetSize(n));
        }
        let faces = facet_list
            .iter()
            .map(|vs| Face::from_vertices(vs.as_ref().iter().copied(), n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(faces, n)
    }

    /// The full simplex `2^[n]`.
    pub fn simplex(n: usize) -> Result<Self> {
        Self::new([Face::full(n.min(MAX_VERTICES))], n)
    }

    /// The complex `{∅}` on `[n]`.
    pub fn empty_face_only(n: usize) -> Result<Self> {
        Self::new([], n)
    }

    /// Ground set may be empty here; used for cores.
    pub(crate) fn from_generators_unchecked(n: usize, generators: Vec<Face>) -> Self {
        let mut facets = maximal_elements(generators);
        if facets.is_empty() {
            facets.push(Face::EMPTY);
        }
        SimplicialComplex { n, facets }
    }

    pub(crate) fn from_antichain_unchecked(n: usize, mut facets: Vec<Face>) -> Self {
        facets.sort_unstable();
        debug_assert!(is_antichain(&facets));
        SimplicialComplex { n, facets }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn ground_set(&self) -> Face {
        Face::full(self.n)
    }

    /// `max |facet| - 1`; the complex `{∅}` has dimension `-1`.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dimension();
        self.facets.iter().all(|f| f.dim() == d)
    }

    pub fn is_full_simplex(&self) -> bool {
        self.facets == [self.ground_set()]
    }

    pub fn is_face(&self, face: Face) -> bool {
        self.facets.iter().any(|g| face.is_subset_of(*g))
    }

    fn check_face(&self, face: Face) -> Result<()> {
        if self.is_face(face) {
            Ok(())
        } else {
            Err(Error::NotAFace(face))
        }
    }

    /// Every face, in graded-lex order.
    pub fn faces(&self) -> Vec<Face> {
        let mut seen = HashSet::new();
        for &g in &self.facets {
            let mut s = g.bits();
            loop {
                seen.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & g.bits();
            }
        }
        let mut faces: Vec<Face> = seen.into_iter().map(Face::from_bits).collect();
        faces.sort_unstable();
        faces
    }

    /// Number of faces of each dimension `-1, 0, ..., dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut counts = vec![0usize; (self.dimension() + 2) as usize];
        for f in self.faces() {
            counts[f.len()] += 1;
        }
        counts
    }

    pub fn facets_containing(&self, face: Face) -> Result<Vec<Face>> {
        self.check_face(face)?;
        Ok(self
            .facets
            .iter()
            .copied()
            .filter(|g| face.is_subset_of(*g))
            .collect())
    }

    fn unique_facet_containing(&self, face: Face) -> Option<Face> {
        let mut found = None;
        for &g in &self.facets {
            if face.is_subset_of(g) {
                if found.is_some() {
                    return None;
                }
                found = Some(g);
            }
        }
        found
    }

    /// All pairs `(F, F ∪ {i})` where `F ∪ {i}` is the only facet containing `F`.
    ///
    /// The empty face is reported when the complex is a single vertex.
    pub fn free_faces(&self) -> Vec<FreeFacePair> {
        let mut pairs = Vec::new();
        for &g in &self.facets {
            for v in g.vertices() {
                let f = g.without(v);
                if self.unique_facet_containing(f) == Some(g) {
                    pairs.push(FreeFacePair {
                        free_face: f,
                        facet: g,
                    });
                }
            }
        }
        pairs.sort_unstable();
        pairs
    }

    pub fn is_free_pair(&self, pair: &FreeFacePair) -> bool {
        pair.free_face.is_subset_of(pair.facet)
            && pair.facet.len() == pair.free_face.len() + 1
            && self.unique_facet_containing(pair.free_face) == Some(pair.facet)
    }

    /// Removes `F` and its facet `G`.
    ///
    /// Collapsing the empty face of a single vertex would leave the void
    /// complex, which is rejected.
    pub fn elementary_collapse(&self, pair: &FreeFacePair) -> Result<Self> {
        if !self.is_free_pair(pair) {
            return Err(Error::NotAFreePair {
                free_face: pair.free_face,
                facet: pair.facet,
            });
        }
        if pair.free_face.is_empty() {
            return Err(Error::VoidComplex);
        }
        let mut gens: Vec<Face> = self
            .facets
            .iter()
            .copied()
            .filter(|&g| g != pair.facet)
            .collect();
        gens.extend(pair.free_face.vertices().map(|j| pair.facet.without(j)));
        Ok(Self::from_generators_unchecked(self.n, gens))
    }

    /// Collapses the graded-lex smallest nonempty free face until none is left.
    pub fn collapse_greedy(&self) -> (Self, Vec<FreeFacePair>) {
        let mut current = self.clone();
        let mut steps = Vec::new();
        while let Some(pair) = current
            .free_faces()
            .into_iter()
            .find(|p| !p.free_face.is_empty())
        {
            current = current
                .elementary_collapse(&pair)
                .expect("pair comes from free_faces");
            steps.push(pair);
        }
        (current, steps)
    }

    /// Vertices contained in every facet.
    pub fn cone_vertices(&self) -> Face {
        self.facets
            .iter()
            .fold(self.ground_set(), |acc, &f| acc.intersection(f))
    }

    /// Vertices dividing some minimal generator of the Stanley-Reisner ideal.
    pub fn support_vertices(&self) -> Face {
        self.ground_set().difference(self.cone_vertices())
    }

    pub fn core(&self) -> Core {
        let support = self.support_vertices();
        let vertex_map = support.to_vec();
        let mut core = Core {
            complex: SimplicialComplex {
                n: vertex_map.len(),
                facets: vec![Face::EMPTY],
            },
            vertex_map,
            cone: self.cone_vertices(),
            ambient_n: self.n,
        };
        let gens = self.facets.iter().map(|&f| core.project_face(f)).collect();
        core.complex = Self::from_generators_unchecked(core.vertex_map.len(), gens);
        core
    }

    /// `{ G : G ∩ F = ∅, G ∪ F ∈ Δ }` on the same ground set.
    pub fn link(&self, face: Face) -> Result<Self> {
        self.check_face(face)?;
        let gens = self
            .facets
            .iter()
            .filter(|g| face.is_subset_of(**g))
            .map(|g| g.difference(face))
            .collect();
        Ok(Self::from_generators_unchecked(self.n, gens))
    }

    /// `{ G ∈ Δ : v ∉ G }`.
    pub fn deletion(&self, v: usize) -> Result<Self> {
        if v == 0 || v > self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let gens = self.facets.iter().map(|g| g.without(v)).collect();
        Ok(Self::from_generators_unchecked(self.n, gens))
    }

    /// `cost(F) = { G ∈ Δ : G ⊉ F }`. Empty for `F = ∅`, hence an error there.
    pub fn contrastar(&self, face: Face) -> Result<Self> {
        self.check_face(face)?;
        if face.is_empty() {
            return Err(Error::VoidComplex);
        }
        let mut gens = Vec::new();
        for &g in &self.facets {
            if face.is_subset_of(g) {
                gens.extend(face.vertices().map(|v| g.without(v)));
            } else {
                gens.push(g);
            }
        }
        Ok(Self::from_generators_unchecked(self.n, gens))
    }

    /// Inclusion-minimal non-faces, found level by level: a `k`-set is only
    /// examined when all of its `(k-1)`-subsets are faces.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        let mut nonfaces = Vec::new();
        let mut level: Vec<Face> = Vec::new();
        for v in 1..=self.n {
            let s = Face::singleton(v);
            if self.is_face(s) {
                level.push(s);
            } else {
                nonfaces.push(s);
            }
        }
        let vertex_faces = level.iter().fold(Face::EMPTY, |acc, &f| acc.union(f));
        while !level.is_empty() {
            let lookup: HashSet<Face> = level.iter().copied().collect();
            let mut next = Vec::new();
            for &a in &level {
                let top = a.max_vertex().unwrap_or(0);
                for j in vertex_faces.vertices().filter(|&j| j > top) {
                    let s = a.with(j);
                    if !s.vertices().all(|x| lookup.contains(&s.without(x))) {
                        continue;
                    }
                    if self.is_face(s) {
                        next.push(s);
                    } else {
                        nonfaces.push(s);
                    }
                }
            }
            level = next;
        }
        nonfaces.sort_unstable();
        nonfaces
    }
}

fn is_antichain(faces: &[Face]) -> bool {
    faces.iter().enumerate().all(|(i, a)| {
        faces
            .iter()
            .enumerate()
            .all(|(j, b)| i == j || !a.is_subset_of(*b))
    })
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} [", self.n)?;
        for (k, facet) in self.facets.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{facet}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face(vs: &[usize]) -> Face {
        Face::from_vertices(vs.iter().copied(), 64).unwrap()
    }

    fn cx(facets: &[&[usize]], n: usize) -> SimplicialComplex {
        SimplicialComplex::from_facet_lists(facets, n).unwrap()
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

    fn path() -> SimplicialComplex {
        cx(&[&[1, 2], &[2, 3]], 3)
    }

    fn hollow_triangle() -> SimplicialComplex {
        cx(&[&[1, 2], &[1, 3], &[2, 3]], 3)
    }

    fn cone_over_hollow_triangle() -> SimplicialComplex {
        cx(&[&[1, 2, 4], &[2, 3, 4], &[1, 3, 4]], 4)
    }

    /// Brute force over every subset of the ground set.
    fn all_subsets(n: usize) -> impl Iterator<Item = Face> {
        (0u64..(1 << n)).map(Face::from_bits)
    }

    #[test]
    fn build_keeps_maximal_facets() {
        assert_eq!(nonpure().facets().len(), 6);
        let e = SimplicialComplex::from_facet_lists::<Vec<usize>>(&[], 3).unwrap();
        assert_eq!(e.facets(), &[Face::EMPTY]);
        assert_eq!(e.dimension(), -1);
        let c = cx(&[&[1, 2], &[1], &[2, 3]], 3);
        assert_eq!(c.facets(), &[face(&[1, 2]), face(&[2, 3])]);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(
            SimplicialComplex::from_facet_lists(&[vec![1, 4]], 3),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        );
        assert_eq!(
            SimplicialComplex::from_facet_lists(&[vec![1]], 0),
            Err(Error::GroundSetSize(0))
        );
        assert_eq!(
            SimplicialComplex::from_facet_lists(&[vec![1]], 65),
            Err(Error::GroundSetSize(65))
        );
        assert!(SimplicialComplex::from_facet_lists(&[vec![0]], 3).is_err());
    }

    #[test]
    fn face_queries() {
        let d = nonpure();
        assert!(d.is_face(face(&[1, 5])));
        assert!(!d.is_face(face(&[3, 5])));
        assert!(d.is_face(Face::EMPTY));
        assert_eq!(d.dimension(), 2);
        assert_eq!(path().dimension(), 1);
        assert_eq!(
            d.facets_containing(face(&[5])).unwrap(),
            vec![face(&[1, 5]), face(&[2, 5])]
        );
        assert_eq!(
            d.facets_containing(face(&[1, 2, 3])).unwrap(),
            vec![face(&[1, 2, 3])]
        );
        assert_eq!(path().facets_containing(face(&[2])).unwrap().len(), 2);
        assert_eq!(
            d.facets_containing(face(&[3, 5])),
            Err(Error::NotAFace(face(&[3, 5])))
        );
    }

    #[test]
    fn free_faces_match_exhaustive_scan() {
        // Scan every face and count containing facets directly.
        for d in [
            nonpure(),
            path(),
            hollow_triangle(),
            cone_over_hollow_triangle(),
        ] {
            let mut expected = Vec::new();
            for f in all_subsets(d.n()).filter(|f| d.is_face(*f)) {
                let containing: Vec<Face> = d
                    .facets()
                    .iter()
                    .copied()
                    .filter(|g| f.is_subset_of(*g))
                    .collect();
                if containing.len() == 1 && containing[0].len() == f.len() + 1 {
                    expected.push(FreeFacePair {
                        free_face: f,
                        facet: containing[0],
                    });
                }
            }
            expected.sort();
            assert_eq!(d.free_faces(), expected, "{d}");
        }
        assert!(nonpure().free_faces().is_empty());
        assert!(hollow_triangle().free_faces().is_empty());
        let p = path().free_faces();
        assert!(p.contains(&FreeFacePair {
            free_face: face(&[1]),
            facet: face(&[1, 2])
        }));
        assert!(p.contains(&FreeFacePair {
            free_face: face(&[3]),
            facet: face(&[2, 3])
        }));
        assert!(!cone_over_hollow_triangle().free_faces().is_empty());
    }

    #[test]
    fn single_vertex_has_empty_free_face() {
        let d = cx(&[&[2]], 3);
        assert_eq!(
            d.free_faces(),
            vec![FreeFacePair {
                free_face: Face::EMPTY,
                facet: face(&[2])
            }]
        );
        assert_eq!(
            d.elementary_collapse(&d.free_faces()[0]),
            Err(Error::VoidComplex)
        );
        let (end, steps) = d.collapse_greedy();
        assert_eq!(end, d);
        assert!(steps.is_empty());
    }

    #[test]
    fn collapses() {
        let c = path()
            .elementary_collapse(&FreeFacePair {
                free_face: face(&[1]),
                facet: face(&[1, 2]),
            })
            .unwrap();
        assert_eq!(c.facets(), &[face(&[2, 3])]);

        let tri = SimplicialComplex::simplex(3).unwrap();
        let c = tri
            .elementary_collapse(&FreeFacePair {
                free_face: face(&[1, 2]),
                facet: face(&[1, 2, 3]),
            })
            .unwrap();
        assert_eq!(c.facets(), &[face(&[1, 3]), face(&[2, 3])]);

        let bad = FreeFacePair {
            free_face: face(&[2]),
            facet: face(&[1, 2]),
        };
        assert!(matches!(
            path().elementary_collapse(&bad),
            Err(Error::NotAFreePair { .. })
        ));
    }

    #[test]
    fn greedy_collapse() {
        let (end, steps) = path().collapse_greedy();
        assert_eq!(steps.len(), 2);
        assert_eq!(end.dimension(), 0);
        assert_eq!(end.facets().len(), 1);

        let (end, steps) = nonpure().collapse_greedy();
        assert_eq!(end, nonpure());
        assert!(steps.is_empty());

        let e = SimplicialComplex::empty_face_only(2).unwrap();
        assert_eq!(e.collapse_greedy(), (e.clone(), vec![]));
    }

    #[test]
    fn cone_and_core() {
        let d = nonpure();
        assert_eq!(d.cone_vertices(), Face::EMPTY);
        assert_eq!(d.support_vertices(), Face::full(5));
        assert_eq!(d.core().complex, d);

        let c = cone_over_hollow_triangle();
        assert_eq!(c.cone_vertices(), face(&[4]));
        assert_eq!(c.support_vertices(), face(&[1, 2, 3]));
        let core = c.core();
        assert_eq!(core.complex, hollow_triangle());
        assert_eq!(core.vertex_map, vec![1, 2, 3]);
        assert_eq!(core.join(), c);

        let s = SimplicialComplex::simplex(4).unwrap();
        assert_eq!(s.cone_vertices(), Face::full(4));
        let core = s.core();
        assert_eq!(core.complex.n(), 0);
        assert_eq!(core.complex.facets(), &[Face::EMPTY]);
        assert_eq!(core.join(), s);
    }

    #[test]
    fn core_relabels_interleaved_cone_vertices() {
        // hollow triangle on {1,3,5}, coned over 2 and 4
        let d = cx(&[&[1, 2, 3, 4], &[2, 3, 4, 5], &[1, 2, 4, 5]], 5);
        let core = d.core();
        assert_eq!(core.vertex_map, vec![1, 3, 5]);
        assert_eq!(core.complex, hollow_triangle());
        assert_eq!(core.lift_face(face(&[2, 3])), face(&[3, 5]));
        assert_eq!(core.join(), d);
    }

    #[test]
    fn link_deletion_contrastar() {
        let tri = SimplicialComplex::simplex(3).unwrap();
        let cost = tri.contrastar(face(&[1, 2])).unwrap();
        let expected: Vec<Face> = tri
            .faces()
            .into_iter()
            .filter(|f| *f != face(&[1, 2]) && *f != face(&[1, 2, 3]))
            .collect();
        assert_eq!(cost.faces(), expected);

        let cost = tri.contrastar(face(&[1, 2, 3])).unwrap();
        let expected: Vec<Face> = tri
            .faces()
            .into_iter()
            .filter(|f| *f != face(&[1, 2, 3]))
            .collect();
        assert_eq!(cost.faces(), expected);

        let lk = hollow_triangle().link(face(&[1])).unwrap();
        assert_eq!(lk.facets(), &[face(&[2]), face(&[3])]);

        let del = path().deletion(2).unwrap();
        assert_eq!(del.facets(), &[face(&[1]), face(&[3])]);

        assert_eq!(tri.contrastar(Face::EMPTY), Err(Error::VoidComplex));
        assert!(path().link(face(&[1, 3])).is_err());
        assert!(path().deletion(4).is_err());
    }

    #[test]
    fn minimal_nonfaces_fixtures() {
        assert_eq!(path().minimal_nonfaces(), vec![face(&[1, 3])]);
        // {1,2,5} is missing although its three edges are faces
        assert_eq!(
            nonpure().minimal_nonfaces(),
            vec![
                face(&[3, 5]),
                face(&[4, 5]),
                face(&[1, 2, 5]),
                face(&[1, 2, 3, 4])
            ]
        );
        assert!(SimplicialComplex::simplex(4)
            .unwrap()
            .minimal_nonfaces()
            .is_empty());
        let e = SimplicialComplex::empty_face_only(3).unwrap();
        assert_eq!(
            e.minimal_nonfaces(),
            vec![face(&[1]), face(&[2]), face(&[3])]
        );
    }

    #[test]
    fn minimal_nonfaces_match_brute_force() {
        for d in [
            nonpure(),
            path(),
            hollow_triangle(),
            cone_over_hollow_triangle(),
            cx(&[&[1], &[3, 4]], 5),
        ] {
            let nonfaces: Vec<Face> = all_subsets(d.n()).filter(|f| !d.is_face(*f)).collect();
            let mut expected: Vec<Face> = nonfaces
                .iter()
                .copied()
                .filter(|f| f.vertices().all(|v| d.is_face(f.without(v))))
                .collect();
            expected.sort();
            assert_eq!(d.minimal_nonfaces(), expected, "{d}");
        }
    }

    #[test]
    fn free_pair_apex() {
        let p = FreeFacePair {
            free_face: face(&[1, 3]),
            facet: face(&[1, 2, 3]),
        };
        assert_eq!(p.apex(), 2);
    }
}
