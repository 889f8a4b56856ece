use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_VERTICES: usize = 64;

/// A subset of the ground set `[n] = {1, ..., n}` packed into one word.
///
/// Vertex `i` occupies bit `i - 1`. Equality is set equality. The total order
/// is graded-lexicographic: first by cardinality, then by the sorted vertex
/// lists compared lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub const fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// Builds a face from 1-based vertex labels, checking each against `n`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I, n: usize) -> Result<Self> {
        let mut bits = 0u64;
        for v in vertices {
            if v == 0 || v > n || v > MAX_VERTICES {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            bits |= 1 << (v - 1);
        }
        Ok(Face(bits))
    }

    /// The full simplex `[n]`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        Face(1 << (v - 1))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Simplex dimension, `|F| - 1`.
    pub fn dim(self) -> isize {
        self.len() as isize - 1
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn with(self, v: usize) -> Face {
        self.union(Face::singleton(v))
    }

    pub fn without(self, v: usize) -> Face {
        self.difference(Face::singleton(v))
    }

    /// Ascending 1-based vertex labels.
    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.vertices().collect()
    }

    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Position of `v` among the sorted vertices of the face.
    pub fn position(self, v: usize) -> Option<usize> {
        self.contains(v)
            .then(|| (self.0 & ((1u64 << (v - 1)) - 1)).count_ones() as usize)
    }
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Vertices {}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.vertices().cmp(other.vertices()))
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.vertices().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Face {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.vertices())
    }
}

/// Keeps the inclusion-maximal members, deduplicated and sorted.
pub fn maximal_elements(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.bits().cmp(&b.bits())));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    for f in faces {
        if !kept.iter().any(|k| f.is_subset_of(*k)) {
            kept.push(f);
        }
    }
    kept.sort_unstable();
    kept
}

/// Keeps the inclusion-minimal members, deduplicated and sorted.
pub fn minimal_elements(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then(a.bits().cmp(&b.bits())));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    for f in faces {
        if !kept.iter().any(|k| k.is_subset_of(f)) {
            kept.push(f);
        }
    }
    kept.sort_unstable();
    kept
}
