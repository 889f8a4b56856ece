use std::collections::HashSet;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution};

use crate::error::{Error, Result};
use crate::simplicial::{Face, SimplicialComplex, MAX_VERTICES};

/// Largest ground set for [`enumerate_complexes`].
pub const EXHAUSTIVE_MAX_N: usize = 5;

/// Ground sets up to this size are sampled subset by subset.
const DIRECT_SAMPLING_MAX_N: usize = 20;

/// Above [`DIRECT_SAMPLING_MAX_N`], refuse samples with more candidates than this.
const MAX_SAMPLED_CANDIDATES: u64 = 5_000_000;

fn inclusion_probability(density: f64, k: usize) -> f64 {
    density * 2f64.powf(-((k as f64) - 1.0) / 2.0)
}

/// Seeded random complex: each `k`-subset becomes a candidate facet with
/// probability `density · 2^{-(k-1)/2}`; the result keeps the maximal candidates.
pub fn random_complex(n: usize, density: f64, seed: u64) -> Result<SimplicialComplex> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::GroundSetSize(n));
    }
    if !(density > 0.0 && density < 1.0) {
        return Err(Error::BadDensity(density));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates = Vec::new();
    if n <= DIRECT_SAMPLING_MAX_N {
        for bits in 1u64..(1 << n) {
            let k = bits.count_ones() as usize;
            if rng.random::<f64>() < inclusion_probability(density, k) {
                candidates.push(Face::from_bits(bits));
            }
        }
    } else {
        let mut total = 0u64;
        for k in 1..=n {
            let pool = binomial_coefficient(n as u64, k as u64);
            let count = Binomial::new(pool, inclusion_probability(density, k))
                .expect("probability lies in [0, 1]")
                .sample(&mut rng);
            total += count;
            if total > MAX_SAMPLED_CANDIDATES {
                return Err(Error::SampleTooLarge {
                    candidates: total,
                    max: MAX_SAMPLED_CANDIDATES,
                });
            }
            let mut seen = HashSet::new();
            while (seen.len() as u64) < count {
                let bits = sample(&mut rng, n, k)
                    .iter()
                    .fold(0u64, |acc, i| acc | 1 << i);
                seen.insert(bits);
            }
            let mut chosen: Vec<u64> = seen.into_iter().collect();
            chosen.sort_unstable();
            candidates.extend(chosen.into_iter().map(Face::from_bits));
        }
    }
    SimplicialComplex::new(candidates, n)
}

fn binomial_coefficient(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128) as u64
}

/// Every simplicial complex on `[n]`, each exactly once, streamed lazily.
///
/// Complexes correspond to antichains of nonempty subsets; the empty
/// antichain is the complex `{∅}` and comes first.
pub fn enumerate_complexes(n: usize) -> Result<ComplexEnumerator> {
    if n == 0 {
        return Err(Error::GroundSetSize(n));
    }
    if n > EXHAUSTIVE_MAX_N {
        return Err(Error::TooLargeForExhaustive {
            n,
            max: EXHAUSTIVE_MAX_N,
        });
    }
    let mut subsets: Vec<Face> = (1u64..(1 << n)).map(Face::from_bits).collect();
    subsets.sort_unstable();
    Ok(ComplexEnumerator {
        n,
        subsets,
        chosen: Vec::new(),
        next_start: 0,
        started: false,
    })
}

/// Depth-first walk over antichains, extending by increasing subset index.
pub struct ComplexEnumerator {
    n: usize,
    subsets: Vec<Face>,
    chosen: Vec<usize>,
    next_start: usize,
    started: bool,
}

impl ComplexEnumerator {
    fn current(&self) -> SimplicialComplex {
        let facets = self.chosen.iter().map(|&i| self.subsets[i]).collect();
        SimplicialComplex::from_generators_unchecked(self.n, facets)
    }

    fn compatible(&self, j: usize) -> bool {
        let s = self.subsets[j];
        self.chosen.iter().all(|&i| {
            let t = self.subsets[i];
            !s.is_subset_of(t) && !t.is_subset_of(s)
        })
    }
}

impl Iterator for ComplexEnumerator {
    type Item = SimplicialComplex;

    fn next(&mut self) -> Option<SimplicialComplex> {
        if !self.started {
            self.started = true;
            return Some(self.current());
        }
        loop {
            if let Some(j) = (self.next_start..self.subsets.len()).find(|&j| self.compatible(j)) {
                self.chosen.push(j);
                self.next_start = j + 1;
                return Some(self.current());
            }
            let j = self.chosen.pop()?;
            self.next_start = j + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_is_deterministic() {
        let a = random_complex(5, 0.3, 1).unwrap();
        let b = random_complex(5, 0.3, 1).unwrap();
        assert_eq!(a, b);
        let c = random_complex(30, 0.01, 7).unwrap();
        assert_eq!(c, random_complex(30, 0.01, 7).unwrap());
        assert_eq!(c.n(), 30);
    }

    #[test]
    fn random_small_ground_set() {
        for seed in 0..50 {
            let d = random_complex(1, 0.5, seed).unwrap();
            assert!(d.facets() == [Face::EMPTY] || d.facets() == [Face::full(1)]);
        }
    }

    #[test]
    fn random_rejects_bad_parameters() {
        assert!(random_complex(0, 0.5, 0).is_err());
        assert!(random_complex(65, 0.5, 0).is_err());
        assert!(random_complex(4, 0.0, 0).is_err());
        assert!(random_complex(4, 1.0, 0).is_err());
        assert!(matches!(
            random_complex(64, 0.9, 0),
            Err(Error::SampleTooLarge { .. })
        ));
    }

    #[test]
    fn small_enumerations() {
        let one: Vec<_> = enumerate_complexes(1).unwrap().collect();
        assert_eq!(one.len(), 2);
        let two: Vec<_> = enumerate_complexes(2).unwrap().collect();
        assert_eq!(two.len(), 5);
        let distinct: HashSet<_> = two.iter().cloned().collect();
        assert_eq!(distinct.len(), 5);
        assert!(matches!(
            enumerate_complexes(6),
            Err(Error::TooLargeForExhaustive { .. })
        ));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial_coefficient(5, 2), 10);
        assert_eq!(binomial_coefficient(64, 32), 1_832_624_140_942_590_534);
    }
}
