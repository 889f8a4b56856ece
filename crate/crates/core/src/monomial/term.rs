use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::simplicial::Face;

/// Largest exponent a monomial may carry.
pub const EXPONENT_CAP: u32 = 1 << 16;

/// A monomial `x_1^{a_1} ... x_n^{a_n}` given by its exponent vector.
///
/// Ordered by total degree, then lexicographically with `x1 > x2 > ...`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

fn checked(e: u64) -> Result<u32> {
    if e > EXPONENT_CAP as u64 {
        Err(Error::ExponentOverflow { cap: EXPONENT_CAP })
    } else {
        Ok(e as u32)
    }
}

fn same_n(a: &Monomial, b: &Monomial) -> Result<()> {
    if a.n() == b.n() {
        Ok(())
    } else {
        Err(Error::AmbientMismatch(a.n(), b.n()))
    }
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        for &e in &exps {
            checked(e as u64)?;
        }
        Ok(Monomial { exps })
    }

    pub fn unit(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// `x_i` for 1-based `i`.
    pub fn variable(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i - 1] = 1;
        Monomial { exps }
    }

    /// The squarefree monomial `∏_{i ∈ F} x_i`.
    pub fn from_face(n: usize, face: Face) -> Self {
        let mut exps = vec![0; n];
        for v in face.vertices() {
            exps[v - 1] = 1;
        }
        Monomial { exps }
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// `{ i : a_i ≥ threshold }` as a face.
    fn exps_at_least(&self, threshold: u32) -> Face {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e >= threshold)
            .fold(Face::EMPTY, |acc, (i, _)| acc.with(i + 1))
    }

    /// `{ i : a_i ≠ 0 }`.
    pub fn supp(&self) -> Face {
        self.exps_at_least(1)
    }

    /// `{ i : a_i ≥ 2 }`.
    pub fn supp_two(&self) -> Face {
        self.exps_at_least(2)
    }

    /// Divisibility without the ambient check, for hot loops.
    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        same_n(self, other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn lcm_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        same_n(self, other)?;
        Ok(self.lcm_unchecked(other))
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        same_n(self, other)?;
        Ok(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        })
    }

    pub fn multiply(&self, other: &Monomial) -> Result<Monomial> {
        same_n(self, other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| checked(a as u64 + b as u64))
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    pub(crate) fn colon_mono_unchecked(&self, g: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&g.exps)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        }
    }

    /// `a / gcd(a, g)`: componentwise `max(a_i - g_i, 0)`.
    pub fn colon_mono(&self, g: &Monomial) -> Result<Monomial> {
        same_n(self, g)?;
        Ok(self.colon_mono_unchecked(g))
    }

    pub fn pow(&self, q: u32) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|&a| checked(a as u64 * q as u64))
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    /// Parses `x1^2*x3` style text (`1` is the unit) in `n` variables.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let parsed = parse_exponent_map(text)?;
        let mut exps = vec![0u32; n];
        for (var, e) in parsed {
            if var > n {
                return Err(Error::VertexOutOfRange { vertex: var, n });
            }
            exps[var - 1] = checked(exps[var - 1] as u64 + e as u64)?;
        }
        Ok(Monomial { exps })
    }
}

/// Splits monomial text into `(variable, exponent)` factors.
pub(crate) fn parse_exponent_map(text: &str) -> Result<Vec<(usize, u32)>> {
    let bad = |message: String| Error::Parse { line: 0, message };
    let text = text.trim();
    if text == "1" {
        return Ok(Vec::new());
    }
    if text.is_empty() {
        return Err(bad("empty monomial".into()));
    }
    let mut factors = Vec::new();
    for factor in text.split('*') {
        let factor = factor.trim();
        let rest = factor
            .strip_prefix('x')
            .ok_or_else(|| bad(format!("expected a variable like x1, got {factor:?}")))?;
        let (var, exp) = match rest.split_once('^') {
            Some((v, e)) => (v, e),
            None => (rest, "1"),
        };
        let var: usize = var
            .trim()
            .parse()
            .map_err(|_| bad(format!("bad variable index in {factor:?}")))?;
        if var == 0 {
            return Err(bad("variables are numbered from 1".into()));
        }
        let exp: u64 = exp
            .trim()
            .parse()
            .map_err(|_| bad(format!("bad exponent in {factor:?}")))?;
        factors.push((var, checked(exp)?));
    }
    Ok(factors)
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
