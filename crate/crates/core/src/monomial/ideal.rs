use std::fmt;

use super::term::{parse_exponent_map, Monomial};
use crate::error::{Error, Result};

/// A monomial ideal in `n` variables, held as its sorted minimal generators.
///
/// The zero ideal has no generators; the unit ideal is generated by `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Drops every generator divisible by another one.
    pub fn minimize<I: IntoIterator<Item = Monomial>>(n: usize, gens: I) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(g) = gens.iter().find(|g| g.n() != n) {
            return Err(Error::AmbientMismatch(n, g.n()));
        }
        Ok(Self::minimize_unchecked(n, gens))
    }

    pub(crate) fn minimize_unchecked(n: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort_unstable();
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            // `kept` holds only monomials of degree <= deg(g)
            if !kept.iter().any(|k| k.divides_unchecked(&g)) {
                kept.push(g);
            }
        }
        MonomialIdeal { n, gens: kept }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: Vec::new(),
        }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::unit(n)],
        }
    }

    pub fn principal(m: Monomial) -> Self {
        MonomialIdeal {
            n: m.n(),
            gens: vec![m],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(Monomial::is_unit)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    fn same_n(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::AmbientMismatch(self.n, other.n))
        }
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        if m.n() != self.n {
            return Err(Error::AmbientMismatch(self.n, m.n()));
        }
        Ok(self.gens.iter().any(|g| g.divides_unchecked(m)))
    }

    /// `I ⊆ J` on generators.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        self.same_n(other)?;
        Ok(self
            .gens
            .iter()
            .all(|g| other.gens.iter().any(|h| h.divides_unchecked(g))))
    }

    pub fn add(&self, other: &MonomialIdeal) -> Result<Self> {
        self.same_n(other)?;
        Ok(Self::minimize_unchecked(
            self.n,
            self.gens.iter().chain(&other.gens).cloned().collect(),
        ))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<Self> {
        self.same_n(other)?;
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                lcms.push(a.lcm_unchecked(b));
            }
        }
        Ok(Self::minimize_unchecked(self.n, lcms))
    }

    /// The ideal generated by `q`-th powers of the generators.
    pub fn frobenius_power(&self, q: u32) -> Result<Self> {
        if q == 0 {
            return Err(Error::BadFrobeniusExponent(q, 1));
        }
        let gens = self
            .gens
            .iter()
            .map(|g| g.pow(q))
            .collect::<Result<Vec<_>>>()?;
        // powers of an antichain under divisibility stay an antichain
        Ok(Self::minimize_unchecked(self.n, gens))
    }

    /// `(I : g)` for a single monomial.
    pub fn quotient(&self, g: &Monomial) -> Result<Self> {
        if g.n() != self.n {
            return Err(Error::AmbientMismatch(self.n, g.n()));
        }
        Ok(Self::minimize_unchecked(
            self.n,
            self.gens
                .iter()
                .map(|m| m.colon_mono_unchecked(g))
                .collect(),
        ))
    }

    /// `(I : J) = ∩_{g ∈ gens(J)} (I : g)`; `(I : 0)` is the unit ideal.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<Self> {
        self.same_n(other)?;
        let mut acc: Option<MonomialIdeal> = None;
        for g in &other.gens {
            let q = self.quotient(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
            if acc.as_ref().is_some_and(MonomialIdeal::is_zero) {
                break;
            }
        }
        Ok(acc.unwrap_or_else(|| MonomialIdeal::unit(self.n)))
    }

    /// Parses one monomial per line; `n = <int>` may appear as the first
    /// non-comment line, otherwise `n` is the largest variable index seen.
    pub fn parse(text: &str) -> Result<Self> {
        let mut declared_n: Option<usize> = None;
        let mut rows: Vec<(usize, Vec<(usize, u32)>)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(n) = parse_header(line, line_no)? {
                if declared_n.is_some() || !rows.is_empty() {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "header must come first".into(),
                    });
                }
                declared_n = Some(n);
                continue;
            }
            let factors = parse_exponent_map(line).map_err(|e| relocate(e, line_no))?;
            rows.push((line_no, factors));
        }
        let seen = rows
            .iter()
            .flat_map(|(_, f)| f.iter().map(|(v, _)| *v))
            .max()
            .unwrap_or(0);
        let n = match declared_n {
            Some(n) => n,
            None if seen > 0 => seen,
            None => {
                return Err(Error::Parse {
                    line: 0,
                    message: "cannot infer n; add an `n = <int>` header".into(),
                })
            }
        };
        let mut gens = Vec::new();
        for (line_no, factors) in rows {
            let mut exps = vec![0u32; n];
            for (v, e) in factors {
                if v > n {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("variable x{v} exceeds n = {n}"),
                    });
                }
                exps[v - 1] += e;
            }
            gens.push(Monomial::new(exps).map_err(|e| relocate(e, line_no))?);
        }
        Ok(Self::minimize_unchecked(n, gens))
    }
}

/// Recognises an `n = <int>` line.
pub(crate) fn parse_header(line: &str, line_no: usize) -> Result<Option<usize>> {
    let Some(rest) = line.strip_prefix('n') else {
        return Ok(None);
    };
    let Some(value) = rest.trim_start().strip_prefix('=') else {
        return Ok(None);
    };
    value.trim().parse().map(Some).map_err(|_| Error::Parse {
        line: line_no,
        message: format!("bad header {line:?}"),
    })
}

fn relocate(e: Error, line: usize) -> Error {
    match e {
        Error::Parse { message, .. } => Error::Parse { line, message },
        other => Error::Parse {
            line,
            message: other.to_string(),
        },
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str, n: usize) -> Monomial {
        Monomial::parse(s, n).unwrap()
    }

    fn ideal(gens: &[&str], n: usize) -> MonomialIdeal {
        MonomialIdeal::minimize(n, gens.iter().map(|g| m(g, n))).unwrap()
    }

    /// Every monomial with exponents in `0..=max` in `n` variables.
    fn exponent_box(n: usize, max: u32) -> Vec<Monomial> {
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|v: Vec<u32>| {
                    (0..=max).map(move |e| {
                        let mut w = v.clone();
                        w.push(e);
                        w
                    })
                })
                .collect();
        }
        out.into_iter().map(|e| Monomial::new(e).unwrap()).collect()
    }

    /// Minimal generators of `(I : J)` by brute-force membership over a box.
    fn brute_force_colon(i: &MonomialIdeal, j: &MonomialIdeal, max: u32) -> Vec<Monomial> {
        let members: Vec<Monomial> = exponent_box(i.n(), max)
            .into_iter()
            .filter(|c| {
                j.generators()
                    .iter()
                    .all(|g| i.contains(&c.multiply(g).unwrap()).unwrap())
            })
            .collect();
        let mut minimal: Vec<Monomial> = members
            .iter()
            .filter(|c| !members.iter().any(|d| d != *c && d.divides(c).unwrap()))
            .cloned()
            .collect();
        minimal.sort();
        minimal
    }

    #[test]
    fn minimize_examples() {
        assert_eq!(ideal(&["x1*x2", "x1^2*x2^2"], 2), ideal(&["x1*x2"], 2));
        let already = ideal(&["x1^2*x2", "x1*x2*x3", "x2*x3^2"], 3);
        assert_eq!(already.generators().len(), 3);
        assert!(MonomialIdeal::minimize(3, []).unwrap().is_zero());
        assert!(MonomialIdeal::minimize(3, [m("x1", 2)]).is_err());
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(
            ideal(&["x1*x3"], 3).frobenius_power(2).unwrap(),
            ideal(&["x1^2*x3^2"], 3)
        );
        assert_eq!(
            ideal(&["x1", "x2"], 2).frobenius_power(2).unwrap(),
            ideal(&["x1^2", "x2^2"], 2)
        );
        let i = ideal(&["x1*x2", "x2*x3^2"], 3);
        assert_eq!(i.frobenius_power(1).unwrap(), i);
        assert!(i.frobenius_power(0).is_err());
    }

    #[test]
    fn colon_examples_against_brute_force() {
        let i = ideal(&["x1^2*x2^2", "x2^2*x3^2"], 3);
        let j = ideal(&["x1*x2", "x2*x3"], 3);
        let oracle = brute_force_colon(&i, &j, 4);
        assert_eq!(
            oracle,
            ideal(&["x1^2*x2", "x1*x2*x3", "x2*x3^2"], 3).generators()
        );
        assert_eq!(i.colon(&j).unwrap().generators(), oracle.as_slice());

        let i = ideal(&["x1^2", "x2^2"], 2);
        let j = ideal(&["x1", "x2"], 2);
        let oracle = brute_force_colon(&i, &j, 4);
        assert_eq!(oracle, ideal(&["x1^2", "x1*x2", "x2^2"], 2).generators());
        assert_eq!(i.colon(&j).unwrap().generators(), oracle.as_slice());

        assert_eq!(i.colon(&MonomialIdeal::unit(2)).unwrap(), i);
        assert!(i.colon(&MonomialIdeal::zero(2)).unwrap().is_unit());
    }

    #[test]
    fn add_intersect_contains() {
        let s = ideal(&["x1^2*x2^2", "x2^2*x3^2"], 3)
            .add(&ideal(&["x1*x2*x3"], 3))
            .unwrap();
        assert_eq!(s, ideal(&["x1^2*x2^2", "x2^2*x3^2", "x1*x2*x3"], 3));
        assert_eq!(s.generators().len(), 3);
        assert_eq!(
            ideal(&["x1"], 2).intersect(&ideal(&["x2"], 2)).unwrap(),
            ideal(&["x1*x2"], 2)
        );
        let i = ideal(&["x1*x2"], 2);
        assert_eq!(i.add(&MonomialIdeal::zero(2)).unwrap(), i);

        assert!(!s.contains(&m("x1^2*x2", 3)).unwrap());
        assert!(ideal(&["x1*x3"], 3).contains(&m("x1^2*x3^2", 3)).unwrap());
        let rhs = ideal(&["x1", "x2"], 2)
            .frobenius_power(2)
            .unwrap()
            .add(&ideal(&["x1*x2"], 2))
            .unwrap();
        assert_eq!(ideal(&["x1^2", "x1*x2", "x2^2"], 2), rhs);
    }

    #[test]
    fn zero_and_unit() {
        assert!(!MonomialIdeal::zero(2).contains(&Monomial::unit(2)).unwrap());
        assert!(MonomialIdeal::unit(2).contains(&Monomial::unit(2)).unwrap());
        assert_eq!(MonomialIdeal::zero(2).to_string(), "(0)");
        assert_eq!(ideal(&["x1", "x1*x2"], 2).to_string(), "(x1)");
    }

    #[test]
    fn parse_ideal_file() {
        let text = "# path complex\nn = 3\nx1*x3\n\nx1^2*x3  # redundant\n";
        let i = MonomialIdeal::parse(text).unwrap();
        assert_eq!(i, ideal(&["x1*x3"], 3));
        assert_eq!(MonomialIdeal::parse("x1*x2\nx2*x3\n").unwrap().n(), 3);
        assert!(MonomialIdeal::parse("n = 3\n").unwrap().is_zero());
        assert!(MonomialIdeal::parse("").is_err());
        assert!(matches!(
            MonomialIdeal::parse("n = 2\nx3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            MonomialIdeal::parse("x1\nz2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(MonomialIdeal::parse("x1\nn = 3\n").is_err());
    }
}
