use super::complex::SimplicialComplex;
use super::face::{Face, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::monomial::parse_header;

impl SimplicialComplex {
    /// Reads the facet file format: optional `n = <int>` header, then one
    /// facet per line as whitespace-separated vertices, `-` for the empty
    /// facet, `#` comments. Without a header (or override) `n` is the
    /// largest vertex seen.
    pub fn parse(text: &str, n_override: Option<usize>) -> Result<Self> {
        let mut declared_n: Option<usize> = None;
        let mut rows: Vec<(usize, Vec<usize>)> = Vec::new();
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
            if line == "-" {
                rows.push((line_no, Vec::new()));
                continue;
            }
            let vertices = line
                .split_whitespace()
                .map(|tok| match tok.parse::<usize>() {
                    Ok(v) if v >= 1 => Ok(v),
                    _ => Err(Error::Parse {
                        line: line_no,
                        message: format!("bad vertex {tok:?}"),
                    }),
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push((line_no, vertices));
        }
        let seen = rows
            .iter()
            .flat_map(|(_, r)| r.iter().copied())
            .max()
            .unwrap_or(0);
        let n = n_override.or(declared_n).unwrap_or(seen);
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::Parse {
                line: 0,
                message: format!("ground set size {n} is outside 1..=64"),
            });
        }
        let faces = rows
            .into_iter()
            .map(|(line, vs)| {
                Face::from_vertices(vs, n).map_err(|e| Error::Parse {
                    line,
                    message: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::new(faces, n)
    }

    /// Writes the facet file format; `parse` reads it back unchanged.
    pub fn to_facet_file(&self) -> String {
        let mut out = format!("n = {}\n", self.n());
        for f in self.facets() {
            if f.is_empty() {
                out.push('-');
            } else {
                let vs: Vec<String> = f.vertices().map(|v| v.to_string()).collect();
                out.push_str(&vs.join(" "));
            }
            out.push('\n');
        }
        out
    }
}
