use std::fs;
use std::path::Path;

use cartier_core::classifier::{complex_of_ideal, ideal_of_complex};
use cartier_core::monomial::{Monomial, MonomialIdeal};
use cartier_core::simplicial::SimplicialComplex;

use crate::commands::CliError;
use crate::{Format, InputArgs};

/// A parsed input file: either side of the Stanley-Reisner correspondence.
#[derive(Debug)]
pub enum Input {
    Complex(SimplicialComplex),
    Ideal(MonomialIdeal),
}

impl Input {
    pub fn complex(&self) -> Result<SimplicialComplex, CliError> {
        match self {
            Input::Complex(c) => Ok(c.clone()),
            Input::Ideal(i) => Ok(complex_of_ideal(i)?),
        }
    }

    pub fn ideal(&self) -> MonomialIdeal {
        match self {
            Input::Complex(c) => ideal_of_complex(c),
            Input::Ideal(i) => i.clone(),
        }
    }
}

fn detect(path: &Path) -> Option<Format> {
    match path.extension()?.to_str()? {
        "facets" => Some(Format::Facets),
        "ideal" => Some(Format::Ideal),
        _ => None,
    }
}

/// Adds unused variables so the ideal lives in `n` variables.
fn widen(ideal: MonomialIdeal, n: usize) -> Result<MonomialIdeal, CliError> {
    if n < ideal.n() {
        return Err(CliError::Usage(format!(
            "--n {n} is smaller than the {} variables in the file",
            ideal.n()
        )));
    }
    let gens = ideal
        .generators()
        .iter()
        .map(|g| {
            let mut exps = g.exponents().to_vec();
            exps.resize(n, 0);
            Monomial::new(exps)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MonomialIdeal::minimize(n, gens)?)
}

impl InputArgs {
    pub fn load(&self) -> Result<Input, CliError> {
        let format = self
            .format
            .or_else(|| detect(&self.path))
            .ok_or_else(|| CliError::UnknownFormat(self.path.display().to_string()))?;
        let text = fs::read_to_string(&self.path).map_err(|source| CliError::Io {
            path: self.path.display().to_string(),
            source,
        })?;
        match format {
            Format::Facets => Ok(Input::Complex(SimplicialComplex::parse(&text, self.n)?)),
            Format::Ideal => {
                let ideal = MonomialIdeal::parse(&text)?;
                Ok(Input::Ideal(match self.n {
                    Some(n) => widen(ideal, n)?,
                    None => ideal,
                }))
            }
        }
    }
}
