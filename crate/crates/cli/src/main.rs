//! `cartier`: classify Stanley-Reisner rings by the generation of their Cartier
//! algebra, and inspect the complexes, ideals and homology involved.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands::{CrossValidateOptions, Outcome};

#[derive(Parser, Debug)]
#[command(name = "cartier", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the Cartier algebra is principally generated (exit 0) or not (exit 3).
    Classify {
        #[command(flatten)]
        input: InputArgs,
        /// Frobenius exponent for the ideal criterion.
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
    },
    /// List free-face pairs (F, G).
    FreeFaces(InputArgs),
    /// Collapse greedily along the smallest free face until none is left.
    Collapse(InputArgs),
    /// Strip cone vertices and re-index the remaining support.
    Core(InputArgs),
    /// Minimal non-faces, the generators of the Stanley-Reisner ideal.
    Nonfaces(InputArgs),
    /// Compare `I^[q] : I` with `I^[q] + (x_V^(q-1))`.
    Colon {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 2)]
        q: u32,
    },
    /// Reduced simplicial homology over GF(p).
    Homology(FieldInputArgs),
    /// Cohen-Macaulay test by Reisner's criterion.
    Cm(FieldInputArgs),
    /// Doubly Cohen-Macaulay test.
    #[command(name = "2cm")]
    DoublyCm(FieldInputArgs),
    /// Gorenstein* test.
    GorensteinStar(FieldInputArgs),
    /// Search for a certificate that the complex is not Buchsbaum*.
    BstarRefute(FieldInputArgs),
    /// Check the two criteria against each other on exhaustive and random complexes.
    CrossValidate(CrossValidateArgs),
}

#[derive(Args, Debug)]
struct InputArgs {
    /// A `.facets` or `.ideal` file.
    path: PathBuf,
    /// Ground set size, overriding the file.
    #[arg(long)]
    n: Option<usize>,
    /// Input format, overriding detection by extension.
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct FieldInputArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Characteristic of the coefficient field.
    #[arg(long, default_value_t = 2)]
    field: u64,
}

#[derive(Args, Debug)]
struct CrossValidateArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Random complexes per ground set size.
    #[arg(long, default_value_t = 10_000)]
    trials: usize,
    /// Additional Frobenius exponents that must reproduce the q = 2 verdicts.
    #[arg(long, value_delimiter = ',')]
    q_sweep: Vec<u32>,
    /// Restrict to one ground set size.
    #[arg(long)]
    n: Option<usize>,
    /// Only run the exhaustive enumeration.
    #[arg(long)]
    exhaustive: bool,
    #[arg(long)]
    json: bool,
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Facets,
    Ideal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Both,
    Ideal,
    FreeFace,
}

fn run(cli: Cli) -> Result<Outcome, commands::CliError> {
    use cartier_core::classifier::Method;
    match cli.command {
        Command::Classify { input, q, method } => {
            let method = match method {
                MethodArg::Both => Method::Both,
                MethodArg::Ideal => Method::Ideal,
                MethodArg::FreeFace => Method::FreeFace,
            };
            commands::classify(&input.load()?, method, q, input.json)
        }
        Command::FreeFaces(input) => commands::free_faces(&input.load()?.complex()?, input.json),
        Command::Collapse(input) => commands::collapse(&input.load()?.complex()?, input.json),
        Command::Core(input) => commands::core(&input.load()?.complex()?, input.json),
        Command::Nonfaces(input) => commands::nonfaces(&input.load()?.complex()?, input.json),
        Command::Colon { input, q } => commands::colon(&input.load()?.ideal(), q, input.json),
        Command::Homology(a) => {
            commands::homology(&a.input.load()?.complex()?, a.field()?, a.input.json)
        }
        Command::Cm(a) => {
            commands::property(&a.input.load()?.complex()?, a.field()?, "cm", a.input.json)
        }
        Command::DoublyCm(a) => {
            commands::property(&a.input.load()?.complex()?, a.field()?, "2cm", a.input.json)
        }
        Command::GorensteinStar(a) => commands::property(
            &a.input.load()?.complex()?,
            a.field()?,
            "gorenstein-star",
            a.input.json,
        ),
        Command::BstarRefute(a) => {
            commands::bstar_refute(&a.input.load()?.complex()?, a.field()?, a.input.json)
        }
        Command::CrossValidate(a) => commands::cross_validate(&CrossValidateOptions {
            seed: a.seed,
            trials: a.trials,
            q_sweep: a.q_sweep,
            n: a.n,
            exhaustive: a.exhaustive,
            json: a.json,
            inject_fault: a.inject_fault,
        }),
    }
}

impl FieldInputArgs {
    fn field(&self) -> Result<cartier_core::homology::PrimeField, commands::CliError> {
        Ok(cartier_core::homology::PrimeField::new(self.field)?)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                commands::EXIT_INPUT_ERROR
            } else {
                0
            });
        }
    };
    match run(cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
