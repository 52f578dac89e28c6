//! `heckex` — exact Hecke operator matrices on cusp-form spaces.
//!
//! Exit codes: 0 success, 1 verification failure, 2 argument/domain error.

mod checks;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use heckex::dedekind::{eval_symbol, SymbolPoint, SymbolSpec};
use heckex::poly::{basis_exponents, s_poly};
use report::{charpoly_display, fraction, spoly_listing, HeckeReport};

#[derive(Parser)]
#[command(
    name = "heckex",
    version,
    about = "Exact Hecke operator matrices, period polynomials and Dedekind symbols"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Latex,
}

#[derive(Subcommand)]
enum Command {
    /// Hecke matrix for (w, m) with characteristic polynomial and trace
    Matrix {
        /// Even weight parameter (the cusp forms have weight w + 2)
        #[arg(long)]
        w: u32,
        /// Hecke operator index
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Characteristic polynomial of the Hecke matrix
    Charpoly {
        #[arg(long)]
        w: u32,
        #[arg(long)]
        m: u32,
    },
    /// Dimension and basis exponents for one weight
    Basis {
        #[arg(long)]
        w: u32,
    },
    /// Nonzero coefficients of the transformed basis polynomial, one
    /// "exponent coefficient" pair per line
    Spoly {
        #[arg(long)]
        w: u32,
        /// Odd exponent with 0 < n < w
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
    },
    /// Weighted Dedekind symbol value at a lattice point
    Dedekind {
        #[arg(long)]
        w: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        h: u64,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// Run a verification suite (exit 1 on the first failure)
    Check {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Subcommand)]
enum Suite {
    /// Weight-12 eigenvalues against the discriminant q-expansion
    Tau {
        #[arg(long, default_value_t = 12)]
        m_max: u32,
    },
    /// Mod-2 basis-selection sweep
    Mod2 {
        #[arg(long, default_value_t = 200)]
        w_max: u32,
    },
    /// Reciprocity law on a grid
    Reciprocity {
        #[arg(long, default_value_t = 10)]
        w: u32,
        #[arg(long, default_value_t = 3)]
        m_max: u32,
        #[arg(long, default_value_t = 5)]
        grid: u32,
    },
    /// Symbol-level Hecke transform against direct evaluation
    Transform {
        #[arg(long, default_value_t = 10)]
        w: u32,
        #[arg(long, default_value_t = 3)]
        m_max: u32,
        #[arg(long, default_value_t = 4)]
        grid: u32,
    },
    /// Period-space membership and parity of the transformed polynomials
    Uspace {
        #[arg(long, default_value_t = 28)]
        w_max: u32,
        #[arg(long, default_value_t = 3)]
        m_max: u32,
    },
    /// Composition identities for the action matrices
    HeckeAlgebra {
        #[arg(long, value_delimiter = ',', default_values_t = [10u32, 22, 26, 28])]
        w: Vec<u32>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> heckex::Result<ExitCode> {
    match command {
        Command::Matrix { w, m, format } => {
            let report = HeckeReport::compute(w, m)?;
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
                Format::Latex => print!("{}", report.to_latex()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Charpoly { w, m } => {
            let report = HeckeReport::compute(w, m)?;
            println!("{}", charpoly_display(&report.charpoly));
            Ok(ExitCode::SUCCESS)
        }
        Command::Basis { w } => {
            let basis = basis_exponents(w)?;
            println!("w: {w}");
            println!("dim: {}", basis.dim());
            let exps: Vec<String> = basis.exponents().iter().map(u32::to_string).collect();
            println!("exponents: [{}]", exps.join(", "));
            Ok(ExitCode::SUCCESS)
        }
        Command::Spoly { w, n, m } => {
            let f = s_poly(w, n, m)?;
            print!("{}", spoly_listing(&f));
            Ok(ExitCode::SUCCESS)
        }
        Command::Dedekind { w, n, m, h, k } => {
            let spec = SymbolSpec::new(w, n, m)?;
            let pt = SymbolPoint::new(h, k)?;
            println!("{}", fraction(&eval_symbol(&spec, &pt)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { suite } => {
            let outcome = match suite {
                Suite::Tau { m_max } => checks::check_tau(m_max)?,
                Suite::Mod2 { w_max } => checks::check_mod2(w_max)?,
                Suite::Reciprocity { w, m_max, grid } => {
                    checks::check_reciprocity(w, m_max, grid)?
                }
                Suite::Transform { w, m_max, grid } => {
                    checks::check_symbol_transform(w, m_max, grid)?
                }
                Suite::Uspace { w_max, m_max } => checks::check_uspace(w_max, m_max)?,
                Suite::HeckeAlgebra { w } => checks::check_hecke_algebra(&w)?,
            };
            match outcome {
                Ok(()) => {
                    println!("PASS");
                    Ok(ExitCode::SUCCESS)
                }
                Err(first_failure) => {
                    println!("FAIL: {first_failure}");
                    Ok(ExitCode::from(1))
                }
            }
        }
    }
}
