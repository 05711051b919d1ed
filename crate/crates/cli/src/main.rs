use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use realnf_cli::{parse_polynomial, perturb, render, OutputReport};
use realnf_core::{Rational, SingularityType};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Real normal forms of unimodal plane curve singularities.
#[derive(Parser, Debug)]
#[command(name = "realnf", version, args_conflicts_with_subcommands = true)]
struct Cli {
    /// Polynomial in x and y with rational coefficients, e.g. "x^3 + y^8 + 2*x*y^6".
    #[arg(allow_hyphen_values = true)]
    polynomial: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Include Milnor number, corank and complex type.
    #[arg(long)]
    diagnostics: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a random germ right equivalent to a normal form equation.
    Perturb {
        #[arg(long)]
        seed: u64,
        /// Real type label, e.g. E14+, X9+-, Y5,6++, Ytilde5-.
        #[arg(long = "type")]
        ty: String,
        /// Rational parameter value, e.g. 2 or -1/3.
        #[arg(long, allow_hyphen_values = true)]
        param: String,
    },
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("realnf: {msg}");
    ExitCode::from(1)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(Command::Perturb { seed, ty, param }) = cli.command {
        let ty: SingularityType = match ty.parse() {
            Ok(t) => t,
            Err(e) => return fail(e),
        };
        let a: Rational = match param.parse() {
            Ok(a) => a,
            Err(_) => return fail(format!("bad parameter {param:?}")),
        };
        return match perturb(&ty, &a, seed) {
            Ok(p) => {
                println!("{}", render(&p.germ));
                ExitCode::SUCCESS
            }
            Err(e) => fail(e),
        };
    }
    let Some(text) = cli.polynomial else {
        return fail("missing polynomial (see --help)");
    };
    let parsed = match parse_polynomial(&text) {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    let report = OutputReport::build(&parsed.source, &parsed.polynomial, cli.diagnostics);
    match cli.format {
        Format::Text => println!("{}", report.to_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    ExitCode::from(report.status.exit_code() as u8)
}
