mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hopfcyc::cyclic::Theory;

#[derive(Parser)]
#[command(name = "hopfcyc", version, about = "Exact Hopf-cyclic verification over the rationals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Builder {
    Generic,
    Concrete,
}

#[derive(Subcommand)]
enum Command {
    /// Check every Hopf axiom of a structure-constant file.
    VerifyHopf {
        hopf: PathBuf,
        /// Check modulo this prime instead of over the rationals.
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Check the YD_i condition (both forms) and i-stability of a coefficient.
    CheckCoeff {
        hopf: PathBuf,
        coeff: PathBuf,
        #[arg(long = "i", allow_negative_numbers = true)]
        index: i64,
        /// Also require i-stability.
        #[arg(long)]
        stability: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Build the (co)cyclic tower of a coefficient and a module (co)algebra.
    Build {
        hopf: PathBuf,
        coeff: PathBuf,
        object: PathBuf,
        #[arg(long, value_parser = parse_theory)]
        theory: Theory,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=8))]
        degree: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Accept a coefficient that is YD but not stable.
        #[arg(long)]
        allow_paracyclic: bool,
        #[arg(long, value_enum, default_value_t = Builder::Concrete)]
        builder: Builder,
    },
    /// Check every (co)cyclic identity of a serialized tower.
    VerifyRelations {
        object: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Hochschild and cyclic (co)homology dimensions of a serialized tower.
    Homology {
        object: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        #[arg(long = "char", default_value_t = 0)]
        characteristic: u64,
    },
}

fn parse_theory(s: &str) -> Result<Theory, String> {
    s.parse::<Theory>().map_err(|e| e.to_string())
}

fn configure_threads() {
    if let Some(n) = std::env::var("HOPFCYC_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
}

fn main() -> ExitCode {
    configure_threads();
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::VerifyHopf { hopf, characteristic, format } => commands::verify_hopf(&hopf, characteristic, format),
        Command::CheckCoeff { hopf, coeff, index, stability, format } => commands::check_coeff(&hopf, &coeff, index, stability, format),
        Command::Build { hopf, coeff, object, theory, degree, out, allow_paracyclic, builder } => commands::build(commands::BuildArgs {
            hopf: &hopf,
            coeff: &coeff,
            object: &object,
            theory,
            degree: degree as usize,
            out: out.as_deref(),
            allow_paracyclic,
            builder,
        }),
        Command::VerifyRelations { object, format } => commands::verify_relations(&object, format),
        Command::Homology { object, format, characteristic } => commands::homology(&object, format, characteristic),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
