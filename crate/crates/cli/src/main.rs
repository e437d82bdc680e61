//! `idempo`: idempotents, absolute nilpotents and eigenvectors of the
//! quadratic operator of algebras stored as JSON files.

mod commands;
mod modulus;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use idempo::solver::SolveConfig;

use commands::{CliError, Outcome};

#[derive(Parser, Debug)]
#[command(name = "idempo", version, about = "Canonical elements of finite-dimensional algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Options,
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    /// Coefficient field, overriding the file: Q, R, F5, F9, GF(7), F3((t)) or a JSON descriptor.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Solver engine for `solve`; chosen from the field when omitted.
    #[arg(long, global = true, value_enum)]
    pub engine: Option<EngineArg>,
    /// Residual tolerance of the real engine.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Restarts of the real engine.
    #[arg(long, global = true)]
    pub restarts: Option<usize>,
    /// Largest extension degree for solution counts.
    #[arg(long, global = true)]
    pub kmax: Option<usize>,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the JSON report or file here.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Print JSON instead of the text summary.
    #[arg(long, global = true)]
    pub json: bool,
}

impl Options {
    pub fn config(&self) -> Result<SolveConfig, CliError> {
        let d = SolveConfig::default();
        let cfg = SolveConfig {
            tolerance: self.tol.unwrap_or(d.tolerance),
            max_restarts: self.restarts.unwrap_or(d.max_restarts),
            k_max: self.kmax.unwrap_or(d.k_max),
            seed: self.seed,
            ..d
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum EngineArg {
    Exhaustive,
    Exact2,
    Real,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify one element: idempotent, absolute nilpotent, eigenvector or none.
    Check {
        file: PathBuf,
        /// Coordinates as a JSON array, e.g. "[1,0]".
        element: String,
    },
    /// Solve Vx = λx; exit 1 when there is no nontrivial solution.
    Solve { file: PathBuf },
    /// Decide which of 0 and 1 are eigenvalues and give witnesses.
    Spectrum { file: PathBuf },
    /// Write the odd-degree quotient algebra of F[t]/(f).
    Counterexample {
        /// Modulus as text ("t^3-2") or coefficients low to high ("[-2,0,0,1]").
        modulus: String,
    },
    /// Count solutions over F_{p^k}, k = 1..kmax, and judge genericity.
    Bezout {
        file: PathBuf,
        /// Read the file over F_p.
        #[arg(long)]
        p: Option<u64>,
    },
    /// Add a random perturbation layer and compare genericity before and after.
    Perturb {
        file: PathBuf,
        #[arg(long)]
        p: Option<u64>,
    },
    /// Print a rootless polynomial certifying the field is not closed under odd degrees.
    Witness,
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let o = &cli.opts;
    match cli.command {
        Command::Check { file, element } => commands::check(o, &file, &element),
        Command::Solve { file } => commands::solve(o, &file),
        Command::Spectrum { file } => commands::spectrum(o, &file),
        Command::Counterexample { modulus } => commands::counterexample(o, &modulus),
        Command::Bezout { file, p } => commands::bezout(o, &file, p),
        Command::Perturb { file, p } => commands::perturb(o, &file, p),
        Command::Witness => commands::witness(o),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, json) = (cli.opts.out.clone(), cli.opts.json);
    match run(cli) {
        Ok(outcome) => {
            if let Some(path) = out {
                let text = serde_json::to_string_pretty(&outcome.json).expect("json");
                if let Err(e) = std::fs::write(&path, text + "\n") {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&outcome.json).expect("json"));
            } else {
                print!("{}", outcome.text);
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
