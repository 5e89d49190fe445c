//! `exactalg` — exact computations with module algebras from the
//! command line. Every command prints a human summary (text mode)
//! and emits one JSON document; `--format json` suppresses the
//! summary so the output can be piped straight into another command.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use exactalg_cli::run::{self, Options, Outcome};
use exactalg_cli::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "exactalg",
    version,
    about = "Exact module-algebra computations: radicals, exactness, smash products, and the ideal correspondence",
    after_help = "Exit codes: 0 success, 1 bad input or usage, 2 a verification or consistency check failed."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Field for field-generic registry instances: a prime p, or Q
    #[arg(long, global = true)]
    field: Option<String>,

    /// Probe depth for the morphism category; enables cross-validation
    /// in `c-radical`
    #[arg(long, global = true)]
    probes: Option<usize>,

    /// Cap on exhaustive subspace enumerations
    #[arg(long, global = true)]
    enum_bound: Option<u128>,

    /// Seed for randomized verification suites
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Write the JSON document here instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit a named instance from the built-in registry
    Example {
        /// Registry name; run with a bogus name to see the list
        name: String,
    },
    /// Check every defining axiom of an instance
    Check { input: String },
    /// The Jacobson radical of the underlying algebra
    Radical { input: String },
    /// The equivariant radical: the largest stable nilpotent ideal object
    CRadical { input: String },
    /// Decide whether the equivariant radical vanishes
    Exact { input: String },
    /// Split an exact instance into simple factors
    Decompose { input: String },
    /// Quotient by the (equivariant) radical
    Quotient { input: String },
    /// The smash product of a module algebra with its Hopf algebra
    Smash { input: String },
    /// Test the standard modules for categorical projectivity
    Projective { input: String },
    /// Exercise the ideal correspondence on every ideal object
    Correspondence { input: String },
    /// Run the law suites (kernel, assoc, hopf, modalg, kleisli, smash, cli)
    Verify {
        /// One suite name, or "all"
        #[arg(default_value = "all")]
        suite: String,
    },
    /// Sweep the corpus modules of a simple instance for projectivity
    Skryabin { input: String },
}

fn dispatch(cli: &Cli, opts: &Options) -> CliResult<Outcome> {
    match &cli.command {
        Command::Example { name } => run::example(name, opts),
        Command::Check { input } => run::check(input, opts),
        Command::Radical { input } => run::radical(input, opts),
        Command::CRadical { input } => run::c_radical(input, opts),
        Command::Exact { input } => run::exact(input, opts),
        Command::Decompose { input } => run::decompose(input, opts),
        Command::Quotient { input } => run::quotient(input, opts),
        Command::Smash { input } => run::smash_cmd(input, opts),
        Command::Projective { input } => run::projective(input, opts),
        Command::Correspondence { input } => run::correspondence(input, opts),
        Command::Verify { suite } => run::verify_cmd(suite, opts),
        Command::Skryabin { input } => run::skryabin(input, opts),
    }
}

fn emit(cli: &Cli, outcome: &Outcome) -> std::io::Result<()> {
    let stdout = std::io::stdout();
    let mut stdout = stdout.lock();
    if cli.format == Format::Text {
        for line in &outcome.summary {
            writeln!(stdout, "{line}")?;
        }
    }
    let text = outcome.document.to_json();
    match &cli.out {
        Some(path) => {
            std::fs::write(path, text)?;
            if cli.format == Format::Text {
                writeln!(stdout, "wrote {} document to {}", outcome.document.kind(), path.display())?;
            }
        }
        None => {
            if cli.format == Format::Json {
                write!(stdout, "{text}")?;
            } else {
                writeln!(stdout, "---")?;
                write!(stdout, "{text}")?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let defaults = Options::default();
    let opts = Options {
        field: cli.field.clone(),
        probes: cli.probes,
        enum_bound: cli.enum_bound.unwrap_or(defaults.enum_bound),
        seed: cli.seed.unwrap_or(defaults.seed),
    };
    match dispatch(&cli, &opts) {
        Ok(outcome) => {
            if let Err(e) = emit(&cli, &outcome) {
                // A closed pipe (e.g. `| head`) is not our error.
                if e.kind() == std::io::ErrorKind::BrokenPipe {
                    return ExitCode::SUCCESS;
                }
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            if outcome.failed {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("verification failure: {msg}");
            ExitCode::from(2)
        }
    }
}
