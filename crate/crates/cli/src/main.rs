//! `freeab`: evaluate, compare and convert objects of the free abelian
//! category described in a JSON workspace.

mod commands;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use freeab::{BigWorkspace, PairConvention};

use crate::commands::{modules, Output};
use crate::error::{CliError, CliResult};

#[derive(Parser, Debug)]
#[command(name = "freeab", version, about = "Exact computations with chains, squares and pairs of matrices")]
struct Cli {
    /// JSON workspace holding the named objects.
    #[arg(short, long, global = true, value_name = "FILE")]
    workspace: Option<PathBuf>,

    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Pair convention for conversions.
    #[arg(long, global = true, value_enum)]
    convention: Option<ConventionArg>,

    /// Comma-separated module names to test against; `B` is the built-in battery.
    #[arg(long, global = true, value_name = "NAMES")]
    battery: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConventionArg {
    #[value(alias = "paper-row")]
    Paper,
    Column,
}

impl From<ConventionArg> for PairConvention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Paper => PairConvention::PaperRow,
            ConventionArg::Column => PairConvention::Column,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Chain,
    Pair,
    Square,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a chain or square at a module (invariant factors).
    Eval { target: String, module: Option<String> },
    /// Membership of a module in the class of a chain, family or pair.
    Member { target: String, module: Option<String> },
    /// Kernel of a morphism.
    Kernel { morphism: String },
    /// Cokernel of a morphism.
    Cokernel { morphism: String },
    /// Image factorization of a morphism.
    Image { morphism: String },
    /// Morphisms between two chains up to homotopy.
    Homgroup { src: String, dst: String },
    /// Whether a chain is a zero object.
    Iszero { chain: String },
    /// Dual of a chain, pair or square.
    Dual { target: String },
    /// Rewrite a chain, pair or square in another presentation.
    Convert {
        target: String,
        #[arg(long, value_enum)]
        to: Kind,
    },
    /// Smith normal form of a matrix.
    Snf { matrix: String },
    /// Run the built-in property suites.
    Selftest {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 25)]
        count: usize,
    },
}

fn load(path: Option<&PathBuf>) -> CliResult<BigWorkspace> {
    let Some(path) = path else {
        return Err(CliError::Usage("this command needs --workspace FILE".into()));
    };
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(BigWorkspace::parse(&text)?)
}

fn run(cli: &Cli) -> CliResult<(Output, bool)> {
    if let Command::Selftest { seed, count } = cli.command {
        return Ok(commands::selftest(seed, count));
    }
    let ws = load(cli.workspace.as_ref())?;
    let battery = cli.battery.as_deref();
    let out = match &cli.command {
        Command::Eval { target, module } => {
            let (list, targets) = modules(&ws, module.as_deref(), battery)?;
            commands::eval(&ws, target, &targets, list)?
        }
        Command::Member { target, module } => {
            let (list, targets) = modules(&ws, module.as_deref(), battery)?;
            commands::member(&ws, target, &targets, list)?
        }
        Command::Kernel { morphism } => commands::structure(&ws, "kernel", morphism)?,
        Command::Cokernel { morphism } => commands::structure(&ws, "cokernel", morphism)?,
        Command::Image { morphism } => commands::structure(&ws, "image", morphism)?,
        Command::Homgroup { src, dst } => commands::homgroup(&ws, src, dst)?,
        Command::Iszero { chain } => commands::iszero(&ws, chain)?,
        Command::Dual { target } => commands::dual(&ws, target)?,
        Command::Convert { target, to } => {
            let to = match to {
                Kind::Chain => "chain",
                Kind::Pair => "pair",
                Kind::Square => "square",
            };
            commands::convert(&ws, target, to, cli.convention.map(Into::into))?
        }
        Command::Snf { matrix } => commands::snf_command(&ws, matrix)?,
        Command::Selftest { .. } => unreachable!("handled above"),
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok((out, ok)) => {
            if cli.json {
                println!("{}", serde_json::to_string(&out.json).expect("values serialize"));
            } else {
                println!("{}", out.text);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
