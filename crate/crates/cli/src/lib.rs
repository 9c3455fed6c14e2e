//! Command-line front end: datum loading, the expression language, and the
//! subcommands of the `b3lift` binary.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 step or degree budget exceeded.

pub mod commands;
pub mod datum_file;
pub mod error;
pub mod eval;
pub mod expr;

use b3lift_core::hopfverify::Tier;
use b3lift_core::pbwalg::{set_default_step_budget, DEFAULT_STEP_BUDGET};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

pub use commands::Outcome;
pub use error::{CliError, EXIT_BUDGET, EXIT_FAILED, EXIT_OK, EXIT_USAGE};

pub const REPORT_SCHEMA: &str = "b3lift-report/1";

/// Extended budget used by the faithful tier unless one is given explicitly.
pub const FAITHFUL_STEP_BUDGET: u64 = 20 * DEFAULT_STEP_BUDGET;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Serre,
    Nichols,
    Lifting,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Serre => "serre",
            Mode::Nichols => "nichols",
            Mode::Lifting => "lifting",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TierArg {
    Fast,
    Faithful,
}

impl From<TierArg> for Tier {
    fn from(t: TierArg) -> Tier {
        match t {
            TierArg::Fast => Tier::Fast,
            TierArg::Faithful => Tier::Faithful,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "b3lift", version, about = "Exact computations in liftings of B3 Nichols algebras")]
pub struct Cli {
    /// Emit the JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Maximum rewrite steps per top-level product.
    #[arg(long, global = true, env = "B3LIFT_STEP_BUDGET")]
    pub step_budget: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the Cartan-type conditions of a datum.
    Validate { datum: String },
    /// Normal form of an expression.
    Normalize {
        datum: String,
        #[arg(short = 'e', long = "expr")]
        expr: String,
        #[arg(long, value_enum, default_value = "serre")]
        mode: Mode,
    },
    /// Coproduct of an expression in the tensor square.
    Coproduct {
        datum: String,
        #[arg(short = 'e', long = "expr")]
        expr: String,
        #[arg(long, value_enum, default_value = "serre")]
        mode: Mode,
    },
    /// Resolve every overlap ambiguity of the rewrite system.
    Confluence {
        datum: String,
        #[arg(long, value_enum, default_value = "serre")]
        mode: Mode,
    },
    /// Run a verification suite.
    Verify {
        /// Datum file; defaults to the canonical datum of the tier.
        datum: Option<String>,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_enum, default_value = "fast")]
        tier: TierArg,
        /// Append per-job wall time to the text report.
        #[arg(long)]
        timings: bool,
    },
    /// Graded dimensions and the total dimension.
    Dims {
        datum: String,
        #[arg(long, default_value_t = 6)]
        upto: u32,
        /// Compare with the free-algebra oracle (Serre relations only).
        #[arg(long)]
        oracle: bool,
    },
    /// Closed form of the power rule for a root (or `all`).
    UAlpha {
        datum: String,
        #[arg(long)]
        root: String,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Normalize { .. } => "normalize",
            Command::Coproduct { .. } => "coproduct",
            Command::Confluence { .. } => "confluence",
            Command::Verify { .. } => "verify",
            Command::Dims { .. } => "dims",
            Command::UAlpha { .. } => "u-alpha",
        }
    }
}

pub fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let budget = match (&cli.command, cli.step_budget) {
        (_, Some(b)) => b,
        (Command::Verify { tier: TierArg::Faithful, .. }, None) => FAITHFUL_STEP_BUDGET,
        _ => DEFAULT_STEP_BUDGET,
    };
    set_default_step_budget(budget);
    match &cli.command {
        Command::Validate { datum } => commands::validate(datum),
        Command::Normalize { datum, expr, mode } => commands::normalize(datum, expr, *mode),
        Command::Coproduct { datum, expr, mode } => commands::coproduct(datum, expr, *mode),
        Command::Confluence { datum, mode } => commands::confluence(datum, *mode),
        Command::Verify { datum, suite, tier, timings } => {
            commands::verify(datum.as_deref(), suite, (*tier).into(), *timings)
        }
        Command::Dims { datum, upto, oracle } => commands::dims(datum, *upto, *oracle),
        Command::UAlpha { datum, root } => commands::u_alpha_cmd(datum, root),
    }
}

/// Rendered output: `(stdout, stderr, exit code)`.
pub fn run(cli: &Cli) -> (String, String, i32) {
    let name = cli.command.name();
    match dispatch(cli) {
        Ok(out) => {
            if cli.json {
                let status = if out.code == EXIT_OK { "ok" } else { "failed" };
                let body = json!({
                    "schema": REPORT_SCHEMA,
                    "command": name,
                    "status": status,
                    "exit_code": out.code,
                    "result": out.result,
                });
                (format!("{}\n", serde_json::to_string_pretty(&body).unwrap()), String::new(), out.code)
            } else {
                (out.text, String::new(), out.code)
            }
        }
        Err(e) => {
            let code = e.exit_code();
            if cli.json {
                let body = json!({
                    "schema": REPORT_SCHEMA,
                    "command": name,
                    "status": "error",
                    "exit_code": code,
                    "error": e.to_string(),
                });
                (format!("{}\n", serde_json::to_string_pretty(&body).unwrap()), String::new(), code)
            } else {
                (String::new(), format!("error: {e}\n"), code)
            }
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
///
/// The step budget is process-wide, so concurrent calls share it.
pub fn run_args<I, T>(args: I) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                (text, String::new(), code)
            } else {
                (String::new(), text, code)
            }
        }
    }
}
