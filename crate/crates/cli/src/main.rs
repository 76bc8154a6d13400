use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use braid3::analysis::{IsoOptions, DEFAULT_SEED, DEFAULT_TRIALS};
use braid3::scalar::{set_float_epsilon, DEFAULT_FLOAT_EPSILON};
use braid3_cli::commands::{self, CmdResult, Failure, Source};
use braid3_cli::render::{json, Format};
use braid3_cli::suite::{self, SuiteConfig};
use clap::{Args, Parser, Subcommand};

/// Exact computations with representations of the braid group B3.
///
/// Representations are named by specs such as `burau(z)`, `mu(1)`,
/// `thm1_i(z; f=1)` or `tensor(burau(z), burau(z))`.
///
/// Exit codes: 0 success, 1 a mathematical check failed, 2 parse or usage
/// error, 3 constructor or domain error.
#[derive(Parser)]
#[command(name = "braid3", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Relative tolerance for floating-point equality.
    #[arg(long, global = true, default_value_t = DEFAULT_FLOAT_EPSILON)]
    epsilon: f64,

    /// Seed for randomized searches and sweeps.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Representation spec, e.g. "burau(z)".
    spec: Option<String>,

    /// Read the representation from a JSON file instead.
    #[arg(long, value_name = "PATH")]
    raw: Option<PathBuf>,
}

impl Input {
    fn source(&self) -> Source {
        match (&self.spec, &self.raw) {
            (_, Some(path)) => Source::Raw(path.clone()),
            (Some(spec), None) => Source::Spec(spec.clone()),
            (None, None) => unreachable!("clap requires one input"),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the generator images.
    Show(Input),
    /// Check the braid relations exactly.
    Verify(Input),
    /// Split off one-dimensional summands with explicit complements.
    Decompose(Input),
    /// Substitute a value for z: a rational like 5/7, `omega`, or a decimal.
    ///
    /// Usage: `specialize SPEC POINT` or `specialize --raw PATH POINT`.
    Specialize {
        #[arg(required = true, num_args = 1..=2, value_names = ["SPEC", "POINT"], allow_negative_numbers = true)]
        args: Vec<String>,
        /// Read the representation from a JSON file instead of a spec.
        #[arg(long, value_name = "PATH")]
        raw: Option<PathBuf>,
    },
    /// Decide whether two representations are conjugate.
    Isomorphic {
        left: String,
        right: String,
        /// Random combinations to try when intertwiners are not unique.
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
    },
    /// Run the full replication checklist.
    Suite,
}

fn run(cli: &Cli) -> CmdResult {
    if !(cli.epsilon.is_finite() && cli.epsilon > 0.0) {
        return Err(Failure::usage("--epsilon must be a positive number"));
    }
    set_float_epsilon(cli.epsilon);
    match &cli.command {
        Command::Show(input) => commands::show(&input.source(), cli.format),
        Command::Verify(input) => commands::verify(&input.source(), cli.format),
        Command::Decompose(input) => commands::decompose_cmd(&input.source(), cli.format, cli.seed),
        Command::Specialize { args, raw } => {
            let (source, point) = match (raw, args.as_slice()) {
                (Some(path), [point]) => (Source::Raw(path.clone()), point),
                (None, [spec, point]) => (Source::Spec(spec.clone()), point),
                _ => return Err(Failure::usage("expected SPEC POINT, or --raw PATH POINT")),
            };
            commands::specialize(&source, point, cli.format)
        }
        Command::Isomorphic { left, right, trials } => commands::isomorphic(
            &Source::Spec(left.clone()),
            &Source::Spec(right.clone()),
            cli.format,
            IsoOptions {
                seed: cli.seed,
                trials: *trials,
            },
        ),
        Command::Suite => {
            let result = suite::run(&SuiteConfig {
                seed: cli.seed,
                ..SuiteConfig::default()
            });
            let output = match cli.format {
                Format::Json => json(&result),
                _ => result.to_text(),
            };
            Ok(commands::Outcome {
                output,
                code: result.exit_code(),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            // a closed pipe (e.g. `| head`) is not an error worth a panic
            let _ = writeln!(std::io::stdout(), "{}", outcome.output);
            ExitCode::from(outcome.code as u8)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code as u8)
        }
    }
}
