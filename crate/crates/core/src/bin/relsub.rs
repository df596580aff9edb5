use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::builder::PossibleValuesParser;
use clap::{Parser, Subcommand, ValueEnum};

use relsub::commands::{self, demo, solve, Equation, SolveInput};
use relsub::linalg::DEFAULT_TOL;
use relsub::verify::{self, Suite, DEFAULT_MAX_FAILURES};
use relsub::Error;

const SUITE_NAMES: [&str; 9] =
    ["all", "clifford", "dkp-algebra", "spinor", "split-dkp", "split-dirac", "susy", "majorana", "lorentz"];

#[derive(Debug, Parser)]
#[command(name = "relsub", version)]
#[command(about = "Dirac and DKP plane-wave solutions, their subsolutions and the shared projected equation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a seeded verification suite.
    Verify {
        #[arg(long, value_parser = PossibleValuesParser::new(SUITE_NAMES))]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        /// Residual tolerance; overrides RELSUB_TOL.
        #[arg(long, env = "RELSUB_TOL", default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Failures listed before the report is truncated.
        #[arg(long, default_value_t = DEFAULT_MAX_FAILURES)]
        max_failures: usize,
    },
    /// Plane-wave solution basis at p⁰ = +√(m² + |p|²).
    Solve {
        #[arg(long, value_parser = PossibleValuesParser::new(["dirac", "dkp0", "dkp1", "susy"]))]
        equation: String,
        /// Spatial momentum as px,py,pz.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_momentum, required_unless_present = "input", conflicts_with = "input")]
        momentum: Option<[f64; 3]>,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "input", conflicts_with = "input")]
        mass: Option<f64>,
        /// JSON list of {"momentum": [p1, p2, p3], "mass": m}.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, env = "RELSUB_TOL", default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Walkthroughs.
    Demo {
        #[command(subcommand)]
        which: Demo,
    },
}

#[derive(Debug, Subcommand)]
enum Demo {
    /// Split, embed and check DKP and Dirac solutions against the projected equation.
    Susy {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Use the rest frame with m = 1 and exact arithmetic.
        #[arg(long, conflicts_with = "seed")]
        rest: bool,
        #[arg(long, env = "RELSUB_TOL", default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn parse_momentum(s: &str) -> Result<[f64; 3], String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!("expected px,py,pz, got '{s}'"));
    }
    let mut out = [0.0; 3];
    for (slot, part) in out.iter_mut().zip(parts) {
        let x: f64 = part.parse().map_err(|_| format!("'{part}' is not a number"))?;
        if !x.is_finite() {
            return Err(format!("'{part}' is not finite"));
        }
        *slot = x;
    }
    Ok(out)
}

/// A closed stdout (e.g. piped into `head`) is not an error.
fn emit(format: Format, json: String, text: String) {
    let out = match format {
        Format::Json => json + "\n",
        Format::Text => text,
    };
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes()).and_then(|()| stdout.flush());
}

fn verdict(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Verify { suite, seed, trials, tol, format, max_failures } => {
            let suite: Suite = suite.parse()?;
            let report = verify::run_suite_with(suite, seed, trials, tol, max_failures)?;
            emit(format, report.to_json(), verify::render_text(&report));
            Ok(verdict(report.ok()))
        }
        Command::Solve { equation, momentum, mass, input, tol, format } => {
            let equation: Equation = equation.parse()?;
            let inputs = match (input, momentum, mass) {
                (Some(path), _, _) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
                    commands::parse_batch(&text)?
                }
                (None, Some(momentum), Some(mass)) => vec![SolveInput { momentum, mass }],
                _ => return Err(Error::Usage("give --momentum and --mass, or --input".into())),
            };
            let report = commands::solve(equation, &inputs, tol)?;
            emit(format, report.to_json(), solve::render_text(&report));
            Ok(verdict(report.passed))
        }
        Command::Demo { which: Demo::Susy { seed, rest, tol, format } } => {
            let report = if rest { commands::demo_susy_rest(tol)? } else { commands::demo_susy(seed, tol)? };
            emit(format, report.to_json(), demo::render_text(&report));
            Ok(verdict(report.passed))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("relsub: {e}");
            match e {
                Error::Domain(_) => ExitCode::from(1),
                Error::Contract(_) | Error::Usage(_) => ExitCode::from(2),
            }
        }
    }
}
