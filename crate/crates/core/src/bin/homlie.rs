use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use homlie::dim2::{proper_nonexistence_report, TwistFamily2D};
use homlie::instance::commands::{classify2, twist_of_instance};
use homlie::instance::report::Derived;
use homlie::instance::{build, parse_binding, verify, BoundInstance, CommandError, InstanceFile, Report};
use homlie::Rational;

/// Exact verification and construction of hom-Lie structures.
#[derive(Parser)]
#[command(name = "homlie", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Common {
    /// Parameter binding `name=value`, repeatable.
    #[arg(short = 'p', long = "param", value_name = "NAME=VALUE")]
    params: Vec<String>,
    /// Write the JSON report to this path (`-` for stdout instead of text).
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Twist {
    Hat,
    Bar,
    Tilde,
}

#[derive(Subcommand)]
enum Command {
    /// Check axioms on an instance; exit 1 if any fails.
    Verify {
        file: PathBuf,
        /// Comma-separated checks; defaults depend on the declared structures.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Construct a derived structure and check it.
    Build {
        file: PathBuf,
        #[arg(long)]
        target: String,
        #[command(flatten)]
        common: Common,
    },
    /// Solve for complex, Hermitian and Kähler structures on `[e1, e2] = e2`.
    /// Without a file or `--twist`, reports on every sampled proper twist.
    Classify2 {
        file: Option<PathBuf>,
        #[arg(long, conflicts_with = "file")]
        twist: Option<Twist>,
        /// The parameter of `tilde`.
        #[arg(long = "b", value_name = "B", default_value = "1", allow_hyphen_values = true)]
        b: String,
        #[command(flatten)]
        common: Common,
    },
}

fn load(file: &PathBuf, params: &[String]) -> Result<BoundInstance, CommandError> {
    let mut bindings = BTreeMap::new();
    for p in params {
        let (name, value) = parse_binding(p)?;
        bindings.insert(name, value);
    }
    Ok(InstanceFile::load(file)?.bind(&bindings)?)
}

fn parse_rational(s: &str) -> Result<Rational, CommandError> {
    parse_binding(&format!("B={s}"))
        .map(|(_, v)| v)
        .map_err(|_| CommandError::Usage(format!("invalid rational {s:?}")))
}

fn nonexistence() -> Report {
    let summary = proper_nonexistence_report();
    let mut report = Report::new("proper-twists", BTreeMap::new());
    report.record_flag("all-none", summary.all_none);
    for (name, family) in summary.entries {
        report.derive(&name, Derived::Family(Box::new(family)));
    }
    report
}

fn run(cli: Cli) -> Result<(Report, Option<PathBuf>), CommandError> {
    match cli.command {
        Command::Verify { file, checks, common } => {
            let inst = load(&file, &common.params)?;
            Ok((verify(&inst, Some(&checks))?, common.json))
        }
        Command::Build { file, target, common } => {
            let inst = load(&file, &common.params)?;
            Ok((build(&inst, &target)?, common.json))
        }
        Command::Classify2 { file, twist, b, common } => {
            let report = match (file, twist) {
                (Some(file), _) => classify2(&twist_of_instance(&load(&file, &common.params)?)?)?,
                (None, Some(t)) => {
                    let family = match t {
                        Twist::Hat => TwistFamily2D::Hat,
                        Twist::Bar => TwistFamily2D::Bar,
                        Twist::Tilde => {
                            let b = parse_rational(&b)?;
                            if b.is_zero() {
                                return Err(CommandError::Usage("tilde needs B != 0".into()));
                            }
                            TwistFamily2D::Tilde(b)
                        }
                    };
                    classify2(&family)?
                }
                (None, None) => nonexistence(),
            };
            Ok((report, common.json))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (report, json) = match run(cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let color = std::env::var("HOMLIE_COLOR").map_or(true, |v| v != "0");
    match json.as_deref() {
        Some(p) if p.as_os_str() == "-" => print!("{}", report.to_json()),
        Some(p) => {
            if let Err(e) = std::fs::write(p, report.to_json()) {
                eprintln!("error: {}: {e}", p.display());
                return ExitCode::from(2);
            }
            print!("{}", report.render_text(color));
        }
        None => print!("{}", report.render_text(color)),
    }
    ExitCode::from(report.exit_code() as u8)
}
