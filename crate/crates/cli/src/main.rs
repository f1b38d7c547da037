//! `kummer`: radical extension degrees, power residue symbols and density
//! experiments from the command line.

mod commands;
mod config;

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{run, CliError};
use config::{Command, OutputFormat, RunConfig};

#[derive(Parser)]
#[command(name = "kummer", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Seed for the internal randomized searches (never changes results).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for prime-ideal scans.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Sub,
}

#[derive(Args)]
struct Common {
    /// Odd prime exponent l.
    #[arg(short = 'l')]
    l: u64,
    /// Radicands a_1 .. a_m.
    #[arg(allow_negative_numbers = true)]
    radicands: Vec<i128>,
}

#[derive(Subcommand)]
enum Sub {
    /// Degree of Q(a_1^(1/l), ..., a_m^(1/l)) by reduction and by matrix rank.
    Degree {
        #[command(flatten)]
        common: Common,
        /// Force the brute-force cross-check up to the scale guard.
        #[arg(long)]
        oracle: bool,
    },
    /// Reduced radicands with exclusive primes.
    Reduce {
        #[command(flatten)]
        common: Common,
    },
    /// Residue symbols of the radicands at the primes above p.
    Symbol {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'p')]
        p: i128,
        /// Ideal index in canonical order, or "all".
        #[arg(long, default_value = "all")]
        ideal: String,
    },
    /// Proportion of primes realizing the target symbols, against 1/l^t.
    Density {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'x', long = "norm-bound")]
        norm_bound: i128,
        /// Comma-separated target exponents, one per radicand.
        #[arg(long, num_args = 0..=1, default_missing_value = "", allow_hyphen_values = true)]
        targets: Option<String>,
    },
    /// Sum of (n/P)_l over primes of bounded norm.
    Charsum {
        #[arg(short = 'l')]
        l: u64,
        #[arg(short = 'x', long = "norm-bound")]
        norm_bound: Option<i128>,
        #[arg(allow_negative_numbers = true)]
        n: i128,
    },
    /// Whether the target symbols respect every multiplicative relation.
    Check {
        #[command(flatten)]
        common: Common,
        #[arg(long, num_args = 0..=1, default_missing_value = "", allow_hyphen_values = true)]
        targets: Option<String>,
    },
    /// Read one JSON config per line from stdin, write one JSON report per line.
    Batch,
}

fn parse_targets(s: Option<String>) -> Result<Option<Vec<i128>>, CliError> {
    let Some(s) = s else { return Ok(None) };
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| CliError::User(format!("malformed target {t:?}")))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Some)
}

fn to_config(cli: Cli) -> Result<Option<RunConfig>, CliError> {
    let mut cfg = RunConfig {
        command: Command::Degree,
        l: 0,
        radicands: Vec::new(),
        targets: None,
        norm_bound: None,
        seed: cli.seed,
        output_format: cli.format,
        threads: cli.threads,
        oracle: false,
        p: None,
        ideal: None,
        n: None,
    };
    match cli.command {
        Sub::Degree { common, oracle } => {
            cfg.l = common.l;
            cfg.radicands = common.radicands;
            cfg.oracle = oracle;
        }
        Sub::Reduce { common } => {
            cfg.command = Command::Reduce;
            cfg.l = common.l;
            cfg.radicands = common.radicands;
        }
        Sub::Symbol { common, p, ideal } => {
            cfg.command = Command::Symbol;
            cfg.l = common.l;
            cfg.radicands = common.radicands;
            cfg.p = Some(p);
            cfg.ideal = match ideal.as_str() {
                "all" => None,
                s => Some(s.parse().map_err(|_| {
                    CliError::User(format!("--ideal expects an index or \"all\", got {s:?}"))
                })?),
            };
        }
        Sub::Density {
            common,
            norm_bound,
            targets,
        } => {
            cfg.command = Command::Density;
            cfg.l = common.l;
            cfg.radicands = common.radicands;
            cfg.norm_bound = Some(norm_bound);
            cfg.targets = parse_targets(targets)?;
        }
        Sub::Charsum { l, norm_bound, n } => {
            cfg.command = Command::Charsum;
            cfg.l = l;
            cfg.norm_bound = norm_bound;
            cfg.n = Some(n);
        }
        Sub::Check { common, targets } => {
            cfg.command = Command::Check;
            cfg.l = common.l;
            cfg.radicands = common.radicands;
            cfg.targets = parse_targets(targets)?;
        }
        Sub::Batch => return Ok(None),
    }
    Ok(Some(cfg))
}

fn emit(cfg: &RunConfig, out: &mut impl Write) -> Result<(), CliError> {
    let output = run(cfg)?;
    match cfg.output_format {
        OutputFormat::Text => write!(out, "{}", output.text),
        OutputFormat::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&output.report).expect("report serializes")
        ),
    }
    .map_err(|e| CliError::User(format!("write failed: {e}")))
}

fn batch(threads: Option<usize>) -> i32 {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut worst = 0;
    for line in stdin.lock().lines() {
        let line = match line {
            Ok(l) => l,
            Err(e) => {
                eprintln!("error: reading stdin: {e}");
                return 2;
            }
        };
        if line.trim().is_empty() {
            continue;
        }
        let value = match serde_json::from_str::<RunConfig>(&line) {
            Ok(mut cfg) => {
                if cfg.threads.is_none() {
                    cfg.threads = threads;
                }
                match run(&cfg) {
                    Ok(o) => serde_json::to_value(&o.report).expect("report serializes"),
                    Err(e) => {
                        worst = worst.max(e.exit_code());
                        serde_json::json!({ "config": cfg.echo(), "error": e.to_string() })
                    }
                }
            }
            Err(e) => {
                worst = worst.max(2);
                serde_json::json!({ "config": null, "error": format!("invalid config: {e}") })
            }
        };
        if writeln!(out, "{value}").is_err() {
            return 2;
        }
    }
    worst
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli.threads;
    let code = match to_config(cli) {
        Ok(None) => batch(threads),
        Ok(Some(cfg)) => match emit(&cfg, &mut io::stdout().lock()) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: {e}");
                e.exit_code()
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
