//! `sturmian`: generate, recognize, factorize and arithmetize Sturmian
//! words, and verify the extremal properties of the Fibonacci word.
//!
//! Every subcommand prints JSON lines (or TSV with a header row) on stdout.
//! Exit status: 0 when everything passed, 1 when a verification failed,
//! 2 on usage or input errors.

mod commands;
mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use sturmian::{Bounds, Error, Oracle, DEFAULT_MAX_WORD_LEN};

use commands::{ArithOp, Context, ModeArg, Theorem, VerifyArgs};
use output::{write_records, Format, OutputRecord};

#[derive(Debug, Parser)]
#[command(name = "sturmian", version, about)]
struct Cli {
    /// Output format
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,

    /// Largest word, in letters, that may be materialized
    #[arg(long, global = true, env = "STURMIAN_MAX_WORD_LEN", default_value_t = DEFAULT_MAX_WORD_LEN)]
    max_word_len: usize,

    /// Print long words in full instead of eliding the middle
    #[arg(long, global = true)]
    full: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// ψ of a finite directive word
    Psi {
        /// Directive word over {a, b}; "" or "ε" for the empty word
        directive: String,
    },
    /// Prefix of ψ of an eventually periodic directive word "preperiod|period"
    Stream { spec: String, prefix_len: usize },
    /// Christoffel word with p letters b and q letters a
    Christoffel {
        p: u64,
        q: u64,
        /// Also print the standard factorization
        #[arg(long)]
        factorize: bool,
    },
    /// Exhaustive verification, one record per order
    Verify {
        #[arg(value_enum)]
        theorem: Theorem,
        n_max: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Both)]
        mode: ModeArg,
        /// Seed for sampled checks
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Directive words sampled per order by dual-path
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Largest order enumerated with materialized words
        #[arg(long, default_value_t = Bounds::default().materialized)]
        materialized_bound: usize,
        /// Largest order enumerated through continuants
        #[arg(long, default_value_t = Bounds::default().arithmetic)]
        arithmetic_bound: usize,
        /// Largest length for central-count
        #[arg(long, default_value_t = Bounds::default().central_count)]
        central_count_bound: usize,
    },
    /// Continuant arithmetic
    Arith {
        #[arg(value_enum)]
        op: ArithOp,
        payload: String,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Psi { .. } => "psi",
            Command::Stream { .. } => "stream",
            Command::Christoffel { .. } => "christoffel",
            Command::Verify { .. } => "verify",
            Command::Arith { .. } => "arith",
        }
    }

    fn inputs(&self) -> Vec<(String, String)> {
        let pairs: Vec<(&str, String)> = match self {
            Command::Psi { directive } => vec![("directive", directive.clone())],
            Command::Stream { spec, prefix_len } => {
                vec![
                    ("spec", spec.clone()),
                    ("prefix_len", prefix_len.to_string()),
                ]
            }
            Command::Christoffel { p, q, factorize } => vec![
                ("p", p.to_string()),
                ("q", q.to_string()),
                ("factorize", factorize.to_string()),
            ],
            Command::Verify { theorem, n_max, .. } => {
                vec![("theorem", theorem.name()), ("n_max", n_max.to_string())]
            }
            Command::Arith { op, payload } => {
                vec![("op", op.name()), ("payload", payload.clone())]
            }
        };
        pairs.into_iter().map(|(k, v)| (k.to_owned(), v)).collect()
    }
}

fn run(cli: &Cli) -> Result<Vec<OutputRecord>, Error> {
    let ctx = Context {
        max_word_len: cli.max_word_len,
        full: cli.full,
    };
    Ok(match &cli.command {
        Command::Psi { directive } => vec![commands::psi(&ctx, directive)?],
        Command::Stream { spec, prefix_len } => vec![commands::stream(&ctx, spec, *prefix_len)?],
        Command::Christoffel { p, q, factorize } => {
            vec![commands::christoffel_cmd(&ctx, *p, *q, *factorize)?]
        }
        Command::Verify {
            theorem,
            n_max,
            mode,
            seed,
            samples,
            materialized_bound,
            arithmetic_bound,
            central_count_bound,
        } => {
            let oracle = Oracle::new(Bounds {
                materialized: *materialized_bound,
                arithmetic: *arithmetic_bound,
                central_count: *central_count_bound,
            });
            let args = VerifyArgs {
                theorem: *theorem,
                n_max: *n_max,
                mode: *mode,
                seed: *seed,
                samples: *samples,
            };
            commands::verify(&ctx, &oracle, args)?
        }
        Command::Arith { op, payload } => vec![commands::arith(*op, payload)?],
    })
}

/// Internal consistency failures count as failed verification; everything
/// else the library rejects is bad input.
fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Invariant(_) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (records, code) = match run(&cli) {
        Ok(records) => {
            let failed = records.iter().any(|r| r.get("passed") == Some("false"));
            (records, if failed { 1 } else { 0 })
        }
        Err(err) => {
            eprintln!("sturmian: {err}");
            let record = OutputRecord::error(cli.command.name(), cli.command.inputs(), &err);
            (vec![record], exit_code_for(&err))
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    if write_records(&mut out, &records, cli.format)
        .and_then(|()| out.flush())
        .is_err()
    {
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
