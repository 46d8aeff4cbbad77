//! Command-line surface of `hilbstab`.
//!
//! Exit codes: 0 success (or admissible under `--strict`), 1 a semantic negative
//! (`--strict` rejection, inconsistent certificate, negative Ext), 2 a usage error.

pub mod args;
pub mod render;

use std::io::Write;

use hilbstab::pfunctor::{ext_dims_on_hilb, ext_dims_on_x};
use hilbstab::{enumerate, Certificate, K3Surface, MukaiVector, SearchQuery};

use crate::args::{Candidate, CheckArgs, Cli, Command, ExtArgs, Format, SearchArgs};
use crate::render::ExtTable;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Math(#[from] hilbstab::Error),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use hilbstab::Error::*;
        match self {
            CliError::Math(NegativeExt(_) | InconsistentCertificate(_) | HypothesisNotMet(_)) => {
                EXIT_NEGATIVE
            }
            CliError::Math(_) => EXIT_USAGE,
            CliError::Io { .. } => EXIT_USAGE,
        }
    }
}

/// Rendered output plus the exit status it should be reported with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self {
            text,
            exit_code: EXIT_OK,
        }
    }
}

fn candidate(c: &Candidate) -> Result<(K3Surface, MukaiVector), CliError> {
    let surface = K3Surface::new(c.h2.clone())?;
    let v = MukaiVector::new(c.r.clone(), c.m.clone(), c.s.clone());
    Ok((surface, v))
}

fn check(args: &CheckArgs, with_notes: bool) -> Result<Outcome, CliError> {
    let (surface, v) = candidate(&args.candidate)?;
    let mut cert = Certificate::build(&surface, &v, args.candidate.k)?;
    if with_notes {
        cert = cert.with_notes();
    }
    let text = if args.format.is_csv() {
        render::certificates_csv([&cert])
    } else {
        render::json(&cert)
    };
    let exit_code = if args.strict && !cert.admissible {
        EXIT_NEGATIVE
    } else {
        EXIT_OK
    };
    Ok(Outcome { text, exit_code })
}

fn search(args: &SearchArgs) -> Result<Outcome, CliError> {
    let mut query = SearchQuery::ranges(
        (args.h2.start.clone(), args.h2.end.clone()),
        (args.k.start, args.k.end),
    );
    query.r_max = args.r_max.clone();
    let mut hits = enumerate(&query, args.workers as usize)?;
    if let Some(limit) = args.limit {
        hits.truncate(limit);
    }
    Ok(Outcome::ok(if args.format.is_csv() {
        render::hits_csv(&hits)
    } else {
        render::hits_json(&hits)
    }))
}

fn ext(args: &ExtArgs) -> Result<Outcome, CliError> {
    let (surface, v) = candidate(&args.candidate)?;
    let k = args.candidate.k;
    let same = !args.distinct;
    // Validate k before the Ext tables so that k = 0 is a usage error.
    let on_hilb = ext_dims_on_hilb(&surface, &v, &v, k, same);
    if let Err(hilbstab::Error::NonPositivePoints) = on_hilb {
        return Err(hilbstab::Error::NonPositivePoints.into());
    }
    let on_x = ext_dims_on_x(&surface, &v, &v, same)?;
    let on_hilb = on_hilb?;
    let echo = hilbstab::VectorEcho {
        h_squared: surface.h_squared().clone(),
        k,
        r: v.r,
        m: v.m,
        s: v.s,
    };
    let table = ExtTable::new(echo, same, &on_x, &on_hilb);
    Ok(Outcome::ok(if args.format.is_csv() {
        table.csv()
    } else {
        render::json(&table)
    }))
}

fn format_of(command: &Command) -> &Format {
    match command {
        Command::Check(a) | Command::Report(a) => &a.format,
        Command::Search(a) => &a.format,
        Command::Ext(a) => &a.format,
    }
}

/// Runs a parsed command without touching standard output.
pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Check(args) => check(args, false),
        Command::Report(args) => check(args, true),
        Command::Search(args) => search(args),
        Command::Ext(args) => ext(args),
    }
}

/// Parses `argv`, runs the command, writes its output, and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;

    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let outcome = match execute(&cli) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    let written = match &format_of(&cli.command).out {
        Some(path) => std::fs::write(path, &outcome.text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe is not an error worth reporting.
            let _ = stdout.write_all(outcome.text.as_bytes());
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return e.exit_code();
    }
    outcome.exit_code
}
