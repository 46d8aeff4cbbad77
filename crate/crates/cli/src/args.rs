use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;

#[derive(Debug, Parser)]
#[command(
    name = "hilbstab",
    version,
    about = "Admissibility certificates for images of stable bundles on K3 surfaces in Hilbert schemes of points"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check one candidate (h^2, k, v = (r, m·h, s)) and print its certificate.
    Check(CheckArgs),
    /// Like `check`, with the notes on quantities that are not computed.
    Report(CheckArgs),
    /// Enumerate every admissible v = (r, h, s) for the given h^2 and k.
    Search(SearchArgs),
    /// Graded Ext dimensions on X and on X^[k].
    Ext(ExtArgs),
}

#[derive(Debug, Clone, Args)]
pub struct Candidate {
    /// Self-intersection h^2 of the ample generator (even, >= 2).
    pub h2: BigInt,
    /// Number of points.
    pub k: u64,
    pub r: BigInt,
    pub m: BigInt,
    pub s: BigInt,
}

#[derive(Debug, Clone, Args)]
pub struct Format {
    /// JSON output (default).
    #[arg(long, conflicts_with = "csv")]
    pub json: bool,
    /// CSV output.
    #[arg(long)]
    pub csv: bool,
    /// Write to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

impl Format {
    pub fn is_csv(&self) -> bool {
        self.csv
    }
}

#[derive(Debug, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct CheckArgs {
    #[command(flatten)]
    pub candidate: Candidate,
    #[command(flatten)]
    pub format: Format,
    /// Exit with status 1 unless the candidate is admissible.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    /// h^2 or an inclusive range such as 2-200.
    pub h2: Range<BigInt>,
    /// k or an inclusive range such as 2-4.
    pub k: Range<u64>,
    #[command(flatten)]
    pub format: Format,
    /// Keep only the first N hits (after ordering).
    #[arg(long, value_name = "N")]
    pub limit: Option<usize>,
    /// Worker threads; the output does not depend on this.
    #[arg(long, value_name = "N", default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    pub workers: u32,
    /// Override the derived rank bound (audit use).
    #[arg(long, value_name = "R", hide = true)]
    pub r_max: Option<BigInt>,
}

#[derive(Debug, Clone, Args)]
#[command(allow_negative_numbers = true)]
pub struct ExtArgs {
    #[command(flatten)]
    pub candidate: Candidate,
    #[command(flatten)]
    pub format: Format,
    /// Two non-isomorphic stable sheaves with this Mukai vector.
    #[arg(long)]
    pub distinct: bool,
}

/// `N` or `A-B` (inclusive).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Range<T> {
    pub start: T,
    pub end: T,
}

impl<T: FromStr + Clone> FromStr for Range<T>
where
    T::Err: fmt::Display,
{
    type Err = String;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let parse = |part: &str| {
            part.trim()
                .parse::<T>()
                .map_err(|e| format!("invalid value {part:?}: {e}"))
        };
        // A leading '-' belongs to the first number.
        match text.char_indices().skip(1).find(|&(_, c)| c == '-') {
            Some((at, _)) => Ok(Self {
                start: parse(&text[..at])?,
                end: parse(&text[at + 1..])?,
            }),
            None => {
                let value = parse(text)?;
                Ok(Self {
                    start: value.clone(),
                    end: value,
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        let r: Range<u64> = "2-4".parse().unwrap();
        assert_eq!((r.start, r.end), (2, 4));
        let r: Range<u64> = "7".parse().unwrap();
        assert_eq!((r.start, r.end), (7, 7));
        let r: Range<BigInt> = "-4-2".parse().unwrap();
        assert_eq!((r.start, r.end), (BigInt::from(-4), BigInt::from(2)));
        assert!("2-".parse::<Range<u64>>().is_err());
        assert!("a".parse::<Range<u64>>().is_err());
    }
}
