use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use ppt_core::{BigInt, DensityFamily};

#[derive(Debug, Parser)]
#[command(
    name = "ppt",
    version,
    about = "Generate, classify and verify primitive Pythagorean triples"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// First members of the family of triples (a, b, b+g).
    GenG {
        #[arg(long, allow_hyphen_values = true)]
        g: BigInt,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Triples (a, a+f, c) for exponents m in LO..HI.
    GenF {
        #[arg(long, allow_hyphen_values = true)]
        f: BigInt,
        /// Inclusive exponent range, e.g. `0..3` or `-2..2`.
        #[arg(long, allow_hyphen_values = true, default_value = "0..3")]
        m: MRange,
    },
    /// Classify a single triple.
    Check {
        #[arg(allow_hyphen_values = true)]
        a: BigInt,
        #[arg(allow_hyphen_values = true)]
        b: BigInt,
        #[arg(allow_hyphen_values = true)]
        c: BigInt,
    },
    /// Density of a family among coprime pairs, over a grid of bounds.
    Density {
        #[arg(long)]
        family: DensityFamily,
        /// Comma-separated ascending bounds.
        #[arg(long, value_delimiter = ',', required = true)]
        grid: Vec<u64>,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Largest sieve bound allowed; overrides PPT_SIEVE_BUDGET.
        #[arg(long)]
        sieve_budget: Option<u64>,
    },
    /// Run one of the brute-force verification suites.
    Verify {
        scope: Scope,
        #[arg(long, default_value_t = 100_000)]
        c_max: u64,
        /// Exponent bound; defaults to 50 for `pell`, 12 for `f-coverage`.
        #[arg(long)]
        m_max: Option<i64>,
        #[arg(long, default_value_t = 100_000)]
        y_max: u64,
        #[arg(long, default_value_t = 2_000)]
        b_max: u64,
        /// Leg gaps swept by `f-coverage`.
        #[arg(long, value_delimiter = ',', default_value = "1,7,17")]
        f: Vec<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    GCoverage,
    FCoverage,
    Nonexistence,
    Pell,
    DensityCross,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MRange {
    pub lo: i64,
    pub hi: i64,
}

impl FromStr for MRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| format!("expected LO..HI, got {s:?}"))?;
        let parse = |v: &str| {
            v.trim()
                .parse::<i64>()
                .map_err(|e| format!("bad exponent {v:?}: {e}"))
        };
        let (lo, hi) = (parse(lo)?, parse(hi)?);
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(MRange { lo, hi })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_range_parsing() {
        assert_eq!("0..1".parse::<MRange>().unwrap(), MRange { lo: 0, hi: 1 });
        assert_eq!(
            "-3..-1".parse::<MRange>().unwrap(),
            MRange { lo: -3, hi: -1 }
        );
        assert!("2..1".parse::<MRange>().is_err());
        assert!("2".parse::<MRange>().is_err());
        assert!("a..b".parse::<MRange>().is_err());
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
