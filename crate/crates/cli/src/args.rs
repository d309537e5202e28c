use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Smallest prime accepted for modular screening.
pub const MIN_PRIME: u64 = 200_000;

#[derive(Debug, Parser)]
#[command(name = "wahlrank", version, about = "Ranks of higher Gaussian maps of plane curves")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank of the order-k Gaussian map of the canonical bundle of plane curves.
    Plane(PlaneArgs),
    /// Gaussian maps of O(a), O(b) on the projective line.
    P1(P1Args),
    /// Closed-form evaluators and surjectivity criteria.
    #[command(subcommand)]
    Criteria(CriteriaCommand),
}

/// Inclusive range written `a..b`, or a single value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span(pub RangeInclusive<u32>);

impl FromStr for Span {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("bad bound {t:?}: {e}"));
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (parse(lo)?, parse(hi.trim_start_matches('='))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(Span(lo..=hi))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Modular,
    ModularThenExact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Args)]
pub struct PlaneArgs {
    /// `fermat:<d>` or a JSON curve file; repeatable.
    #[arg(long = "curve")]
    pub curves: Vec<String>,
    /// Degrees of Fermat curves to add to the batch.
    #[arg(long)]
    pub d: Option<Span>,
    #[arg(long, default_value = "0")]
    pub k: Span,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
    #[arg(long, value_delimiter = ',')]
    pub primes: Vec<u64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct P1Args {
    #[arg(long)]
    pub a: Span,
    #[arg(long)]
    pub b: Span,
    #[arg(long)]
    pub k: Span,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum CriteriaCommand {
    /// Hypotheses for curves on a product of two curves.
    Product {
        #[arg(long)]
        g1: u32,
        #[arg(long)]
        g2: u32,
        #[arg(long)]
        d1: u32,
        #[arg(long)]
        d2: u32,
        #[arg(long)]
        k: u32,
    },
    /// Hypothesis for curves on an unnodal Enriques surface.
    Enriques {
        #[arg(long)]
        phi: u32,
        #[arg(long)]
        k: u32,
    },
    /// Genus of a curve in |p1*D1 + p2*D2| on a product.
    Genus {
        #[arg(long)]
        g1: u32,
        #[arg(long)]
        g2: u32,
        #[arg(long)]
        d1: u32,
        #[arg(long)]
        d2: u32,
    },
    /// Predicted rank and corank for plane curves.
    PlaneFormula {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        k: u32,
    },
    /// Smallest product genus satisfying the product hypotheses.
    SweepMinGenus {
        #[arg(long)]
        g1: u32,
        #[arg(long)]
        g2: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 100)]
        bound: u32,
    },
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spans() {
        assert_eq!("0..2".parse::<Span>().unwrap(), Span(0..=2));
        assert_eq!("3".parse::<Span>().unwrap(), Span(3..=3));
        assert_eq!("1..=4".parse::<Span>().unwrap(), Span(1..=4));
        assert!("4..1".parse::<Span>().is_err());
        assert!("x".parse::<Span>().is_err());
    }

    #[test]
    fn command_line_parses() {
        let cli = Cli::try_parse_from(["wahlrank", "plane", "--curve", "fermat:8", "--k", "0..1", "--mode", "modular-then-exact", "--primes", "1000003,1000033"]).unwrap();
        let Command::Plane(p) = cli.command else { panic!("expected plane") };
        assert_eq!(p.k, Span(0..=1));
        assert_eq!(p.mode, Mode::ModularThenExact);
        assert_eq!(p.primes, vec![1_000_003, 1_000_033]);
    }
}
