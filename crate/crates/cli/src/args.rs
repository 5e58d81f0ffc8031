use std::str::FromStr;

use clap::{ArgGroup, Args, Parser, Subcommand};
use qdent_core::analysis::ExcitationSpec;

#[derive(Debug, Parser)]
#[command(name = "qdent", version, about = "Entanglement datasets for the equivalent-neighbor quantum-dot model")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Entropy and Schmidt weights on a uniform time grid (CSV).
    Trace(TraceArgs),
    /// Maximum entanglement over one period (single-line JSON).
    Maxent(MaxentArgs),
    /// Maxima over excitation counts or system sizes (CSV).
    Sweep(SweepArgs),
    /// Straight-line fit of 1/E_max against N above the critical size.
    Fit(FitArgs),
    /// Cross-check the closed form against exact diagonalization.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    /// Coarse grid points per period.
    #[arg(long, default_value_t = 4096)]
    pub grid: usize,
    /// Width of the final refinement bracket in units of kt.
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("span").required(true).args(["kt_max", "periods"])))]
pub struct TraceArgs {
    #[arg(long)]
    pub dots: u32,
    #[arg(long)]
    pub excited: u32,
    /// Last sample time (dimensionless kt).
    #[arg(long)]
    pub kt_max: Option<f64>,
    /// Last sample time as a multiple of the evolution period.
    #[arg(long)]
    pub periods: Option<f64>,
    /// Number of intervals; steps + 1 rows are written.
    #[arg(long, default_value_t = 512)]
    pub steps: usize,
    #[arg(long, default_value = "-")]
    pub out: String,
}

#[derive(Debug, Args)]
pub struct MaxentArgs {
    #[arg(long)]
    pub dots: u32,
    #[arg(long)]
    pub excited: u32,
    #[command(flatten)]
    pub search: SearchArgs,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["over_m", "over_n"])))]
pub struct SweepArgs {
    /// M = 1..N-1 at the single size given by --dots.
    #[arg(long = "over-M")]
    pub over_m: bool,
    /// Every N in the --dots range at the excitation given by --excited.
    #[arg(long = "over-N")]
    pub over_n: bool,
    /// A size `N` or an inclusive range `A..B`.
    #[arg(long)]
    pub dots: DotsRange,
    /// Excitation count or `half` (M = floor(N/2)); required with --over-N.
    #[arg(long)]
    pub excited: Option<ExcitationSpec>,
    #[command(flatten)]
    pub search: SearchArgs,
    #[arg(long, default_value = "-")]
    pub out: String,
    /// Run on the calling thread only.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    #[arg(long)]
    pub excited: u32,
    /// Inclusive range `A..B`; every size must exceed the critical size.
    #[arg(long)]
    pub dots: DotsRange,
    #[command(flatten)]
    pub search: SearchArgs,
    /// Where to write the underlying (N, 1/E_max) table.
    #[arg(long)]
    pub out: Option<String>,
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 10)]
    pub max_dots: u32,
    /// Time samples per evolution period.
    #[arg(long, default_value_t = 25)]
    pub samples: usize,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Where to write the table of mismatches.
    #[arg(long, default_value = "-")]
    pub out: String,
    #[arg(long)]
    pub sequential: bool,
    #[arg(long, hide = true)]
    pub corrupt_table: bool,
}

/// Inclusive range of dot counts: `N`, `A..B` or `A..=B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DotsRange {
    pub start: u32,
    pub end: u32,
}

impl DotsRange {
    pub fn values(&self) -> Vec<u32> {
        (self.start..=self.end).collect()
    }

    pub fn single(&self) -> Option<u32> {
        (self.start == self.end).then_some(self.start)
    }
}

impl FromStr for DotsRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |x: &str| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| format!("`{x}` is not a dot count"))
        };
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let n = parse(s)?;
                (n, n)
            }
        };
        if start > end {
            return Err(format!("empty range `{s}`"));
        }
        Ok(Self { start, end })
    }
}

impl std::fmt::Display for DotsRange {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.single() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{}..{}", self.start, self.end),
        }
    }
}
