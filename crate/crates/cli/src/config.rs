use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use ultrasync_core::oracle::{DEFAULT_BOUND, HARD_CAP};
use ultrasync_core::Family;

/// Environment variable naming the default cache directory.
pub const CACHE_DIR_ENV: &str = "ULTRASYNC_CACHE_DIR";
/// File name used inside the cache directory.
pub const CACHE_FILE: &str = "tables.jsonl";

#[derive(Debug, Parser)]
#[command(name = "ultrasync", version, about = "Exact verification of descent/excedance synchronisation over even and odd permutations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Print triangle rows for one or more families.
    Table,
    /// Ultra-synchronisation of B, C, P, Q (default n in [5, 19]).
    VerifyMain,
    /// Bound lemmas, Newton epsilon inequality and boundary checks (default n in [15, 40]).
    VerifyLemmas,
    /// Compare recurrence tables with brute-force enumeration (default n in [1, 9]).
    OracleCrosscheck,
    /// Real-rootedness of P_n, the T_n identity and the conjecture scan (default n in [3, 30]).
    Roots,
    /// Run every command above with its default range.
    Report,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    /// Human-readable summary with timings.
    #[default]
    Summary,
    /// One JSON object per line, no timings.
    Records,
    /// Header plus one row per record.
    Csv,
}

#[derive(Debug, Clone, Default, Args)]
pub struct CommonArgs {
    /// Single n (sets both --n-min and --n-max).
    #[arg(long, global = true, conflicts_with_all = ["n_min", "n_max"])]
    pub n: Option<usize>,

    #[arg(long, global = true)]
    pub n_min: Option<usize>,

    #[arg(long, global = true)]
    pub n_max: Option<usize>,

    /// Families for `table`: eulerian, signed, bdes, cdes, pexc, qexc, binomial.
    #[arg(long, global = true, value_delimiter = ',')]
    pub family: Vec<Family>,

    /// Largest n the brute-force oracle may enumerate (at most 12).
    #[arg(long, global = true, default_value_t = DEFAULT_BOUND)]
    pub oracle_bound: usize,

    /// Table cache file. Defaults to $ULTRASYNC_CACHE_DIR/tables.jsonl when that is set.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Summary)]
    pub format: Format,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Demote every assertion to a report entry; exit status is then always zero.
    #[arg(long, global = true)]
    pub report_only: bool,
}

/// Resolved configuration for one run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub n_min: usize,
    pub n_max: usize,
    /// Whether the range came from the command line.
    pub explicit_range: bool,
    pub oracle_bound: usize,
    pub families: Vec<Family>,
    pub cache_path: Option<PathBuf>,
    pub output_path: Option<PathBuf>,
    pub format: Format,
    pub report_only: bool,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Table => "table",
            Command::VerifyMain => "verify-main",
            Command::VerifyLemmas => "verify-lemmas",
            Command::OracleCrosscheck => "oracle-crosscheck",
            Command::Roots => "roots",
            Command::Report => "report",
        }
    }

    pub fn default_range(self) -> (usize, usize) {
        match self {
            Command::Table => (1, 10),
            Command::VerifyMain => (5, 19),
            Command::VerifyLemmas => (15, 40),
            Command::OracleCrosscheck => (1, 9),
            Command::Roots => (3, 30),
            Command::Report => (1, 40),
        }
    }
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self> {
        Self::resolve(cli.command, &cli.common, std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from))
    }

    pub fn resolve(command: Command, args: &CommonArgs, cache_dir: Option<PathBuf>) -> Result<Self> {
        let (def_min, def_max) = command.default_range();
        let (n_min, n_max) = match args.n {
            Some(n) => (n, n),
            None => (args.n_min.unwrap_or(def_min), args.n_max.unwrap_or(def_max)),
        };
        if n_min == 0 {
            bail!("n must be at least 1");
        }
        if n_min > n_max {
            bail!("--n-min {n_min} exceeds --n-max {n_max}");
        }
        if args.oracle_bound > HARD_CAP {
            bail!("--oracle-bound {} exceeds the hard cap {HARD_CAP}", args.oracle_bound);
        }
        let families = if args.family.is_empty() {
            vec![Family::Eulerian]
        } else {
            args.family.clone()
        };
        let cache_path = args
            .cache
            .clone()
            .or_else(|| cache_dir.map(|d| d.join(CACHE_FILE)));
        Ok(RunConfig {
            command,
            n_min,
            n_max,
            explicit_range: args.n.is_some() || args.n_min.is_some() || args.n_max.is_some(),
            oracle_bound: args.oracle_bound,
            families,
            cache_path,
            output_path: args.out.clone(),
            format: args.format,
            report_only: args.report_only,
        })
    }

    /// Same configuration for another command, keeping the explicit range
    /// or falling back to that command's default.
    pub fn for_command(&self, command: Command) -> RunConfig {
        let (n_min, n_max) = if self.explicit_range {
            (self.n_min, self.n_max)
        } else {
            command.default_range()
        };
        RunConfig {
            command,
            n_min,
            n_max,
            ..self.clone()
        }
    }

    /// Text echoed at the top of reports. Excludes paths so output does not
    /// depend on where the cache lives.
    pub fn echo(&self) -> String {
        format!(
            "command={} n=[{},{}] oracle_bound={} report_only={}",
            self.command.name(),
            self.n_min,
            self.n_max,
            self.oracle_bound,
            self.report_only
        )
    }
}
