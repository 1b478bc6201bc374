use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::LevelFilter;

mod commands;
mod faults;
mod output;

use output::OutputFormat;

#[derive(Parser, Debug)]
#[command(
    name = "btcoh",
    version,
    about = "Unipotent representations of finite unitary groups and cohomology of Bruhat-Tits strata"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    config: RunConfig,
}

/// Settings shared by every subcommand.
#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    #[arg(long, value_enum, default_value_t = OutputFormat::Table, global = true)]
    pub format: OutputFormat,

    /// Write the document here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Largest n for S_n character tables.
    #[arg(long, default_value_t = DEFAULT_MAX_N, global = true)]
    pub max_n: usize,

    /// Largest a for W_a character tables.
    #[arg(long, default_value_t = DEFAULT_MAX_A, global = true)]
    pub max_a: usize,

    /// Largest stratum dimension theta.
    #[arg(long, default_value_t = DEFAULT_MAX_THETA, global = true)]
    pub max_theta: usize,

    /// Largest Coxeter parameter k.
    #[arg(long, default_value_t = DEFAULT_MAX_K, global = true)]
    pub max_k: usize,

    #[arg(short, long, global = true, conflicts_with = "verbose")]
    pub quiet: bool,

    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    pub verbose: u8,

    #[arg(long, value_enum, hide = true, global = true)]
    pub inject_fault: Option<faults::Fault>,
}

pub const DEFAULT_MAX_N: usize = 8;
pub const DEFAULT_MAX_A: usize = 5;
pub const DEFAULT_MAX_THETA: usize = 8;
pub const DEFAULT_MAX_K: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GroupKind {
    Gl,
    U,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WeylKind {
    /// Symmetric group S_n.
    Sym,
    /// Hyperoctahedral group W_a.
    B,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Character value of S_n.
    CharSym {
        #[arg(long, value_parser = commands::parse_partition)]
        lambda: bt_cohomology::Partition,
        #[arg(long, value_parser = commands::parse_partition)]
        class: bt_cohomology::Partition,
    },
    /// Character value of W_a, labels and classes written as `α/β`.
    CharB {
        #[arg(long, value_parser = commands::parse_bipartition)]
        label: bt_cohomology::Bipartition,
        #[arg(long, value_parser = commands::parse_bipartition)]
        class: bt_cohomology::Bipartition,
    },
    /// Full character table.
    Table {
        #[arg(long, value_enum)]
        group: WeylKind,
        #[arg(long)]
        rank: usize,
    },
    /// Generic degree of a unipotent representation.
    Degree {
        #[arg(long, value_parser = commands::parse_partition)]
        lambda: bt_cohomology::Partition,
        #[arg(long, value_enum, default_value_t = GroupKind::U)]
        group: GroupKind,
        /// Also evaluate at this q.
        #[arg(long, allow_hyphen_values = true)]
        q: Option<i64>,
    },
    /// 2-core of a partition.
    TwoCore {
        #[arg(long, value_parser = commands::parse_partition)]
        lambda: bt_cohomology::Partition,
    },
    /// 2-core and 2-quotient of a partition.
    TwoQuotient {
        #[arg(long, value_parser = commands::parse_partition)]
        lambda: bt_cohomology::Partition,
        /// Row count for the beta-set (defaults to the number of parts).
        #[arg(long)]
        rows: Option<usize>,
    },
    /// Partition with given 2-core index and 2-quotient.
    Reconstruct {
        #[arg(long)]
        core: usize,
        #[arg(long, value_parser = commands::parse_bipartition)]
        quotient: bt_cohomology::Bipartition,
    },
    /// Translate between partition and symbol labels of U_n(q).
    Label {
        #[arg(long, value_parser = commands::parse_partition, conflicts_with_all = ["t", "bipartition"])]
        lambda: Option<bt_cohomology::Partition>,
        #[arg(long, requires = "bipartition")]
        t: Option<usize>,
        #[arg(long, value_parser = commands::parse_bipartition, requires = "t")]
        bipartition: Option<bt_cohomology::Bipartition>,
    },
    /// Harish-Chandra series of ρ_λ.
    Series {
        #[arg(long, value_parser = commands::parse_partition)]
        lambda: bt_cohomology::Partition,
    },
    /// Type-B Pieri rule.
    Pieri {
        #[arg(long, value_parser = commands::parse_bipartition)]
        bipartition: bt_cohomology::Bipartition,
        #[arg(long)]
        boxes: usize,
        /// Remove boxes instead of adding them.
        #[arg(long)]
        restrict: bool,
    },
    /// Harish-Chandra induction of ρ_{Δ_t,α,β} ⊠ ρ^{GL}_{(a_1)} ⊠ … .
    Induce {
        #[arg(long)]
        t: usize,
        #[arg(long, value_parser = commands::parse_bipartition)]
        bipartition: bt_cohomology::Bipartition,
        /// GL block ranks, comma-separated.
        #[arg(long, value_delimiter = ',', required = true)]
        gl: Vec<usize>,
    },
    /// Cohomology of the Coxeter variety of U_{2k+1}.
    Coxeter {
        #[arg(long)]
        k: usize,
    },
    /// Cohomology of a closed Bruhat-Tits stratum.
    Stratum {
        #[arg(long)]
        theta: usize,
        #[arg(long, value_enum, default_value_t = StratumView::Spectral)]
        view: StratumView,
        /// EO stratum to show with `--view eo`.
        #[arg(long)]
        theta_prime: Option<usize>,
    },
    /// Run the verification suites. Ranges are inclusive: `3`, `0..6`.
    Verify {
        #[arg(long, value_parser = commands::parse_range)]
        theta: Option<std::ops::RangeInclusive<usize>>,
        #[arg(long, value_parser = commands::parse_range)]
        k: Option<std::ops::RangeInclusive<usize>>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StratumView {
    /// From the spectral sequence.
    Spectral,
    /// From the closed formula.
    ClosedFormula,
    /// One Ekedahl-Oort stratum.
    Eo,
    /// The first page.
    Page,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match (cli.config.quiet, cli.config.verbose) {
        (true, _) => LevelFilter::Error,
        (false, 0) => LevelFilter::Warn,
        (false, 1) => LevelFilter::Info,
        (false, 2) => LevelFilter::Debug,
        _ => LevelFilter::Trace,
    };
    env_logger::Builder::new().filter_level(level).init();
    match commands::run(&cli.command, &cli.config) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
