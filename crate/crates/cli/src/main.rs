mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use report::Format;

/// Necessary conditions for Oort groups, and the ramification arithmetic
/// behind them.
#[derive(Parser, Debug)]
#[command(name = "oortscan", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads for corpus runs (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
}

#[derive(Args, Debug, Clone)]
pub struct GroupSource {
    /// Family spec such as `D:18`, `prod(C:4,C:2)` or `ff(3,2)`.
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    pub family: Option<String>,
    /// Group-spec file: `degree N` then one generator per line in cycle notation.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run every check on one group.
    Classify {
        #[command(flatten)]
        source: GroupSource,
        #[arg(long)]
        p: u64,
    },
    /// Classify the labelled corpus and compare with the expected labels.
    Corpus {
        #[arg(long, default_value = "smoke")]
        profile: String,
        /// Restrict to these primes (comma separated or repeated).
        #[arg(long, value_delimiter = ',')]
        p: Vec<u64>,
    },
    /// Run a named obstruction scenario.
    Scenario {
        name: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        l: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
    },
    /// Print the group-spec file for a family.
    Make {
        #[arg(long)]
        family: String,
    },
    /// Riemann-Hurwitz and Artin-Schreier genera.
    Genus {
        #[command(subcommand)]
        kind: GenusKind,
    },
    /// Ramification filtrations.
    Filtration {
        #[command(subcommand)]
        kind: FiltrationKind,
    },
}

#[derive(Args, Debug, Clone)]
pub struct CoverSource {
    /// Cover-spec file.
    #[arg(long, conflicts_with = "cover", required_unless_present = "cover")]
    pub file: Option<PathBuf>,
    /// Inline cover spec; `;` separates lines.
    #[arg(long)]
    pub cover: Option<String>,
}

#[derive(Subcommand, Debug)]
enum GenusKind {
    /// Tame Riemann-Hurwitz.
    Tame(CoverSource),
    /// Riemann-Hurwitz with differents from the filtrations.
    Wild(CoverSource),
    /// Genus of w^p - w = f(u) with deg f = m.
    As {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u64,
    },
}

#[derive(Args, Debug, Clone)]
pub struct FiltrationArgs {
    #[arg(long)]
    pub p: u64,
    /// Lower filtration orders, e.g. `8,8,2,2,2,2`.
    #[arg(long, value_delimiter = ',', required = true)]
    pub orders: Vec<u64>,
}

#[derive(Subcommand, Debug)]
enum FiltrationKind {
    /// Herbrand transform to upper numbering.
    Upper(FiltrationArgs),
    /// Hasse-Arf divisibility test for one subgroup order.
    Check {
        #[command(flatten)]
        f: FiltrationArgs,
        #[arg(long)]
        sub_order: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let echo = echo.join(" ");
    let result = match cli.command {
        Command::Classify { source, p } => commands::classify(echo, &source, p),
        Command::Corpus { profile, p } => commands::corpus(echo, &profile, &p, cli.jobs),
        Command::Scenario { name, p, l, n } => commands::scenario(echo, &name, p, l, n),
        Command::Make { family } => match commands::make(&family) {
            Ok(text) => {
                print!("{text}");
                return ExitCode::SUCCESS;
            }
            Err(e) => Err(e),
        },
        Command::Genus { kind } => match kind {
            GenusKind::Tame(src) => commands::genus(echo, &src, false),
            GenusKind::Wild(src) => commands::genus(echo, &src, true),
            GenusKind::As { p, m } => commands::artin_schreier(echo, p, m),
        },
        Command::Filtration { kind } => match kind {
            FiltrationKind::Upper(f) => commands::filtration_upper(echo, &f),
            FiltrationKind::Check { f, sub_order } => {
                commands::filtration_check(echo, &f, sub_order)
            }
        },
    };
    match result {
        Ok(report) => {
            print!("{}", report.render(cli.format, start.elapsed()));
            ExitCode::from(report.exit_code as u8)
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
