//! Command-line surface: one subcommand per capability, JSON reports on
//! stdout, diagnostics on stderr.
//!
//! Exit codes: 0 on success, 1 on malformed input (bad flags, unparsable
//! JSON, schema violations), 2 on domain errors (unpackable factorization,
//! outside-table bundle, non-transitive group, and the like).

mod commands;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "p1spec", version, about = "Exact spectral-curve and twisted-pair reports over the projective line")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum ShapeArg {
    Indecomposable,
    DecomposableLineSum,
}

#[derive(Subcommand)]
enum Command {
    /// Characteristic coefficients of a twisted pair, both routes, plus the
    /// Cayley-Hamilton check.
    PairCharpoly {
        /// Twist t of the endomorphism.
        #[arg(long)]
        t: i64,
        /// Splitting type as a JSON array, e.g. "[0,-2]".
        #[arg(long)]
        bg: String,
        /// Matrix of sections as nested JSON, entries {"k":..,"coeffs":[..]}.
        #[arg(long)]
        phi: String,
    },
    /// Companion pair of a Hitchin tuple.
    PairCompanion {
        #[arg(long)]
        t: i64,
        /// Sections s_1..s_r as a JSON array of {"k":..,"coeffs":[..]}.
        #[arg(long)]
        s: String,
    },
    /// Distribute a factored determinant section into a cyclic chain.
    ChainBuild {
        #[arg(long)]
        t: i64,
        #[arg(long)]
        bg: String,
        /// Factored section {"k":..,"unit":"p/q","factors":[{"coeffs":[..],"mult":..}]}.
        #[arg(long)]
        s: String,
    },
    /// Stability verdict for a cyclic chain.
    ChainStability {
        #[arg(long)]
        t: i64,
        #[arg(long)]
        bg: String,
        /// Chain entries u_1..u_r as a JSON array of sections.
        #[arg(long)]
        u: String,
    },
    /// Discriminant, smoothness, integrality, and genus for a Hitchin tuple.
    SpectralReport {
        #[arg(long)]
        t: i64,
        /// Expected rank; checked against the number of sections.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        s: String,
    },
    /// Transitivity, block systems, and cyclic classification of a
    /// permutation group.
    GaloisBlocks {
        /// Generators as a JSON array of image arrays, e.g. "[[1,2,3,0]]".
        #[arg(long)]
        gens: String,
        /// With --b: report the minimal block system joining the two symbols.
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        /// Closure size bound for the order computation.
        #[arg(long, default_value_t = 100_000)]
        bound: usize,
    },
    /// Factorizability of a cyclic r-sheeted cover.
    CoverFactor {
        #[arg(long)]
        r: u64,
    },
    /// Genus and degree ledger of one factorization of a cyclic cover.
    TowerPlan {
        #[arg(long)]
        t: i64,
        #[arg(long)]
        r: i64,
        #[arg(long)]
        m: i64,
        #[arg(long)]
        p: i64,
        #[arg(long)]
        d: i64,
    },
    /// Pushforward splitting for the 2:1 elliptic cover.
    EllipticPush {
        #[arg(long)]
        rank: u32,
        #[arg(long)]
        degree: i64,
        #[arg(long, value_enum)]
        shape: ShapeArg,
        /// h0 for a degree-zero indecomposable bundle.
        #[arg(long)]
        h0: Option<u8>,
        /// Line degrees "d1,d2" for a decomposable bundle.
        #[arg(long)]
        line_degrees: Option<String>,
        /// Per-line h0 "h1,h2" for degree-zero lines.
        #[arg(long)]
        line_h0: Option<String>,
    },
}

/// Failure category, deciding the exit code.
pub enum Failure {
    Input(String),
    Domain(String),
}

impl Failure {
    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Domain(m) => m,
        }
    }

    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Domain(_) => 2,
        }
    }
}

impl From<p1spec::Error> for Failure {
    fn from(e: p1spec::Error) -> Failure {
        if e.is_validation() {
            Failure::Input(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    let report = match run(cli.command) {
        Ok(report) => report,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            return ExitCode::from(failure.code());
        }
    };
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable report"));
    ExitCode::SUCCESS
}

fn run(command: Command) -> Result<serde_json::Value, Failure> {
    match command {
        Command::PairCharpoly { t, bg, phi } => commands::pair_charpoly(t, &bg, &phi),
        Command::PairCompanion { t, s } => commands::pair_companion(t, &s),
        Command::ChainBuild { t, bg, s } => commands::chain_build(t, &bg, &s),
        Command::ChainStability { t, bg, u } => commands::chain_stability(t, &bg, &u),
        Command::SpectralReport { t, r, s } => commands::spectral_report(t, r, &s),
        Command::GaloisBlocks { gens, a, b, bound } => {
            commands::galois_blocks(&gens, a, b, bound)
        }
        Command::CoverFactor { r } => commands::cover_factor(r),
        Command::TowerPlan { t, r, m, p, d } => commands::tower_plan(t, r, m, p, d),
        Command::EllipticPush {
            rank,
            degree,
            shape,
            h0,
            line_degrees,
            line_h0,
        } => commands::elliptic_push(rank, degree, shape, h0, line_degrees, line_h0),
    }
}
