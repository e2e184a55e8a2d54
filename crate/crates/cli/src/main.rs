use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use semidual::bounds::DEFAULT_RANGE_CAP;
use semidual::explorer::SearchConfig;
use semidual::DEFAULT_CAP;
use semidual_cli::commands::{self, InvolutionSource, SeriesQuery};
use semidual_cli::{CliError, Report};

#[derive(Parser)]
#[command(name = "semidual", version, about = "Semi self-dual binary codes: bounds, enumerators and searches")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for sweeps and searches; results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Record wall-clock time in the report.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Flags, distances, weight enumerator and decomposition of a code file.
    Analyze {
        path: PathBuf,
        /// Largest dimension swept exhaustively.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Upper bound on the dual distance at length n.
    Bound {
        n: usize,
        #[arg(long, conflicts_with = "prove")]
        doubly_even: bool,
        /// Re-derive the bound and print the obstruction certificate.
        #[arg(long)]
        prove: bool,
    },
    /// Random neighbour walk looking for a witness that meets the bound.
    Sharpness {
        n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        steps: usize,
        /// Hyperplanes scanned per visited self-dual code.
        #[arg(long, default_value_t = 4095)]
        hyperplanes: usize,
        #[arg(long)]
        doubly_even: bool,
    },
    /// Free-module test for a fixed-point-free involution.
    Involution {
        /// Prime q with q = -1 mod 8, for the extended QR code of length q + 1.
        #[arg(required_unless_present = "code", conflicts_with_all = ["code", "perm"])]
        q: Option<u64>,
        #[arg(long, requires = "perm")]
        code: Option<PathBuf>,
        #[arg(long, requires = "code")]
        perm: Option<PathBuf>,
        /// Write the QR generator matrix as a code file.
        #[arg(long, requires = "q")]
        save_code: Option<PathBuf>,
        /// Write the involution as a permutation file.
        #[arg(long, requires = "q")]
        save_perm: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Closed-form coefficients checked against their series expansions.
    #[command(subcommand)]
    Series(SeriesCommand),
    /// Fraction of lengths up to the limit where the bound is the table value.
    Coverage {
        #[arg(long, default_value_t = 153)]
        limit: u64,
    },
    /// Free coefficient tuples compatible with dual distance 2d at n = 24mu.
    Feasible {
        n: usize,
        d: usize,
        /// Upper end of the range for each free coefficient.
        #[arg(long, default_value_t = DEFAULT_RANGE_CAP)]
        cap: u64,
        /// Solutions listed in the report.
        #[arg(long, default_value_t = 10)]
        show: usize,
    },
}

#[derive(Subcommand)]
enum SeriesCommand {
    /// alpha_i(N)
    Alpha { i: usize, n: usize },
    /// gamma_{h,k} at half-length N
    Gamma { h: usize, k: usize, n: usize },
    /// Parity of binom(5mu - 1, mu - 1)
    Parity { mu: u64 },
}

fn run(command: Command) -> Result<Report, CliError> {
    match command {
        Command::Analyze { path, cap } => commands::cmd_analyze(&path, cap),
        Command::Bound { n, doubly_even, prove } => commands::cmd_bound(n, doubly_even, prove),
        Command::Sharpness {
            n,
            seed,
            steps,
            hyperplanes,
            doubly_even,
        } => {
            let mut cfg = SearchConfig::new(n);
            cfg.rng_seed = seed;
            cfg.max_neighbor_steps = steps;
            cfg.hyperplane_limit = hyperplanes;
            cfg.doubly_even_only = doubly_even;
            commands::cmd_sharpness(&cfg)
        }
        Command::Involution {
            q,
            code,
            perm,
            save_code,
            save_perm,
            cap,
        } => {
            let source = match (q, code, perm) {
                (Some(q), _, _) => InvolutionSource::Qr { q, save_code, save_perm },
                (None, Some(code), Some(perm)) => InvolutionSource::Files { code, perm },
                _ => return Err(CliError::Usage("give q, or both --code and --perm".into())),
            };
            commands::cmd_involution(&source, cap)
        }
        Command::Series(s) => commands::cmd_series(&match s {
            SeriesCommand::Alpha { i, n } => SeriesQuery::Alpha { i, n },
            SeriesCommand::Gamma { h, k, n } => SeriesQuery::Gamma { h, k, n },
            SeriesCommand::Parity { mu } => SeriesQuery::Parity { mu },
        }),
        Command::Coverage { limit } => commands::cmd_coverage(limit),
        Command::Feasible { n, d, cap, show } => commands::cmd_feasible(n, d, cap, show),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let start = Instant::now();
    match run(cli.command) {
        Ok(mut report) => {
            if cli.timing {
                report.timing_ms = Some(start.elapsed().as_millis());
            }
            print!("{}", if cli.json { report.render_json() } else { report.render_text() });
            ExitCode::from(if report.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
