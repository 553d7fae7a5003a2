use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_rational::BigRational;

use hilie_cli::commands::{self, SampleKind, Suite, Trials};
use hilie_cli::{ExperimentReport, Format};
use hilie_core::characters::{resolve_cache_dir, set_cache_dir};
use hilie_core::{parse_partition, Error, Partition};

#[derive(Parser, Debug)]
#[command(name = "hilie", version, about = "Higher Lie character experiments")]
struct Cli {
    /// Directory for cached character tables (overrides HILIE_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Master seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Constant c in the balanced-diagram filter, as an integer or num/den.
    #[arg(long, global = true, default_value = "3", value_parser = parse_rational)]
    balance_c: BigRational,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Schur expansion of L_lambda twisted by r.
    Decompose {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        r: i64,
    },
    /// Run an exact verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
    },
    /// Residuals for random (lambda, nu) pairs.
    Regularity {
        #[arg(long)]
        n: usize,
        /// Number of trials, or `all-pairs` for the exhaustive table.
        #[arg(long, default_value = "100", value_parser = parse_trials)]
        trials: Trials,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        r: i64,
    },
    /// Residuals for rectangles (m^k).
    SweepRect {
        #[arg(long, value_delimiter = ',', required = true)]
        m: Vec<usize>,
        #[arg(long)]
        k: usize,
    },
    /// Residuals and the support check for hooks (n-k, 1^k).
    SweepHooks {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<usize>,
    },
    /// Derangement character against f/e at the Plancherel-modal diagram.
    Derangement {
        #[arg(long, default_value_t = 10)]
        nmax: usize,
    },
    /// Conjugation character against f at the Plancherel-modal diagram.
    Conjugacy {
        #[arg(long, default_value_t = 9)]
        nmax: usize,
    },
    /// Residuals along virtual-permutation chains.
    Virtual {
        #[arg(long, value_delimiter = ',', required = true)]
        checkpoints: Vec<usize>,
        #[arg(long, default_value_t = 50)]
        chains: usize,
    },
    /// Empirical law of a sampler against its exact law.
    Sample {
        #[arg(long, value_enum)]
        kind: SampleKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 10_000)]
        count: usize,
    },
}

fn parse_rational(s: &str) -> Result<BigRational, String> {
    s.trim()
        .parse::<BigRational>()
        .map_err(|e| format!("not a rational number: {s} ({e})"))
}

fn parse_trials(s: &str) -> Result<Trials, String> {
    if s == "all-pairs" {
        return Ok(Trials::AllPairs);
    }
    match s.parse::<usize>() {
        Ok(t) if t >= 1 => Ok(Trials::Random(t)),
        _ => Err(format!("expected a positive count or all-pairs, got {s}")),
    }
}

fn run(cli: &Cli) -> hilie_core::Result<ExperimentReport> {
    match &cli.command {
        Command::Decompose { lambda, r } => commands::decompose(lambda, *r),
        Command::Verify { suite, nmax } => commands::verify(*suite, *nmax),
        Command::Regularity { n, trials, r } => {
            if *n == 0 {
                return Err(Error::Precondition("n must be at least 1".into()));
            }
            commands::regularity(*n, *trials, cli.seed, *r)
        }
        Command::SweepRect { m, k } => {
            if *k == 0 {
                return Err(Error::Precondition("k must be at least 1".into()));
            }
            commands::sweep_rect(m, *k, &cli.balance_c)
        }
        Command::SweepHooks { n, k } => commands::sweep_hooks(*n, k),
        Command::Derangement { nmax } => commands::derangement(*nmax),
        Command::Conjugacy { nmax } => commands::conjugacy(*nmax),
        Command::Virtual {
            checkpoints,
            chains,
        } => commands::virtual_perms(checkpoints, *chains, cli.seed),
        Command::Sample { kind, n, count } => commands::sample(*kind, *n, *count, cli.seed),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            log::warn!("could not size the thread pool: {e}");
        }
    }
    set_cache_dir(resolve_cache_dir(cli.cache_dir.clone()));

    let report = match run(&cli) {
        Ok(r) => r,
        Err(e @ (Error::Parse { .. } | Error::Precondition(_))) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    if let Err(e) = report.write(cli.format, &mut out).and_then(|_| out.flush()) {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    eprintln!(
        "{} finished in {:.3}s",
        report.command,
        report.wall_time.as_secs_f64()
    );
    if !report.passed {
        for row in failing_rows(&report) {
            eprintln!("failed: {row}");
        }
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}

fn failing_rows(report: &ExperimentReport) -> Vec<String> {
    let flag = ["status", "vanishing_ok", "dim_ok"]
        .iter()
        .find_map(|c| report.column(c));
    let Some(i) = flag else {
        return Vec::new();
    };
    report
        .rows
        .iter()
        .filter(|r| r[i] == "fail" || r[i] == "false")
        .map(|r| r.join(" "))
        .collect()
}
