//! Command-line front end: run check sweeps, probe the cyclic-sum families,
//! and tabulate computed constants.
//!
//! Exit codes: 0 when no check failed (violated hypotheses do not fail a
//! run), 1 when any check failed, 2 on usage errors.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qcong::rational::is_prime;
use qcong::verify::{
    conjecture_grid_cells, conjecture_single_cells, filter_cells, registry_cells, run_cells,
    Cell, CheckStatus, CyclicFamily, GridBounds, RunOutcome,
};

use output::{write_kn_table, write_n_table, write_reports, Format};

#[derive(Parser)]
#[command(
    name = "qcong",
    version,
    about = "Exact verification of multiple q-harmonic sum congruences in Q[q]/Phi_p(q)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the congruence and identity check registry.
    Verify(VerifyArgs),
    /// Test the cyclic-sum families and extract their q-free constants.
    Conjecture(ConjectureArgs),
    /// Print tables of computed values.
    Table(TableArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker pool size; 0 means one worker per core. The QCONG_WORKERS
    /// environment variable overrides this flag.
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check id patterns (globs, e.g. "depth1.*"); default is every check.
    #[arg(long = "check")]
    checks: Vec<String>,
    /// Primes to verify at: a comma list "3,5,7" or a range "5..13".
    #[arg(long, default_value = "3,5,7,11,13")]
    primes: String,
    /// Largest n for the exact identities.
    #[arg(long, default_value_t = 8)]
    max_n: u32,
    /// Largest exponent for depth-one congruences.
    #[arg(long, default_value_t = 6)]
    max_exponent: u32,
    /// Largest t for the repeated-argument families.
    #[arg(long, default_value_t = 12)]
    max_t: u32,
    /// Largest composition weight.
    #[arg(long, default_value_t = 5)]
    max_weight: u32,
    /// Largest depth of randomly sampled specs.
    #[arg(long, default_value_t = 3)]
    max_depth: u32,
    /// Random reversal specs per prime.
    #[arg(long, default_value_t = 20)]
    reversal_samples: u32,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct ConjectureArgs {
    /// Cyclic family: cg12 (ones/twos) or cg23 (twos/threes).
    #[arg(long)]
    family: String,
    /// Number of separators; the block vector has t+1 entries.
    #[arg(long)]
    t: Option<u32>,
    /// Comma-separated block sizes d_0,...,d_t for a single cell.
    #[arg(long)]
    d: Option<String>,
    /// Single prime to test at.
    #[arg(long)]
    prime: Option<u32>,
    /// Primes to test at (comma list or range); default 3..13.
    #[arg(long)]
    primes: Option<String>,
    /// Sweep bound on the total weight r when no block vector is given.
    #[arg(long)]
    max_r: Option<u32>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct TableArgs {
    #[command(subcommand)]
    which: TableCommand,
}

#[derive(Subcommand)]
enum TableCommand {
    /// Table of K_n(p) values for one prime.
    Kn(KnArgs),
    /// Table of extracted cyclic-sum constants N(p, r, t).
    N(NArgs),
}

#[derive(Args)]
struct KnArgs {
    /// The prime p.
    #[arg(long)]
    prime: u32,
    /// Largest index n.
    #[arg(long, default_value_t = 12)]
    max_n: u32,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct NArgs {
    /// Sweep bound on the total weight r.
    #[arg(long, default_value_t = 9)]
    max_r: u32,
    /// Primes to test at (comma list or range); default 3..13.
    #[arg(long)]
    primes: Option<String>,
    #[command(flatten)]
    common: CommonArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Verify(args) => run_verify(args),
        Command::Conjecture(args) => run_conjecture(args),
        Command::Table(args) => run_table(args),
    }
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let bounds = GridBounds {
        primes: parse_primes(&args.primes)?,
        max_n: args.max_n,
        max_exponent: args.max_exponent,
        max_t: args.max_t,
        max_weight: args.max_weight,
        max_depth: args.max_depth,
        reversal_samples: args.reversal_samples,
        ..GridBounds::default()
    };
    let cells = filter_cells(registry_cells(&bounds), &args.checks);
    execute(cells, &args.common)
}

fn run_conjecture(args: ConjectureArgs) -> Result<ExitCode, String> {
    let family = CyclicFamily::parse(&args.family)
        .ok_or_else(|| format!("unknown family {:?}; expected cg12 or cg23", args.family))?;
    let primes = match (&args.prime, &args.primes) {
        (Some(p), None) => {
            if !is_prime(*p) || *p < 3 {
                return Err(format!("--prime {p} is not an odd prime"));
            }
            vec![*p]
        }
        (None, Some(spec)) => parse_primes(spec)?,
        (None, None) => GridBounds::default().primes,
        (Some(_), Some(_)) => return Err("use --prime or --primes, not both".into()),
    };
    let cells = match &args.d {
        Some(d_spec) => {
            let d = parse_u32_list(d_spec)?;
            let t = match args.t {
                Some(t) => t,
                None => (d.len() as u32).saturating_sub(1),
            };
            if d.len() != t as usize + 1 {
                return Err(format!(
                    "--d needs exactly t+1 = {} entries, got {}",
                    t + 1,
                    d.len()
                ));
            }
            conjecture_single_cells(family, t, d, &primes)
        }
        None => {
            let mut bounds = GridBounds {
                primes,
                ..GridBounds::default()
            };
            if let Some(r) = args.max_r {
                bounds.max_r_ones_twos = r;
                bounds.max_r_twos_threes = r;
            }
            let pattern = vec![family.id().to_string()];
            filter_cells(conjecture_grid_cells(&bounds), &pattern)
        }
    };
    execute(cells, &args.common)
}

fn run_table(args: TableArgs) -> Result<ExitCode, String> {
    match args.which {
        TableCommand::Kn(args) => {
            if !is_prime(args.prime) || args.prime < 3 {
                return Err(format!("--prime {} is not an odd prime", args.prime));
            }
            let rows: Vec<(u32, u32)> = (0..=args.max_n).map(|n| (n, args.prime)).collect();
            emit(&args.common, |w| write_kn_table(w, args.common.format, &rows))?;
            Ok(ExitCode::SUCCESS)
        }
        TableCommand::N(args) => {
            let bounds = GridBounds {
                primes: match &args.primes {
                    Some(spec) => parse_primes(spec)?,
                    None => GridBounds::default().primes,
                },
                max_r_twos_threes: args.max_r,
                ..GridBounds::default()
            };
            let pattern = vec![CyclicFamily::TwosThrees.id().to_string()];
            let cells = filter_cells(conjecture_grid_cells(&bounds), &pattern);
            let outcomes = run_with_workers(&cells, &args.common);
            let any_fail = any_failed(&outcomes);
            let constants: Vec<_> = outcomes.into_iter().filter_map(|o| o.constant).collect();
            emit(&args.common, |w| {
                write_n_table(w, args.common.format, &constants)
            })?;
            Ok(exit_for(any_fail))
        }
    }
}

fn execute(cells: Vec<Cell>, common: &CommonArgs) -> Result<ExitCode, String> {
    let outcomes = run_with_workers(&cells, common);
    let any_fail = any_failed(&outcomes);
    emit(common, |w| write_reports(w, common.format, &outcomes))?;
    Ok(exit_for(any_fail))
}

fn run_with_workers(cells: &[Cell], common: &CommonArgs) -> Vec<RunOutcome> {
    run_cells(cells, effective_workers(common.workers))
}

/// QCONG_WORKERS, when set, overrides the --workers flag.
fn effective_workers(flag: usize) -> usize {
    match std::env::var("QCONG_WORKERS") {
        Ok(raw) => raw.parse().unwrap_or_else(|_| {
            eprintln!("warning: ignoring non-numeric QCONG_WORKERS={raw:?}");
            flag
        }),
        Err(_) => flag,
    }
}

fn any_failed(outcomes: &[RunOutcome]) -> bool {
    outcomes
        .iter()
        .any(|o| o.report.status == CheckStatus::Fail)
}

fn exit_for(any_fail: bool) -> ExitCode {
    if any_fail {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn emit(
    common: &CommonArgs,
    write: impl FnOnce(&mut dyn std::io::Write) -> std::io::Result<()>,
) -> Result<(), String> {
    let result = match &common.out {
        Some(path) => {
            let mut file = std::fs::File::create(path)
                .map_err(|e| format!("cannot create {}: {e}", path.display()))?;
            write(&mut file)
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            write(&mut lock)
        }
    };
    result.map_err(|e| format!("write failed: {e}"))
}

/// Parses "3,5,7" or "5..13" into a validated ascending prime list.
fn parse_primes(spec: &str) -> Result<Vec<u32>, String> {
    let spec = spec.trim();
    let primes: Vec<u32> = if let Some((lo, hi)) = spec.split_once("..") {
        let lo: u32 = lo
            .trim()
            .parse()
            .map_err(|_| format!("bad range start {lo:?}"))?;
        let hi: u32 = hi
            .trim()
            .parse()
            .map_err(|_| format!("bad range end {hi:?}"))?;
        if lo > hi {
            return Err(format!("empty prime range {lo}..{hi}"));
        }
        qcong::rational::primes_in(lo.max(3), hi)
    } else {
        let mut out = Vec::new();
        for piece in spec.split(',') {
            let p: u32 = piece
                .trim()
                .parse()
                .map_err(|_| format!("bad prime {piece:?}"))?;
            if p < 3 || !is_prime(p) {
                return Err(format!("{p} is not an odd prime"));
            }
            out.push(p);
        }
        out.sort_unstable();
        out.dedup();
        out
    };
    if primes.is_empty() {
        return Err(format!("no primes selected by {spec:?}"));
    }
    Ok(primes)
}

fn parse_u32_list(spec: &str) -> Result<Vec<u32>, String> {
    spec.split(',')
        .map(|piece| {
            piece
                .trim()
                .parse()
                .map_err(|_| format!("bad integer {piece:?}"))
        })
        .collect()
}
