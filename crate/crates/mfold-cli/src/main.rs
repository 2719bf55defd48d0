//! `mfold`: exact counts of rational plane curves with an m-fold point.
//!
//! Subcommands: `count` (one number), `table` (a degree range), `verify`
//! (golden tables, cross-oracle identities, optional cache audit) and
//! `oracle` (the two independent cross-check computations). Exit codes:
//! 0 success, 1 verification mismatch, 2 invalid input.

mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mfold::chern::{euler_count, singular_family_dim};
use mfold::verify::{golden_table, run_all, GOLDEN_TABLES};
use mfold::{Count, CountQuery, CurveClass, FamilyCounter, MemoStore, PlaneCounter};

use output::{
    print_records, print_verify, CacheCheck, CacheMismatch, Format, Record, VerifyOutput,
};

/// Largest degree accepted without `--unsafe-degree`.
const DEGREE_GUARD: i64 = 12;

/// Environment variable naming the default cache directory.
const CACHE_DIR_ENV: &str = "MFOLD_CACHE_DIR";

/// File name used inside the default cache directory.
const CACHE_FILE_NAME: &str = "memo.json";

#[derive(Parser)]
#[command(
    name = "mfold",
    version,
    about = "Exact counts of rational plane curves with an ordinary m-fold point",
    after_help = "The count of degree-d rational curves through 3d+1-m generic points with an \
                  m-fold point is `count -d <d> -m <m>`; --theta confines the singular point to \
                  a generic line (1) or a fixed point (2)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Memo cache file (default: $MFOLD_CACHE_DIR/memo.json when set).
    #[arg(long, global = true, value_name = "PATH")]
    cache: Option<PathBuf>,

    /// How the memo cache file is used.
    #[arg(long, global = true, value_enum, default_value_t = CacheMode::ReadWrite)]
    cache_mode: CacheMode,

    /// Lift the degree guard (d <= 12). Runtimes grow quickly beyond it.
    #[arg(long, global = true)]
    unsafe_degree: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum CacheMode {
    ReadWrite,
    ReadOnly,
    Disabled,
}

#[derive(Subcommand)]
enum Command {
    /// Count curves for one class (d, m) and location constraint.
    Count(CountArgs),
    /// Count a whole degree range, or reproduce a named preset table.
    Table(TableArgs),
    /// Recompute every golden table and cross-oracle identity.
    Verify(VerifyArgs),
    /// Run one of the independent cross-check computations.
    Oracle(OracleArgs),
}

#[derive(Args)]
struct CountArgs {
    /// Degree of the plane curves (coefficient of L).
    #[arg(short, allow_negative_numbers = true)]
    d: i64,
    /// Multiplicity of the singular point (coefficient of E).
    #[arg(short, allow_negative_numbers = true)]
    m: i64,
    /// Codimension of the constraint on the singular point's location
    /// (0 free, 1 on a generic line, 2 at a fixed point).
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    theta: i64,
    /// Number of generic point constraints. Defaults to 3d+1-m-theta, the
    /// one value the dimension condition allows; any other choice counts
    /// zero.
    #[arg(long, allow_negative_numbers = true)]
    r: Option<i64>,
}

#[derive(Args)]
struct TableArgs {
    /// Named table: one of the golden presets (kontsevich, nodes-free,
    /// nodes-line, nodes-point, triple-free, triple-line, triple-point,
    /// mfold-theta0, mfold-theta1, mfold-theta2).
    #[arg(long, value_name = "NAME")]
    preset: Option<String>,
    /// Multiplicity of the singular point (custom tables).
    #[arg(short, allow_negative_numbers = true)]
    m: Option<i64>,
    /// Location-constraint codimension (custom tables).
    #[arg(long, allow_negative_numbers = true)]
    theta: Option<i64>,
    /// Inclusive degree range, e.g. 3..8.
    #[arg(long, value_name = "FROM..TO")]
    d_range: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Extend the identity sweep from degree 8 to the guard (degree 10).
    #[arg(long)]
    deep: bool,
}

#[derive(Args)]
struct OracleArgs {
    #[command(subcommand)]
    which: OracleCommand,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Classical count of rational degree-d plane curves through 3d-1
    /// points, by the plane recursion alone.
    Kontsevich {
        #[arg(short, allow_negative_numbers = true)]
        d: i64,
    },
    /// Euler-class count of degree-d curves with an m-fold point, computed
    /// in the cohomology of (linear system) x (plane). Only comparable with
    /// the recursion for m = d-1.
    Chern {
        #[arg(short, allow_negative_numbers = true)]
        d: i64,
        #[arg(short, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        theta: i64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Count(args) => cmd_count(cli, args),
        Command::Table(args) => cmd_table(cli, args),
        Command::Verify(args) => cmd_verify(cli, args),
        Command::Oracle(args) => cmd_oracle(cli, args),
    }
}

// ---------------------------------------------------------------- cache

/// Where the memo cache lives: an explicit `--cache` path, or
/// `$MFOLD_CACHE_DIR/memo.json` as a soft default.
fn cache_path(cli: &Cli) -> Option<(PathBuf, bool)> {
    if cli.cache_mode == CacheMode::Disabled {
        return None;
    }
    if let Some(path) = &cli.cache {
        return Some((path.clone(), true));
    }
    std::env::var_os(CACHE_DIR_ENV).map(|dir| (PathBuf::from(dir).join(CACHE_FILE_NAME), false))
}

fn load_counter(cli: &Cli) -> Result<FamilyCounter<Count>, String> {
    if let Some((path, explicit)) = cache_path(cli) {
        if path.exists() {
            let store =
                MemoStore::read_file(&path).map_err(|e| format!("{}: {e}", path.display()))?;
            return Ok(FamilyCounter::from_store(store));
        } else if explicit && cli.cache_mode == CacheMode::ReadOnly {
            return Err(format!("cache file {} does not exist", path.display()));
        }
    }
    Ok(FamilyCounter::new())
}

fn save_counter(cli: &Cli, counter: &FamilyCounter<Count>) {
    if cli.cache_mode != CacheMode::ReadWrite {
        return;
    }
    let Some((path, _)) = cache_path(cli) else {
        return;
    };
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            if let Err(e) = std::fs::create_dir_all(parent) {
                eprintln!("warning: cannot create {}: {e}", parent.display());
                return;
            }
        }
    }
    if let Err(e) = counter.store().write_file(&path) {
        eprintln!("warning: cache not saved to {}: {e}", path.display());
    }
}

// ---------------------------------------------------------------- count

fn check_guard(cli: &Cli, d: i64) -> Result<(), String> {
    if d > DEGREE_GUARD && !cli.unsafe_degree {
        return Err(format!(
            "degree {d} exceeds the guard ({DEGREE_GUARD}); counts grow super-exponentially, \
             pass --unsafe-degree to proceed"
        ));
    }
    Ok(())
}

fn resolve_points(d: i64, m: i64, theta: i64, r: Option<i64>) -> Result<i64, String> {
    match r {
        Some(r) => Ok(r),
        None => {
            let r = 3 * d + 1 - m - theta;
            if r < 0 {
                return Err(format!(
                    "computed point count r = 3d+1-m-theta = {r} is negative; \
                     no such enumerative problem exists"
                ));
            }
            Ok(r)
        }
    }
}

fn cmd_count(cli: &Cli, args: &CountArgs) -> Result<ExitCode, String> {
    check_guard(cli, args.d)?;
    let r = resolve_points(args.d, args.m, args.theta, args.r)?;
    let query = CountQuery::new(CurveClass::new(args.d, args.m), r, args.theta)
        .map_err(|e| e.to_string())?;
    let mut counter = load_counter(cli)?;
    let record = Record {
        d: args.d,
        m: args.m,
        theta: args.theta,
        r,
        count: counter.count(query).to_string(),
    };
    save_counter(cli, &counter);
    print_records(&[record], cli.format, false);
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------- table

fn parse_d_range(text: &str) -> Result<(i64, i64), String> {
    let (from, to) = text
        .split_once("..")
        .ok_or_else(|| format!("malformed degree range `{text}`, expected FROM..TO"))?;
    let to = to.strip_prefix('=').unwrap_or(to);
    let from: i64 = from
        .trim()
        .parse()
        .map_err(|_| format!("malformed degree range `{text}`"))?;
    let to: i64 = to
        .trim()
        .parse()
        .map_err(|_| format!("malformed degree range `{text}`"))?;
    if from > to {
        return Err(format!("empty degree range `{text}`"));
    }
    Ok((from, to))
}

/// The (d, m, theta) triples a table invocation asks for.
fn table_rows(args: &TableArgs) -> Result<Vec<(i64, i64, i64)>, String> {
    if let Some(name) = &args.preset {
        if args.m.is_some() || args.theta.is_some() || args.d_range.is_some() {
            return Err("--preset excludes -m, --theta and --d-range".into());
        }
        let table = golden_table(name).map_err(|_| {
            let names: Vec<_> = GOLDEN_TABLES.iter().map(|t| t.name).collect();
            format!("unknown preset `{name}`; available: {}", names.join(", "))
        })?;
        return Ok(table.rows.iter().map(|c| (c.d, c.m, c.theta)).collect());
    }
    let m = args
        .m
        .ok_or("either --preset or -m with --d-range is required")?;
    let theta = args.theta.unwrap_or(0);
    let range = args
        .d_range
        .as_deref()
        .ok_or("custom tables need --d-range FROM..TO")?;
    let (from, to) = parse_d_range(range)?;
    Ok((from..=to).map(|d| (d, m, theta)).collect())
}

fn cmd_table(cli: &Cli, args: &TableArgs) -> Result<ExitCode, String> {
    let rows = table_rows(args)?;
    let mut counter = load_counter(cli)?;
    let mut records = Vec::with_capacity(rows.len());
    for (d, m, theta) in rows {
        check_guard(cli, d)?;
        let r = resolve_points(d, m, theta, None)?;
        let query = CountQuery::new(CurveClass::new(d, m), r, theta)
            .map_err(|e| format!("degree {d}: {e}"))?;
        records.push(Record {
            d,
            m,
            theta,
            r,
            count: counter.count(query).to_string(),
        });
    }
    save_counter(cli, &counter);
    print_records(&records, cli.format, true);
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------- verify

/// Recompute every cached entry from scratch and compare. The fresh counter
/// shared across entries never reads the audited store.
fn check_cache(path: &Path) -> Result<CacheCheck, String> {
    let store =
        MemoStore::<Count>::read_file(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut fresh = FamilyCounter::<Count>::new();
    let mut mismatches = Vec::new();
    for (query, stored) in store.sorted_entries() {
        let recomputed = fresh.count(query);
        if recomputed != stored {
            mismatches.push(CacheMismatch {
                d: query.class().d,
                m: query.class().m,
                theta: query.codim(),
                r: query.points(),
                stored: stored.to_string(),
                recomputed: recomputed.to_string(),
            });
        }
    }
    Ok(CacheCheck {
        entries: store.len(),
        passed: mismatches.is_empty(),
        mismatches,
    })
}

fn cmd_verify(cli: &Cli, args: &VerifyArgs) -> Result<ExitCode, String> {
    // verification always recomputes from scratch; a cache, when present,
    // is audited against the fresh values rather than trusted
    let mut counter = FamilyCounter::<Count>::new();
    let report = run_all(&mut counter, args.deep);

    let cache = match cache_path(cli) {
        Some((path, explicit)) if explicit || path.exists() => Some(check_cache(&path)?),
        _ => None,
    };

    let passed = report.passed && cache.as_ref().is_none_or(|c| c.passed);
    print_verify(&VerifyOutput { report, cache }, cli.format);
    Ok(if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

// ---------------------------------------------------------------- oracle

fn cmd_oracle(cli: &Cli, args: &OracleArgs) -> Result<ExitCode, String> {
    let record = match args.which {
        OracleCommand::Kontsevich { d } => {
            check_guard(cli, d)?;
            let count = PlaneCounter::<Count>::new()
                .n_plane(d)
                .map_err(|e| e.to_string())?;
            Record {
                d,
                m: 0,
                theta: 2,
                r: 3 * d - 1,
                count: count.to_string(),
            }
        }
        OracleCommand::Chern { d, m, theta } => {
            check_guard(cli, d)?;
            let count = euler_count::<Count>(d, m, theta).map_err(|e| e.to_string())?;
            Record {
                d,
                m,
                theta,
                r: singular_family_dim(d, m) - theta,
                count: count.to_string(),
            }
        }
    };
    print_records(&[record], cli.format, false);
    Ok(ExitCode::SUCCESS)
}
