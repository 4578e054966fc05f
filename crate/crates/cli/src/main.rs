//! bernid: exact Bernoulli/Euler sequence computations and identity
//! verification from the command line.
//!
//! Exit codes: 0 when everything checks out, 1 when at least one identity
//! mismatches (the full report is still printed), 2 on usage or I/O errors.

mod cache_file;
mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bernid::identity::{run_suite, IdentityId, SuiteOptions, ALL_IDENTITIES};
use bernid::sequences::{HarmonicOrder, SequenceCache};
use bernid::{series, Rat};

use output::{print_egf, print_rows, print_value, Row, RowParams};

#[derive(Parser)]
#[command(
    name = "bernid",
    version,
    about = "Exact Bernoulli/Euler computations and identity verification",
    after_help = "Identity ids: eq1, eq1-restated, rewrite-h, rewrite-l, eq2, eq3, lemma4, \
                  eq5, eq6, deriv-facts, ratio, eq7, eq8, recurrence, pintegral — or \"all\"."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Bernoulli cache file: preloaded (and verified) when it exists, and
    /// the target of `cache save`.
    #[arg(long, global = true, value_name = "PATH")]
    cache: Option<PathBuf>,

    /// Worker threads for verification sweeps. Defaults to all cores;
    /// 1 forces a fully sequential run.
    #[arg(long, global = true, value_name = "N")]
    workers: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Bernoulli number B_n.
    Bn { n: u32 },
    /// Print the Bernoulli polynomial B_n(x).
    Bpoly { n: u32 },
    /// Print the Euler polynomial E_n(x).
    Epoly { n: u32 },
    /// Print the harmonic number H_n.
    Harmonic { n: u32 },
    /// Print the second-order harmonic number H_n^(2).
    Harmonic2 { n: u32 },
    /// Print the Bernoulli EGF coefficients B_k/k! through t^order.
    Egf { order: u32 },
    /// Verify identities over their parameter grids.
    Verify {
        /// Identity ids, or "all".
        #[arg(required = true)]
        ids: Vec<String>,
        /// Sweep bound; defaults to each identity's calibrated bound
        /// (200 for scalar identities, 60 for eq7/eq8, 40 for lemma4/eq5,
        /// 30 for eq6). For pintegral the bound is exclusive.
        #[arg(long, value_name = "N")]
        n_max: Option<u32>,
        /// Restrict eq6 to a single offset d (default grid: 0..=3).
        #[arg(long, value_name = "D")]
        d: Option<u32>,
        /// Testing hook: corrupt the left side of the given identity before
        /// comparison, to exercise the failure path.
        #[arg(long, value_name = "ID")]
        perturb: Option<String>,
    },
    /// Von Staudt-Clausen integrality check for B_2k, k in [1, k-max].
    Vsc {
        #[arg(long, default_value_t = 50)]
        k_max: u32,
    },
    /// Wolstenholme congruences for all primes 5 <= p < p-max.
    Wolstenholme {
        #[arg(long, default_value_t = 200)]
        p_max: u64,
    },
    /// p-integrality of both sides of eq1 at n = p for primes 5 <= p < p-max.
    Pintegral {
        #[arg(long, default_value_t = 200)]
        p_max: u64,
    },
    /// Save or load the Bernoulli number cache file (requires --cache).
    Cache {
        #[arg(value_enum)]
        action: CacheAction,
        /// Highest index saved: the file holds B_0..B_n-max.
        #[arg(long, default_value_t = 100)]
        n_max: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CacheAction {
    Save,
    Load,
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
    configure_workers(cli.workers)?;
    let json = cli.format == Format::Json;

    let mut cache = SequenceCache::new();
    if let Some(path) = &cli.cache {
        if !matches!(cli.command, Command::Cache { .. }) {
            preload(&mut cache, path)?;
        }
    }

    match cli.command {
        Command::Bn { n } => {
            print_value("bn", n, &cache.bernoulli_number(n).to_string(), json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Bpoly { n } => {
            print_value("bpoly", n, &cache.bernoulli_poly(n).to_string(), json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Epoly { n } => {
            print_value("epoly", n, &cache.euler_poly(n).to_string(), json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Harmonic { n } => {
            print_value(
                "harmonic",
                n,
                &cache.harmonic(n, HarmonicOrder::One).to_string(),
                json,
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Harmonic2 { n } => {
            print_value(
                "harmonic2",
                n,
                &cache.harmonic(n, HarmonicOrder::Two).to_string(),
                json,
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Egf { order } => {
            let egf = series::bernoulli_egf(order as usize);
            let coefficients: Vec<String> =
                egf.coeffs().iter().map(|c| c.to_string()).collect();
            print_egf(order, &coefficients, json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            ids,
            n_max,
            d,
            perturb,
        } => {
            let ids = parse_ids(&ids)?;
            let perturb = perturb
                .map(|s| {
                    s.parse::<IdentityId>()
                        .map_err(|e| format!("--perturb: {e}"))
                })
                .transpose()?;
            let options = SuiteOptions {
                n_max,
                d_values: d.map(|d| vec![d]),
                perturb,
            };
            let report = run_suite(&mut cache, &ids, &options);
            let rows: Vec<Row> = report.reports.into_iter().map(Row::from).collect();
            print_rows(&rows, json);
            Ok(exit_for(&rows))
        }
        Command::Vsc { k_max } => {
            if k_max < 1 {
                return Err("vsc requires --k-max >= 1".into());
            }
            let rows: Vec<Row> = (1..=k_max).map(|k| vsc_row(&mut cache, k)).collect();
            print_rows(&rows, json);
            Ok(exit_for(&rows))
        }
        Command::Wolstenholme { p_max } => {
            if p_max <= 5 {
                return Err("wolstenholme requires --p-max > 5".into());
            }
            let rows: Vec<Row> = bernid::arith::primes_below(p_max)
                .into_iter()
                .filter(|&p| p >= 5)
                .map(|p| wolstenholme_row(&mut cache, p))
                .collect();
            print_rows(&rows, json);
            Ok(exit_for(&rows))
        }
        Command::Pintegral { p_max } => {
            if p_max <= 5 {
                return Err("pintegral requires --p-max > 5".into());
            }
            let p_max = u32::try_from(p_max).map_err(|_| "--p-max is too large".to_owned())?;
            let options = SuiteOptions {
                n_max: Some(p_max),
                ..Default::default()
            };
            let report = run_suite(&mut cache, &[IdentityId::PIntegralEq1], &options);
            let rows: Vec<Row> = report.reports.into_iter().map(Row::from).collect();
            print_rows(&rows, json);
            Ok(exit_for(&rows))
        }
        Command::Cache { action, n_max } => {
            let path = cli
                .cache
                .as_deref()
                .ok_or_else(|| "the cache command requires --cache PATH".to_owned())?;
            match action {
                CacheAction::Save => {
                    cache.ensure_bernoulli(n_max);
                    cache_file::save(path, cache.bernoulli_values())
                        .map_err(|e| e.to_string())?;
                    println!(
                        "saved B_0..B_{} to {}",
                        cache.bernoulli_len() - 1,
                        path.display()
                    );
                    Ok(ExitCode::SUCCESS)
                }
                CacheAction::Load => {
                    let values = cache_file::load(path).map_err(|e| e.to_string())?;
                    println!(
                        "loaded and verified {} Bernoulli numbers from {}",
                        values.len(),
                        path.display()
                    );
                    Ok(ExitCode::SUCCESS)
                }
            }
        }
    }
}

fn exit_for(rows: &[Row]) -> ExitCode {
    if rows.iter().all(|r| r.equal) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn parse_ids(ids: &[String]) -> Result<Vec<IdentityId>, String> {
    if ids.iter().any(|s| s == "all") {
        return Ok(ALL_IDENTITIES.to_vec());
    }
    ids.iter()
        .map(|s| s.parse::<IdentityId>().map_err(|e| e.to_string()))
        .collect()
}

fn preload(cache: &mut SequenceCache, path: &Path) -> Result<(), String> {
    if !path.exists() {
        eprintln!(
            "note: cache file {} not found; starting cold",
            path.display()
        );
        return Ok(());
    }
    let values = cache_file::load(path).map_err(|e| e.to_string())?;
    cache
        .preload_bernoulli(values)
        .map_err(|e| e.to_string())
}

fn vsc_row(cache: &mut SequenceCache, k: u32) -> Row {
    // Render the actual sum so the report is self-contained.
    let mut sum = cache.bernoulli_number(2 * k);
    for p in bernid::arith::primes_below(2 * k as u64 + 2) {
        if (2 * k as u64).is_multiple_of(p - 1) {
            sum += &Rat::new(1, p as i64).expect("p > 0");
        }
    }
    let equal = cache.vsc_check(k);
    Row {
        id: "vsc".into(),
        params: RowParams {
            k: Some(k),
            ..Default::default()
        },
        lhs: sum.to_string(),
        rhs: "an integer".into(),
        equal,
        witness: if equal {
            String::new()
        } else {
            format!("B_{} plus the prime reciprocals is {} (non-integer)", 2 * k, sum)
        },
    }
}

fn wolstenholme_row(cache: &mut SequenceCache, p: u64) -> Row {
    let n = (p - 1) as u32;
    let h1 = cache.harmonic(n, HarmonicOrder::One);
    let h2 = cache.harmonic(n, HarmonicOrder::Two);
    let v1 = bernid::padic_valuation(&h1, p).expect("prime");
    let v2 = bernid::padic_valuation(&h2, p).expect("prime");
    let equal = cache.wolstenholme_check(p).expect("prime >= 5");
    Row {
        id: "wolstenholme".into(),
        params: RowParams {
            p: Some(p),
            ..Default::default()
        },
        lhs: format!("v_{p}(H_{n}) = {v1}; v_{p}(H^(2)_{n}) = {v2}"),
        rhs: format!("v_{p}(H_{n}) >= 2; v_{p}(H^(2)_{n}) >= 1"),
        equal,
        witness: if equal {
            String::new()
        } else {
            format!("valuations ({v1}, {v2}) fall short of (2, 1)")
        },
    }
}

#[cfg(feature = "parallel")]
fn configure_workers(workers: Option<usize>) -> Result<(), String> {
    if let Some(workers) = workers {
        if workers == 0 {
            return Err("--workers must be at least 1".into());
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    Ok(())
}

#[cfg(not(feature = "parallel"))]
fn configure_workers(workers: Option<usize>) -> Result<(), String> {
    match workers {
        Some(0) => Err("--workers must be at least 1".into()),
        Some(w) if w > 1 => {
            eprintln!("note: built without the parallel feature; running sequentially");
            Ok(())
        }
        _ => Ok(()),
    }
}
