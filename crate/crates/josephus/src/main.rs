//! Command-line front end: solve, trace, bounds, order, verify and bench.
//!
//! Exit codes: 0 success, 1 verification or bracket failure, 2 usage or
//! validation error. Machine-readable data goes to stdout, diagnostics to
//! stderr.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};

use josephus::{
    emit_csv, emit_ndjson, iteration_bounds, oracle_simulate, run_bench, survivor_block,
    survivor_linear, survivor_maxnim, survivor_maxnim_traced, verify_exhaustive,
    verify_random_large, Algorithm, BenchConfig, Error, JosephusInstance, VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "josephus",
    version,
    about = "Josephus problem toolkit: fast survivor solver, reference algorithms, cross-validation and benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum IndexConvention {
    One,
    Zero,
}

fn parse_index(s: &str) -> Result<IndexConvention, String> {
    match s {
        "one" => Ok(IndexConvention::One),
        "zero" => Ok(IndexConvention::Zero),
        other => Err(format!("unknown convention `{other}` (expected one or zero)")),
    }
}

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse()
}

fn parse_bench_algorithm(s: &str) -> Result<Algorithm, String> {
    match s.parse()? {
        Algorithm::Oracle => Err("the oracle cannot be benchmarked (use solve --alg oracle)".into()),
        alg => Ok(alg),
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute the survivor of an (n, k) instance
    Solve {
        /// Number of labels in the circle
        #[arg(long)]
        n: u64,
        /// Removal step: every k-th live label is removed
        #[arg(long)]
        k: u64,
        /// Algorithm: maxnim, linear, block or oracle
        #[arg(long, default_value = "maxnim", value_parser = parse_algorithm)]
        alg: Algorithm,
        /// Label convention for the printed survivor: one or zero
        #[arg(long, default_value = "one", value_parser = parse_index)]
        index: IndexConvention,
    },
    /// Print the skip-step iterates for (n, k); requires k >= 2
    Trace {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Print the iteration-count bounds and the observed count; requires k >= 2
    Bounds {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Print the full elimination order (naive simulation, O(n) memory)
    Order {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Cross-validate all algorithms on an exhaustive grid, optionally plus
    /// random large instances
    Verify {
        /// Largest n of the exhaustive grid
        #[arg(long, default_value_t = 200)]
        n_max: u64,
        /// Largest k of the exhaustive grid
        #[arg(long, default_value_t = 64)]
        k_max: u64,
        /// Additionally check this many seeded random large instances
        #[arg(long, default_value_t = 0)]
        samples: u64,
        /// Largest n for random instances
        #[arg(long, default_value_t = 1_000_000_000)]
        n_limit: u64,
        /// Largest k for random instances
        #[arg(long, default_value_t = 10_000)]
        k_limit: u64,
        /// Seed for the random instance generator
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Emit line-delimited structured records instead of summary lines
        #[arg(long)]
        structured: bool,
    },
    /// Time the algorithms over an (n, k) grid and emit CSV
    Bench {
        /// Comma-separated n values
        #[arg(long, value_delimiter = ',', required = true)]
        n_list: Vec<u64>,
        /// Comma-separated k values
        #[arg(long, value_delimiter = ',', required = true)]
        k_list: Vec<u64>,
        /// Timed repetitions per cell
        #[arg(long, default_value_t = 3000)]
        reps: u64,
        /// Untimed warmup calls per cell
        #[arg(long, default_value_t = 100)]
        warmup: u64,
        /// Comma-separated subset of maxnim,linear,block (default all three)
        #[arg(long, value_delimiter = ',', value_parser = parse_bench_algorithm)]
        algs: Option<Vec<Algorithm>>,
        /// Write the CSV to this path instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Emit line-delimited structured records instead of CSV
        #[arg(long)]
        structured: bool,
        /// Per-cell wall-clock cap in seconds; 0 disables the cap
        #[arg(long, default_value_t = 10)]
        budget_secs: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Solve { n, k, alg, index } => {
            let instance = JosephusInstance::new(n, k)?;
            let report = match alg {
                Algorithm::MaxNim => survivor_maxnim(&instance),
                Algorithm::Linear => survivor_linear(&instance),
                Algorithm::Block => survivor_block(&instance),
                Algorithm::Oracle => oracle_simulate(&instance).report(),
            };
            let survivor = match index {
                IndexConvention::One => report.one_indexed(),
                IndexConvention::Zero => report.zero_indexed(),
            };
            println!("{survivor}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Trace { n, k } => {
            let instance = JosephusInstance::new(n, k)?;
            let (report, trace) = survivor_maxnim_traced(&instance)?;
            let stdout = io::stdout().lock();
            let mut out = BufWriter::new(stdout);
            for x in trace.xs() {
                writeln!(out, "{x}").map_err(write_error)?;
            }
            writeln!(out, "p={}", trace.p()).map_err(write_error)?;
            writeln!(out, "survivor={}", report.one_indexed()).map_err(write_error)?;
            out.flush().map_err(write_error)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds { n, k } => {
            let instance = JosephusInstance::new(n, k)?;
            let bounds = iteration_bounds(&instance)?;
            let (_, trace) = survivor_maxnim_traced(&instance)?;
            let p = trace.p();
            println!(
                "v={:.6} ceil_v={} w={:.6} floor_w={} p={}",
                bounds.v, bounds.ceil_v, bounds.w, bounds.floor_w, p
            );
            if bounds.floor_w <= p && p <= bounds.ceil_v {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!(
                    "bracket violated for (n={n}, k={k}): expected {} <= p <= {}, observed p={p}",
                    bounds.floor_w, bounds.ceil_v
                );
                Ok(ExitCode::from(1))
            }
        }
        Command::Order { n, k } => {
            let instance = JosephusInstance::new(n, k)?;
            let order = oracle_simulate(&instance);
            let removed: Vec<String> = order.removed.iter().map(u64::to_string).collect();
            if removed.is_empty() {
                println!("survivor={}", order.survivor);
            } else {
                println!("{} survivor={}", removed.join(","), order.survivor);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            n_max,
            k_max,
            samples,
            n_limit,
            k_limit,
            seed,
            structured,
        } => {
            let mut reports = vec![verify_exhaustive(n_max, k_max)?];
            if samples > 0 {
                reports.push(verify_random_large(samples, n_limit, k_limit, seed)?);
            }
            let mut all_passed = true;
            for report in &reports {
                all_passed &= report.passed();
                present_verification(report, structured)?;
            }
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Bench {
            n_list,
            k_list,
            reps,
            warmup,
            algs,
            out,
            structured,
            budget_secs,
        } => {
            let config = BenchConfig {
                n_values: n_list,
                k_values: k_list,
                algorithms: algs.unwrap_or_else(|| Algorithm::BENCHABLE.to_vec()),
                repetitions: reps,
                warmup,
                time_budget: (budget_secs > 0).then(|| Duration::from_secs(budget_secs)),
            };
            let records = run_bench(&config)?;
            let emit = |w: &mut dyn Write| {
                if structured {
                    emit_ndjson(&records, w)
                } else {
                    emit_csv(&records, w)
                }
            };
            match out {
                Some(path) => {
                    let file = File::create(&path).map_err(write_error)?;
                    let mut w = BufWriter::new(file);
                    emit(&mut w).map_err(write_error)?;
                    w.flush().map_err(write_error)?;
                }
                None => {
                    let stdout = io::stdout().lock();
                    let mut w = BufWriter::new(stdout);
                    emit(&mut w).map_err(write_error)?;
                    w.flush().map_err(write_error)?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn present_verification(report: &VerificationReport, structured: bool) -> Result<(), Error> {
    if structured {
        let stdout = io::stdout().lock();
        let mut out = BufWriter::new(stdout);
        report.write_ndjson(&mut out).map_err(write_error)?;
        out.flush().map_err(write_error)?;
    } else {
        let verdict = if report.passed() { "PASS" } else { "FAIL" };
        println!("{verdict} {} checks", report.checks_run);
    }
    for failure in &report.failures {
        let survivors: Vec<String> = failure
            .survivors
            .iter()
            .map(|(alg, s)| format!("{}={s}", alg.id()))
            .collect();
        eprintln!(
            "disagreement at (n={}, k={}): expected {}, got {}",
            failure.n,
            failure.k,
            failure.expected,
            survivors.join(" ")
        );
    }
    for violation in &report.bound_violations {
        eprintln!(
            "bound violation at (n={}, k={}): p={} floor_w={} ceil_v={}",
            violation.n, violation.k, violation.p, violation.floor_w, violation.ceil_v
        );
    }
    Ok(())
}

/// Stream failures (e.g. a closed pipe) are not usage errors, but there is
/// nothing better to report than the diagnostic and a nonzero exit.
fn write_error(error: io::Error) -> Error {
    Error::InvalidConfig(match error.kind() {
        io::ErrorKind::BrokenPipe => "output stream closed",
        _ => "failed to write output",
    })
}
