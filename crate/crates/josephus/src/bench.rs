//! Timing harness: repeated runs per algorithm per (n, k) cell, summary
//! statistics and CSV/structured emission.
//!
//! Per-call costs range from tens of nanoseconds (the fast solver at small
//! n) to seconds (the linear solver at large n), well below and above the
//! useful resolution of one clock read per call. Each cell is therefore
//! timed as one batch for the total, while per-call estimates for the
//! median come from sub-batches: up to 100 calls per clock pair for cheap
//! calls, a single call per pair once a call costs more than 100 us. Cells
//! run strictly one at a time on one thread.

use std::hint::black_box;
use std::io::{self, Write};
use std::time::{Duration, Instant};

use crate::instance::{Algorithm, Error, JosephusInstance};
use crate::maxnim::survivor_maxnim;
use crate::reference::{survivor_block, survivor_linear};

/// Exact header of the benchmark CSV schema.
pub const CSV_HEADER: &str =
    "algorithm,n,k,reps,total_ns,mean_ns,median_ns,min_ns,survivor,truncated";

/// Calls costing more than this many nanoseconds are timed one by one so
/// the time budget can truncate promptly.
const SLOW_CALL_NS: f64 = 100_000.0;
const CHUNK: u64 = 100;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub n_values: Vec<u64>,
    pub k_values: Vec<u64>,
    /// Subset of [`Algorithm::BENCHABLE`]; the oracle is rejected.
    pub algorithms: Vec<Algorithm>,
    pub repetitions: u64,
    /// Untimed calls before measurement; they may use at most half of the
    /// cell's time budget.
    pub warmup: u64,
    /// Per-cell wall-clock cap. Truncation happens between calls; a single
    /// in-flight call is never aborted.
    pub time_budget: Option<Duration>,
}

impl Default for BenchConfig {
    /// The default comparison sweep: n over decade steps, k from 2 to 1000,
    /// 3000 repetitions per cell.
    fn default() -> Self {
        BenchConfig {
            n_values: vec![1_000, 10_000, 100_000, 1_000_000, 10_000_000],
            k_values: vec![2, 3, 10, 100, 1000],
            algorithms: Algorithm::BENCHABLE.to_vec(),
            repetitions: 3000,
            warmup: 100,
            time_budget: Some(Duration::from_secs(10)),
        }
    }
}

/// One timed cell. All durations are nanoseconds; `survivor` is 1-indexed
/// and comes from the final timed call. A cell whose instance failed
/// validation carries the error and zeroed statistics (`reps == 0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRecord {
    pub algorithm: Algorithm,
    pub n: u64,
    pub k: u64,
    /// Repetitions actually executed; equals the configured count unless
    /// the cell was truncated by the time budget.
    pub reps: u64,
    pub total_ns: u64,
    pub mean_ns: u64,
    pub median_ns: u64,
    pub min_ns: u64,
    pub survivor: u64,
    pub truncated: bool,
    pub error: Option<Error>,
}

fn run_survivor(algorithm: Algorithm, instance: &JosephusInstance) -> u64 {
    match algorithm {
        Algorithm::MaxNim => survivor_maxnim(instance).one_indexed(),
        Algorithm::Linear => survivor_linear(instance).one_indexed(),
        Algorithm::Block => survivor_block(instance).one_indexed(),
        Algorithm::Oracle => unreachable!("oracle cells are rejected by run_bench"),
    }
}

fn failed_cell(algorithm: Algorithm, n: u64, k: u64, error: Error) -> BenchRecord {
    BenchRecord {
        algorithm,
        n,
        k,
        reps: 0,
        total_ns: 0,
        mean_ns: 0,
        median_ns: 0,
        min_ns: 0,
        survivor: 0,
        truncated: false,
        error: Some(error),
    }
}

fn measure_cell(algorithm: Algorithm, n: u64, k: u64, config: &BenchConfig) -> BenchRecord {
    let instance = match JosephusInstance::new(n, k) {
        Ok(instance) => instance,
        Err(error) => return failed_cell(algorithm, n, k, error),
    };

    let cell_start = Instant::now();
    let over_budget = |fraction: f64| match config.time_budget {
        Some(budget) => cell_start.elapsed() > budget.mul_f64(fraction),
        None => false,
    };

    let mut truncated = false;
    for _ in 0..config.warmup {
        if over_budget(0.5) {
            truncated = true;
            break;
        }
        black_box(run_survivor(algorithm, black_box(&instance)));
    }

    // Per-call estimates, one per sub-batch. The first sub-batch is a single
    // call that doubles as the cost probe for the chunk-size choice.
    let mut samples: Vec<f64> = Vec::new();
    let mut executed = 0u64;
    let mut chunk_len = 1u64;
    let mut survivor = 0u64;
    let batch_start = Instant::now();
    while executed < config.repetitions {
        if executed > 0 && over_budget(1.0) {
            truncated = true;
            break;
        }
        let len = chunk_len.min(config.repetitions - executed);
        let chunk_start = Instant::now();
        for _ in 0..len {
            survivor = black_box(run_survivor(algorithm, black_box(&instance)));
        }
        let chunk_ns = chunk_start.elapsed().as_nanos() as f64;
        executed += len;
        let per_call = chunk_ns / len as f64;
        samples.push(per_call);
        chunk_len = if per_call > SLOW_CALL_NS { 1 } else { CHUNK };
    }
    let total_ns = batch_start.elapsed().as_nanos() as u64;

    samples.sort_by(|a, b| a.partial_cmp(b).expect("durations are never NaN"));
    let min_ns = samples[0] as u64;
    let median_ns = median(&samples) as u64;
    let mean_ns = total_ns / executed;
    debug_assert!(min_ns <= median_ns);

    BenchRecord {
        algorithm,
        n,
        k,
        reps: executed,
        total_ns,
        mean_ns,
        median_ns,
        min_ns,
        survivor,
        truncated,
        error: None,
    }
}

/// Median of a sorted sample set; even counts average the two middles.
fn median(sorted: &[f64]) -> f64 {
    let mid = sorted.len() / 2;
    if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        (sorted[mid - 1] + sorted[mid]) / 2.0
    }
}

/// Runs one timed cell per (algorithm, n, k) combination, strictly one at a
/// time. Value lists are deduplicated; cells whose instance fails validation
/// are recorded with their error rather than failing the run.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRecord>, Error> {
    if config.repetitions == 0 {
        return Err(Error::InvalidConfig("repetitions must be at least 1"));
    }
    if config.algorithms.contains(&Algorithm::Oracle) {
        return Err(Error::InvalidConfig(
            "the oracle is a correctness reference, not a benchmark algorithm",
        ));
    }

    let mut algorithms = config.algorithms.clone();
    algorithms.sort_by_key(|a| a.id());
    algorithms.dedup();
    let mut n_values = config.n_values.clone();
    n_values.sort_unstable();
    n_values.dedup();
    let mut k_values = config.k_values.clone();
    k_values.sort_unstable();
    k_values.dedup();

    let mut records = Vec::with_capacity(algorithms.len() * n_values.len() * k_values.len());
    for &algorithm in &algorithms {
        for &n in &n_values {
            for &k in &k_values {
                records.push(measure_cell(algorithm, n, k, config));
            }
        }
    }

    // Survivor integrity: algorithms measured on the same instance must
    // have produced the same label.
    debug_assert!(records.iter().filter(|r| r.error.is_none()).all(|r| {
        records
            .iter()
            .filter(|o| o.error.is_none() && (o.n, o.k) == (r.n, r.k))
            .all(|o| o.survivor == r.survivor)
    }));

    Ok(records)
}

fn sorted_rows(records: &[BenchRecord]) -> Vec<&BenchRecord> {
    let mut rows: Vec<&BenchRecord> = records.iter().collect();
    rows.sort_by_key(|r| (r.algorithm.id(), r.n, r.k));
    rows
}

/// Writes the fixed-schema CSV: the exact [`CSV_HEADER`], then one row per
/// record ordered by algorithm, n, k ascending. `truncated` is emitted as
/// 0 or 1 so every numeric field is a decimal integer.
pub fn emit_csv<W: Write + ?Sized>(records: &[BenchRecord], writer: &mut W) -> io::Result<()> {
    writeln!(writer, "{CSV_HEADER}")?;
    for r in sorted_rows(records) {
        writeln!(
            writer,
            "{},{},{},{},{},{},{},{},{},{}",
            r.algorithm.id(),
            r.n,
            r.k,
            r.reps,
            r.total_ns,
            r.mean_ns,
            r.median_ns,
            r.min_ns,
            r.survivor,
            u8::from(r.truncated)
        )?;
    }
    Ok(())
}

/// Parses a document produced by [`emit_csv`]. Cell errors are not part of
/// the schema, so parsed records carry `error: None`.
pub fn parse_csv(input: &str) -> Result<Vec<BenchRecord>, Error> {
    let mut lines = input.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header == CSV_HEADER => {}
        Some((_, header)) => {
            return Err(Error::CsvParse {
                line: 1,
                reason: format!("unexpected header `{header}`"),
            })
        }
        None => {
            return Err(Error::CsvParse {
                line: 1,
                reason: "empty document".into(),
            })
        }
    }

    let mut records = Vec::new();
    for (index, row) in lines {
        let line = index + 1;
        let fields: Vec<&str> = row.split(',').collect();
        if fields.len() != 10 {
            return Err(Error::CsvParse {
                line,
                reason: format!("expected 10 fields, found {}", fields.len()),
            });
        }
        let algorithm: Algorithm = fields[0].parse().map_err(|reason| Error::CsvParse {
            line,
            reason,
        })?;
        let int = |field: &str| -> Result<u64, Error> {
            field.parse().map_err(|_| Error::CsvParse {
                line,
                reason: format!("`{field}` is not a decimal integer"),
            })
        };
        let truncated = match fields[9] {
            "0" => false,
            "1" => true,
            other => {
                return Err(Error::CsvParse {
                    line,
                    reason: format!("`{other}` is not a 0/1 flag"),
                })
            }
        };
        records.push(BenchRecord {
            algorithm,
            n: int(fields[1])?,
            k: int(fields[2])?,
            reps: int(fields[3])?,
            total_ns: int(fields[4])?,
            mean_ns: int(fields[5])?,
            median_ns: int(fields[6])?,
            min_ns: int(fields[7])?,
            survivor: int(fields[8])?,
            truncated,
            error: None,
        });
    }
    Ok(records)
}

/// Line-delimited structured output: one JSON object per record, same field
/// names and row order as the CSV, plus the cell error (or null).
pub fn emit_ndjson<W: Write + ?Sized>(records: &[BenchRecord], writer: &mut W) -> io::Result<()> {
    for r in sorted_rows(records) {
        let error = match &r.error {
            Some(e) => format!("\"{}\"", escape_json(&e.to_string())),
            None => "null".to_string(),
        };
        writeln!(
            writer,
            "{{\"algorithm\":\"{}\",\"n\":{},\"k\":{},\"reps\":{},\"total_ns\":{},\"mean_ns\":{},\"median_ns\":{},\"min_ns\":{},\"survivor\":{},\"truncated\":{},\"error\":{}}}",
            r.algorithm.id(),
            r.n,
            r.k,
            r.reps,
            r.total_ns,
            r.mean_ns,
            r.median_ns,
            r.min_ns,
            r.survivor,
            r.truncated,
            error
        )?;
    }
    Ok(())
}

pub(crate) fn escape_json(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
