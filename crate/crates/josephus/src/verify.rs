//! Batch cross-validation of the solvers.
//!
//! [`verify_exhaustive`] runs every algorithm including the oracle over a
//! full (n, k) grid; [`verify_random_large`] cross-checks the two fast
//! solvers on seeded random instances far beyond oracle scale. Both also
//! check the iteration-count bracket and the `k*ln(n) + 1` cap. Any
//! counterexample is data in the report, never a panic.

use std::io::{self, Write};

use crate::bench::escape_json;
use crate::instance::{Algorithm, Error, JosephusInstance};
use crate::maxnim::{iteration_bounds, survivor_maxnim, survivor_maxnim_traced};
use crate::reference::{oracle_simulate, survivor_block, survivor_linear};

/// One instance on which the algorithms disagreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement {
    pub n: u64,
    pub k: u64,
    /// Survivor of the reference algorithm for the run (oracle on grids,
    /// block on random samples), 1-indexed.
    pub expected: u64,
    /// Every algorithm's answer, 1-indexed.
    pub survivors: Vec<(Algorithm, u64)>,
}

/// Which iteration-count property an instance violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// `floor_w <= p <= ceil_v` failed.
    Bracket,
    /// `p <= k*ln(n) + 1` failed.
    IterationCap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundViolation {
    pub kind: BoundKind,
    pub n: u64,
    pub k: u64,
    pub p: u64,
    pub floor_w: u64,
    pub ceil_v: u64,
}

/// Outcome of a verification run. Passing means both lists are empty.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    /// Human-readable description of the grid or sample spec.
    pub scope: String,
    pub checks_run: u64,
    pub failures: Vec<Disagreement>,
    pub bound_violations: Vec<BoundViolation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.bound_violations.is_empty()
    }

    /// One structured record per failure and violation, then a summary line;
    /// same line-delimited format as the benchmark output.
    pub fn write_ndjson(&self, w: &mut impl Write) -> io::Result<()> {
        for f in &self.failures {
            let got: Vec<String> = f
                .survivors
                .iter()
                .map(|(alg, s)| format!("\"{}\":{}", alg.id(), s))
                .collect();
            writeln!(
                w,
                "{{\"record\":\"disagreement\",\"n\":{},\"k\":{},\"expected\":{},\"got\":{{{}}}}}",
                f.n,
                f.k,
                f.expected,
                got.join(",")
            )?;
        }
        for v in &self.bound_violations {
            let kind = match v.kind {
                BoundKind::Bracket => "bracket",
                BoundKind::IterationCap => "iteration_cap",
            };
            writeln!(
                w,
                "{{\"record\":\"bound_violation\",\"kind\":\"{}\",\"n\":{},\"k\":{},\"p\":{},\"floor_w\":{},\"ceil_v\":{}}}",
                kind, v.n, v.k, v.p, v.floor_w, v.ceil_v
            )?;
        }
        writeln!(
            w,
            "{{\"record\":\"summary\",\"scope\":\"{}\",\"checks\":{},\"failures\":{},\"bound_violations\":{},\"pass\":{}}}",
            escape_json(&self.scope),
            self.checks_run,
            self.failures.len(),
            self.bound_violations.len(),
            self.passed()
        )
    }
}

/// Checks the bracket and the iteration cap for one instance with `k >= 2`.
fn check_bounds(n: u64, k: u64, violations: &mut Vec<BoundViolation>) {
    let instance = JosephusInstance::new(n, k).expect("caller validated the instance");
    let (_, trace) = survivor_maxnim_traced(&instance).expect("k >= 2");
    let bounds = iteration_bounds(&instance).expect("k >= 2");
    let p = trace.p();
    if !(bounds.floor_w <= p && p <= bounds.ceil_v) {
        violations.push(BoundViolation {
            kind: BoundKind::Bracket,
            n,
            k,
            p,
            floor_w: bounds.floor_w,
            ceil_v: bounds.ceil_v,
        });
    }
    if n >= 2 && p as f64 > k as f64 * (n as f64).ln() + 1.0 {
        violations.push(BoundViolation {
            kind: BoundKind::IterationCap,
            n,
            k,
            p,
            floor_w: bounds.floor_w,
            ceil_v: bounds.ceil_v,
        });
    }
}

/// The grid runner, parameterized over a survivor tamper hook so the
/// verifier itself can be tested: the hook sees (algorithm, n, k, survivor)
/// and returns the survivor to report. The public entry point passes
/// identity.
fn exhaustive_with<F>(n_max: u64, k_max: u64, tamper: F) -> VerificationReport
where
    F: Fn(Algorithm, u64, u64, u64) -> u64,
{
    let mut failures = Vec::new();
    let mut bound_violations = Vec::new();
    let mut checks_run = 0u64;
    for n in 1..=n_max {
        for k in 1..=k_max {
            checks_run += 1;
            let instance = JosephusInstance::new(n, k).expect("grid within capacity");
            let oracle = tamper(Algorithm::Oracle, n, k, oracle_simulate(&instance).survivor);
            let maxnim = tamper(Algorithm::MaxNim, n, k, survivor_maxnim(&instance).one_indexed());
            let linear = tamper(Algorithm::Linear, n, k, survivor_linear(&instance).one_indexed());
            let block = tamper(Algorithm::Block, n, k, survivor_block(&instance).one_indexed());
            if maxnim != oracle || linear != oracle || block != oracle {
                failures.push(Disagreement {
                    n,
                    k,
                    expected: oracle,
                    survivors: vec![
                        (Algorithm::MaxNim, maxnim),
                        (Algorithm::Linear, linear),
                        (Algorithm::Block, block),
                        (Algorithm::Oracle, oracle),
                    ],
                });
            }
            if k >= 2 {
                check_bounds(n, k, &mut bound_violations);
            }
        }
    }
    VerificationReport {
        scope: format!("exhaustive grid n=1..={n_max} k=1..={k_max}"),
        checks_run,
        failures,
        bound_violations,
    }
}

/// Runs every algorithm over the full grid `1 <= n <= n_max`,
/// `1 <= k <= k_max` and records every disagreement with the oracle plus
/// every bound violation. Intended for oracle-friendly sizes
/// (n_max around a few hundred).
pub fn verify_exhaustive(n_max: u64, k_max: u64) -> Result<VerificationReport, Error> {
    // Validates the ranges and that the largest grid point fits.
    JosephusInstance::new(n_max, k_max)?;
    Ok(exhaustive_with(n_max, k_max, |_, _, _, survivor| survivor))
}

/// Splitmix64: a small deterministic generator, stable across platforms and
/// releases, so seeded verification runs are reproducible.
struct SplitMix64(u64);

impl SplitMix64 {
    fn new(seed: u64) -> Self {
        SplitMix64(seed)
    }

    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[lo, hi]`; requires the span to be below u64::MAX.
    fn uniform(&mut self, lo: u64, hi: u64) -> u64 {
        lo + self.next_u64() % (hi - lo + 1)
    }

    fn unit_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Log-uniform in `[lo, hi]`, so large magnitudes are exercised as often
    /// as small ones.
    fn log_uniform(&mut self, lo: u64, hi: u64) -> u64 {
        if lo >= hi {
            return lo;
        }
        let (a, b) = ((lo as f64).ln(), (hi as f64).ln());
        let x = (a + self.unit_f64() * (b - a)).exp();
        (x as u64).clamp(lo, hi)
    }
}

/// Draws `samples` random instances with `2 <= k <= k_limit` and
/// `k <= n <= n_limit` (log-uniform in n, uniform in k) from a deterministic
/// seeded generator, and cross-checks the two fast solvers against each
/// other plus the bound properties. The oracle is excluded; these instances
/// are far beyond its scale.
pub fn verify_random_large(
    samples: u64,
    n_limit: u64,
    k_limit: u64,
    seed: u64,
) -> Result<VerificationReport, Error> {
    if k_limit < 2 {
        return Err(Error::KBelowTwo { k: k_limit });
    }
    if n_limit < k_limit {
        return Err(Error::InvalidConfig("n_limit must be at least k_limit"));
    }
    // Worst-case sampled product; also validates the limits themselves.
    JosephusInstance::new(n_limit, k_limit)?;

    let mut rng = SplitMix64::new(seed);
    let mut failures = Vec::new();
    let mut bound_violations = Vec::new();
    for _ in 0..samples {
        let k = rng.uniform(2, k_limit);
        let n = rng.log_uniform(k, n_limit);
        let instance = JosephusInstance::new(n, k).expect("within validated limits");
        let maxnim = survivor_maxnim(&instance).one_indexed();
        let block = survivor_block(&instance).one_indexed();
        if maxnim != block {
            failures.push(Disagreement {
                n,
                k,
                expected: block,
                survivors: vec![(Algorithm::MaxNim, maxnim), (Algorithm::Block, block)],
            });
        }
        check_bounds(n, k, &mut bound_violations);
    }
    Ok(VerificationReport {
        scope: format!(
            "random samples={samples} n_limit={n_limit} k_limit={k_limit} seed={seed}"
        ),
        checks_run: samples,
        failures,
        bound_violations,
    })
}
