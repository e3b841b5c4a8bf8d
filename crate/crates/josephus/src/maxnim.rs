//! The fast survivor algorithm and its iteration-count bounds.
//!
//! For `k >= 2` the survivor of an `(n, k)` instance is `n*k - x` where `x`
//! is the first value of the sequence
//!
//! ```text
//! x0 = k - 1,    x_{i+1} = x_i + floor(x_i / (k - 1)) + 1
//! ```
//!
//! that reaches `n*(k-1)`. The iteration count `p` is bracketed by two
//! closed-form real quantities `w` and `v` ([`iteration_bounds`]), and is at
//! most `k*ln(n) + 1`. The plain solver keeps O(1) working state; only the
//! traced variant stores the iterate sequence.

use crate::instance::{Algorithm, Error, JosephusInstance, SurvivorReport};

/// One application of the skip step: `x + floor(x / (k - 1)) + 1`.
///
/// Requires `k >= 2`; fails with a capacity error if the result does not fit
/// in 64 bits.
pub fn h_step(x: u64, k: u64) -> Result<u64, Error> {
    if k < 2 {
        return Err(Error::KBelowTwo { k });
    }
    x.checked_add(x / (k - 1))
        .and_then(|y| y.checked_add(1))
        .ok_or(Error::StepOverflow { x, k })
}

/// Computes the survivor with a constant number of integer variables and no
/// recursion.
///
/// `k = 1` removes labels 1, 2, ..., n-1 in order, so the survivor is `n`;
/// that case is handled before the loop. For `n = 1` the starting value
/// already meets the threshold and the loop body never runs.
pub fn survivor_maxnim(instance: &JosephusInstance) -> SurvivorReport {
    let (n, k) = (instance.n(), instance.k());
    if k == 1 {
        return SurvivorReport::from_one_indexed(n, Algorithm::MaxNim);
    }
    let threshold = n * (k - 1);
    let mut x = k - 1;
    while x < threshold {
        // x < n*(k-1) here, so the new value is at most n*k, which the
        // instance guarantees to be representable.
        x += x / (k - 1) + 1;
    }
    survivor_from_final(n, k, x)
}

fn survivor_from_final(n: u64, k: u64, x: u64) -> SurvivorReport {
    let m = n * k - x;
    debug_assert!(m >= 1 && m <= n, "final iterate out of range: x={x}");
    SurvivorReport::from_one_indexed(m, Algorithm::MaxNim)
}

/// The iterate sequence produced by [`survivor_maxnim_traced`]: `xs[0]` is
/// the starting value `k - 1` and `xs[p]` is the first iterate at or above
/// `n*(k-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterationTrace {
    xs: Vec<u64>,
    p: u64,
}

impl IterationTrace {
    fn new(xs: Vec<u64>) -> Self {
        debug_assert!(!xs.is_empty());
        let p = (xs.len() - 1) as u64;
        IterationTrace { xs, p }
    }

    /// All iterates, starting value included.
    pub fn xs(&self) -> &[u64] {
        &self.xs
    }

    /// Number of steps applied: `xs().len() - 1`.
    pub fn p(&self) -> u64 {
        self.p
    }

    /// The stopping iterate `xs[p]`.
    pub fn final_x(&self) -> u64 {
        *self.xs.last().expect("trace is never empty")
    }
}

/// Same answer as [`survivor_maxnim`], but records every iterate.
///
/// This is the only solver allowed to allocate proportionally to the
/// iteration count; it backs verification and the CLI `trace` command.
/// Only defined for `k >= 2`.
pub fn survivor_maxnim_traced(
    instance: &JosephusInstance,
) -> Result<(SurvivorReport, IterationTrace), Error> {
    let (n, k) = (instance.n(), instance.k());
    if k < 2 {
        return Err(Error::KBelowTwo { k });
    }
    let threshold = n * (k - 1);
    let mut x = k - 1;
    let mut xs = vec![x];
    while x < threshold {
        x += x / (k - 1) + 1;
        xs.push(x);
    }
    Ok((survivor_from_final(n, k, x), IterationTrace::new(xs)))
}

/// Closed-form bracket on the iteration count.
///
/// `floor_w <= p <= ceil_v` holds for every instance with `k >= 2`; the
/// solver loop never consults these values, they are diagnostics only.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundsEstimate {
    /// `ln(n) / ln(k / (k-1))` — `p` never exceeds its ceiling.
    pub v: f64,
    /// `ln((n+1) / 2) / ln(k / (k-1))` — `p` never drops below its floor.
    pub w: f64,
    pub ceil_v: u64,
    pub floor_w: u64,
}

/// Evaluates the bracket for an instance with `k >= 2`.
///
/// The shared denominator `ln(k) - ln(k-1)` is computed as `ln_1p(1/(k-1))`;
/// direct subtraction of the two logarithms loses precision once `k` is
/// large.
pub fn iteration_bounds(instance: &JosephusInstance) -> Result<BoundsEstimate, Error> {
    let (n, k) = (instance.n(), instance.k());
    if k < 2 {
        return Err(Error::KBelowTwo { k });
    }
    let denom = (1.0 / (k - 1) as f64).ln_1p();
    let v = (n as f64).ln() / denom;
    let w = (((n + 1) as f64).ln() - core::f64::consts::LN_2) / denom;
    debug_assert!(v.is_finite() && v >= 0.0 && w.is_finite() && w >= 0.0);
    Ok(BoundsEstimate {
        v,
        w,
        ceil_v: v.ceil() as u64,
        floor_w: w.floor() as u64,
    })
}
