//! Survivor computation for the Josephus problem: labels `1..=n` stand in a
//! circle and every `k`-th live label is removed until one remains.
//!
//! The centerpiece is [`survivor_maxnim`], a non-recursive O(k log n)-time,
//! O(1)-space solver built on a single skip-step iteration: start at
//! `x = k - 1`, replace `x` with `x + floor(x / (k-1)) + 1` until
//! `x >= n*(k-1)`, and read the survivor off as `n*k - x`. Alongside it:
//!
//! * [`survivor_linear`] — the textbook O(n) recurrence,
//! * [`survivor_block`] — the O(k log n) block-removal recurrence,
//! * [`oracle_simulate`] — literal circle simulation, the ground truth,
//! * [`verify_exhaustive`] / [`verify_random_large`] — cross-validation,
//! * [`run_bench`] / [`emit_csv`] — a timing harness with CSV output.
//!
//! All operations are pure functions of their inputs; values are plain data
//! and freely usable across threads.

mod bench;
mod instance;
mod maxnim;
mod reference;
mod verify;

pub use bench::{emit_csv, emit_ndjson, parse_csv, run_bench, BenchConfig, BenchRecord, CSV_HEADER};
pub use instance::{Algorithm, Error, JosephusInstance, SurvivorReport};
pub use maxnim::{
    h_step, iteration_bounds, survivor_maxnim, survivor_maxnim_traced, BoundsEstimate,
    IterationTrace,
};
pub use reference::{
    oracle_simulate, survivor_block, survivor_block_with_steps, survivor_k2_closed_form,
    survivor_linear, EliminationOrder,
};
pub use verify::{
    verify_exhaustive, verify_random_large, BoundKind, BoundViolation, Disagreement,
    VerificationReport,
};
