//! Comparison algorithms and the brute-force oracle.
//!
//! [`survivor_linear`] is the textbook O(n) recurrence, [`survivor_block`]
//! the O(k log n) block-removal recurrence with its single self-call chain
//! unrolled into a descend/ascend loop, and [`oracle_simulate`] the literal
//! circle simulation used as ground truth on small instances.

use crate::instance::{Algorithm, JosephusInstance, SurvivorReport};

/// Standard recurrence `J(1) = 0; J(i) = (J(i-1) + k) mod i`, run as a plain
/// loop. O(n) time, O(1) space.
pub fn survivor_linear(instance: &JosephusInstance) -> SurvivorReport {
    let (n, k) = (instance.n(), instance.k());
    let mut pos = 0u64;
    for i in 2..=n {
        // pos < i <= n and k <= u64::MAX / n, so pos + k cannot overflow.
        pos = (pos + k) % i;
    }
    SurvivorReport::from_zero_indexed(pos, Algorithm::Linear)
}

/// Block-removal recurrence: treats the removal of the k-th, 2k-th, ...,
/// `floor(n/k)*k`-th labels as one step.
///
/// See [`survivor_block_with_steps`] for the step-counting variant.
pub fn survivor_block(instance: &JosephusInstance) -> SurvivorReport {
    survivor_block_with_steps(instance).0
}

/// [`survivor_block`] plus the number of recurrence steps it applied.
///
/// The recurrence is linear (one self-call), so instead of recursing we
/// descend recording the shrinking n-chain, then ascend applying the
/// transform. The chain keeps this solver away from call-stack limits but
/// still costs memory proportional to the step count.
pub fn survivor_block_with_steps(instance: &JosephusInstance) -> (SurvivorReport, u64) {
    let (n, k) = (instance.n(), instance.k());
    if k == 1 {
        return (SurvivorReport::from_zero_indexed(n - 1, Algorithm::Block), 0);
    }

    // Descend: each entry is one pending recurrence application.
    let mut chain = Vec::new();
    let mut m = n;
    while m > 1 {
        chain.push(m);
        m = if m < k { m - 1 } else { m - m / k };
    }

    // Ascend from J(1) = 0. r - (m mod k) can go negative, so the position
    // is carried in a signed wide integer.
    let ki = k as i128;
    let mut r: i128 = 0;
    for &m in chain.iter().rev() {
        let mi = m as i128;
        if m < k {
            r = (r + ki) % mi;
        } else {
            r -= (m % k) as i128;
            if r < 0 {
                r += mi;
            } else {
                r += r / (ki - 1);
            }
        }
    }
    debug_assert!(r >= 0 && (r as u64) < n);
    (
        SurvivorReport::from_zero_indexed(r as u64, Algorithm::Block),
        chain.len() as u64,
    )
}

/// The full removal order of an instance, ending before the survivor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrder {
    /// The n-1 removed labels, in removal order.
    pub removed: Vec<u64>,
    /// The last remaining label, 1-indexed.
    pub survivor: u64,
}

impl EliminationOrder {
    pub fn report(&self) -> SurvivorReport {
        SurvivorReport::from_one_indexed(self.survivor, Algorithm::Oracle)
    }
}

/// Simulates the circle literally: walk `(k-1) mod live` hops from the label
/// where counting resumes, remove, repeat.
///
/// Uses a successor array with O(1) unlink, so each removal costs at most
/// `min(k-1, live-1)` hops. Memory is O(n); this is ground truth for small
/// instances, not a scalable solver.
pub fn oracle_simulate(instance: &JosephusInstance) -> EliminationOrder {
    let (n, k) = (instance.n(), instance.k());
    let mut next: Vec<u64> = (0..=n).map(|i| if i == n { 1 } else { i + 1 }).collect();
    let mut removed = Vec::with_capacity((n - 1) as usize);
    let mut live = n;
    let mut pred = n; // label n precedes label 1 in the circle
    let mut cur = 1u64; // counting resumes here, as count 1
    while live > 1 {
        for _ in 0..(k - 1) % live {
            pred = cur;
            cur = next[cur as usize];
        }
        removed.push(cur);
        next[pred as usize] = next[cur as usize];
        cur = next[cur as usize];
        live -= 1;
    }
    EliminationOrder {
        removed,
        survivor: cur,
    }
}

/// Survivor for `k = 2` by the power-of-two closed form
/// `2 * (n - 2^floor(log2 n)) + 1`, 1-indexed. Requires `n >= 1`.
///
/// Validated against the oracle at small scale before being used as a
/// large-n cross-check (see the acceptance suite).
pub fn survivor_k2_closed_form(n: u64) -> u64 {
    debug_assert!(n >= 1);
    let high = 1u64 << n.ilog2();
    2 * (n - high) + 1
}
