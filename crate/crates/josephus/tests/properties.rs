//! Property tests for the solver invariants.

use josephus::{
    h_step, iteration_bounds, oracle_simulate, survivor_block, survivor_block_with_steps,
    survivor_k2_closed_form, survivor_linear, survivor_maxnim, survivor_maxnim_traced, Algorithm,
    BenchRecord, JosephusInstance,
};
use proptest::prelude::*;

fn instance(n: u64, k: u64) -> JosephusInstance {
    JosephusInstance::new(n, k).unwrap()
}

proptest! {
    /// Every step strictly grows: h(x) >= x + 1.
    #[test]
    fn step_strictly_grows(x in 0u64..=u64::MAX / 4, k in 2u64..=u64::MAX) {
        let y = h_step(x, k).unwrap();
        prop_assert!(y > x);
    }

    /// Strict monotonicity in x for fixed k.
    #[test]
    fn step_is_strictly_monotonic(x in 0u64..=u64::MAX / 4 - 1, d in 1u64..=1000, k in 2u64..=u64::MAX) {
        let y = x + d;
        prop_assert!(h_step(x, k).unwrap() < h_step(y, k).unwrap());
    }

    /// The survivor label is always within the circle.
    #[test]
    fn survivor_is_in_range(n in 1u64..=1_000_000_000_000, k in 1u64..=10_000) {
        prop_assume!(n.checked_mul(k).is_some());
        let report = survivor_maxnim(&instance(n, k));
        prop_assert!((1..=n).contains(&report.one_indexed()));
        prop_assert_eq!(report.zero_indexed(), report.one_indexed() - 1);
    }

    /// The fast solver agrees with the linear recurrence.
    #[test]
    fn maxnim_matches_linear(n in 1u64..=3000, k in 1u64..=200) {
        let i = instance(n, k);
        prop_assert_eq!(
            survivor_maxnim(&i).one_indexed(),
            survivor_linear(&i).one_indexed()
        );
    }

    /// The block recurrence agrees with the linear recurrence.
    #[test]
    fn block_matches_linear(n in 1u64..=3000, k in 1u64..=200) {
        let i = instance(n, k);
        prop_assert_eq!(
            survivor_block(&i).one_indexed(),
            survivor_linear(&i).one_indexed()
        );
    }

    /// Trace invariants: strictly increasing, step-connected, and stopping
    /// exactly at the threshold crossing.
    #[test]
    fn trace_is_step_connected(n in 1u64..=100_000, k in 2u64..=10_000) {
        let i = instance(n, k);
        let (report, trace) = survivor_maxnim_traced(&i).unwrap();
        let xs = trace.xs();
        prop_assert_eq!(xs[0], k - 1);
        for w in xs.windows(2) {
            prop_assert!(w[0] < w[1]);
            prop_assert_eq!(h_step(w[0], k).unwrap(), w[1]);
        }
        let threshold = n * (k - 1);
        prop_assert!(trace.final_x() >= threshold);
        if trace.p() > 0 {
            prop_assert!(xs[xs.len() - 2] < threshold);
        }
        // Theorem-style readback: survivor = n*k - final iterate.
        prop_assert_eq!(report.one_indexed(), n * k - trace.final_x());
    }

    /// The bracket floor_w <= p <= ceil_v holds everywhere it is defined.
    #[test]
    fn bounds_bracket_p(n in 1u64..=1_000_000_000, k in 2u64..=10_000) {
        prop_assume!(n.checked_mul(k).is_some());
        let i = instance(n, k);
        let (_, trace) = survivor_maxnim_traced(&i).unwrap();
        let b = iteration_bounds(&i).unwrap();
        prop_assert!(b.floor_w <= trace.p(), "floor_w={} p={}", b.floor_w, trace.p());
        prop_assert!(trace.p() <= b.ceil_v, "p={} ceil_v={}", trace.p(), b.ceil_v);
        prop_assert!(b.floor_w <= b.ceil_v);
        prop_assert!(b.v >= 0.0 && b.w >= 0.0);
    }

    /// The iteration count never exceeds k*ln(n) + 1.
    #[test]
    fn iteration_count_capped(n in 2u64..=1_000_000_000, k in 2u64..=10_000) {
        prop_assume!(n.checked_mul(k).is_some());
        let (_, trace) = survivor_maxnim_traced(&instance(n, k)).unwrap();
        prop_assert!(trace.p() as f64 <= k as f64 * (n as f64).ln() + 1.0);
    }

    /// For n >= k >= 2 the block recurrence applies at most
    /// 2*(k*ln(n) + k) steps.
    #[test]
    fn block_step_count_is_bounded(k in 2u64..=5_000, extra in 0u64..=1_000_000_000) {
        let n = k + extra;
        prop_assume!(n.checked_mul(k).is_some());
        let (_, steps) = survivor_block_with_steps(&instance(n, k));
        let cap = 2.0 * (k as f64 * (n as f64).ln() + k as f64);
        prop_assert!(steps as f64 <= cap, "n={} k={}: {} steps > {}", n, k, steps, cap);
    }

    /// Oracle output is a permutation: n-1 distinct removals plus the
    /// survivor cover 1..=n exactly.
    #[test]
    fn oracle_output_is_a_permutation(n in 1u64..=150, k in 1u64..=300) {
        let order = oracle_simulate(&instance(n, k));
        prop_assert_eq!(order.removed.len() as u64, n - 1);
        let mut seen = vec![false; n as usize + 1];
        for &label in order.removed.iter().chain(std::iter::once(&order.survivor)) {
            prop_assert!((1..=n).contains(&label));
            prop_assert!(!seen[label as usize], "label {} repeated", label);
            seen[label as usize] = true;
        }
    }

    /// For k = 2 the power-of-two closed form gives the survivor.
    #[test]
    fn closed_form_matches_maxnim_for_k2(n in 1u64..=1_000_000_000_000_000) {
        prop_assert_eq!(
            survivor_k2_closed_form(n),
            survivor_maxnim(&instance(n, 2)).one_indexed()
        );
    }

    /// CSV emission and parsing are inverse on the integer fields.
    #[test]
    fn csv_round_trips(
        n in 1u64..=u64::MAX,
        k in 1u64..=u64::MAX,
        reps in 0u64..=u64::MAX,
        total in 0u64..=u64::MAX,
        mean in 0u64..=u64::MAX,
        median in 0u64..=u64::MAX,
        min in 0u64..=u64::MAX,
        survivor in 0u64..=u64::MAX,
        truncated: bool,
        alg_pick in 0usize..3,
    ) {
        let record = BenchRecord {
            algorithm: Algorithm::BENCHABLE[alg_pick],
            n,
            k,
            reps,
            total_ns: total,
            mean_ns: mean,
            median_ns: median,
            min_ns: min,
            survivor,
            truncated,
            error: None,
        };
        let mut out = Vec::new();
        josephus::emit_csv(std::slice::from_ref(&record), &mut out).unwrap();
        let parsed = josephus::parse_csv(&String::from_utf8(out).unwrap()).unwrap();
        prop_assert_eq!(parsed, vec![record]);
    }
}
