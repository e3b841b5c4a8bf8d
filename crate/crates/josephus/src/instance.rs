use std::fmt;
use std::str::FromStr;

/// A Josephus problem instance: labels `1..=n` stand in a circle and every
/// `k`-th live label is removed until one remains.
///
/// Construction validates `n >= 1`, `k >= 1` and that `n * k` fits in a
/// `u64`. Every iterate of every algorithm in this crate is bounded by
/// `n * k`, so the single capacity check at construction covers all later
/// arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct JosephusInstance {
    n: u64,
    k: u64,
}

impl JosephusInstance {
    pub fn new(n: u64, k: u64) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidN);
        }
        if k == 0 {
            return Err(Error::InvalidK);
        }
        if n.checked_mul(k).is_none() {
            return Err(Error::Capacity { n, k });
        }
        Ok(JosephusInstance { n, k })
    }

    /// Count of labels in the circle.
    pub fn n(self) -> u64 {
        self.n
    }

    /// Removal step: every `k`-th live label is removed.
    pub fn k(self) -> u64 {
        self.k
    }

    /// `n * k`, representable by the construction-time capacity check.
    pub fn nk(self) -> u64 {
        self.n * self.k
    }
}

impl fmt::Display for JosephusInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, k={})", self.n, self.k)
    }
}

/// Identifies which algorithm produced a survivor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algorithm {
    /// The skip-step iteration: O(k log n) time, O(1) space.
    MaxNim,
    /// One-removal-at-a-time recurrence: O(n) time, O(1) space.
    Linear,
    /// Block-removal recurrence: O(k log n) time, auxiliary chain storage.
    Block,
    /// Direct circle simulation; ground truth at small scale.
    Oracle,
}

impl Algorithm {
    /// The algorithms eligible for timing runs (the oracle is not).
    pub const BENCHABLE: [Algorithm; 3] = [Algorithm::MaxNim, Algorithm::Linear, Algorithm::Block];

    /// Stable identifier used in CSV rows, structured output and CLI flags.
    pub fn id(self) -> &'static str {
        match self {
            Algorithm::MaxNim => "maxnim",
            Algorithm::Linear => "linear",
            Algorithm::Block => "block",
            Algorithm::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "maxnim" => Ok(Algorithm::MaxNim),
            "linear" => Ok(Algorithm::Linear),
            "block" => Ok(Algorithm::Block),
            "oracle" => Ok(Algorithm::Oracle),
            other => Err(format!(
                "unknown algorithm `{other}` (expected maxnim, linear, block or oracle)"
            )),
        }
    }
}

/// The surviving label in both indexing conventions.
///
/// `zero_indexed == one_indexed - 1` always; the private fields keep the two
/// views consistent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurvivorReport {
    one_indexed: u64,
    zero_indexed: u64,
    algorithm: Algorithm,
}

impl SurvivorReport {
    pub fn from_one_indexed(one_indexed: u64, algorithm: Algorithm) -> Self {
        debug_assert!(one_indexed >= 1);
        SurvivorReport {
            one_indexed,
            zero_indexed: one_indexed - 1,
            algorithm,
        }
    }

    pub fn from_zero_indexed(zero_indexed: u64, algorithm: Algorithm) -> Self {
        SurvivorReport {
            one_indexed: zero_indexed + 1,
            zero_indexed,
            algorithm,
        }
    }

    /// Surviving label counted from 1, as in the circle itself.
    pub fn one_indexed(self) -> u64 {
        self.one_indexed
    }

    /// Surviving label counted from 0.
    pub fn zero_indexed(self) -> u64 {
        self.zero_indexed
    }

    pub fn algorithm(self) -> Algorithm {
        self.algorithm
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `n` must be at least 1.
    InvalidN,
    /// `k` must be at least 1.
    InvalidK,
    /// `n * k` is not representable in 64 bits.
    Capacity { n: u64, k: u64 },
    /// A skip-step iterate would exceed 64 bits.
    StepOverflow { x: u64, k: u64 },
    /// The requested operation is only defined for `k >= 2`.
    KBelowTwo { k: u64 },
    /// A verification or benchmark configuration is unusable.
    InvalidConfig(&'static str),
    /// A CSV document does not match the benchmark schema.
    CsvParse { line: usize, reason: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidN => write!(f, "n must be at least 1"),
            Error::InvalidK => write!(f, "k must be at least 1"),
            Error::Capacity { n, k } => {
                write!(f, "instance too large: {n} * {k} does not fit in 64 bits")
            }
            Error::StepOverflow { x, k } => {
                write!(f, "step overflow: iterate from x={x} with k={k} exceeds 64 bits")
            }
            Error::KBelowTwo { k } => {
                write!(f, "k must be at least 2 for this operation (got k={k})")
            }
            Error::InvalidConfig(reason) => write!(f, "invalid configuration: {reason}"),
            Error::CsvParse { line, reason } => write!(f, "CSV parse error at line {line}: {reason}"),
        }
    }
}

impl std::error::Error for Error {}
