use thiserror::Error;

/// Errors reported by the `halfshift` library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("length must be odd and at least 3, got {0}")]
    InvalidLength(usize),

    #[error("length {length} exceeds the configured maximum {max}")]
    LengthTooLarge { length: usize, max: usize },

    #[error("DPSS half-bandwidth must lie strictly inside (0, 0.5), got {0}")]
    DpssBandwidthOutOfRange(f64),

    #[error("shift half-bandwidth must lie in (0, 0.5], got {0}")]
    ShiftBandwidthOutOfRange(f64),

    #[error("shift must be finite, got {0}")]
    NonFiniteShift(f64),

    #[error("support parameter N must be even and at least 2, got {0}")]
    InvalidSupport(usize),

    #[error("sequence length must be odd (support [-N/2, N/2] with N even), got {0}")]
    EvenSequenceLength(usize),

    #[error("indices must cover -{half}..={half} exactly once; found {found} at sorted position {position}")]
    IndexCoverage { half: i64, found: i64, position: usize },

    #[error("sequence value at n = {index} is not finite")]
    NonFiniteValue { index: isize },

    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),

    #[error("zero-energy input")]
    ZeroEnergy,

    #[error(
        "tridiagonal eigenvalues {index} and {next} are closer than the tie threshold (gap {gap:e})",
        next = .index + 1
    )]
    EigenvalueTie { index: usize, gap: f64 },

    #[error("eigensolver did not converge for eigenvalue {0}")]
    NoConvergence(usize),

    #[error("operation needs a DPSS set with parameters (2N+3, 0.25), N even; got ({length}, {half_bandwidth})")]
    FamilyMismatch { length: usize, half_bandwidth: f64 },

    #[error("DPSS set length {found} does not match sequence support: expected {expected}")]
    LengthMismatch { expected: String, found: usize },

    #[error("window ({left}, {right}) invalid for support N = {n}: {reason}")]
    InvalidWindow {
        left: usize,
        right: usize,
        n: usize,
        reason: &'static str,
    },

    #[error("tail energy {value:e} is negative beyond rounding tolerance")]
    NegativeTail { value: f64 },

    #[error("truncated sum did not converge within horizon {horizon}")]
    HorizonExceeded { horizon: u64 },

    #[error("internal numerical fault: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
