use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid model: {excitations} excitations on {dots} dots")]
    InvalidConfig { dots: u32, excitations: u32 },

    #[error("binomial coefficient needs a nonnegative upper index, got {0}")]
    NegativeBinomial(i64),

    #[error("double factorial is undefined for {0} < -1")]
    DoubleFactorialDomain(i64),

    #[error("no dynamics: the sector with {excitations} excitations on {dots} dots is stationary")]
    NoDynamics { dots: u32, excitations: u32 },

    #[error("{0} requires at least {1} dots")]
    TooFewDots(&'static str, u32),

    #[error("the pi-time magnitudes are only defined for odd dot counts, got {0}")]
    EvenDots(u32),

    #[error("Schmidt weights sum to {sum} at kt = {time}")]
    Normalization { time: f64, sum: f64 },

    #[error("time must be finite, got {0}")]
    NonFiniteTime(f64),

    #[error("sector dimension {dimension} on {dots} dots exceeds the oracle budget of {max_dots} dots")]
    BudgetExceeded { dots: u32, dimension: usize, max_dots: u32 },

    #[error("symmetric eigensolver did not converge for dimension {0}")]
    Eigensolver(usize),

    #[error("fit needs at least 3 points, got {0}")]
    InsufficientPoints(usize),

    #[error("N = {dots} lies inside the critical region N <= {critical} for M = {excitations}")]
    InsideCriticalRegion { dots: u32, excitations: u32, critical: u32 },

    #[error("invalid search option: {0}")]
    InvalidSearch(&'static str),
}
