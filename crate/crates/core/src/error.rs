use thiserror::Error;

/// Errors produced by the geometric and numerical routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("input contains no points")]
    EmptyInput,
    #[error("non-finite coordinate in input")]
    NonFinite,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("value {value} outside the domain {domain}")]
    Domain { value: f64, domain: &'static str },
    #[error("invalid chain C_{n}({k}): need n >= 3 and 1 <= k <= n")]
    InvalidChain { n: usize, k: usize },
    #[error("N(k) undefined (infinite) for even k (k = {0})")]
    EvenChain(usize),
    #[error("unsupported parity: {0} points (odd count >= 3 required)")]
    UnsupportedParity(usize),
    #[error("ray has no forward intersection with the circle")]
    NoIntersection,
    #[error("point set is not a member of any reflection-symmetric extension family")]
    NotAMember,
    #[error("index {index} out of range for {len} points")]
    IndexOutOfRange { index: usize, len: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
