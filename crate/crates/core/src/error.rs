use thiserror::Error;

use crate::arith::Ambient;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: {0} vs {1}")]
    AmbientMismatch(Ambient, Ambient),
    #[error("division by the zero rational function")]
    DivideByZero,
    #[error("no value assigned to variable {0}")]
    UnboundVariable(String),
    #[error("flow {flow} out of range 1..={m}")]
    FlowOutOfRange { flow: usize, m: usize },
    #[error("invalid ambient: m = {m}, n = {n} (both must be at least 1)")]
    InvalidAmbient { m: usize, n: usize },
    #[error("shape error: {0}")]
    Shape(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
}

pub type Result<T> = std::result::Result<T, Error>;
