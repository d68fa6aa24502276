use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero ray")]
    ZeroRay,
    #[error("ray not cut by slice plane")]
    NotSliced,
    #[error("curves do not determine class")]
    Singular,
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("malformed partition: {0}")]
    Partition(String),
    #[error("duality unavailable for regime {0}")]
    DualityUnavailable(String),
    #[error("invalid space: {0}")]
    InvalidSpace(String),
    #[error("catalog validation failed:\n{}", .0.join("\n"))]
    Validation(Vec<String>),
    #[error("catalog parse error: {0}")]
    Parse(String),
    #[error("degenerate catalog: {0}")]
    Degenerate(String),
    #[error("arrangement incomplete: {0}")]
    ArrangementIncomplete(String),
    #[error("soundness violation: {0}")]
    Soundness(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
