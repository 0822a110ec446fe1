use thiserror::Error;

/// Rejection reasons. Each message starts with the name of the violated
/// invariant so callers can report it verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("partition: {0}")]
    InvalidPartition(String),
    #[error("replay_path: illegal box addition at step {step} (entry {entry}): {reason}")]
    IllegalStep {
        step: usize,
        entry: u8,
        reason: String,
    },
    #[error("weight bounds: {0}")]
    OutOfBounds(String),
    #[error("not a state of (P,Q)=({p},{q}): {reason}")]
    NotAState { p: i64, q: i64, reason: String },
    #[error("label: {0}")]
    InconsistentLabel(String),
    #[error("parse: {0}")]
    Parse(String),
}
