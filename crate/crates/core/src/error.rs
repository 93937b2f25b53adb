use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("qubit count {0} is outside the supported range 1..=32")]
    QubitCount(u32),

    #[error("matrix for {num_qubits} qubits needs {expected} elements, got {actual}")]
    ElementCount {
        num_qubits: u32,
        expected: u128,
        actual: usize,
    },

    #[error("Pauli index {index} is out of range for {num_qubits} qubits")]
    IndexOutOfRange { index: u64, num_qubits: u32 },

    #[error("invalid Pauli label {label:?}: {reason}")]
    Label { label: String, reason: String },

    #[error("{num_qubits}-qubit oracle refused: the Kronecker oracle is capped at {max} qubits")]
    OracleTooLarge { num_qubits: u32, max: u32 },

    #[error("thread count must be at least 1")]
    ZeroThreads,

    #[error("failed to allocate {0} coefficients")]
    Allocation(u128),

    #[error("strategies disagree: {0}")]
    Mismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown decomposition strategy {0:?}")]
    UnknownStrategy(String),

    #[error("malformed header: {0}")]
    Header(String),

    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("truncated payload: expected {expected} values, found {found}")]
    Truncated { expected: u128, found: u128 },

    #[error("non-finite value at {location}: {token}")]
    NonFinite { location: String, token: String },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    /// True for failures caused by the environment rather than by the caller's input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Allocation(_) | Error::Mismatch(_))
    }
}
