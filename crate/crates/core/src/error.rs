//! Error type shared by all simulator modules.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("qubit count {0} out of range (must be 1..={max})", max = crate::state::MAX_QUBITS)]
    QubitCountOutOfRange(u32),

    #[error("basis index {index} out of range for {qubits} qubits ({states} states)")]
    BasisIndexOutOfRange {
        index: usize,
        qubits: u32,
        states: usize,
    },

    #[error("bit {bit} out of range for {qubits} qubits")]
    BitOutOfRange { bit: u32, qubits: u32 },

    #[error("dimension mismatch: operand over {left} qubits, state over {right} qubits")]
    DimensionMismatch { left: u32, right: u32 },

    #[error("amplitude vector has length {actual}, expected {expected}")]
    InvalidStateLength { expected: usize, actual: usize },

    #[error("amplitude vector has norm {0}, expected 1 within 1e-9")]
    NotNormalized(f64),

    #[error("dense operators are capped at {max} qubits, got {0}", max = crate::dense::MAX_DENSE_QUBITS)]
    DenseTooLarge(u32),

    #[error("explicit iteration count {0} exceeds the guard of {max}", max = crate::engine::MAX_EXPLICIT_ITERATIONS)]
    IterationGuardExceeded(u64),

    #[error("classical baseline needs at least one trial")]
    NoTrials,
}

pub type Result<T> = std::result::Result<T, Error>;
