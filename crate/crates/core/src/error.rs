use thiserror::Error;

/// Errors produced by the measurement-planning pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("qubit count mismatch: {0} vs {1}")]
    QubitMismatch(usize, usize),

    #[error("unsupported qubit count {0} (maximum 64)")]
    TooManyQubits(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("operator is not Hermitian: residual imaginary coefficient {imag:.3e} on term {term}")]
    NonHermitian { term: String, imag: f64 },

    #[error("fragment is not qubit-wise commuting: {0} vs {1}")]
    NotQubitWiseCommuting(String, String),

    #[error("fragment is not fully commuting: {0} vs {1}")]
    NotCommuting(String, String),

    #[error("operator is not in Ising form: {0}")]
    NotIsing(String),

    #[error("fidelity {0} outside (0, 1]")]
    InvalidFidelity(f64),

    #[error("target accuracy epsilon must be positive, got {0}")]
    InvalidEpsilon(f64),

    #[error("Hamiltonian has no terms")]
    EmptyOperator,

    #[error("eigensolver failed to converge: residual {residual:.3e} after {iterations} iterations")]
    NonConvergence { residual: f64, iterations: usize },

    #[error("qubit count {0} exceeds the configured cap {1}")]
    WidthOverCap(usize, usize),

    #[error("spin-orbital index {0} out of range (n = {1})")]
    ModeOutOfRange(usize, usize),

    #[error("internal integrity failure: {0}")]
    Integrity(String),
}
