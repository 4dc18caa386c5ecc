use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("pauli word must cover at least one qubit")]
    EmptyWord,

    #[error("qubit count mismatch: expected {expected}, found {found}")]
    QubitCountMismatch { expected: usize, found: usize },

    #[error("dimension mismatch: {left}x{left} vs {right}x{right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix dimension {dim} is not a power of two >= 2")]
    NotPowerOfTwo { dim: usize },

    #[error(
        "matrix is not unitary: max-norm of (U^H U - I) = {defect:.3e} exceeds {tolerance:.1e}"
    )]
    NotUnitary { defect: f64, tolerance: f64 },

    #[error("angle gene {gene} out of range (must be < 512)")]
    GeneOutOfRange { gene: u16 },

    #[error("axis code {code} out of range (must be < 4)")]
    AxisCodeOutOfRange { code: u8 },

    #[error("control and target qubits must differ")]
    ControlEqualsTarget,

    #[error("qubit index {index} out of range for {qubits} qubits")]
    QubitOutOfRange { index: usize, qubits: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
