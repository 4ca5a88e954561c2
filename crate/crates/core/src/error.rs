use thiserror::Error;

/// Unified error type for every fallible operation in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Matrix rows are linearly dependent where full rank is required.
    #[error("rank deficient: rank {rank} < {rows} rows")]
    RankDeficient { rank: usize, rows: usize },

    /// The leading k x k block is not the identity.
    #[error("matrix is not in standard form (I_k | A)")]
    NotStandardForm,

    /// A row or column index is outside the matrix.
    #[error("index {index} out of range (< {bound} required)")]
    IndexOutOfRange { index: usize, bound: usize },

    /// add_row was asked to add a row to itself.
    #[error("cannot add row {row} to itself")]
    SelfAddition { row: usize },

    /// A target column is absent from the searched matrix.
    #[error("target column {target} (value {value:#b}) not found")]
    ColumnNotFound { target: usize, value: u64 },

    /// The same column appears twice in a target list.
    #[error("duplicate target column (value {value:#b})")]
    DuplicateTarget { value: u64 },

    /// The searched matrix has two equal columns, so matches are ambiguous.
    #[error("searched matrix has duplicate columns (value {value:#b})")]
    DuplicateColumn { value: u64 },

    /// A parameter is outside its documented range.
    #[error("invalid parameter {name}={value}: requires {requirement}")]
    InvalidParameter {
        name: &'static str,
        value: usize,
        requirement: &'static str,
    },

    /// An enumeration would exceed the exponential-work guard.
    #[error("dimension {dimension} exceeds enumeration guard {guard}")]
    TooLarge { dimension: usize, guard: usize },

    /// Matrix dimensions are incompatible for the requested operation.
    #[error("dimension mismatch: {context}")]
    DimensionMismatch { context: &'static str },

    /// The operation is only defined for specific code families.
    #[error("operation not supported for family {family}")]
    UnsupportedFamily { family: &'static str },

    /// The literal proof schedule produced a non-dual or non-covering row.
    #[error("localization schedule failed: {reason}")]
    ScheduleFailure { reason: String },

    /// The word handed to repair fails the parity checks.
    #[error("word is not a codeword")]
    NotACodeword,

    /// The certificate has no repair set for the requested coordinate.
    #[error("certificate has no repair set for coordinate {coordinate}")]
    NoCertificateForCoordinate { coordinate: usize },

    /// The operation needs at least one nonzero codeword.
    #[error("code has dimension zero")]
    ZeroDimension,

    /// Malformed matrix or code text.
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
