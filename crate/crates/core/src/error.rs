use thiserror::Error;

/// Failures raised while building, validating or decomposing rotations.
///
/// Every variant that stems from a numeric check carries the measured value
/// so callers can report how far the input was from passing.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum Error {
    #[error("quaternion norm {norm:e} is too small to normalize")]
    ZeroQuaternion { norm: f64 },

    #[error("quaternion is not unit: |norm^2 - 1| = {deviation:e}")]
    NotUnit { deviation: f64 },

    #[error("non-finite value in input")]
    NonFinite,

    #[error("matrix is not orthogonal: max |A^T A - I| = {max_deviation:e}")]
    NotOrthogonal { max_deviation: f64 },

    #[error("matrix is not a proper rotation: det = {determinant}")]
    NotProperRotation { determinant: f64 },

    #[error("associate matrix is not rank one: max |2x2 minor| = {max_minor:e}")]
    NotRankOne { max_minor: f64 },

    #[error("associate matrix norm deviates from one by {deviation:e}")]
    NormDeviation { deviation: f64 },

    #[error("associate matrix norm {norm:e} is too small to factor")]
    DegenerateNorm { norm: f64 },

    #[error("reconstruction residual {residual:e} exceeds tolerance")]
    ReconstructionFailure { residual: f64 },

    #[error("minor indices ({i},{j};{k},{l}) out of range or unordered")]
    IndexOutOfRange { i: usize, j: usize, k: usize, l: usize },
}

impl Error {
    /// True for failures of the input-validation stage (not a rotation at all),
    /// as opposed to failures of the decomposition itself.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::NotOrthogonal { .. }
                | Error::NotProperRotation { .. }
                | Error::NonFinite
                | Error::ZeroQuaternion { .. }
                | Error::NotUnit { .. }
        )
    }

    /// Short machine-readable name, used in reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroQuaternion { .. } => "ZeroQuaternion",
            Error::NotUnit { .. } => "NotUnit",
            Error::NonFinite => "NonFinite",
            Error::NotOrthogonal { .. } => "NotOrthogonal",
            Error::NotProperRotation { .. } => "NotProperRotation",
            Error::NotRankOne { .. } => "NotRankOne",
            Error::NormDeviation { .. } => "NormDeviation",
            Error::DegenerateNorm { .. } => "DegenerateNorm",
            Error::ReconstructionFailure { .. } => "ReconstructionFailure",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
