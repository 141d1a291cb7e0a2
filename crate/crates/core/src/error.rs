use thiserror::Error;

use crate::matroid::AxiomReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A concrete failure of symmetry or transitivity, by label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `(x, y) ∈ R` but `(y, x) ∉ R`.
    Symmetry { x: String, y: String },
    /// `(x, y), (y, z) ∈ R` but `(x, z) ∉ R`.
    Transitivity { x: String, y: String, z: String },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Symmetry { x, y } => {
                write!(f, "not symmetric: ({x}, {y}) in R but ({y}, {x}) is not")
            }
            Violation::Transitivity { x, y, z } => write!(
                f,
                "not transitive: ({x}, {y}) and ({y}, {z}) in R but ({x}, {z}) is not"
            ),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate label `{0}` in universe")]
    DuplicateLabel(String),
    #[error("labels must be non-empty strings")]
    EmptyLabel,
    #[error("operands are defined over different universes")]
    UniverseMismatch,
    #[error("universe has {size} elements, limit for this operation is {cap}")]
    UniverseTooLarge { size: usize, cap: usize },
    #[error("relation is not symmetric and transitive: {0}")]
    NotSymmetricTransitive(Violation),
    #[error("invalid circuit family: {detail}")]
    InvalidCircuitFamily { report: AxiomReport, detail: String },
    #[error("invalid independence family: {detail}")]
    InvalidIndependenceFamily { report: AxiomReport, detail: String },
    #[error("malformed input: {0}")]
    Format(String),
}
