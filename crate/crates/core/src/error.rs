use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A serialized record could not be parsed. Carries the 1-based line number.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A value violates a documented invariant. Names the offending field.
    #[error("invalid {field}: {message}")]
    Validation { field: String, message: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// A checkpoint dump mentions a sentence with no gold annotation.
    #[error("sentence not found in gold map: {0:?}")]
    UnknownSentence(String),

    /// A gold form is not a conjunct list and cannot be noised.
    #[error("not conjunct-structured: {0}")]
    Structure(String),

    /// Discriminator training needs both Correct and Incorrect pairs.
    #[error("training set contains only {0} pairs")]
    SingleLabel(&'static str),

    /// An operation received an empty collection it cannot work on.
    #[error("empty {0}")]
    Empty(&'static str),

    /// A record has no beam, so no parser confidence is available.
    #[error("record {0:?} has an empty beam: no confidence available")]
    MissingConfidence(String),

    /// Gold annotations are required but absent.
    #[error("gold annotations required but absent")]
    MissingGold,

    /// Task generation could not satisfy the requested counts.
    #[error("generation failed: {0}")]
    Generation(String),

    #[error("subset size {size} exceeds instance count {available}")]
    SubsetTooLarge { size: usize, available: usize },

    #[error("prediction lists have mismatched lengths: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
}

impl Error {
    pub(crate) fn validation(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation {
            field: field.into(),
            message: message.into(),
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
