//! Error type shared across the measurement engine.

use thiserror::Error;

/// Errors produced by model evaluation, estimation, diagnostics, and IO.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter passed to the probability kernel was NaN or infinite.
    #[error("non-finite parameter rejected: {0}")]
    NonFinite(String),

    /// A referenced identifier does not exist in the supplied parameter set.
    #[error("unknown {kind} id '{id}'")]
    UnknownId { kind: &'static str, id: String },

    /// An item specification violates its structural invariants.
    #[error("invalid item '{item}': {reason}")]
    InvalidItem { item: String, reason: String },

    /// Invalid configuration (bad collapse map, bad policy thresholds, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// The response network splits into disjoint subsets; estimation refused.
    #[error(
        "response network is disconnected: {components} components with sizes {sizes:?}; \
         link the facets (shared comments or anchors) before estimating"
    )]
    DisconnectedNetwork { components: usize, sizes: Vec<usize> },

    /// A required observation or distribution is missing.
    #[error("missing data: {0}")]
    MissingData(String),

    /// The rater filter removed every rater.
    #[error("rater filter excluded all raters; nothing left to estimate")]
    AllRatersExcluded,

    /// A malformed input file row.
    #[error("{path}:{line}: {message}")]
    Parse { path: String, line: u64, message: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for errors caused by invalid input data or configuration, as
    /// opposed to runtime failures. The CLI maps these to exit status 1.
    pub fn is_validation(&self) -> bool {
        !matches!(self, Error::Io(_))
    }
}
