//! Crate-wide error type. Variants map to the error categories surfaced
//! by the CLI (`dimension`, `config`, `mode`, `data`, `format`, ...).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Operand shapes are incompatible for an operation.
    #[error("dimension mismatch in {op}: {lhs:?} vs {rhs:?}")]
    Dimension {
        op: &'static str,
        lhs: Vec<usize>,
        rhs: Vec<usize>,
    },

    /// Invalid configuration value or malformed config file.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// Operation called in the wrong train/eval mode.
    #[error("mode error: {0}")]
    Mode(String),

    /// Missing or inconsistent training data.
    #[error("data error: {0}")]
    Data(String),

    /// Malformed binary or manifest file; `offset` is the byte at which
    /// decoding failed.
    #[error("format error at byte {offset}: {detail}")]
    Format { offset: usize, detail: String },

    /// Alignment requested with fewer frames than tokens.
    #[error("infeasible alignment: {frames} frames < {tokens} tokens")]
    InfeasibleAlignment { frames: usize, tokens: usize },

    /// Embedding id outside its table.
    #[error("lookup error: id {id} out of range for table of {rows} rows")]
    Lookup { id: usize, rows: usize },

    /// Length regulation produced no frames.
    #[error("empty output: all durations are zero")]
    EmptyOutput,

    /// Probe invoked with fewer than two distinct labels.
    #[error("degenerate labels: need at least 2 classes, got {0}")]
    DegenerateLabels(usize),

    /// Checkpoint does not match the current model or format version.
    #[error("incompatible checkpoint: {0}")]
    Incompatible(String),

    /// A loss term became NaN during training.
    #[error("NaN loss in term '{term}' at step {step}")]
    NanLoss { term: &'static str, step: usize },

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// One-word machine-parseable category, printed by the CLI on stderr.
    pub fn category(&self) -> &'static str {
        match self {
            Error::Dimension { .. } => "dimension",
            Error::Config(_) => "config",
            Error::Mode(_) => "mode",
            Error::Data(_) => "data",
            Error::Format { .. } => "format",
            Error::InfeasibleAlignment { .. } => "alignment",
            Error::Lookup { .. } => "lookup",
            Error::EmptyOutput => "empty-output",
            Error::DegenerateLabels(_) => "degenerate-labels",
            Error::Incompatible(_) => "incompatible",
            Error::NanLoss { .. } => "nan-loss",
            Error::Io { .. } => "io",
        }
    }

    pub fn io(path: impl AsRef<std::path::Path>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.as_ref().display().to_string(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
