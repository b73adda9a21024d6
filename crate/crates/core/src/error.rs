use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range 1..={n}")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("sequence is not a permutation of 1..={n}: {reason}")]
    NotABijection { n: usize, reason: String },

    #[error("position {position} is out of range 1..={n}")]
    InvalidPosition { position: usize, n: usize },

    #[error("layout covers {layout} vertices but the graph has {graph}")]
    SizeMismatch { graph: usize, layout: usize },

    #[error("instance with {n} vertices exceeds the exact solver limit of {limit}")]
    InstanceTooLarge { n: usize, limit: usize },

    #[error("unknown heuristic `{0}` (expected one of h1, h2, h3, random)")]
    UnknownHeuristic(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),

    #[error("duplicate run for instance `{instance}` and heuristic `{heuristic}`")]
    DuplicateRun { instance: String, heuristic: String },

    #[error("instance `{instance}`: {source}")]
    Instance {
        instance: String,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
