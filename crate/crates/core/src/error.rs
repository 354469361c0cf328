use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("self-loop at vertex `{0}`")]
    SelfLoop(String),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(String, String),

    #[error("invalid vertex token `{token}`: {reason}")]
    InvalidLabel { token: String, reason: &'static str },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("(k = {k}, n = {n}) is outside the domain k >= 3, n - k >= 1")]
    Domain { k: i64, n: i64 },

    #[error("formula {0} is not a {1}")]
    WrongFormulaKind(&'static str, &'static str),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("oracle self-check failed: {0}")]
    OracleInconsistent(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("grid point (k = {k}, n = {n}): {source}")]
    AtPoint {
        k: i64,
        n: i64,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
