use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generating set")]
    EmptyGeneratingSet,

    #[error("infinite colength: ideal `{0}` is not m-primary")]
    InfiniteColength(String),

    #[error("exponent overflow: exponents must stay below 2^62")]
    ExponentOverflow,

    #[error("HD requires a complete ideal (`{0}` is not integrally closed; use --closure)")]
    HdRequiresComplete(String),

    #[error("core formula requires a complete ideal (`{0}` is not integrally closed; use --closure)")]
    CoreRequiresComplete(String),

    #[error("ideal not certified m-primary within cap {cap}")]
    NotCertified { cap: u64 },

    #[error("`{element}` is not contained in the ideal `{ideal}`")]
    NotContained { element: String, ideal: String },

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("zero generator")]
    ZeroGenerator,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A mathematical self-check failed. Seeing this means a bug in the
    /// crate, not bad input.
    #[error("internal invariant breach: {0}")]
    Invariant(String),
}
