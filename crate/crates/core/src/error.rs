use thiserror::Error;

/// Errors surfaced by parsing, arithmetic and checking.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero in F_p")]
    DivisionByZero,

    #[error("{0} is not prime")]
    NotPrime(String),

    #[error("{input} format error at {at}: {detail}")]
    Format {
        /// Which input kind failed (`r1cs`, `sym`, `polyir`, `manifest`).
        input: &'static str,
        /// Byte offset or line number, depending on the input kind.
        at: String,
        detail: String,
    },

    #[error("usage error: {0}")]
    Usage(String),

    #[error("constraint system has no constraints")]
    EmptySystem,

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("resource cap exceeded: {0}")]
    ResourceExhausted(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn format(input: &'static str, at: impl ToString, detail: impl ToString) -> Self {
        Error::Format {
            input,
            at: at.to_string(),
            detail: detail.to_string(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
