use thiserror::Error;

/// Everything that can go wrong inside the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomial is not exactly divisible by the given divisor")]
    NotDivisible,
    #[error("polynomial is not self-reciprocal: {0}")]
    NotSymmetric(String),
    #[error("self-reciprocal polynomial has odd span {0}")]
    OddSpan(usize),
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("invalid Seifert matrix `{name}`: {reason}")]
    InvalidSeifert { name: String, reason: String },
    #[error("braid closure has {components} components, expected a knot")]
    MultiComponent { components: usize },
    #[error("invalid braid word: {0}")]
    InvalidBraid(String),
    #[error("parse error at column {column}: {message}")]
    Expression { column: usize, message: String },
    #[error("unknown knot name `{0}`")]
    UnknownKnot(String),
    #[error("invalid torus knot T({p},{q}): need coprime p, q >= 2")]
    InvalidTorus { p: u64, q: u64 },
    #[error("hermitian form is singular at sample z = {0}")]
    SingularSample(String),
    #[error("factor invariants need at least one root")]
    EmptyRoots,
    #[error("parity violation: {0}")]
    Parity(String),
    #[error("state {0} not reachable within the search bound")]
    SearchBound(String),
    #[error("{path}: line {line}, column {column}: {message}")]
    FileFormat {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}: value out of range for the report format")]
    Overflow(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
