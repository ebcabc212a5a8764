use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} of size {size} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: u64,
        bound: u64,
    },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("element {0} is not a nonzero nongenerator")]
    NotInSharp(String),
    #[error("element {element} does not belong to {module}")]
    InvalidElement { element: String, module: String },
    #[error("invalid trivial extension pair (n = {n}, m = {m}): m must divide n")]
    InvalidPair { n: u64, m: u64 },
    #[error("modules are over different coefficient rings")]
    RingMismatch,
    #[error("operation is not supported for the {0} family")]
    UnsupportedFamily(&'static str),
    #[error("window {window} is too small: class {needed} does not fit")]
    WindowTooSmall { window: u64, needed: u64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
