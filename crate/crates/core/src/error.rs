use thiserror::Error;

/// Errors raised by word construction and the counting/enumeration routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("alphabet has more than 256 symbols")]
    AlphabetTooLarge,
    #[error("duplicate symbol {0:?} in alphabet")]
    DuplicateSymbol(char),
    #[error("symbol {0:?} is not in the alphabet")]
    SymbolNotInAlphabet(char),
    #[error("words are over different alphabets")]
    AlphabetMismatch,
    #[error("morphism image for {0:?} is empty")]
    EmptyImage(char),
    #[error("morphism needs {expected} images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("pattern must be nonempty")]
    EmptyPattern,
    #[error("size guard exceeded: {what} requested {requested}, limit {limit}")]
    SizeGuard {
        what: &'static str,
        requested: u64,
        limit: u64,
    },
    #[error("{0}")]
    Domain(String),
    #[error("cannot factorize input at position {0} into a, ab, abb blocks")]
    Factorization(usize),
    #[error("quadrature did not converge (estimated residual {residual:e})")]
    Quadrature { value: f64, residual: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn guard(what: &'static str, requested: u64, limit: u64) -> Result<()> {
    if requested > limit {
        Err(Error::SizeGuard {
            what,
            requested,
            limit,
        })
    } else {
        Ok(())
    }
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
