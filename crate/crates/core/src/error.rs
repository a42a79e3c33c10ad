use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument outside the operation's mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A value that does not fit in 64 bits.
    #[error("overflow: {0}")]
    Overflow(String),

    /// Work that would exceed the configured sieve or primality budget.
    #[error("budget exceeded: {what} needs {needed}, budget is {budget}")]
    Budget {
        what: &'static str,
        needed: u64,
        budget: u64,
    },

    /// A sieve-cache file that failed validation.
    #[error("invalid sieve cache: {0}")]
    Cache(String),

    /// An even number for which no prime pair was found inside the budget.
    #[error("no Goldbach pair found for {0}: counterexample candidate")]
    CounterexampleCandidate(u64),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for errors caused by resource limits rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Budget { .. } | Error::Io(_))
    }
}
