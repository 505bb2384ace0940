use std::fmt;
use std::process::ExitCode;

use rooted_minors::Error;

/// Everything that ends a command with a nonzero exit status.
#[derive(Debug)]
pub enum Failure {
    /// Bad arguments, unreadable or malformed input, unmet precondition.
    Usage(String),
    /// A checked invariant does not hold.
    Violation(String),
    /// A search guard refused the input.
    Resource(String),
}

impl Failure {
    pub fn code(&self) -> ExitCode {
        ExitCode::from(match self {
            Failure::Violation(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Resource(_) => 3,
        })
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Violation(m) | Failure::Resource(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceLimit(_) => Failure::Resource(e.to_string()),
            Error::Construction(_) => Failure::Violation(e.to_string()),
            Error::InvalidArgument(_) | Error::Precondition(_) | Error::Parse { .. } => {
                Failure::Usage(e.to_string())
            }
        }
    }
}

pub type Outcome<T = ()> = Result<T, Failure>;

pub fn usage<T>(msg: impl Into<String>) -> Outcome<T> {
    Err(Failure::Usage(msg.into()))
}

pub fn violation<T>(msg: impl Into<String>) -> Outcome<T> {
    Err(Failure::Violation(msg.into()))
}
