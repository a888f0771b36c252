use pmcount::Error;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error("invalid input spec {0}")]
    Spec(String),

    #[error("{0}")]
    Structure(String),
}

pub mod exit {
    pub const OK: u8 = 0;
    pub const OTHER: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const PRECONDITION: u8 = 3;
    pub const SIZE_LIMIT: u8 = 4;
    pub const VIOLATION: u8 = 5;
    pub const NUMERICAL: u8 = 6;
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Spec(_) => exit::INPUT,
            CliError::Structure(_) => exit::PRECONDITION,
            CliError::Core(e) => match e {
                Error::Parse { .. } => exit::INPUT,
                Error::InvalidSize(_)
                | Error::InvalidGraph(_)
                | Error::NotATree(_)
                | Error::InvalidCycle(_)
                | Error::OddCycle(_)
                | Error::Precondition(_)
                | Error::Domain(_) => exit::PRECONDITION,
                Error::SizeLimit { .. } => exit::SIZE_LIMIT,
                Error::NumericalConsistency(_)
                | Error::NotPerfectSquare(_)
                | Error::NotPfaffian(_)
                | Error::NotSquarish(_) => exit::NUMERICAL,
                Error::Internal(_) => exit::OTHER,
            },
        }
    }

    /// Short machine-readable category for JSON error reports.
    pub fn kind(&self) -> &'static str {
        match self.exit_code() {
            exit::INPUT => "input",
            exit::PRECONDITION => "precondition",
            exit::SIZE_LIMIT => "size-limit",
            exit::NUMERICAL => "numerical",
            _ => "internal",
        }
    }
}
