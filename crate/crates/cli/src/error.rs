use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const IO: u8 = 1;
    pub const INVALID_ARGS: u8 = 2;
    pub const CONTRACT: u8 = 3;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid arguments: {0}")]
    Invalid(String),
    #[error("numerical contract failed: {0}")]
    Contract(String),
    #[error(transparent)]
    Library(#[from] genent::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use genent::Error as E;
        match self {
            CliError::Invalid(_) => exit::INVALID_ARGS,
            CliError::Contract(_) => exit::CONTRACT,
            CliError::Io(_) => exit::IO,
            CliError::Library(e) => match e {
                E::InvalidParameter(_)
                | E::OutOfScope(_)
                | E::SizeLimit { .. }
                | E::InvalidSubsystem(_) => exit::INVALID_ARGS,
                _ => exit::CONTRACT,
            },
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
