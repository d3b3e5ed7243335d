use invspec_core::Error;

pub const EXIT_INPUT: u8 = 2;
pub const EXIT_NUMERICAL: u8 = 3;
pub const EXIT_CHECK_FAILED: u8 = 4;
pub const EXIT_NOT_DELZANT: u8 = 5;
pub const EXIT_DEGENERATE_DIRECTION: u8 = 6;
pub const EXIT_INVALID_GEOMETRY: u8 = 7;

#[derive(Debug, thiserror::Error)]
pub enum Failure {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(e) if e.is_numerical() => EXIT_NUMERICAL,
            Failure::Core(Error::DegenerateDirection { .. }) => EXIT_DEGENERATE_DIRECTION,
            Failure::Core(Error::InvalidPotential(_) | Error::InvalidProfile(_)) => {
                EXIT_INVALID_GEOMETRY
            }
            Failure::Core(_) | Failure::Io { .. } | Failure::Usage(_) => EXIT_INPUT,
        }
    }
}
