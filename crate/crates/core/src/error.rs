use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("generators have gcd {0} > 1, so the semigroup has infinitely many gaps")]
    NonCoprimeGenerators(u64),
    #[error("{0} is not an element of the semigroup")]
    NotAnElement(u64),
    #[error("shift {0} is not a positive element of the semigroup")]
    ShiftNotInSemigroup(u64),
    #[error("at least one shift is required")]
    EmptyShifts,
    #[error("field size q = {0} must be at least 2")]
    InvalidFieldSize(u64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("bit-set window of {required} bits exceeds the limit of {limit} bits")]
    MemoryGuard { required: u64, limit: u64 },
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("genus {genus} exceeds the enumeration cap {cap}")]
    GenusCapExceeded { genus: u32, cap: u32 },
    #[error("genus {genus} exceeds the brute-force oracle cap {cap}")]
    OracleCapExceeded { genus: u32, cap: u32 },
    #[error("generators {0:?} are not telescopic in the supplied order")]
    NotTelescopic(Vec<u64>),
    #[error("telescopic order search is capped at {cap} generators, got {got}")]
    TooManyGenerators { got: usize, cap: usize },
    #[error("degenerate level: {0}")]
    DegenerateLevel(String),
}

impl Error {
    /// True for errors caused by a resource limit rather than bad input.
    pub fn is_resource_guard(&self) -> bool {
        matches!(
            self,
            Error::MemoryGuard { .. }
                | Error::Overflow(_)
                | Error::GenusCapExceeded { .. }
                | Error::OracleCapExceeded { .. }
                | Error::TooManyGenerators { .. }
        )
    }
}
