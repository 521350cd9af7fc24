use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0} rejected")]
    LoopRejected(usize),

    #[error("adjacency of vertex {0} with itself is undefined")]
    LoopQuery(usize),

    #[error("vertex {0} listed twice")]
    DuplicateVertex(usize),

    #[error("{what} exceeds the supported exhaustive range ({limit})")]
    TooLarge { what: String, limit: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("instance carries no witness set")]
    MissingWitness,

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("both flip sides exceed the bound {bound} (|P1| = {first}, |P2| = {second}): {diagnostic}")]
    BoundViolated {
        bound: usize,
        first: usize,
        second: usize,
        diagnostic: String,
    },

    #[error("witness set has {have} vertices, guaranteed mode needs at least {need}")]
    SizeRequirementUnmet { have: usize, need: String },

    #[error("integer exceeds the configured ceiling of {bits} bits")]
    Overflow { bits: u64 },

    #[error("invalid family spec: {0}")]
    InvalidSpec(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("malformed input: {0}")]
    Malformed(String),
}

impl Error {
    /// Stable numeric code, shared with the C ABI. Zero is reserved for success.
    pub fn code(&self) -> i32 {
        match self {
            Error::OutOfRange { .. } => 1,
            Error::LoopRejected(_) => 2,
            Error::LoopQuery(_) => 3,
            Error::DuplicateVertex(_) => 4,
            Error::TooLarge { .. } => 5,
            Error::InvalidParameter(_) => 6,
            Error::MissingWitness => 7,
            Error::PreconditionFailed(_) => 8,
            Error::BoundViolated { .. } => 9,
            Error::SizeRequirementUnmet { .. } => 10,
            Error::Overflow { .. } => 11,
            Error::InvalidSpec(_) => 12,
            Error::InvalidPath(_) => 13,
            Error::Malformed(_) => 14,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Error::OutOfRange { .. } => "OutOfRange",
            Error::LoopRejected(_) => "LoopRejected",
            Error::LoopQuery(_) => "LoopQuery",
            Error::DuplicateVertex(_) => "DuplicateVertex",
            Error::TooLarge { .. } => "TooLarge",
            Error::InvalidParameter(_) => "InvalidParameter",
            Error::MissingWitness => "MissingWitness",
            Error::PreconditionFailed(_) => "PreconditionFailed",
            Error::BoundViolated { .. } => "BoundViolated",
            Error::SizeRequirementUnmet { .. } => "SizeRequirementUnmet",
            Error::Overflow { .. } => "Overflow",
            Error::InvalidSpec(_) => "InvalidSpec",
            Error::InvalidPath(_) => "InvalidPath",
            Error::Malformed(_) => "Malformed",
        }
    }
}
