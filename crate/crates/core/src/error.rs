use thiserror::Error;

/// Errors produced by poset construction, element parsing and the checker
/// operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("element `{key}` does not belong to the poset `{poset}`")]
    FamilyMismatch { poset: String, key: String },

    #[error("invalid element key `{input}`: {reason}")]
    KeyParse { input: String, reason: String },

    #[error("invalid number `{0}`")]
    NumberParse(String),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("invalid poset family `{input}`: {reason}")]
    FamilyParse { input: String, reason: String },

    #[error("poset file {path}: {reason}")]
    PosetFile { path: String, reason: String },

    #[error("frontier of `{poset}` at bound {bound} would contain more than {limit} elements")]
    FrontierTooLarge {
        poset: String,
        bound: u32,
        limit: usize,
    },

    #[error("down-set of `{key}` in `{poset}` is too large to enumerate")]
    DownSetTooLarge { poset: String, key: String },

    #[error("poset `{0}` has no minimum element")]
    NoBottom(String),

    #[error("candidate set must not be empty")]
    EmptyCandidateSet,

    #[error("candidate set must have one or two elements, got {0}")]
    BadCandidateSetSize(usize),

    #[error("function is identically zero")]
    ZeroFunction,

    #[error("frontier ladder must be nonempty and strictly increasing, got {0:?}")]
    BadLadder(Vec<u32>),

    #[error("bound {bound} is too small for `{what}` (minimum {min})")]
    BoundTooSmall { what: String, bound: u32, min: u32 },

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
