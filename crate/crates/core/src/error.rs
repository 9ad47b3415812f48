use thiserror::Error;

/// Errors raised by the engine. Verification failures are not errors; they are
/// reported as data in the various report types.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("no image given for generator `{0}`")]
    MissingImage(String),

    #[error("unorientable relation `{relation}`: remainder term `{offending}` is not below the leading word")]
    Unorientable { relation: String, offending: String },

    #[error("ambiguous orientation: relations `{first}` and `{second}` share the leading word `{word}` with different remainders")]
    AmbiguousOrientation {
        word: String,
        first: String,
        second: String,
    },

    #[error("relation is zero and cannot be oriented")]
    ZeroRelation,

    #[error("invalid rewrite rule `{0}`")]
    InvalidRule(String),

    #[error("rewriting fuel exhausted after {steps} steps")]
    FuelExhausted { steps: u64 },

    #[error("parse error at offset {pos}: {message}")]
    Parse { pos: usize, message: String },

    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),

    #[error("unknown homomorphism `{0}`")]
    UnknownHomomorphism(String),

    #[error("algebra `{0}` has no rewrite system")]
    NoRewriteSystem(String),

    #[error("alphabet mismatch: expected [{expected}], found [{found}]")]
    AlphabetMismatch { expected: String, found: String },

    #[error("group generator present in `{0}`")]
    GroupGeneratorPresent(String),

    #[error("`{0}` is not in skew normal form")]
    NotSkewNormalForm(String),

    #[error("generator `{0}` has no matrix assigned")]
    UnassignedGenerator(String),

    #[error("matrix dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("presentation file: {0}")]
    PresentationFile(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
