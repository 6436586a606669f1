use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("a hypothesis space needs at least one atom")]
    EmptySpace,

    #[error("atom {index} has an empty name")]
    EmptyAtomName { index: usize },

    #[error("duplicate atom name {name:?}")]
    DuplicateAtom { name: String },

    #[error("unknown atom {name:?}")]
    UnknownAtom { name: String },

    #[error("atom index {index} out of range for a space of {n} atoms")]
    AtomIndexOutOfRange { index: usize, n: usize },

    #[error("operands belong to different hypothesis spaces")]
    SpaceMismatch,

    #[error("expected {expected} values, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("negative weight {value} at index {index}")]
    NegativeWeight { index: usize, value: f64 },

    #[error("non-finite weight {value} at index {index}")]
    NonFiniteWeight { index: usize, value: f64 },

    #[error("all weights are zero")]
    ZeroTotal,

    #[error("undefined context: the conditioning statement has zero measure")]
    UndefinedContext,

    #[error("parameter coordinate {coordinate} = {value} is outside the family's domain")]
    Domain { coordinate: usize, value: f64 },

    #[error("numeric failure at coordinate {coordinate}: {reason}")]
    Numeric { coordinate: usize, reason: String },

    #[error("finite-difference step must be positive and finite, got {0}")]
    InvalidStep(f64),

    #[error("probability of atom {index} is zero; the prior density diverges there")]
    Boundary { index: usize },

    #[error("need at least {min} atoms, got {n}")]
    TooFewAtoms { n: usize, min: usize },

    #[error("cannot enumerate 2^{n} statements")]
    TooManyStatements { n: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
