use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A letter does not belong to the alphabet it is used with.
    #[error("letter {0:?} does not belong to the alphabet")]
    UnknownLetter(String),

    /// Forbidden words must be nonempty.
    #[error("forbidden words must be nonempty")]
    EmptyWord,

    /// Pattern sets reject duplicate members.
    #[error("duplicate word {0:?} in pattern set")]
    DuplicateWord(String),

    /// A member of the set contains another member as a contiguous substring.
    #[error("pattern set is not reduced: {container:?} contains {contained:?}")]
    NotReduced {
        container: String,
        contained: String,
    },

    /// A word or pattern set was paired with a different alphabet.
    #[error("pattern set alphabet does not match the requested alphabet")]
    AlphabetMismatch,

    /// Division by the zero rational function.
    #[error("division by zero rational function")]
    DivisionByZero,

    /// Elimination found no nonzero pivot in the given column.
    #[error("singular system: no nonzero pivot in column {column}")]
    Singular { column: usize },

    /// Expanding in 1/z requires deg(num) <= deg(den).
    #[error("series in 1/z requires deg(num) <= deg(den); got {num_degree} > {den_degree}")]
    SeriesOrder {
        num_degree: usize,
        den_degree: usize,
    },

    /// Expanding in z requires a nonzero constant term in the denominator.
    #[error("power series requires a nonzero constant term in the denominator")]
    ZeroConstantTerm,

    /// A counting series produced something other than a nonnegative integer.
    #[error("series entry at n={n} is not a nonnegative integer: {value}")]
    NonIntegerCount { n: usize, value: String },

    /// The brute-force oracle refuses to enumerate this many strings.
    #[error("enumeration budget exceeded: {required} strings > budget {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    /// Step probabilities of a walk must sum to one.
    #[error("step probabilities must sum to 1, got {sum}")]
    BadDistribution { sum: String },

    /// Malformed textual input (problem files, words, rationals, ...).
    #[error("parse error: {0}")]
    Parse(String),

    /// A precondition on an argument was violated.
    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
