use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("constant exponent overflow")]
    ExponentOverflow,

    #[error("scalar `{0}` is not invertible")]
    NotInvertible(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("monomial `{0}` mixes position generators with Lorentz generators")]
    MixedMonomial(String),

    #[error("generator {generator} is not admissible in the {sector} sector")]
    Sector { generator: String, sector: String },

    #[error("rewriting did not terminate after {steps} steps (last monomial `{monomial}`)")]
    NonTermination { steps: usize, monomial: String },

    #[error("pairing error: {0}")]
    Pairing(String),

    #[error("state is missing expectations for: {}", .0.join(", "))]
    IncompleteState(Vec<String>),

    #[error("{0}")]
    Eval(String),

    #[error("syntax error at line {line}, column {column}: {message} (expected {})", .expected.join(" | "))]
    Syntax { line: usize, column: usize, message: String, expected: Vec<String> },
}

pub type Result<T> = std::result::Result<T, Error>;
