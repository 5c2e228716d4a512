use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial is not monic")]
    NotMonic,

    #[error("element {0} lies outside the valuation ring")]
    OutsideValuationRing(String),

    #[error("division by an element of positive valuation")]
    DivisionByNonUnit,

    #[error("division by zero")]
    DivisionByZero,

    #[error("not a Nagata polynomial: {0}")]
    NotNagata(String),

    #[error("not a special polynomial: {0}")]
    NotSpecial(String),

    #[error("index {0} does not start an isolated slope")]
    NotIsolated(usize),

    #[error("precision exhausted: {required} needed, maximum is {max}")]
    PrecisionExhausted { required: u64, max: u32 },

    #[error("invalid setup: axiom `{axiom}` fails on {element}")]
    InvalidSetup { axiom: String, element: String },

    #[error("{0} is not in the prime generated by the setup's prime generators")]
    NotInPrime(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
