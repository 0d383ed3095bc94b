use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("singular matrix")]
    SingularMatrix,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("integral space is not one-dimensional (dim {0})")]
    IntegralSpaceNotOneDimensional(usize),
    #[error("{0} is not a primitive root of the requested order")]
    RootOrderMismatch(String),
    #[error("unsupported group spec: {0}")]
    UnsupportedSpec(String),
    #[error("not an isomorphism: {0}")]
    NotIsomorphism(String),
    #[error("not a Hopf algebra map: {0}")]
    NotHopfMap(String),
    #[error("not an algebra map: {0}")]
    NotAlgebraMap(String),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("parse error: {0}")]
    ParseError(String),
    #[error("braid letter {0} out of range for {1} strands")]
    LetterOutOfRange(i32, usize),
    #[error("braid letters must be nonzero")]
    ZeroLetter,
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("tuple length {0} does not match strand count {1}")]
    LengthMismatch(usize, usize),
    #[error("enumeration too large: {0}")]
    EnumerationTooLarge(String),
    #[error("Drinfel'd element inverse check failed")]
    InverseCheckFailed,
    #[error("categorical trace disagrees with the closed form: {0}")]
    ClosedFormMismatch(String),
    #[error("schema error at {location}: {message}")]
    SchemaError { location: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
