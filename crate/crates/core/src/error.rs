use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed rational literal `{0}`")]
    Rational(String),
    #[error("malformed document: {0}")]
    Document(String),
    #[error("unsupported schema version {0}")]
    SchemaVersion(u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("unknown named constant `{0}`")]
    UnknownConstant(String),
    #[error("variable count mismatch: {0} vs {1}")]
    NvarsMismatch(usize, usize),
    #[error("expected {expected} images, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("variable index {index} out of range for {nvars} variables")]
    VarOutOfRange { index: usize, nvars: usize },
    #[error("too many variables: {0}")]
    TooManyVariables(usize),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix too large for cofactor expansion: {0}")]
    MatrixTooLarge(usize),
    #[error("zero input")]
    ZeroInput,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("{0} is not a prime congruent to 1 mod 60")]
    BadPrime(u64),
    #[error("coefficient denominator divisible by {0}")]
    BadReduction(u64),
    #[error("symmetric power degree must be >= 1, got {0}")]
    BadDegree(usize),
    #[error("group closure exceeded {0} elements")]
    ClosureTooLarge(usize),
    #[error("closure size mismatch: {0} vs {1}")]
    ClosureSizeMismatch(usize, usize),
    #[error("non-integral invariant dimension at degree {0}")]
    NonIntegral(usize),
    #[error("no consistent parameter for the representative")]
    NoConsistentParameter,
    #[error("point is not singular")]
    NotSingular,
    #[error("no coefficient makes the tangent-line substitution vanish")]
    NoSolution,
    #[error("identity failed: {0}")]
    IdentityFailed(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

pub type Result<T> = std::result::Result<T, Error>;
