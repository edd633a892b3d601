use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // field construction
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u32),
    #[error("modulus is reducible over Z_{0}")]
    ReducibleModulus(u32),
    #[error("modulus has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("modulus is not monic")]
    ModulusNotMonic,
    #[error("field of order {0} exceeds the supported maximum of 256")]
    FieldTooLarge(u64),
    #[error("coefficient {value} out of range for characteristic {p}")]
    CoefficientOutOfRange { value: u64, p: u32 },

    // arithmetic
    #[error("operands live in different fields")]
    FieldMismatch,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("gcd(0, 0) is undefined")]
    BothZero,
    #[error("argument must be a nonzero polynomial")]
    ZeroArgument,
    #[error("moduli {0} and {1} are not coprime")]
    NotCoprime(usize, usize),

    // matrices
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("cofactor determinant limited to size 8, got {0}")]
    TooLarge(usize),
    #[error("minor size {k} invalid for a {rows}x{cols} matrix")]
    BadSize { k: usize, rows: usize, cols: usize },
    #[error("all {0}x{0} minors vanish")]
    AllMinorsZero(usize),

    // codes
    #[error("hull route and Gram-determinant route disagree on LCD (hull dim {hull_dim}, det nonzero {det_nonzero})")]
    InternalDisagreement { hull_dim: usize, det_nonzero: bool },
    #[error("enumeration needs {required} codewords, cap is {cap}")]
    CapExceeded { required: u128, cap: u128 },

    // multi-twisted layer
    #[error("word has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("shift constant of block {0} is zero")]
    ZeroShift(usize),
    #[error("invalid code description: {0}")]
    InvalidSpec(String),
    #[error("dual basis row {0} is not invariant under the inverse shift")]
    InvarianceViolation(usize),
    #[error("dimension formula gives {formula}, rank closure gives {rank}")]
    FormulaRankDisagreement { formula: usize, rank: usize },
    #[error("quotients (x^m_{0} - l_{0})/g_{0} and (x^m_{1} - l_{1})/g_{1} are not coprime")]
    ConditionNotMet(usize, usize),
    #[error("direct-sum certificate failed: {0}")]
    CertificateFailure(String),
    #[error("projection of block {0} disagrees with its constacyclic code")]
    ProjectionMismatch(usize),

    // parsing
    #[error("bad literal {input:?} at column {column}: {message}")]
    Literal { input: String, column: usize, message: String },
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{field}: {message}")]
    Semantic { field: String, message: String },
}
