use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("divisor is the zero polynomial")]
    ZeroDivisor,

    #[error("divisor leading coefficient {0} is not a unit")]
    NonUnitDivisor(String),

    #[error("expected a polynomial over the integers, got one reduced mod {0}")]
    ModularInput(u64),

    #[error("expected a polynomial reduced mod a prime")]
    NeedsModulus,

    #[error("conditions failed: {0}")]
    ConditionsFailed(String),

    #[error("classification cross-check failed: {0}")]
    CrossCheckFailed(String),

    #[error("degree window [{a}, {b}] is narrower than 8")]
    WindowTooNarrow { a: i64, b: i64 },

    #[error("window [{a}, {b}] is too wide for brute force (limit {limit} coefficients)")]
    WindowTooWide { a: i64, b: i64, limit: usize },

    #[error("refined reference set needs a prime p >= 5, got {0}")]
    PrimeTooSmall(u64),

    #[error("PD code: {0}")]
    PdLabels(String),

    #[error("diagram has {0} components; only knots are supported")]
    MultiComponent(usize),

    #[error("PD code orientation is inconsistent at crossing {0}")]
    InconsistentOrientation(usize),

    #[error("writhe-corrected bracket has exponent {0} not divisible by 4")]
    NonIntegralExponent(i64),

    #[error("braid word contains a zero generator")]
    ZeroGenerator,

    #[error("unknown knot {0:?}")]
    UnknownKnot(String),

    #[error("knot table is missing required knots: {}", .0.join(", "))]
    MissingKnots(Vec<String>),

    #[error("duplicate knot name {0:?}")]
    DuplicateKnot(String),

    #[error("knot {name}: computed Jones polynomial {computed} matches neither {expected} nor its mirror")]
    ExpectedMismatch {
        name: String,
        computed: String,
        expected: String,
    },

    #[error("knot {name}: computed Jones polynomial {jones} violates the root-of-unity conditions")]
    RecordConditions { name: String, jones: String },

    #[error("knot table row {row}: {msg}")]
    Record { row: usize, msg: String },

    #[error("csv: {0}")]
    Csv(String),

    #[error("io: {0}")]
    Io(String),
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Csv(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
