use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("enumeration exceeded the order cap of {cap}")]
    CapExceeded { cap: usize },

    #[error("enumeration on {degree} points exceeds the storage budget")]
    StorageExceeded { degree: usize },

    #[error("invalid permutation on {degree} points: {reason}")]
    InvalidPermutation { degree: usize, reason: String },

    #[error("matrix {index} is singular modulo {p}")]
    SingularMatrix { index: usize, p: u64 },

    #[error("invalid matrix input: {0}")]
    InvalidMatrix(String),

    #[error("element is not in the group: {0:?}")]
    ElementNotInGroup(Vec<u32>),

    #[error("subgroup is not normal: conjugating {element:?} by {by:?} leaves it")]
    NotNormal { element: Vec<u32>, by: Vec<u32> },

    #[error("assignment does not extend to a homomorphism: {0}")]
    NotAHomomorphism(HomWitness),

    #[error("expected {expected} generator images, got {got}")]
    ImageCountMismatch { expected: usize, got: usize },

    #[error("invalid rank {rank} for series {series}")]
    InvalidRank { series: String, rank: u32 },

    #[error("characteristic {0} is not a prime >= 5")]
    InvalidEll(u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("the two characteristics must differ (both are {0})")]
    SamePrime(u64),

    #[error("n = {n} is out of range: {reason}")]
    OutOfRange { n: u64, reason: String },

    #[error("characteristic {p} divides the quotient order {order}")]
    CharacteristicDividesOrder { p: u64, order: usize },

    #[error("inertia at place {place} (p = {p}) maps to a subgroup of order {order} under index {label}, not a {label}-group")]
    SemistabilityViolated {
        place: String,
        p: u64,
        label: String,
        order: usize,
    },

    #[error("homomorphism {0} is not surjective onto its codomain")]
    NotSurjective(String),

    #[error("family label {0:?} is not a prime")]
    InvalidLabel(String),

    #[error("family has no homomorphisms")]
    EmptyFamily,

    #[error("homomorphism domains differ from the family domain")]
    DomainMismatch,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Stable name of the failed precondition, for scripts.
    pub fn code(&self) -> &'static str {
        match self {
            Error::CapExceeded { .. } => "CapExceeded",
            Error::StorageExceeded { .. } => "StorageExceeded",
            Error::InvalidPermutation { .. } => "InvalidPermutation",
            Error::SingularMatrix { .. } => "SingularMatrix",
            Error::InvalidMatrix(_) => "InvalidMatrix",
            Error::ElementNotInGroup(_) => "ElementNotInGroup",
            Error::NotNormal { .. } => "NotNormal",
            Error::NotAHomomorphism(_) => "NotAHomomorphism",
            Error::ImageCountMismatch { .. } => "ImageCountMismatch",
            Error::InvalidRank { .. } => "InvalidRank",
            Error::InvalidEll(_) => "InvalidEll",
            Error::NotPrime(_) => "NotPrime",
            Error::SamePrime(_) => "SamePrime",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::CharacteristicDividesOrder { .. } => "CharacteristicDividesOrder",
            Error::SemistabilityViolated { .. } => "SemistabilityViolated",
            Error::NotSurjective(_) => "NotSurjective",
            Error::InvalidLabel(_) => "InvalidLabel",
            Error::EmptyFamily => "EmptyFamily",
            Error::DomainMismatch => "DomainMismatch",
            Error::Parse(_) => "ParseError",
            Error::Io(_) => "IoError",
        }
    }
}

/// Why a generator assignment failed to define a homomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomWitness {
    /// Two pairs `(x, a)` and `(x, b)` with `a != b` lie in the generated graph.
    GraphCollision {
        domain: Vec<u32>,
        first: Vec<u32>,
        second: Vec<u32>,
    },
    /// `f(x) f(y) != f(xy)`.
    Multiplicativity { x: Vec<u32>, y: Vec<u32> },
    /// An image is not an element of the codomain.
    ImageOutsideCodomain { image: Vec<u32> },
}

impl std::fmt::Display for HomWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HomWitness::GraphCollision {
                domain,
                first,
                second,
            } => {
                write!(f, "{domain:?} would map to both {first:?} and {second:?}")
            }
            HomWitness::Multiplicativity { x, y } => {
                write!(f, "multiplicativity fails at ({x:?}, {y:?})")
            }
            HomWitness::ImageOutsideCodomain { image } => {
                write!(f, "image {image:?} is not in the codomain")
            }
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
