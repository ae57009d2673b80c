use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a braid needs at least 2 strands, got {0}")]
    TooFewStrands(usize),

    #[error("generator index {index} is out of range for {strands} strands (expected 1..={max})", max = strands - 1)]
    GeneratorOutOfRange { index: i64, strands: usize },

    #[error("0 is not a braid generator")]
    ZeroGenerator,

    #[error("cannot parse {0:?} as a signed generator index")]
    BadToken(String),

    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("matrix has determinant {0}, not a unit of the integers")]
    NotUnimodular(String),

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("cannot evaluate a Laurent polynomial with negative exponents at 0")]
    EvalAtZero,

    #[error("division by zero polynomial")]
    DivisionByZero,

    #[error("polynomial division leaves a nonzero remainder")]
    InexactDivision,

    #[error("{0} strands: Alexander evaluation at -1 requires an odd strand count")]
    EvenStrands(usize),

    #[error("closure has {0} components, expected a knot")]
    NotAKnot(usize),

    #[error("matrix does not fix the kernel line of the intersection form")]
    KernelNotFixed,

    #[error("symplectic quotient needs an odd-dimensional representation, got dimension {0}")]
    NoKernel(usize),

    #[error("entry polynomial has {expected} variables but the matrix has {got} entries")]
    Arity { expected: usize, got: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("modulus must be an odd prime, got {0}")]
    ModulusTooSmall(u64),

    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("representation convention check failed: {0}")]
    Convention(String),

    #[error("enumeration budget exceeded: {needed} elements > budget {budget}")]
    Budget { needed: String, budget: u64 },

    #[error("degenerate crossing could not be resolved after {0} phase perturbations")]
    Degenerate(usize),

    #[error("cannot parse polynomial: {0}")]
    PolyParse(String),

    #[error("integer overflow: {0}")]
    Overflow(&'static str),
}
