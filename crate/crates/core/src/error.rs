use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree {0} unsupported")]
    BadDegree(usize),
    #[error("p = {0} is a bad prime for this model")]
    BadPrime(u64),
    #[error("q = {0} not coprime to 3")]
    BadCharacteristic(u64),
    #[error("fibre at {0} is identically degenerate (bad prime leaked through)")]
    DegenerateFibre(String),
    #[error("additive fibre at {0} where a multiplicative one was expected")]
    UnexpectedAdditive(String),
    #[error("eigenspace trace not in Z[zeta]: {0} (upstream counting bug)")]
    NonIntegralTrace(String),
    #[error("exact division failed: {0}")]
    NonExactDivision(String),
    #[error("no unit of Z[zeta] makes the reflection consistent")]
    NoConsistentUnit,
    #[error("unit determination ambiguous: {0} candidates pass")]
    AmbiguousUnit(usize),
    #[error("degenerate family parameters: {0}")]
    DegenerateFamily(String),
    #[error("k-solving window requires q > 1024, got q = {0}")]
    WindowTooSmall(u64),
    #[error("no integer k satisfies the trace inequality at q = {0}")]
    NoKCandidate(u64),
    #[error("multiple integer k satisfy the trace inequality at q = {0}")]
    AmbiguousK(u64),
    #[error("computed determinant units are not a conductor-9 order-3 character: {0}")]
    BadDeterminantCharacter(String),
    #[error("missing local factor at p = {0}")]
    MissingLocalFactor(u64),
    #[error("minimalization failed at the ramification fibre for q = {0}")]
    RamMinimalization(u64),
    #[error("functional-equation solve is ill-conditioned: {0}")]
    IllConditioned(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
