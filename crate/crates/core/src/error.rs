use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator set is empty")]
    EmptyGenerators,
    #[error("generators must be positive integers")]
    ZeroGenerator,
    #[error("cannot parse generator list {0:?}: expected comma-separated positive integers")]
    Parse(String),
    #[error("gcd of the generators is {0}, not 1: the monoid is not a numerical semigroup")]
    GcdNotOne(u32),
    #[error("conductor search exceeds the resource limit of {limit}")]
    BoundTooLarge { limit: u64 },
    #[error("the listed set is not a numerical semigroup")]
    NotASemigroup,
    #[error("{0} is not a nonzero element of the semigroup")]
    NotAnElement(u32),
    #[error("{0} is not a minimal generator")]
    NotMinimalGenerator(u32),
    #[error("{{{0}, {}}} is not contained in the minimal generators", .0 + 1)]
    PairNotMinimal(u32),
    #[error("the semigroup is already ℕ")]
    AlreadyFull,
    #[error("bad arguments: {0}")]
    BadArguments(String),
    #[error("not a Coe-semigroup")]
    NotCoe,
    #[error("operation undefined for ℕ")]
    IsFullSemigroup,
    #[error("{0} is not an element of the semigroup")]
    KNotMember(u32),
    #[error("Frobenius number {frobenius} exceeds the bound {bound}")]
    FrobExceeded { frobenius: i64, bound: u32 },
    #[error("genus {genus} exceeds the bound {bound}")]
    GenusExceeded { genus: u32, bound: u32 },
    #[error("family is infinite and no enumeration bound was given")]
    UnboundedInfiniteFamily,
    #[error("not a semigroup with maximal embedding dimension")]
    NotMed,
    #[error("{{{0}, {}}} is not contained in the semigroup", .0 + 1)]
    PairNotInS(u32),
    #[error("the semigroup does not have exactly one odd minimal generator")]
    NotUniqueOddGenerator,
    #[error("{0:?} is not the minimal generating set of a Coe-semigroup of embedding dimension 3")]
    NotEd3Coe(Vec<u32>),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
