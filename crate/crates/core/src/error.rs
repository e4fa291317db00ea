use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is not a Latin square: {0}")]
    NotLatinSquare(String),
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("table is not associative: ({x}*{y})*{z} != {x}*({y}*{z})")]
    NotAssociative { x: usize, y: usize, z: usize },
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("raw table of order {order} exceeds the associativity-check limit {limit}; build it from generators")]
    TableTooLarge { order: usize, limit: usize },
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("group order {order} exceeds the cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("the two primes must differ (both are {0})")]
    PrimesEqual(u64),
    #[error("search space q^beta = {size} exceeds the cap {cap}")]
    SearchSpaceExceeded { size: u64, cap: usize },
    #[error("no irreducible action of order {p} over F_{q} found")]
    NoIrreducibleAction { p: u64, q: u64 },
    #[error("prime {p} does not divide the group order {order}")]
    PrimeDoesNotDivideOrder { p: u64, order: usize },
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("element {element} is out of range for a group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("element set over {found} elements used with a group of order {expected}")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("group is not minimal non-abelian")]
    NotMinimalNonAbelian,
    #[error("structure violation: {0}")]
    StructureViolation(String),
    #[error("decomposition does not match the group: {0}")]
    DecompositionMismatch(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup is trivial")]
    TrivialSubgroup,
    #[error("group is abelian; the non-commuting graph is empty")]
    AbelianGroup,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph has {vertices} vertices, above the naive enumeration limit {limit}")]
    OracleTooLarge { vertices: usize, limit: usize },
    #[error("not an AC-group: centralizer of non-central element {element} is non-abelian")]
    NotACGroup { element: usize },
    #[error("centralizers of non-central elements do not cover the group")]
    NoCover,
    #[error("group is a p-group (p = {p}); the PQ covering argument does not apply")]
    IsPGroup { p: u64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
