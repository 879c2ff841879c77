use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported prime {0}: only 2, 3 and 5 are supported")]
    UnsupportedPrime(u32),
    #[error("prime mismatch: {0} vs {1}")]
    PrimeMismatch(u32, u32),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unknown group family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameters for `{family}`: {reason}")]
    InvalidParams { family: String, reason: String },
    #[error("group order {order} exceeds the limit {limit}")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("order {order} is not a power of {p}")]
    NotPGroup { p: u32, order: usize },
    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),
    #[error("table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("group or algebra is not abelian/commutative")]
    NotAbelian,
    #[error("element {0} is out of range")]
    ElementOutOfRange(usize),

    #[error("direct factor oracle cap exceeded: |G| = {order} > {cap}")]
    OracleCapExceeded { order: usize, cap: usize },
    #[error("enumeration cap exceeded: {size} > {cap}")]
    EnumerationCapExceeded { size: u128, cap: u128 },

    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not contained: {0}")]
    NotContained(String),
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("not a subalgebra: {0}")]
    NotSubalgebra(String),
    #[error("no retraction onto the given subgroup exists")]
    NoRetraction,
    #[error("tensor factorization check `{check}` failed: {detail}")]
    Factorization { check: &'static str, detail: String },
    #[error("Λ map is not well defined: {0}")]
    LambdaNotWellDefined(String),
    #[error("no group basis found: {0}")]
    GroupBasisNotFound(String),
    #[error("verification failed at step `{step}`: {detail}")]
    Verification { step: &'static str, detail: String },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Whether the error signals an exceeded enumeration or oracle limit.
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::OracleCapExceeded { .. } | Error::EnumerationCapExceeded { .. })
    }
}
