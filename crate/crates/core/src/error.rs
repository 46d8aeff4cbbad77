use num_bigint::BigInt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("h^2 must be an even integer >= 2, got {0}")]
    InvalidSurface(BigInt),
    #[error("rank must be positive, got {0}")]
    NonPositiveRank(BigInt),
    #[error("number of points k must be positive")]
    NonPositivePoints,
    #[error("NS(X^[k]) has rank two only for k >= 2, got k = {0}")]
    TooFewPoints(u64),
    #[error("c1 must be the primitive class h (m = 1), got m = {0}")]
    NotPrimitive(BigInt),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(&'static str),
    #[error("inconsistent certificate: h^0(E ⊗ I_Z) = {0} is negative")]
    InconsistentCertificate(BigInt),
    #[error("image rank r + s - rk = {0} is negative")]
    NegativeRank(BigInt),
    #[error("ext^1 = {0} would be negative; no such pair of stable sheaves exists")]
    NegativeExt(BigInt),
    #[error("moduli space is empty: v^2 = {0} < -2")]
    EmptyModuli(BigInt),
    #[error("same-object Ext table requires equal Mukai vectors")]
    MismatchedVectors,
    #[error("invalid query: {0}")]
    InvalidQuery(String),
}
