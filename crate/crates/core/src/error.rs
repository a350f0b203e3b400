//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("polynomial is not homogeneous: found terms of degree {0} and {1}")]
    NotHomogeneous(usize, usize),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("sampled line lies inside the curve")]
    DegenerateLine,
    #[error("modular ranks disagree after retries")]
    PrimeDisagreement,
    #[error("curve validation failed: {0}")]
    Validation(String),
    #[error("Hilbert function has no plateau at the degree bound (tail {0:?}); input may be non-reduced")]
    NoPlateau(Vec<usize>),
    #[error("Jacobian module dimension came out negative in degree {k}: {value}")]
    NegativeDimension { k: usize, value: i64 },
    #[error("coincidence threshold cross-check failed: formula gives {formula}, direct scan gives {direct}")]
    CrossCheckFailure { formula: usize, direct: usize },
    #[error("syzygy components have mismatched degrees")]
    DegreeMismatch,
    #[error("ideal is not zero-dimensional; singularities are not isolated")]
    NotFinite,
    #[error("Milnor quotient changed between exponents 2 and 3: {mu2} vs {mu3}")]
    RobustnessFailure { mu2: usize, mu3: usize },
    #[error("no coordinate change moved all singular points into the affine chart after {0} attempts")]
    ChartFailure(usize),
    #[error("cyclotomic multiplicity of order {order} is negative ({mult})")]
    NegativeMultiplicity { order: u64, mult: i64 },
    #[error("local monodromy has a root at t = +/-1 (order {0}); Puiseux data is inconsistent")]
    UnitRootInMonodromy(u64),
    #[error("Betti table is inconsistent: {0}")]
    InconsistentTable(String),
    #[error("exponents contradict the Tjurina number: {0}")]
    ExponentMismatch(String),
    #[error("arrangement is not nearly free, so the factorization test does not apply")]
    NotNearlyFree,
    #[error("unknown catalog entry: {0}")]
    UnknownName(String),
    #[error("ideal input rejected: {0}")]
    BadIdeal(String),
    #[error("degree {0} exceeds the configured bound {1}")]
    DegreeBound(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
