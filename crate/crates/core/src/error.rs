use thiserror::Error;

use crate::algebra::GeneratorId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid half-integer `{0}`: expected `k` or `k/2` with a positive value")]
    ParseHalfInteger(String),
    #[error("invalid rational `{0}`: expected `p/q` or `p`")]
    ParseRational(String),
    #[error("the centrally extended algebra needs l in N - 1/2; l = {0} is an integer and those algebras have no nontrivial central extension")]
    ExtendedIntegerL(String),
    #[error("generator {0} does not belong to this algebra")]
    ForeignGenerator(GeneratorId),
    #[error("ad {0} is not nilpotent")]
    NotNilpotent(GeneratorId),
    #[error("elements live in different enveloping algebra contexts")]
    ContextMismatch,
    #[error("negative power of {0}, which is not invertible in this context")]
    NotInvertible(GeneratorId),
    #[error("straightening would exceed the monomial degree cap ({degree} > {cap})")]
    DegreeCap { degree: u64, cap: u64 },
    #[error("{0}")]
    Precondition(String),
    #[error("the central charge must be nonzero")]
    ZeroCentralCharge,
    #[error("module shape mismatch: {0}")]
    ModuleMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
