use thiserror::Error;

use crate::poly::Point;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative exponent {0} in polynomial power")]
    NegativeExponent(i64),
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("modulus {0} is not irreducible over the rationals")]
    ReducibleModulus(String),
    #[error("the zero derivation has no singular-point certificate")]
    ZeroDerivation,
    #[error("base point {0} is singular: D(x) and D(y) both vanish there")]
    SingularBasePoint(Box<Point>),
    #[error("truncation order must be at least 1")]
    ZeroOrder,
    #[error("precondition failed: the map does not commute with the derivation")]
    NotCommuting,
    #[error("precondition failed: the map does not fix the point {0}")]
    PointNotFixed(Box<Point>),
    #[error("invalid parameter for {family}: {reason}")]
    InvalidParameter {
        family: &'static str,
        reason: String,
    },
    #[error("the equivalence check requires a nonzero coefficient a")]
    ZeroLinearCoefficient,
    #[error("the trivial isotropy group carries no group law")]
    TrivialGroup,
}
