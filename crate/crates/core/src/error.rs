use thiserror::Error;

use crate::weights::Weight;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse weight `{0}`: expected integers `a,b,c`")]
    ParseWeight(String),

    #[error("cannot parse `{0}`")]
    Parse(String),

    #[error("p = {0} is not a prime >= 5")]
    InvalidPrime(i64),

    #[error("f = {0} is invalid: need f >= 1 with p^f representable")]
    InvalidDegree(usize),

    #[error("weight tuple has {got} parts, expected f = {expected}")]
    TupleLength { expected: usize, got: usize },

    #[error("index j0 = {j0} out of range for f = {f}")]
    IndexOutOfRange { j0: usize, f: usize },

    #[error("weight {weight} is not {p}-restricted")]
    NotRestricted { weight: Weight, p: i64 },

    #[error("weight {weight} lies outside X1(T) ∪ C(3) ∪ C(3') ∪ C(p) for p = {p}")]
    OutsideTiltingDomain { weight: Weight, p: i64 },

    #[error("character is not an integer combination of Weyl characters (residual at {0})")]
    NotInWeylSpan(Weight),

    #[error("weights {0} and {1} cannot be shifted to nonnegative entries simultaneously")]
    NoCommonShift(Weight, Weight),

    #[error("requested {requested} items, above the configured limit of {limit}")]
    ResourceBound { requested: u128, limit: u128 },
}

impl Error {
    /// Errors caused by mathematically out-of-domain input, as opposed to
    /// malformed arguments.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::NotRestricted { .. }
                | Error::OutsideTiltingDomain { .. }
                | Error::NotInWeylSpan(_)
                | Error::NoCommonShift(..)
                | Error::ResourceBound { .. }
        )
    }
}
