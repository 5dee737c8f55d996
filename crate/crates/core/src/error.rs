use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative exponent {0} in integer power")]
    NegativeExponent(i64),

    #[error("coefficient at z^{index} is negative ({value})")]
    NegativeCoefficient { index: usize, value: String },

    #[error("not symmetric about {center}: coefficients at z^{i} and z^{j} differ")]
    NotSymmetric { center: usize, i: usize, j: usize },

    #[error("polynomial degree {degree} exceeds symmetry center {center}")]
    DegreeExceedsCenter { degree: usize, center: usize },

    #[error("the zero polynomial has no root certificate")]
    ZeroPolynomial,

    #[error("index map is not weakly increasing at position {0}")]
    NotMonotone(usize),

    #[error("empty input sequence")]
    EmptySequence,

    #[error("sequence is not interlacing")]
    NotInterlacing,

    #[error("weight vector must be nonempty with positive entries")]
    InvalidWeights,

    #[error("{what} out of range: {value} (allowed {allowed})")]
    OutOfRange {
        what: &'static str,
        value: String,
        allowed: String,
    },

    #[error("invalid {what}: {detail}")]
    Invalid { what: &'static str, detail: String },

    #[error("scale guard exceeded: {bound}")]
    ScaleGuard { bound: String },
}

impl Error {
    pub(crate) fn out_of_range(
        what: &'static str,
        value: impl ToString,
        allowed: impl ToString,
    ) -> Self {
        Error::OutOfRange {
            what,
            value: value.to_string(),
            allowed: allowed.to_string(),
        }
    }

    pub(crate) fn invalid(what: &'static str, detail: impl ToString) -> Self {
        Error::Invalid {
            what,
            detail: detail.to_string(),
        }
    }

    pub(crate) fn guard(bound: impl ToString) -> Self {
        Error::ScaleGuard {
            bound: bound.to_string(),
        }
    }
}
