use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group closure exceeds the order cap of {cap} elements")]
    OrderCapExceeded { cap: usize },

    #[error("group of order {order} exceeds the lattice bound {bound}")]
    LatticeBoundExceeded { order: usize, bound: usize },

    #[error("degree {degree} exceeds the census bound {bound}")]
    CensusBoundExceeded { degree: usize, bound: usize },

    #[error("not a subgroup of the given group")]
    NotSubgroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("group is not solvable")]
    NotSolvable,

    #[error("group is not transitive on its points")]
    NotTransitive,

    /// A theorem's hypotheses do not hold on the given instance. This is not a
    /// failure of the theorem; the harness counts it as inapplicable.
    #[error("hypothesis not satisfied: {0}")]
    Inapplicable(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn inapplicable(msg: impl Into<String>) -> Self {
        Error::Inapplicable(msg.into())
    }

    pub fn is_inapplicable(&self) -> bool {
        matches!(self, Error::Inapplicable(_))
    }

    /// True for errors caused by a configured computational bound.
    pub fn is_bound(&self) -> bool {
        matches!(
            self,
            Error::OrderCapExceeded { .. } | Error::LatticeBoundExceeded { .. } | Error::CensusBoundExceeded { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
