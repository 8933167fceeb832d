use thiserror::Error;

use crate::galois::ValidationReport;
use crate::lattice::BasisTag;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Input parameters outside the supported range.
    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("basis mismatch: expected {expected}, found {found}")]
    Basis { expected: BasisTag, found: BasisTag },

    /// The bounded search found new solutions on the enlarged shell.
    #[error("search box too small: witness {witness:?} appears only on the enlarged box")]
    BoxTooSmall { witness: Vec<i64> },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid Galois action: {0}")]
    InvalidAction(ValidationReport),

    #[error("ell = {ell} is infeasible for (m, n) = ({m}, {n}); feasible values: {feasible:?}")]
    Infeasible {
        m: i64,
        n: i64,
        ell: i64,
        feasible: Vec<i64>,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("size guard exceeded: {size} curves (limit {limit})")]
    SizeGuard { size: usize, limit: usize },

    /// An invariant that must hold by construction was violated.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit code for this error: 2 for internal invariant violations, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Internal(_) => 2,
            _ => 1,
        }
    }
}
