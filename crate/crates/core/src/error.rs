use thiserror::Error;

use crate::bitset::VertexSet;
use crate::witness::Witness;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A caller-supplied argument violates an operation's precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A text input (edge list, witness line) failed to parse.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The regular-graph sampler hit its restart cap.
    #[error("random regular sampler gave up after {restarts} restarts")]
    RestartBudget { restarts: usize },

    /// An operation that needs a regular graph got an irregular one.
    #[error("graph is not regular")]
    NotRegular,

    /// The eigensolver did not converge.
    #[error("eigensolver did not converge at index {index} after {iterations} iterations")]
    NoConvergence {
        index: usize,
        iterations: usize,
        /// Diagonal of the partially reduced tridiagonal matrix.
        partial: Vec<f64>,
    },

    /// A computed spectrum failed its post-hoc invariant checks.
    #[error("spectrum residual {residual:e} exceeds tolerance {tolerance:e}")]
    SpectrumResidual { residual: f64, tolerance: f64 },

    /// The exact zero forcing search ran out of closure evaluations.
    #[error(
        "closure budget exhausted after {closures} evaluations: Z <= {upper}, sizes below {excluded_below} excluded"
    )]
    ForcingBudget {
        closures: u64,
        /// Size of the smallest forcing set found so far.
        upper: usize,
        /// A forcing set of size `upper`.
        upper_set: VertexSet,
        /// Every size strictly below this value is known not to admit a forcing set.
        excluded_below: usize,
    },

    /// The witness search ran out of node expansions.
    #[error("witness search budget exhausted after {expanded} expansions, best order {}", best.order())]
    WitnessBudget { expanded: u64, best: Witness },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code for this error: 1 for bad input, 2 for a failed
    /// internal consistency check, 3 for an exhausted budget or iteration cap.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_)
            | Error::Parse { .. }
            | Error::NotRegular
            | Error::Io(_)
            | Error::Json(_) => 1,
            Error::SpectrumResidual { .. } => 2,
            Error::RestartBudget { .. }
            | Error::NoConvergence { .. }
            | Error::ForcingBudget { .. }
            | Error::WitnessBudget { .. } => 3,
        }
    }

    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
