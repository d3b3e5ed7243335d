use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// Cholesky breakdown of the denominator form.
    #[error("matrix is not positive definite (pivot {pivot} = {value:e})")]
    NotPositiveDefinite { pivot: usize, value: f64 },

    #[error("quadrature did not reach tolerance {tol:e} within {cap} points")]
    QuadratureCap { tol: f64, cap: usize },

    #[error("{0} did not converge")]
    NoConvergence(&'static str),

    #[error("not a lattice polytope: {0}")]
    NotLattice(String),

    #[error("degenerate direction: support width {width:e}")]
    DegenerateDirection { width: f64 },

    #[error("point is not in the interior of the polytope (margin {margin:e})")]
    OutsideInterior { margin: f64 },

    #[error("invalid potential: {0}")]
    InvalidPotential(String),

    #[error("invalid profile: {0}")]
    InvalidProfile(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// True for failures of a numerical method, as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NotPositiveDefinite { .. }
                | Error::QuadratureCap { .. }
                | Error::NoConvergence(_)
        )
    }
}
