use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parameter pole: {0}")]
    ParameterPole(String),
    #[error("pole in Pochhammer ratio ({z})_{r}")]
    PoleError { z: f64, r: i64 },
    #[error("no convergence: {0}")]
    NonConvergence(String),
    #[error("extrapolation stagnated at relative spread {0:e}")]
    DegenerateExtrapolation(f64),
    #[error("denominator vanishes at x = {0}")]
    DenominatorZero(f64),
    #[error("B is undefined: {0}")]
    UndefinedB(String),
    #[error("degenerate parameters: {0}")]
    DegenerateParams(String),
    #[error("contiguous relation degenerates: {0}")]
    LadderDegeneracy(String),
    #[error("ill-conditioned Hankel determinants at order {0}; use rational input")]
    IllConditioned(usize),
    #[error("malformed continued fraction: {0}")]
    MalformedFraction(String),
    #[error("tail sign pattern undecided within probe horizon {0}")]
    TailUndecided(usize),
    #[error("degenerate interpolation points: {0}")]
    DegeneratePoints(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("quadrature stalled: estimate {estimate:e} above tolerance {tol:e}")]
    QuadratureStall { estimate: f64, tol: f64 },
    #[error("1 - z t is within 1e-12 of zero at t = {0}")]
    NearCutPole(f64),
    #[error("parameters not admissible for example {idx}: {reason}")]
    InapplicableParameters { idx: usize, reason: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for errors that report a violated mathematical hypothesis rather
    /// than a numerical breakdown.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::ParameterPole(_)
                | Error::PoleError { .. }
                | Error::UndefinedB(_)
                | Error::DegenerateParams(_)
                | Error::LadderDegeneracy(_)
                | Error::MalformedFraction(_)
                | Error::DegeneratePoints(_)
                | Error::PreconditionFailed(_)
                | Error::NearCutPole(_)
                | Error::InapplicableParameters { .. }
                | Error::InvalidArgument(_)
                | Error::DenominatorZero(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
