use thiserror::Error;

/// Errors produced by the solver and its supporting numerics.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {message}")]
    InvalidParameter { name: &'static str, message: String },

    #[error("kernel argument ({x}, {xi}) lies outside the tabulated band [{lo}, {hi}]")]
    OutOfBand { x: f64, xi: f64, lo: f64, hi: f64 },

    #[error("integrand is not finite at node {index} (xi = {node})")]
    NonFiniteIntegrand { index: usize, node: f64 },

    #[error(
        "half-line refinement stalled above 1e-12 relative agreement \
         (last two estimates {last:.17e}, {previous:.17e})"
    )]
    RefinementStalled { last: f64, previous: f64 },

    #[error("kernel is not strictly positive: value {value:.6e} at {site}")]
    NonPositiveKernel { value: f64, site: String },

    #[error("kernel table: {0}")]
    TableFormat(String),

    #[error("solver did not converge within {iterations} iterations (residual {residual:.3e}) at T = {temperature:.6e}")]
    NotConverged {
        temperature: f64,
        iterations: usize,
        residual: f64,
    },

    #[error("power iteration failed to settle within {iterations} iterations")]
    PowerIterationStalled { iterations: usize },

    #[error("spectral radius stays below 1 down to T = {t_low:.6e}: kernel too weak, no transition")]
    NoTransition { t_low: f64 },

    #[error("spectral radius still exceeds 1 at T = {t_high:.6e}: bracketing failed")]
    BracketingFailed { t_high: f64 },

    #[error("finite-difference step h = {h:.3e} unusable: {message}")]
    StepSize { h: f64, message: String },

    #[error(
        "second difference of the thermodynamic potential at T = {temperature:.6e} \
         is below rounding noise; increase the step size"
    )]
    CancellationGuard { temperature: f64 },
}

impl Error {
    pub(crate) fn param(name: &'static str, message: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
