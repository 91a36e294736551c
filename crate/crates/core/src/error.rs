use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A Gamma function (or Gamma ratio) was evaluated at a pole.
    #[error("pole of the Gamma function at {0}")]
    Pole(f64),

    /// The result would exceed the largest finite `f64`.
    #[error("overflow: {0}")]
    Overflow(String),

    /// An argument lies outside the domain of the routine.
    #[error("domain error: {0}")]
    Domain(String),

    /// A Fox-Wright series whose convergence margin `1 + sum(beta_j) - sum(alpha_i)`
    /// is not positive.
    #[error("series diverges: convergence margin {margin} is not positive")]
    ConvergenceDomain { margin: f64 },

    /// The series stopping rule did not fire within the term budget.
    #[error("series did not converge within {budget} terms (last term {last_term:e})")]
    NonConvergence { budget: usize, last_term: f64 },

    /// Quadrature did not reach the requested tolerance at the maximum node count.
    #[error("quadrature tolerance {target:e} not reached (estimate {estimate:e} with {nodes} nodes)")]
    Quadrature {
        target: f64,
        estimate: f64,
        nodes: usize,
    },

    /// A root or minimum search failed to bracket its target.
    #[error("convergence failure: {0}")]
    Convergence(String),

    /// A log-convexity probe sampled a non-positive value.
    #[error("non-positive sample {value:e} at {at}")]
    Positivity { at: f64, value: f64 },

    /// A sampled function returned a non-finite value.
    #[error("non-finite sample at {0}")]
    NonFinite(f64),

    /// Malformed sweep or probe configuration.
    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
