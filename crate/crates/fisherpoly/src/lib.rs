//! Fisher information of classical orthogonal polynomials with respect to
//! their parameters: closed-form values for the Laguerre, Jacobi,
//! Gegenbauer and Grosjean families, together with an independent
//! quadrature-plus-finite-difference oracle that recomputes every value
//! from the defining integral.

pub mod fisher;
pub mod oracle;
pub mod orthopoly;
pub mod param_derivative;
pub mod specfun;
pub mod suite;

pub use fisher::{fisher_closed_form, fisher_sum_form, FisherResult, Method};
pub use oracle::{fisher_by_definition, QuadratureConfig, VerificationReport};
pub use orthopoly::{Family, ParamTarget, Params, SupportInterval};
pub use param_derivative::CoefficientVector;
pub use specfun::LogValue;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// An argument is outside its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// Family and parameter target do not go together.
    #[error("invalid pairing: {0}")]
    Pairing(String),
    /// Adaptive quadrature failed to reach the requested tolerance.
    #[error(
        "quadrature did not converge after {levels} levels \
         (last two estimates {previous} and {current})"
    )]
    QuadratureNonConvergence {
        levels: u32,
        previous: f64,
        current: f64,
    },
}
