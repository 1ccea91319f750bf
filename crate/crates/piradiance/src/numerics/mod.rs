//! Floating-point special functions and numerical routines: Γ, even zeta
//! values from Bernoulli numbers, adaptive quadrature on [0, ∞),
//! divergence detection, and bracketed root finding.
//!
//! Everything here is pure and reentrant. Default tolerances are 1e-8
//! absolute for quadrature and 1e-10 for roots.

mod gamma;
mod quadrature;
mod roots;

pub use gamma::{gamma, zeta_even};
pub use quadrature::{detect_divergence, integrate_semiinfinite};
pub use roots::find_root;

use serde::Serialize;
use thiserror::Error;

/// Default absolute tolerance for quadrature.
pub const QUADRATURE_TOL: f64 = 1e-8;
/// Default tolerance on |g(x)| for root finding.
pub const ROOT_TOL: f64 = 1e-10;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericsError {
    #[error("gamma argument must be positive, got {0}")]
    NonPositiveArgument(f64),
    #[error("quadrature did not reach tolerance: value {value}, error estimate {error_estimate}")]
    ToleranceNotMet { value: f64, error_estimate: f64 },
    #[error("no sign change over [{lo}, {hi}]: g(lo) = {f_lo}, g(hi) = {f_hi}")]
    NoSignChange {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },
}

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    /// True whenever the estimate met the requested tolerance; results
    /// that fail to converge are reported through
    /// [`NumericsError::ToleranceNotMet`] instead.
    pub converged: bool,
}

/// Convergent-or-divergent classification of a tail integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Classification {
    Convergent,
    Divergent,
}

/// Verdict from monitoring partial integrals over geometrically growing
/// panels [2^i, 2^{i+1}].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DivergenceVerdict {
    pub classification: Classification,
    /// Ratio of consecutive panel integrals at the deciding panel: near
    /// or above 1 for divergent integrands, small for convergent ones.
    pub witness: f64,
}

impl DivergenceVerdict {
    pub fn is_divergent(&self) -> bool {
        self.classification == Classification::Divergent
    }
}
