//! Complex-valued quadrature on real intervals.
//!
//! Double-exponential rules handle the integrable endpoint singularities of
//! the log-log integrands; a fixed Gauss-Legendre rule covers smooth
//! integrands on bounded intervals.

mod double_exponential;
mod gauss_legendre;

use num_complex::Complex64;

pub use double_exponential::{exp_sinh, integrate_halfline, tanh_sinh, MAX_LEVEL};
pub use gauss_legendre::{gauss_legendre, gauss_legendre_nodes};

/// Outcome of a quadrature rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: Complex64,
    /// Magnitude of the difference between the last two refinements.
    pub err_estimate: f64,
    pub evaluations: usize,
}
