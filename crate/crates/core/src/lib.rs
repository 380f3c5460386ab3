//! Hurwitz-Lerch zeta evaluation, supporting special-function kernels and
//! an identity verification harness.

pub mod error;
pub mod identitylab;
pub mod lerch;
pub mod numkernel;
pub mod quadrature;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// The value type used throughout the crate.
pub type ComplexScalar = Complex64;
