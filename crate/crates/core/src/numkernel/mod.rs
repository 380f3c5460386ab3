//! Complex elementary functions, combinatorial kernels, log-gamma, Gauss
//! 2F1 and stored mathematical constants.
//!
//! Every complex logarithm and power uses the principal branch with the
//! argument in `(-pi, pi]`; a negative real number carrying a negative zero
//! imaginary part is still placed on the upper side of the cut.

mod bernoulli;
mod combinatorics;
mod constants;
mod elementary;
mod gamma;
mod hypergeometric;
mod sum;

pub(crate) use bernoulli::bernoulli_over_factorial;
pub use combinatorics::{
    binomial, binomial_exact, factorial, log_pochhammer_gen, pochhammer_gen, pochhammer_int,
};
pub use constants::{constant, constant_oracle, ConstantTag};
pub use elementary::{carg, cexp, clog, cpow, is_finite};
pub use gamma::{is_gamma_pole, log_gamma};
pub use hypergeometric::{hyp2f1, hyp2f1_series, SeriesSum};
pub use sum::CompensatedSum;
