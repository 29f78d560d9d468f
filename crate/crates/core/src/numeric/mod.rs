//! Quadrature, special functions and small numerical helpers.

mod diff;
mod gamma;
mod quad;

pub use diff::{divided_differences, Compensated};
pub use gamma::{gamma, gamma_real};
pub use quad::{
    integrate, integrate_log_line, integrate_oscillatory_tail, integrate_with_breaks,
    wynn_epsilon, QuadResult, QuadTol,
};
