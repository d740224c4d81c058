//! Special functions needed by the asymptotic formulas: Airy Ai, Bessel
//! J_alpha, the Hankel pair, and Gamma.

pub mod airy;
pub mod bessel;
pub(crate) mod dd;
pub mod gamma;

pub use airy::airy;
pub use bessel::{bessel_j, bessel_jy_real, bessel_y_real, hankel};
pub use gamma::{gamma_fn, ln_gamma};

use num_complex::Complex64;

/// A function value together with its derivative at the same point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunPair {
    pub value: Complex64,
    pub derivative: Complex64,
}
