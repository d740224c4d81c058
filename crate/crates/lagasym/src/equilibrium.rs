//! The equilibrium measure of `[0, inf)` in the rescaled field `V_n`, in
//! closed form.
//!
//! For the one-interval Laguerre-type situation the minimizer of the
//! logarithmic energy lives on `[0,1]` with density
//!
//! ```text
//! psi_n(x) = (1/2pi) sqrt((1-x)/x) h_n(x),
//! ```
//!
//! where `h_n` is the degree m-1 polynomial with coefficients
//! `h_{n,k} = sum_{j>k} j v_{n,j} A_{j-k-1}`. The companion polynomial `H_n`
//! (same sums without the factor j) carries the integrated density and the
//! complex phase
//!
//! ```text
//! xi_n(z) = -pi i int_1^z psi_n(s) ds,
//! ```
//!
//! which controls every exponential factor in the asymptotic formulas. The
//! Lagrange multiplier of the variational problem is
//! `ell_n = -sum_k v_{n,k} A_k - 4 log 2`.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::branches::{arccos_side, is_upper, sqrt_side, sqrt_z_one_minus_z, Side};
use crate::error::{Error, Result};
use crate::mrs::{mrs_beta, rescaled_field};
use crate::weight::{a_constant_f64, RealPolynomial, WeightSpec};

/// Everything the asymptotic formulas need for a fixed `(spec, n)`.
#[derive(Debug, Clone)]
pub struct EquilibriumData {
    pub spec: WeightSpec,
    pub n: u32,
    pub beta_n: f64,
    /// Rescaled field `V_n(x) = Q(beta_n x)/n`.
    pub v: RealPolynomial,
    /// Density polynomial `h_n`, degree m-1.
    pub h: RealPolynomial,
    /// Phase polynomial `H_n`, degree m-1.
    pub big_h: RealPolynomial,
    /// Lagrange constant of the variational conditions.
    pub ell_n: f64,
}

/// Builds `h_n`, `H_n` and `ell_n` from the MRS rescaling.
///
/// Fails when the MRS number does not exist or when `h_n` is not positive on
/// `[0,1]` (which signals that n is below the positivity threshold of the
/// construction).
pub fn build_equilibrium(spec: &WeightSpec, n: u32) -> Result<EquilibriumData> {
    let mrs = mrs_beta(spec, n)?;
    let v = rescaled_field(spec, mrs.beta_n, n);
    let m = spec.degree();

    let mut h = vec![0.0; m];
    let mut big_h = vec![0.0; m];
    for k in 0..m {
        let mut hk = 0.0;
        let mut bk = 0.0;
        for j in (k + 1)..=m {
            let a = a_constant_f64(j - k - 1);
            hk += j as f64 * v.coeffs[j] * a;
            bk += v.coeffs[j] * a;
        }
        h[k] = hk;
        big_h[k] = bk;
    }
    let h = RealPolynomial::new(h);
    let big_h = RealPolynomial::new(big_h);

    let ell_n = -v
        .coeffs
        .iter()
        .enumerate()
        .map(|(k, &vk)| vk * a_constant_f64(k))
        .sum::<f64>()
        - 4.0 * std::f64::consts::LN_2;

    // Positivity of h_n on [0,1]: all-positive coefficients short-circuit the
    // 1000-point grid check.
    if !h.coeffs.iter().all(|&c| c > 0.0) {
        for i in 0..=1000 {
            let x = i as f64 / 1000.0;
            if h.eval(x) <= 0.0 {
                return Err(Error::HNotPositive(n));
            }
        }
    }

    Ok(EquilibriumData {
        spec: spec.clone(),
        n,
        beta_n: mrs.beta_n,
        v,
        h,
        big_h,
        ell_n,
    })
}

impl EquilibriumData {
    pub fn h_at_0(&self) -> f64 {
        self.h.coeffs[0]
    }

    pub fn h_at_1(&self) -> f64 {
        self.h.eval(1.0)
    }

    pub fn h_prime_at_1(&self) -> f64 {
        self.h.derivative().eval(1.0)
    }

    /// Exact mass of the density: `sum_k h_{n,k} A_k / (4(k+1))`, which the
    /// Beta integral `(1/2pi) int_0^1 x^{k-1/2} (1-x)^{1/2} dx = A_k/(4(k+1))`
    /// shows must equal 1.
    pub fn mass(&self) -> f64 {
        self.h
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, &hk)| hk * a_constant_f64(k) / (4.0 * (k as f64 + 1.0)))
            .sum()
    }
}

/// Density `psi_n(x)` of the equilibrium measure on `(0, 1]`.
pub fn density(eq: &EquilibriumData, x: f64) -> Result<f64> {
    if !(x > 0.0 && x <= 1.0) {
        return Err(Error::Domain(format!("density defined on (0,1], got {x}")));
    }
    Ok(((1.0 - x) / x).sqrt() * eq.h.eval(x) / (2.0 * PI))
}

/// `int_1^z psi_n(s) ds` in closed form:
/// `(1/2pi) H_n(z) z^{1/2} (1-z)^{1/2} - (2/pi) arccos z^{1/2}` in the upper
/// half-plane, and minus that expression in the lower half-plane (psi_n is
/// Schwarz-antisymmetric).
pub fn int_psi_from_1(eq: &EquilibriumData, z: Complex64, side: Side) -> Complex64 {
    let root = sqrt_z_one_minus_z(z, side);
    let acz = arccos_side(sqrt_side(z, side), side);
    let x = eq.big_h.eval_complex(z) * root / (2.0 * PI) - acz * (2.0 / PI);
    if is_upper(z, side) {
        x
    } else {
        -x
    }
}

/// The complex phase `xi_n(z) = -pi i int_1^z psi_n(s) ds`.
///
/// On `(0,1)` the plus-side boundary value is purely imaginary and equals
/// `pi i int_x^1 psi_n`; on `(1, inf)` the value is real and negative.
pub fn xi_n(eq: &EquilibriumData, z: Complex64, side: Side) -> Complex64 {
    Complex64::new(0.0, -PI) * int_psi_from_1(eq, z, side)
}
