//! Mhaskar-Rahmanov-Saff numbers `beta_n` and the rescaled field `V_n`.
//!
//! The defining integral equation
//!
//! ```text
//! (1/2pi) int_0^beta Q'(x) sqrt(x/(beta-x)) dx = n
//! ```
//!
//! reduces termwise (each monomial integrates to an `A_k` constant) to the
//! exact polynomial equation
//!
//! ```text
//! sum_{k=1..m} (1/2) k q_k A_k beta^k = n,
//! ```
//!
//! so `beta_n` is found as the root of a degree-m real polynomial, with no
//! quadrature involved.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::weight::{a_constant_f64, RealPolynomial, WeightSpec};

const MAX_ITER: usize = 200;

/// Root of the MRS equation together with the defining-equation residual.
#[derive(Debug, Clone, Serialize)]
pub struct MrsResult {
    pub beta_n: f64,
    /// Value of the defining polynomial minus n at the returned root.
    pub residual: f64,
    pub iterations: u32,
}

/// Coefficients of the degree-m polynomial `F(beta) = sum (1/2) k q_k A_k beta^k`.
fn mrs_polynomial(spec: &WeightSpec) -> RealPolynomial {
    let m = spec.degree();
    let mut coeffs = vec![0.0; m + 1];
    for (k, &qk) in spec.q().iter().enumerate().skip(1) {
        coeffs[k] = 0.5 * k as f64 * qk * a_constant_f64(k);
    }
    RealPolynomial::new(coeffs)
}

/// Solves the MRS equation for `beta_n > 0`.
///
/// Safeguarded Newton on the exact polynomial reduction, started at the
/// leading-order guess `n^{1/m} beta^(0)`; the bracket is grown geometrically
/// until it straddles a sign change. Fails with `MrsUndefined` when no
/// positive root exists or when the bracket contains more than one root
/// (possible for small n when Q has negative interior coefficients).
pub fn mrs_beta(spec: &WeightSpec, n: u32) -> Result<MrsResult> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be >= 1".into()));
    }
    let m = spec.degree();
    let poly = mrs_polynomial(spec);
    let dpoly = poly.derivative();
    let nf = n as f64;
    let f = |b: f64| poly.eval(b) - nf;

    let (beta0, _) = mrs_series_coeffs(spec);
    let guess = nf.powf(1.0 / m as f64) * beta0;

    // Grow the bracket [lo, hi] around the guess until f changes sign.
    let mut lo = guess / 4.0;
    let mut hi = guess * 4.0;
    let mut grow = 0;
    while !(f(lo) < 0.0 && f(hi) > 0.0) {
        if f(lo) > 0.0 {
            lo /= 4.0;
        }
        if f(hi) < 0.0 {
            hi *= 4.0;
        }
        grow += 1;
        if grow > 60 || lo < 1e-300 {
            return Err(Error::MrsUndefined {
                n,
                reason: "no positive root bracketed".into(),
            });
        }
    }

    // Reject brackets holding more than one root: scan for extra sign changes.
    let mut sign_changes = 0u32;
    let mut prev = f(lo.min(1e-8));
    let samples = 512;
    for i in 1..=samples {
        let t = i as f64 / samples as f64;
        let x = lo.min(1e-8) * (hi * 2.0 / lo.min(1e-8)).powf(t);
        let val = f(x);
        if prev < 0.0 && val >= 0.0 || prev > 0.0 && val <= 0.0 {
            sign_changes += 1;
        }
        if val != 0.0 {
            prev = val;
        }
    }
    if sign_changes > 1 {
        return Err(Error::MrsUndefined {
            n,
            reason: format!("{sign_changes} sign changes in the search bracket"),
        });
    }

    // Newton with bisection fallback whenever the step leaves the bracket.
    let mut x = guess.clamp(lo, hi);
    let mut iterations = 0u32;
    for it in 0..MAX_ITER {
        iterations = it as u32 + 1;
        let fx = f(x);
        if fx < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let d = dpoly.eval(x);
        let step_ok = d != 0.0;
        let mut next = if step_ok { x - fx / d } else { 0.5 * (lo + hi) };
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        let converged = (next - x).abs() <= 1e-16 * x.abs() || f(next).abs() <= 1e-13 * nf;
        x = next;
        if converged {
            break;
        }
        if it + 1 == MAX_ITER {
            return Err(Error::NoConvergence(MAX_ITER));
        }
    }

    let residual = f(x);
    if residual.abs() > 1e-12 * nf {
        return Err(Error::NoConvergence(iterations as usize));
    }
    Ok(MrsResult {
        beta_n: x,
        residual,
        iterations,
    })
}

/// First two coefficients of the `n^{1/m}` series of `beta_n`:
/// `beta^(0) = (m q_m A_m / 2)^{-1/m}` and
/// `beta^(1) = -2 (m-1) q_{m-1} / (m (2m-1) q_m)`.
pub fn mrs_series_coeffs(spec: &WeightSpec) -> (f64, f64) {
    let m = spec.degree();
    let qm = spec.q()[m];
    let beta0 = (0.5 * m as f64 * qm * a_constant_f64(m)).powf(-1.0 / m as f64);
    let beta1 = if m >= 1 {
        let qm1 = spec.q()[m - 1];
        -2.0 * (m as f64 - 1.0) * qm1 / (m as f64 * (2.0 * m as f64 - 1.0) * qm)
    } else {
        0.0
    };
    (beta0, beta1)
}

/// The rescaled field `V_n(x) = Q(beta_n x)/n`, i.e. `v_{n,k} = q_k beta_n^k / n`.
pub fn rescaled_field(spec: &WeightSpec, beta_n: f64, n: u32) -> RealPolynomial {
    let nf = n as f64;
    let coeffs = spec
        .q()
        .iter()
        .enumerate()
        .map(|(k, &qk)| qk * beta_n.powi(k as i32) / nf)
        .collect();
    RealPolynomial::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn spec(alpha: f64, q: &[f64]) -> WeightSpec {
        WeightSpec::new(alpha, q.to_vec()).unwrap()
    }

    /// Bisection oracle on the defining polynomial, independent of the Newton path.
    fn bisection_beta(spec: &WeightSpec, n: u32, mut lo: f64, mut hi: f64) -> f64 {
        let poly = mrs_polynomial(spec);
        let f = |b: f64| poly.eval(b) - n as f64;
        assert!(f(lo) < 0.0 && f(hi) > 0.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if f(mid) < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn classical_laguerre_beta_is_4n() {
        let s = spec(0.0, &[0.0, 1.0]);
        for n in [1u32, 7, 50, 1000] {
            let r = mrs_beta(&s, n).unwrap();
            assert_relative_eq!(r.beta_n, 4.0 * n as f64, max_relative = 1e-13);
        }
    }

    #[test]
    fn monomial_closed_form() {
        // beta_n = n^{1/m} (m q_m A_m / 2)^{-1/m}
        for (m, qm) in [(2usize, 1.0), (3, 0.5), (4, 2.0)] {
            let mut q = vec![0.0; m + 1];
            q[m] = qm;
            let s = spec(0.3, &q);
            let closed = |n: u32| {
                (n as f64).powf(1.0 / m as f64)
                    * (0.5 * m as f64 * qm * a_constant_f64(m)).powf(-1.0 / m as f64)
            };
            for n in [10u32, 20, 40, 80] {
                let r = mrs_beta(&s, n).unwrap();
                assert_relative_eq!(r.beta_n, closed(n), max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn mixed_quadratic_matches_bisection_oracle() {
        let s = spec(0.0, &[0.0, 1.0, 1.0]);
        let r = mrs_beta(&s, 100).unwrap();
        let oracle = bisection_beta(&s, 100, 1e-6, 1e6);
        assert_relative_eq!(r.beta_n, oracle, max_relative = 1e-12);
    }

    #[test]
    fn residual_invariant_across_specs() {
        let specs = [
            spec(0.0, &[0.0, 1.0]),
            spec(0.5, &[0.0, 0.0, 1.0]),
            spec(-0.4, &[0.0, 1.0, 1.0]),
            spec(1.5, &[0.0, 0.0, 1.0, 0.0, 1.0]),
        ];
        for s in &specs {
            for n in [10u32, 20, 40, 80] {
                let r = mrs_beta(s, n).unwrap();
                assert!(
                    r.residual.abs() <= 1e-12 * n as f64,
                    "residual {} too large for n = {n}",
                    r.residual
                );
            }
        }
    }

    #[test]
    fn series_coefficients() {
        let (b0, b1) = mrs_series_coeffs(&spec(0.0, &[0.0, 1.0]));
        assert_relative_eq!(b0, 4.0, max_relative = 1e-15);
        assert_eq!(b1, 0.0);

        let (b0, b1) = mrs_series_coeffs(&spec(0.0, &[0.0, 0.0, 1.0]));
        assert_relative_eq!(b0, (3.0f64 / 8.0).powf(-0.5), max_relative = 1e-15);
        assert_eq!(b1, 0.0);

        // Q = x^2 + x: beta^(1) = -2*1*1/(2*3*1) = -1/3
        let (_, b1) = mrs_series_coeffs(&spec(0.0, &[0.0, 1.0, 1.0]));
        assert_relative_eq!(b1, -1.0 / 3.0, max_relative = 1e-15);
    }

    #[test]
    fn asymptotic_consistency_rate() {
        // |beta_n - n^{1/m}(beta0 + beta1 n^{-1/m})| / beta_n = O(n^{-2/m}).
        let s = spec(0.0, &[0.0, 1.0, 1.0]);
        let (b0, b1) = mrs_series_coeffs(&s);
        let m = 2.0;
        let err = |n: u32| {
            let nf = n as f64;
            let r = mrs_beta(&s, n).unwrap();
            let series = nf.powf(1.0 / m) * (b0 + b1 * nf.powf(-1.0 / m));
            ((r.beta_n - series) / r.beta_n).abs()
        };
        let mut prev = err(40);
        for n in [80u32, 160, 320] {
            let e = err(n);
            // Doubling n should shrink the error by about 2^{2/m} = 2.
            assert!(e < prev * 0.65, "n = {n}: {e} vs {prev}");
            prev = e;
        }
    }

    #[test]
    fn beta_is_monotone_in_n() {
        for s in [spec(0.0, &[0.0, 1.0, 1.0]), spec(0.7, &[0.0, 0.0, 0.0, 0.0, 0.5])] {
            let mut prev = 0.0;
            for n in 1..200u32 {
                let b = mrs_beta(&s, n).unwrap().beta_n;
                assert!(b > prev);
                prev = b;
            }
        }
    }

    #[test]
    fn rescaled_field_examples() {
        // Q = x: V_n(x) = 4x for every n.
        let s = spec(0.0, &[0.0, 1.0]);
        for n in [3u32, 17, 64] {
            let beta = mrs_beta(&s, n).unwrap().beta_n;
            let v = rescaled_field(&s, beta, n);
            assert_relative_eq!(v.coeffs[1], 4.0, max_relative = 1e-12);
            assert_eq!(v.coeffs[0], 0.0);
        }

        // Monomial: V_n(x) = (m A_m / 2)^{-1} x^m, independent of n.
        for (m, qm) in [(2usize, 1.0), (3, 2.0)] {
            let mut q = vec![0.0; m + 1];
            q[m] = qm;
            let s = spec(0.0, &q);
            let expect = 1.0 / (0.5 * m as f64 * a_constant_f64(m));
            for n in [10u32, 40] {
                let beta = mrs_beta(&s, n).unwrap().beta_n;
                let v = rescaled_field(&s, beta, n);
                assert_relative_eq!(v.coeffs[m], expect, max_relative = 1e-11);
            }
        }
    }

    #[test]
    fn leading_v_coefficient_tends_to_limit() {
        // v_{n,m} -> (m A_m / 2)^{-1} at rate O(n^{-1/m}).
        let s = spec(0.0, &[0.0, 1.0, 1.0]);
        let limit = 1.0 / (0.5 * 2.0 * a_constant_f64(2));
        let dev = |n: u32| {
            let beta = mrs_beta(&s, n).unwrap().beta_n;
            (rescaled_field(&s, beta, n).coeffs[2] - limit).abs()
        };
        assert!(dev(1600) < dev(100) * 0.3);
    }
}
