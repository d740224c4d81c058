//! Laguerre-type weights `w(x) = x^alpha exp(-Q(x))` on `[0, inf)` and the
//! combinatorial constants `A_k` shared by every other module.
//!
//! `Q` is a polynomial of degree `m >= 1` with positive leading coefficient,
//! and `alpha > -1`. The constants
//!
//! ```text
//! A_k = prod_{j=1..k} (2j-1)/(2j)
//! ```
//!
//! are the normalized monomial moments of `sqrt(x/(1-x))` on `(0,1)` and show
//! up in the MRS equation, the equilibrium density and the Lagrange constant.
//! They are kept as exact rationals to avoid cancellation downstream.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A polynomial with real coefficients, stored in ascending degree order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RealPolynomial {
    pub coeffs: Vec<f64>,
}

impl RealPolynomial {
    pub fn new(coeffs: Vec<f64>) -> Self {
        RealPolynomial { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Horner evaluation at a real point.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// Horner evaluation at a complex point.
    pub fn eval_complex(&self, z: num_complex::Complex64) -> num_complex::Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(num_complex::Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Coefficient vector of the derivative.
    pub fn derivative(&self) -> RealPolynomial {
        if self.coeffs.len() <= 1 {
            return RealPolynomial::new(vec![0.0]);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| k as f64 * c)
            .collect();
        RealPolynomial::new(coeffs)
    }
}

/// The validated parameters of a Laguerre-type weight `x^alpha exp(-Q(x))`.
///
/// Immutable after construction; all downstream caches key on it by value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightSpec {
    alpha: f64,
    q: Vec<f64>,
}

impl WeightSpec {
    /// Validates `alpha > -1`, `deg Q >= 1` and `q_m > 0`.
    pub fn new(alpha: f64, q: Vec<f64>) -> Result<Self> {
        if !(alpha > -1.0) || !alpha.is_finite() {
            return Err(Error::InvalidAlpha(alpha));
        }
        if q.len() < 2 {
            return Err(Error::DegreeTooSmall);
        }
        let qm = *q.last().unwrap();
        if !(qm > 0.0) || !qm.is_finite() {
            return Err(Error::InvalidLeadingCoeff(qm));
        }
        if q.iter().any(|c| !c.is_finite()) {
            return Err(Error::Domain("non-finite coefficient in Q".into()));
        }
        Ok(WeightSpec { alpha, q })
    }

    /// Parses the JSON config schema `{"alpha": <real>, "q": [q_0, ..., q_m]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Raw {
            alpha: f64,
            q: Vec<f64>,
        }
        let raw: Raw =
            serde_json::from_str(text).map_err(|e| Error::Domain(format!("bad config JSON: {e}")))?;
        WeightSpec::new(raw.alpha, raw.q)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Coefficients of Q, ascending degree.
    pub fn q(&self) -> &[f64] {
        &self.q
    }

    /// Degree of Q.
    pub fn degree(&self) -> usize {
        self.q.len() - 1
    }

    pub fn q_poly(&self) -> RealPolynomial {
        RealPolynomial::new(self.q.clone())
    }

    /// Evaluates `Q(x)`.
    pub fn eval_q(&self, x: f64) -> f64 {
        self.q.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }
}

/// `A_k = prod_{j=1..k} (2j-1)/(2j)` as an exact rational; `A_0 = 1`.
pub fn a_constant(k: usize) -> Ratio<BigInt> {
    let mut acc = Ratio::one();
    for j in 1..=k {
        acc *= Ratio::new(BigInt::from(2 * j as i64 - 1), BigInt::from(2 * j as i64));
    }
    acc
}

/// `A_k` rounded to f64.
pub fn a_constant_f64(k: usize) -> f64 {
    let r = a_constant(k);
    r.numer().to_f64().unwrap() / r.denom().to_f64().unwrap()
}

/// Evaluates the weight `x^alpha exp(-Q(x))`.
///
/// `x = 0` is allowed only when `alpha >= 0`; the result overflowing f64 is
/// reported rather than saturated.
pub fn eval_weight(spec: &WeightSpec, x: f64) -> Result<f64> {
    let alpha = spec.alpha();
    if x < 0.0 || (x == 0.0 && alpha < 0.0) {
        return Err(Error::Domain(format!(
            "weight undefined at x = {x} for alpha = {alpha}"
        )));
    }
    if x == 0.0 {
        return Ok(if alpha == 0.0 { (-spec.eval_q(0.0)).exp() } else { 0.0 });
    }
    let log_w = alpha * x.ln() - spec.eval_q(x);
    let w = log_w.exp();
    if !w.is_finite() {
        return Err(Error::Overflow(format!(
            "weight at x = {x} exceeds f64 range (log w = {log_w})"
        )));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn a_constant_small_values() {
        assert_eq!(a_constant(0), Ratio::one());
        assert_eq!(a_constant(1), Ratio::new(BigInt::from(1), BigInt::from(2)));
        assert_eq!(a_constant(2), Ratio::new(BigInt::from(3), BigInt::from(8)));
        assert_eq!(a_constant(3), Ratio::new(BigInt::from(5), BigInt::from(16)));
    }

    #[test]
    fn a_constant_ratio_is_exact() {
        for k in 1..60usize {
            let lhs = a_constant(k) / a_constant(k - 1);
            let rhs = Ratio::new(BigInt::from(2 * k as i64 - 1), BigInt::from(2 * k as i64));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn weight_examples() {
        // Q = x, alpha = 0, x = 1 -> exp(-1)
        let spec = WeightSpec::new(0.0, vec![0.0, 1.0]).unwrap();
        assert_relative_eq!(eval_weight(&spec, 1.0).unwrap(), (-1.0f64).exp(), max_relative = 1e-15);

        // alpha = 2, x = 0 -> 0
        let spec = WeightSpec::new(2.0, vec![0.0, 0.0, 1.0]).unwrap();
        assert_eq!(eval_weight(&spec, 0.0).unwrap(), 0.0);

        // Q = x^2, alpha = 1/2, x = 2 -> sqrt(2) exp(-4)
        let spec = WeightSpec::new(0.5, vec![0.0, 0.0, 1.0]).unwrap();
        assert_relative_eq!(
            eval_weight(&spec, 2.0).unwrap(),
            2.0f64.sqrt() * (-4.0f64).exp(),
            max_relative = 1e-14
        );
    }

    #[test]
    fn validation_rejects_bad_specs_with_distinct_errors() {
        match WeightSpec::new(-1.0, vec![0.0, 1.0]) {
            Err(Error::InvalidAlpha(_)) => {}
            other => panic!("expected InvalidAlpha, got {other:?}"),
        }
        match WeightSpec::new(0.0, vec![0.0, -2.0]) {
            Err(Error::InvalidLeadingCoeff(_)) => {}
            other => panic!("expected InvalidLeadingCoeff, got {other:?}"),
        }
        match WeightSpec::new(0.0, vec![1.0]) {
            Err(Error::DegreeTooSmall) => {}
            other => panic!("expected DegreeTooSmall, got {other:?}"),
        }
    }

    #[test]
    fn weight_domain_errors() {
        let spec = WeightSpec::new(-0.5, vec![0.0, 1.0]).unwrap();
        assert!(eval_weight(&spec, 0.0).is_err());
        assert!(eval_weight(&spec, -1.0).is_err());
    }

    #[test]
    fn weight_overflow_reported() {
        // Q with a huge negative linear part blows up exp(-Q).
        let spec = WeightSpec::new(0.0, vec![0.0, -1e6, 0.0, 0.0, 1e-12]).unwrap();
        assert!(matches!(eval_weight(&spec, 1000.0), Err(Error::Overflow(_))));
    }

    #[test]
    fn horner_matches_power_sum() {
        let p = RealPolynomial::new(vec![1.5, -2.0, 0.25, 3.0]);
        for &x in &[0.0, 0.7, -1.3, 2.9] {
            let naive: f64 = p
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| c * x.powi(k as i32))
                .sum();
            assert_relative_eq!(p.eval(x), naive, max_relative = 1e-14, epsilon = 1e-14);
        }
    }

    #[test]
    fn config_json_roundtrip() {
        let spec = WeightSpec::from_json(r#"{"alpha": 0.5, "q": [0.0, 1.0, 2.0]}"#).unwrap();
        assert_eq!(spec.alpha(), 0.5);
        assert_eq!(spec.degree(), 2);
        assert!(WeightSpec::from_json(r#"{"alpha": -3.0, "q": [0.0, 1.0]}"#).is_err());
    }
}
