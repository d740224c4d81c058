//! Airy function Ai and its derivative on the complex plane.
//!
//! Strategy: Maclaurin series summed in double-double precision for
//! `|z| <= 9` (the two series branches cancel like `exp((4/3)|z|^{3/2})` on
//! the positive axis, which double-double absorbs), and the large-argument
//! expansion in inverse powers of `zeta = (2/3) z^{3/2}` beyond. Outside the
//! sector `|arg z| <= 2.6` the standard rotation connection
//! `Ai(z) = -e^{-2pi i/3} Ai(z e^{-2pi i/3}) - e^{2pi i/3} Ai(z e^{2pi i/3})`
//! moves the evaluation into the reliable sector. Bi is provided for small
//! arguments only (it is needed here just for Wronskian checks).

use num_complex::Complex64;

use super::dd::{CDd, Dd};
use super::FunPair;
use crate::error::{Error, Result};

/// Ai(0) = 3^{-2/3} / Gamma(2/3).
const AI0: f64 = 0.355_028_053_887_817_24;
/// -Ai'(0) = 3^{-1/3} / Gamma(1/3).
const AIP0: f64 = 0.258_819_403_792_806_8;

const SERIES_RADIUS: f64 = 9.0;

/// The four Maclaurin sums (f, g, f', g') of the Airy equation basis.
fn airy_series_sums(z: Complex64) -> (Complex64, Complex64, Complex64, Complex64) {
    let z_dd = CDd::from_c64(z);
    let z3 = z_dd.mul(z_dd).mul(z_dd);

    let mut f_term = CDd::from_c64(Complex64::new(1.0, 0.0));
    let mut g_term = z_dd;
    let mut fp_term = CDd::from_c64(Complex64::new(0.5, 0.0)).mul(z_dd).mul(z_dd);
    let mut gp_term = CDd::from_c64(Complex64::new(1.0, 0.0));

    let mut f = f_term;
    let mut g = g_term;
    let mut fp = fp_term;
    let mut gp = gp_term;

    for k in 1..200u32 {
        let kf = k as f64;
        f_term = f_term.mul(z3).div_f64(3.0 * kf * (3.0 * kf - 1.0));
        g_term = g_term.mul(z3).div_f64((3.0 * kf + 1.0) * 3.0 * kf);
        fp_term = fp_term.mul(z3).div_f64((3.0 * kf + 2.0) * 3.0 * kf);
        gp_term = gp_term.mul(z3).div_f64(3.0 * kf * (3.0 * kf - 2.0));
        f = f.add(f_term);
        g = g.add(g_term);
        fp = fp.add(fp_term);
        gp = gp.add(gp_term);
        let biggest = f_term
            .norm_f64()
            .max(g_term.norm_f64())
            .max(fp_term.norm_f64())
            .max(gp_term.norm_f64());
        let scale = f.norm_f64().max(g.norm_f64()).max(1e-300);
        if biggest < 1e-35 * scale {
            break;
        }
    }
    (f.to_c64(), g.to_c64(), fp.to_c64(), gp.to_c64())
}

fn airy_series(z: Complex64) -> FunPair {
    let (f, g, fp, gp) = airy_series_sums(z);
    FunPair {
        value: f * AI0 - g * AIP0,
        derivative: fp * AI0 - gp * AIP0,
    }
}

/// Bi and Bi' for |z| <= 9 (series only).
pub fn airy_bi_small(z: Complex64) -> Result<FunPair> {
    if z.norm() > SERIES_RADIUS {
        return Err(Error::OutOfRange(format!(
            "airy_bi_small only valid for |z| <= {SERIES_RADIUS}"
        )));
    }
    let (f, g, fp, gp) = airy_series_sums(z);
    let s3 = 3.0f64.sqrt();
    Ok(FunPair {
        value: (f * AI0 + g * AIP0) * s3,
        derivative: (fp * AI0 + gp * AIP0) * s3,
    })
}

/// Large-|z| expansion for |arg z| not too close to pi.
fn airy_asymptotic(z: Complex64) -> FunPair {
    let sqrt_z = z.sqrt();
    let zeta = z * sqrt_z * (2.0 / 3.0);
    let inv_zeta = zeta.inv();

    // u_{k+1} = u_k (6k+5)(6k+1) / (72 (k+1)); v_k = -u_k (6k+1)/(6k-1).
    let mut u = Complex64::new(1.0, 0.0);
    let mut sum_u = u;
    let mut sum_v = u;
    let mut sign = 1.0;
    let mut prev = f64::INFINITY;
    for k in 0..60u32 {
        let kf = k as f64;
        u = u * ((6.0 * kf + 5.0) * (6.0 * kf + 1.0) / (72.0 * (kf + 1.0))) * inv_zeta;
        let term = u.norm();
        if term > prev {
            break; // past optimal truncation
        }
        prev = term;
        sign = -sign;
        sum_u += u * sign;
        let vk = (6.0 * (kf + 1.0) + 1.0) / (1.0 - 6.0 * (kf + 1.0));
        sum_v += u * vk * sign;
        if term < 1e-18 * sum_u.norm() {
            break;
        }
    }

    let pref = (-zeta).exp() / (2.0 * std::f64::consts::PI.sqrt());
    let q = sqrt_z.sqrt(); // z^{1/4}, principal
    FunPair {
        value: pref / q * sum_u,
        derivative: -pref * q * sum_v,
    }
}

/// Ai(z) and Ai'(z).
///
/// Relative accuracy ~1e-13 on the real interval [-20, 20] and ~1e-10 for
/// complex |z| <= 50; very large positive arguments underflow and very large
/// negative ones lose relative (not absolute) accuracy near the zeros.
pub fn airy(z: Complex64) -> Result<FunPair> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain("non-finite Airy argument".into()));
    }
    if z.norm() > 1e4 {
        return Err(Error::OutOfRange(format!("|z| = {} too large for airy", z.norm())));
    }
    let result = if z.norm() <= SERIES_RADIUS {
        airy_series(z)
    } else if z.arg().abs() <= 2.6 {
        airy_asymptotic(z)
    } else {
        // Rotate into the reliable sector:
        // Ai(z) = -w^-1 Ai(z/w) - w Ai(zw), w = exp(2 pi i/3).
        let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::FRAC_PI_3);
        let a_plus = airy_asymptotic(z * w);
        let a_minus = airy_asymptotic(z * w.conj());
        FunPair {
            value: -(w.conj() * a_minus.value) - w * a_plus.value,
            derivative: -(w * a_minus.derivative) - w.conj() * a_plus.derivative,
        }
    };
    if !result.value.re.is_finite() || !result.derivative.re.is_finite() {
        return Err(Error::Overflow(format!("airy overflow at z = {z}")));
    }
    Ok(result)
}
