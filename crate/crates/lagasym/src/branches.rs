//! Side-aware principal branches.
//!
//! Every multivalued expression in the asymptotic formulas (square roots,
//! `arccos`, fractional powers) is taken with its principal branch, and
//! boundary values on the real-axis cuts are specified by an explicit
//! [`Side`] flag rather than signed zeros or perturbed points. `Side::Plus`
//! means the limit from the upper half-plane.

use num_complex::Complex64;

/// Which half-plane a real-axis evaluation is the limit of.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Plus => Side::Minus,
            Side::Minus => Side::Plus,
        }
    }
}

/// True when `z` is to be treated as a point of the (closed) upper half-plane.
pub fn is_upper(z: Complex64, side: Side) -> bool {
    if z.im != 0.0 {
        z.im > 0.0
    } else {
        side == Side::Plus
    }
}

/// Principal square root with side-resolved boundary values on `(-inf, 0)`.
pub fn sqrt_side(z: Complex64, side: Side) -> Complex64 {
    if z.im != 0.0 {
        return z.sqrt();
    }
    let x = z.re;
    if x >= 0.0 {
        Complex64::new(x.sqrt(), 0.0)
    } else {
        let r = (-x).sqrt();
        match side {
            Side::Plus => Complex64::new(0.0, r),
            Side::Minus => Complex64::new(0.0, -r),
        }
    }
}

/// `arccos z` on the cut plane `C \ ((-inf,-1] u [1,inf))`, via
/// `-i log(z + i (1-z^2)^{1/2})` with principal branches. Maps onto the
/// strip `0 < Re < pi`; boundary values on the cuts resolved by `side`.
pub fn arccos_side(z: Complex64, side: Side) -> Complex64 {
    let one_minus_z2 = Complex64::new(1.0, 0.0) - z * z;
    // On the cuts (z real, |z| > 1) the argument 1 - z^2 approaches the
    // negative axis from the side of sign(-Re z * side).
    let inner_side = if z.im == 0.0 && z.re > 0.0 { side.flip() } else { side };
    let root = sqrt_side(one_minus_z2, inner_side);
    let w = z + Complex64::new(0.0, 1.0) * root;
    Complex64::new(0.0, -1.0) * w.ln()
}

/// `z^{1/2} (1-z)^{1/2}` with principal factors; branch cut on `[0,1]` and
/// `[1,inf)` pieces resolved by `side`.
pub fn sqrt_z_one_minus_z(z: Complex64, side: Side) -> Complex64 {
    let a = sqrt_side(z, side);
    // Im(1-z) = -Im z, so the boundary side flips.
    let b = sqrt_side(Complex64::new(1.0, 0.0) - z, side.flip());
    a * b
}

/// Principal power `z^p` with side-resolved values on the negative real axis.
pub fn powf_side(z: Complex64, p: f64, side: Side) -> Complex64 {
    if z.norm() == 0.0 {
        return if p > 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            Complex64::new(f64::INFINITY, 0.0)
        };
    }
    let theta = if z.im != 0.0 || z.re > 0.0 {
        z.arg()
    } else {
        match side {
            Side::Plus => std::f64::consts::PI,
            Side::Minus => -std::f64::consts::PI,
        }
    };
    let r = z.norm();
    Complex64::from_polar(r.powf(p), p * theta)
}
