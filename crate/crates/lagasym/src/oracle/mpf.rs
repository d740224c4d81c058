//! Thin helpers over MPFR floats: precision-carrying constructors and a
//! complex pair type with the handful of operations the oracle needs.
//!
//! `rug::Float` supplies the real arithmetic; complex numbers are modelled
//! as (re, im) pairs because only +, -, *, / and a few elementary maps are
//! required.

use rug::float::Round;
use rug::ops::Pow;
use rug::Float;

/// Bits of mantissa for a requested number of decimal digits.
pub fn bits_for_digits(digits: u32) -> u32 {
    ((digits as f64) * std::f64::consts::LOG2_10).ceil() as u32 + 16
}

pub fn mpf(prec: u32, value: f64) -> Float {
    Float::with_val(prec, value)
}

pub fn mpf_from_str(prec: u32, s: &str) -> Option<Float> {
    Float::parse(s).ok().map(|p| Float::with_val(prec, p))
}

/// Decimal string round-tripping the full working precision.
pub fn mpf_to_string(x: &Float) -> String {
    let digits = (x.prec() as f64 / std::f64::consts::LOG2_10).ceil() as usize + 2;
    x.to_string_radix(10, Some(digits))
}

/// Complex number over MPFR floats.
#[derive(Debug, Clone)]
pub struct MpComplex {
    pub re: Float,
    pub im: Float,
}

impl MpComplex {
    pub fn new(re: Float, im: Float) -> Self {
        MpComplex { re, im }
    }

    pub fn from_f64(prec: u32, z: num_complex::Complex64) -> Self {
        MpComplex {
            re: mpf(prec, z.re),
            im: mpf(prec, z.im),
        }
    }

    pub fn zero(prec: u32) -> Self {
        MpComplex {
            re: mpf(prec, 0.0),
            im: mpf(prec, 0.0),
        }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn to_c64(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(
            self.re.to_f64_round(Round::Nearest),
            self.im.to_f64_round(Round::Nearest),
        )
    }

    pub fn add(&self, o: &MpComplex) -> MpComplex {
        MpComplex {
            re: Float::with_val(self.prec(), &self.re + &o.re),
            im: Float::with_val(self.prec(), &self.im + &o.im),
        }
    }

    pub fn sub(&self, o: &MpComplex) -> MpComplex {
        MpComplex {
            re: Float::with_val(self.prec(), &self.re - &o.re),
            im: Float::with_val(self.prec(), &self.im - &o.im),
        }
    }

    pub fn mul(&self, o: &MpComplex) -> MpComplex {
        let p = self.prec();
        let re = Float::with_val(p, &self.re * &o.re) - Float::with_val(p, &self.im * &o.im);
        let im = Float::with_val(p, &self.re * &o.im) + Float::with_val(p, &self.im * &o.re);
        MpComplex { re, im }
    }

    pub fn mul_real(&self, s: &Float) -> MpComplex {
        MpComplex {
            re: Float::with_val(self.prec(), &self.re * s),
            im: Float::with_val(self.prec(), &self.im * s),
        }
    }

    pub fn div(&self, o: &MpComplex) -> MpComplex {
        let p = self.prec();
        let den = Float::with_val(p, o.re.clone().square() + o.im.clone().square());
        let re = (Float::with_val(p, &self.re * &o.re) + Float::with_val(p, &self.im * &o.im)) / &den;
        let im = (Float::with_val(p, &self.im * &o.re) - Float::with_val(p, &self.re * &o.im)) / &den;
        MpComplex {
            re: Float::with_val(p, re),
            im: Float::with_val(p, im),
        }
    }

    pub fn neg(&self) -> MpComplex {
        MpComplex {
            re: Float::with_val(self.prec(), -self.re.clone()),
            im: Float::with_val(self.prec(), -self.im.clone()),
        }
    }

    pub fn conj(&self) -> MpComplex {
        MpComplex {
            re: self.re.clone(),
            im: Float::with_val(self.prec(), -self.im.clone()),
        }
    }

    pub fn norm(&self) -> Float {
        Float::with_val(
            self.prec(),
            self.re.clone().square() + self.im.clone().square(),
        )
        .sqrt()
    }

    /// Principal square root.
    pub fn sqrt(&self) -> MpComplex {
        let p = self.prec();
        let r = self.norm();
        if r.is_zero() {
            return MpComplex::zero(p);
        }
        // sqrt((r + re)/2) with sign-safe imaginary part.
        let half = Float::with_val(p, 0.5);
        let re_part = Float::with_val(p, &r + &self.re) * &half;
        let re_root = re_part.sqrt();
        if re_root.is_zero() {
            // Purely negative real axis: principal branch has +i sqrt(|x|).
            let im_root = Float::with_val(p, &r - &self.re) * &half;
            return MpComplex {
                re: Float::with_val(p, 0.0),
                im: im_root.sqrt(),
            };
        }
        let im_part = Float::with_val(p, &self.im / &re_root) * &half;
        MpComplex {
            re: re_root,
            im: im_part,
        }
    }

    /// exp(z).
    pub fn exp(&self) -> MpComplex {
        let p = self.prec();
        let ex = self.re.clone().exp();
        let (s, c) = self.im.clone().sin_cos(Float::new(p));
        MpComplex {
            re: Float::with_val(p, &ex * &c),
            im: Float::with_val(p, &ex * &s),
        }
    }

    /// Principal logarithm.
    pub fn ln(&self) -> MpComplex {
        let p = self.prec();
        let r = self.norm();
        let theta = Float::with_val(p, self.im.clone().atan2(&self.re));
        MpComplex {
            re: r.ln(),
            im: theta,
        }
    }

    /// Principal power z^a with real exponent.
    pub fn powf(&self, a: f64) -> MpComplex {
        let p = self.prec();
        let l = self.ln();
        let scaled = MpComplex {
            re: Float::with_val(p, &l.re * a),
            im: Float::with_val(p, &l.im * a),
        };
        scaled.exp()
    }
}

/// exp(x) for a real MPFR float (convenience).
pub fn mpf_exp(x: &Float) -> Float {
    x.clone().exp()
}

/// x^y for real MPFR floats.
pub fn mpf_pow(x: &Float, y: &Float) -> Float {
    x.clone().pow(y.clone())
}
