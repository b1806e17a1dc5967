//! Arbitrary-precision reals and complex numbers on top of MPFR.
//!
//! Precision is quoted in significant decimal digits throughout; the default
//! for L-function work is 40 digits. Complex values are a pair of reals
//! (this toolchain has no MPC), which is all the two-sum identity needs.

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub fn digits_to_bits(digits: u32) -> u32 {
    // log2(10) = 3.3219...; padded with a small guard.
    (digits as f64 * 3.3219280948873626).ceil() as u32 + 16
}

/// Arbitrary-precision real number, precision tracked in decimal digits.
#[derive(Clone, PartialEq, PartialOrd)]
pub struct BigReal(pub Float);

impl BigReal {
    pub fn zero(digits: u32) -> Self {
        BigReal(Float::with_val(digits_to_bits(digits), 0))
    }

    pub fn from_f64(x: f64, digits: u32) -> Self {
        BigReal(Float::with_val(digits_to_bits(digits), x))
    }

    pub fn from_u64(x: u64, digits: u32) -> Self {
        BigReal(Float::with_val(digits_to_bits(digits), x))
    }

    pub fn from_i128(x: i128, digits: u32) -> Self {
        BigReal(Float::with_val(digits_to_bits(digits), x))
    }

    /// Parse a decimal literal exactly at the requested precision.
    pub fn parse(s: &str, digits: u32) -> Option<Self> {
        Float::parse(s)
            .ok()
            .map(|v| BigReal(Float::with_val(digits_to_bits(digits), v)))
    }

    pub fn pi(digits: u32) -> Self {
        BigReal(Float::with_val(digits_to_bits(digits), Constant::Pi))
    }

    pub fn euler_gamma(digits: u32) -> Self {
        BigReal(Float::with_val(digits_to_bits(digits), Constant::Euler))
    }

    pub fn prec_bits(&self) -> u32 {
        self.0.prec()
    }

    pub fn sqrt(&self) -> Self {
        BigReal(self.0.clone().sqrt())
    }

    pub fn abs(&self) -> Self {
        BigReal(self.0.clone().abs())
    }

    pub fn ln(&self) -> Self {
        BigReal(self.0.clone().ln())
    }

    pub fn exp(&self) -> Self {
        BigReal(self.0.clone().exp())
    }

    pub fn cos(&self) -> Self {
        BigReal(self.0.clone().cos())
    }

    pub fn sin(&self) -> Self {
        BigReal(self.0.clone().sin())
    }

    pub fn atan2(&self, x: &BigReal) -> Self {
        BigReal(self.0.clone().atan2(&x.0))
    }

    pub fn gamma(&self) -> Self {
        BigReal(self.0.clone().gamma())
    }

    pub fn powi(&self, e: i32) -> Self {
        BigReal(self.0.clone().pow(e))
    }

    pub fn recip(&self) -> Self {
        BigReal(Float::with_val(self.0.prec(), 1) / self.0.clone())
    }

    pub fn mul_u64(&self, n: u64) -> Self {
        BigReal(self.0.clone() * n)
    }

    pub fn div_u64(&self, n: u64) -> Self {
        BigReal(self.0.clone() / n)
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    pub fn is_sign_positive(&self) -> bool {
        self.0.is_sign_positive() && !self.0.is_zero()
    }

    /// 10^(-k) at this value's precision.
    pub fn pow10(k: i32, digits: u32) -> Self {
        BigReal(Float::with_val(digits_to_bits(digits), 10).pow(k))
    }
}

impl Add for BigReal {
    type Output = BigReal;
    fn add(self, o: BigReal) -> BigReal {
        BigReal(self.0 + o.0)
    }
}

impl<'a> Add<&'a BigReal> for BigReal {
    type Output = BigReal;
    fn add(self, o: &BigReal) -> BigReal {
        BigReal(self.0 + &o.0)
    }
}

impl Sub for BigReal {
    type Output = BigReal;
    fn sub(self, o: BigReal) -> BigReal {
        BigReal(self.0 - o.0)
    }
}

impl Mul for BigReal {
    type Output = BigReal;
    fn mul(self, o: BigReal) -> BigReal {
        BigReal(self.0 * o.0)
    }
}

impl<'a> Mul<&'a BigReal> for BigReal {
    type Output = BigReal;
    fn mul(self, o: &BigReal) -> BigReal {
        BigReal(self.0 * &o.0)
    }
}

impl Div for BigReal {
    type Output = BigReal;
    fn div(self, o: BigReal) -> BigReal {
        BigReal(self.0 / o.0)
    }
}

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal(-self.0)
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Complex number as a pair of BigReals.
#[derive(Clone, PartialEq)]
pub struct BigComplex {
    pub re: BigReal,
    pub im: BigReal,
}

impl BigComplex {
    pub fn zero(digits: u32) -> Self {
        BigComplex { re: BigReal::zero(digits), im: BigReal::zero(digits) }
    }

    pub fn from_real(re: BigReal) -> Self {
        let digits = 1; // placeholder precision irrelevant; reuse re's bits
        let mut im = BigReal::zero(digits);
        im.0.set_prec(re.0.prec());
        BigComplex { re, im }
    }

    pub fn from_f64(re: f64, im: f64, digits: u32) -> Self {
        BigComplex {
            re: BigReal::from_f64(re, digits),
            im: BigReal::from_f64(im, digits),
        }
    }

    /// ζ ↦ (−1/2, √3/2).
    pub fn zeta(digits: u32) -> Self {
        let bits = digits_to_bits(digits);
        let half = Float::with_val(bits, 0.5f64);
        let s3 = Float::with_val(bits, 3).sqrt() / 2u32;
        BigComplex { re: BigReal(-half), im: BigReal(s3) }
    }

    pub fn conj(&self) -> Self {
        BigComplex { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn scale_real(&self, c: &BigReal) -> Self {
        BigComplex {
            re: self.re.clone() * c,
            im: self.im.clone() * c,
        }
    }

    pub fn abs2(&self) -> BigReal {
        self.re.clone() * &self.re + self.im.clone() * &self.im
    }

    pub fn abs(&self) -> BigReal {
        self.abs2().sqrt()
    }

    pub fn recip(&self) -> Self {
        let n = self.abs2();
        BigComplex {
            re: self.re.clone() / n.clone(),
            im: -self.im.clone() / n,
        }
    }

    /// Complex natural log (principal branch); used by the Stirling oracle.
    pub fn ln(&self) -> Self {
        let r = self.abs2().ln().div_u64(2);
        let theta = self.im.atan2(&self.re);
        BigComplex { re: r, im: theta }
    }

    pub fn exp(&self) -> Self {
        let m = self.re.exp();
        BigComplex {
            re: m.clone() * self.im.cos(),
            im: m * self.im.sin(),
        }
    }

    pub fn to_f64s(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl Add for BigComplex {
    type Output = BigComplex;
    fn add(self, o: BigComplex) -> BigComplex {
        BigComplex { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for BigComplex {
    type Output = BigComplex;
    fn sub(self, o: BigComplex) -> BigComplex {
        BigComplex { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Mul for BigComplex {
    type Output = BigComplex;
    fn mul(self, o: BigComplex) -> BigComplex {
        let re = self.re.clone() * &o.re - self.im.clone() * &o.im;
        let im = self.re * &o.im + self.im * &o.re;
        BigComplex { re, im }
    }
}

impl Div for BigComplex {
    type Output = BigComplex;
    fn div(self, o: BigComplex) -> BigComplex {
        let r = o.recip();
        self * r
    }
}

impl Neg for BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex { re: -self.re, im: -self.im }
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i", self.re, self.im)
    }
}

impl fmt::Debug for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_is_cube_root() {
        let z = BigComplex::zeta(40);
        let z3 = z.clone() * z.clone() * z;
        assert!((z3.re.to_f64() - 1.0).abs() < 1e-30);
        assert!(z3.im.to_f64().abs() < 1e-30);
    }

    #[test]
    fn complex_exp_ln() {
        let z = BigComplex::from_f64(1.25, -0.7, 40);
        let w = z.ln().exp();
        assert!((z - w).abs().to_f64() < 1e-35);
    }
}
