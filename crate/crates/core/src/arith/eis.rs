//! Eisenstein integers u + vζ, ζ a fixed primitive third root of unity.
//!
//! All reductions use ζ² = −1 − ζ. Conjugation is ζ ↦ ζ², i.e.
//! conj(u+vζ) = (u−v) − vζ, and norm(x) = x·conj(x) = u² − uv + v² ≥ 0.

use crate::arith::big::{BigComplex, BigReal};
use crate::error::{Error, Result};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct EisInt {
    pub u: i128,
    pub v: i128,
}

impl EisInt {
    pub const ZERO: EisInt = EisInt { u: 0, v: 0 };
    pub const ONE: EisInt = EisInt { u: 1, v: 0 };
    /// ζ itself.
    pub const ZETA: EisInt = EisInt { u: 0, v: 1 };
    /// ζ² = −1 − ζ.
    pub const ZETA2: EisInt = EisInt { u: -1, v: -1 };

    pub fn new(u: i128, v: i128) -> Self {
        EisInt { u, v }
    }

    pub fn from_int(n: i128) -> Self {
        EisInt { u: n, v: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.u == 0 && self.v == 0
    }

    pub fn is_rational(&self) -> bool {
        self.v == 0
    }

    pub fn conj(&self) -> Self {
        EisInt { u: self.u - self.v, v: -self.v }
    }

    pub fn norm(&self) -> i128 {
        self.u * self.u - self.u * self.v + self.v * self.v
    }

    /// ζ^j for j mod 3.
    pub fn zeta_pow(j: u8) -> Self {
        match j % 3 {
            0 => Self::ONE,
            1 => Self::ZETA,
            _ => Self::ZETA2,
        }
    }

    /// Multiply by ζ: (u+vζ)ζ = uζ + vζ² = −v + (u−v)ζ.
    pub fn mul_zeta(&self) -> Self {
        EisInt { u: -self.v, v: self.u - self.v }
    }

    pub fn mul_int(&self, n: i128) -> Self {
        EisInt { u: self.u * n, v: self.v * n }
    }

    /// The six units ±ζ^j.
    pub fn units() -> [EisInt; 6] {
        [
            Self::ONE,
            Self::ZETA,
            Self::ZETA2,
            -Self::ONE,
            -Self::ZETA,
            -Self::ZETA2,
        ]
    }

    pub fn is_unit(&self) -> bool {
        self.norm() == 1
    }

    /// Exact division; errors when self is not divisible by d in Z[ζ].
    pub fn div_exact(&self, d: &EisInt) -> Result<EisInt> {
        let n = d.norm();
        if n == 0 {
            return Err(Error::NonExactDivision("division by zero".into()));
        }
        // self/d = self·conj(d)/norm(d)
        let num = *self * d.conj();
        if num.u % n != 0 || num.v % n != 0 {
            return Err(Error::NonExactDivision(format!("{} / {}", self, d)));
        }
        Ok(EisInt { u: num.u / n, v: num.v / n })
    }

    /// Embedding with ζ ↦ (−1/2, √3/2).
    pub fn embed(&self, prec_digits: u32) -> BigComplex {
        let zeta = BigComplex::zeta(prec_digits);
        let u = BigReal::from_i128(self.u, prec_digits);
        let v = BigReal::from_i128(self.v, prec_digits);
        BigComplex::from_real(u) + zeta.scale_real(&v)
    }

    /// Complex absolute value squared equals the norm; handy for Weil bounds.
    pub fn abs2(&self) -> i128 {
        self.norm()
    }

    /// Serialized as the two decimal integers "u v".
    pub fn to_cache_fields(&self) -> String {
        format!("{} {}", self.u, self.v)
    }

    pub fn parse_pair(u: &str, v: &str) -> Result<EisInt> {
        let u = u
            .parse::<i128>()
            .map_err(|e| Error::InvalidArgument(format!("bad integer {u:?}: {e}")))?;
        let v = v
            .parse::<i128>()
            .map_err(|e| Error::InvalidArgument(format!("bad integer {v:?}: {e}")))?;
        Ok(EisInt { u, v })
    }
}

impl Add for EisInt {
    type Output = EisInt;
    fn add(self, o: EisInt) -> EisInt {
        EisInt { u: self.u + o.u, v: self.v + o.v }
    }
}

impl AddAssign for EisInt {
    fn add_assign(&mut self, o: EisInt) {
        self.u += o.u;
        self.v += o.v;
    }
}

impl Sub for EisInt {
    type Output = EisInt;
    fn sub(self, o: EisInt) -> EisInt {
        EisInt { u: self.u - o.u, v: self.v - o.v }
    }
}

impl Neg for EisInt {
    type Output = EisInt;
    fn neg(self) -> EisInt {
        EisInt { u: -self.u, v: -self.v }
    }
}

impl Mul for EisInt {
    type Output = EisInt;
    fn mul(self, o: EisInt) -> EisInt {
        // (a+bζ)(c+dζ) = ac + (ad+bc)ζ + bdζ², ζ² = −1−ζ
        let bd = self.v * o.v;
        EisInt {
            u: self.u * o.u - bd,
            v: self.u * o.v + self.v * o.u - bd,
        }
    }
}

impl fmt::Display for EisInt {
    /// Paper notation "u + vζ" (rendered with `z`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.u, self.v) {
            (u, 0) => write!(f, "{}", u),
            (0, 1) => write!(f, "z"),
            (0, -1) => write!(f, "-z"),
            (0, v) => write!(f, "{}z", v),
            (u, 1) => write!(f, "{} + z", u),
            (u, -1) => write!(f, "{} - z", u),
            (u, v) if v > 0 => write!(f, "{} + {}z", u, v),
            (u, v) => write!(f, "{} - {}z", u, -v),
        }
    }
}

impl fmt::Debug for EisInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A unit of Z[ζ], written ±ζ^j.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Unit {
    pub negative: bool,
    pub zeta_exp: u8,
}

impl Unit {
    pub const ONE: Unit = Unit { negative: false, zeta_exp: 0 };

    pub fn to_eis(&self) -> EisInt {
        let z = EisInt::zeta_pow(self.zeta_exp);
        if self.negative {
            -z
        } else {
            z
        }
    }

    pub fn from_eis(x: &EisInt) -> Option<Unit> {
        for neg in [false, true] {
            for j in 0..3u8 {
                let u = Unit { negative: neg, zeta_exp: j };
                if u.to_eis() == *x {
                    return Some(u);
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conj_example() {
        // conj(10+13ζ) = −3−13ζ
        assert_eq!(EisInt::new(10, 13).conj(), EisInt::new(-3, -13));
    }

    #[test]
    fn unit_norm() {
        // (1+ζ)(1+ζ²) = 1 since ζ+ζ² = −1
        let a = EisInt::new(1, 1);
        assert_eq!(a * a.conj(), EisInt::ONE);
        assert_eq!(a.norm(), 1);
    }

    #[test]
    fn zeta_cubed() {
        assert_eq!(EisInt::ZETA * EisInt::ZETA * EisInt::ZETA, EisInt::ONE);
        assert_eq!(EisInt::ZETA * EisInt::ZETA, EisInt::ZETA2);
    }

    #[test]
    fn embed_zeta() {
        let z = EisInt::ZETA.embed(40);
        let z3 = z.clone() * z.clone() * z;
        // ζ³ = 1 to within 10^(3−prec)
        let one = BigComplex::from_f64(1.0, 0.0, 40);
        assert!((z3 - one).abs().to_f64() < 1e-37);
    }

    #[test]
    fn exact_division() {
        let a = EisInt::new(7, 3) * EisInt::new(-2, 5);
        assert_eq!(a.div_exact(&EisInt::new(-2, 5)).unwrap(), EisInt::new(7, 3));
        assert!(EisInt::new(1, 0).div_exact(&EisInt::new(0, 2)).is_err());
    }
}
