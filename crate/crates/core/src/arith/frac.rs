//! Elements of Q(ζ) in exact form, used transiently (Newton's identities,
//! eigenspace projectors). Every externally visible value must reduce back
//! to Z[ζ]; failure to do so is a hard error upstream.

use crate::arith::eis::EisInt;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// u + vζ with u, v ∈ Q, exact.
#[derive(Clone, PartialEq, Eq)]
pub struct EisFrac {
    pub u: BigRational,
    pub v: BigRational,
}

impl EisFrac {
    pub fn zero() -> Self {
        EisFrac { u: BigRational::zero(), v: BigRational::zero() }
    }

    pub fn one() -> Self {
        EisFrac { u: BigRational::one(), v: BigRational::zero() }
    }

    pub fn from_eis(x: &EisInt) -> Self {
        EisFrac {
            u: BigRational::from(BigInt::from(x.u)),
            v: BigRational::from(BigInt::from(x.v)),
        }
    }

    pub fn from_int(n: i128) -> Self {
        Self::from_eis(&EisInt::from_int(n))
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn conj(&self) -> Self {
        EisFrac { u: &self.u - &self.v, v: -self.v.clone() }
    }

    pub fn norm(&self) -> BigRational {
        &self.u * &self.u - &self.u * &self.v + &self.v * &self.v
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        EisFrac { u: &self.u * c, v: &self.v * c }
    }

    pub fn div(&self, d: &EisFrac) -> Result<EisFrac> {
        let n = d.norm();
        if n.is_zero() {
            return Err(Error::NonExactDivision("division by zero in Q(zeta)".into()));
        }
        let num = self.clone() * d.conj();
        Ok(num.scale(&n.recip()))
    }

    /// Reduce to Z[ζ]; errors when a denominator survives.
    pub fn to_eis(&self) -> Result<EisInt> {
        let to_i128 = |r: &BigRational| -> Result<i128> {
            if !r.denom().is_one() {
                return Err(Error::NonIntegralTrace(format!("{}", self)));
            }
            let n = r.numer();
            i128::try_from(n.clone())
                .map_err(|_| Error::NonIntegralTrace(format!("overflow: {}", n)))
        };
        Ok(EisInt::new(to_i128(&self.u)?, to_i128(&self.v)?))
    }

    pub fn abs_norm_le(&self, bound: &BigRational) -> bool {
        self.norm() <= bound.abs()
    }
}

impl Add for EisFrac {
    type Output = EisFrac;
    fn add(self, o: EisFrac) -> EisFrac {
        EisFrac { u: self.u + o.u, v: self.v + o.v }
    }
}

impl Sub for EisFrac {
    type Output = EisFrac;
    fn sub(self, o: EisFrac) -> EisFrac {
        EisFrac { u: self.u - o.u, v: self.v - o.v }
    }
}

impl Neg for EisFrac {
    type Output = EisFrac;
    fn neg(self) -> EisFrac {
        EisFrac { u: -self.u, v: -self.v }
    }
}

impl Mul for EisFrac {
    type Output = EisFrac;
    fn mul(self, o: EisFrac) -> EisFrac {
        let bd = &self.v * &o.v;
        EisFrac {
            u: &self.u * &o.u - &bd,
            v: &self.u * &o.v + &self.v * &o.u - &bd,
        }
    }
}

impl fmt::Display for EisFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})z", self.u, self.v)
    }
}

impl fmt::Debug for EisFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn third_reduces() {
        let x = EisFrac::from_int(9).scale(&BigRational::new(BigInt::from(1), BigInt::from(3)));
        assert_eq!(x.to_eis().unwrap(), EisInt::from_int(3));
        let y = EisFrac::from_int(1).scale(&BigRational::new(BigInt::from(1), BigInt::from(3)));
        assert!(y.to_eis().is_err());
    }

    #[test]
    fn field_div() {
        let a = EisFrac::from_eis(&EisInt::new(3, 5));
        let b = EisFrac::from_eis(&EisInt::new(-2, 7));
        let q = a.div(&b).unwrap();
        assert_eq!(q * b, a);
    }
}
