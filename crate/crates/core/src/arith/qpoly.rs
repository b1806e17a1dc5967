//! Exact polynomials in one variable over Q, plus the mod-p reductions the
//! fibre machinery consumes. Little-endian coefficient vectors.

use crate::arith::fq::{Fp, Fq, FqElem};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct QPoly {
    pub coeffs: Vec<BigRational>,
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rint(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn constant(c: BigRational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            QPoly { coeffs: vec![c] }
        }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        let mut p = QPoly { coeffs: v.iter().map(|&n| rint(n)).collect() };
        p.trim();
        p
    }

    pub fn x() -> Self {
        QPoly { coeffs: vec![rint(0), rint(1)] }
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, o: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(self.coeff(i) + o.coeff(i));
        }
        let mut p = QPoly { coeffs: c };
        p.trim();
        p
    }

    pub fn sub(&self, o: &QPoly) -> QPoly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    pub fn mul(&self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut c = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        let mut p = QPoly { coeffs: c };
        p.trim();
        p
    }

    pub fn scale(&self, c: &BigRational) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, e: usize) -> QPoly {
        let mut acc = QPoly::constant(BigRational::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, t: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Substitute a linear rational expression t ↦ (at + b) for rational a, b.
    pub fn compose_linear(&self, a: &BigRational, b: &BigRational) -> QPoly {
        let lin = QPoly { coeffs: vec![b.clone(), a.clone()] };
        let mut acc = QPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&QPoly::constant(c.clone()));
        }
        acc
    }

    /// t^(shift) * p(1/t) — the coordinate flip used at t = ∞. Requires
    /// shift ≥ deg p; the result is a polynomial in the new coordinate.
    pub fn reverse_into(&self, shift: usize) -> QPoly {
        let mut c = vec![BigRational::zero(); shift + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            assert!(shift >= i, "flip shift too small");
            c[shift - i] = a.clone();
        }
        let mut p = QPoly { coeffs: c };
        p.trim();
        p
    }

    /// All primes dividing any denominator.
    pub fn denominator_primes(&self) -> Vec<u64> {
        let mut out = std::collections::BTreeSet::new();
        for c in &self.coeffs {
            for p in factor_abs(c.denom()) {
                out.insert(p);
            }
        }
        out.into_iter().collect()
    }

    /// Reduce mod p into F_p[t]; errors when p divides a denominator.
    pub fn reduce_mod(&self, fp: Fp) -> Result<FpPoly> {
        let p = fp.p;
        let pb = BigInt::from(p);
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let den = c.denom();
            let dmod = ((den % &pb) + &pb) % &pb;
            if dmod.is_zero() {
                return Err(Error::BadPrime(p));
            }
            let num = ((c.numer() % &pb) + &pb) % &pb;
            let n: u64 = num.try_into().unwrap();
            let d: u64 = dmod.try_into().unwrap();
            coeffs.push(fp.mul(n, fp.inv(d)));
        }
        let mut poly = FpPoly { fp, coeffs };
        poly.trim();
        Ok(poly)
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>())
    }
}

fn factor_abs(n: &BigInt) -> Vec<u64> {
    let mut n: u64 = n
        .abs()
        .try_into()
        .expect("denominators stay machine-sized in this pipeline");
    let mut out = vec![];
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Polynomial over F_p, little-endian.
#[derive(Clone, PartialEq, Eq)]
pub struct FpPoly {
    pub fp: Fp,
    pub coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(0)) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn eval_fp(&self, t: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = self.fp.add(self.fp.mul(acc, t), c);
        }
        acc
    }

    /// Evaluate at an element of an extension field (coefficients embed).
    pub fn eval_fq(&self, f: &Fq, t: &FqElem) -> FqElem {
        let mut acc = f.zero();
        for &c in self.coeffs.iter().rev() {
            acc = f.mul(&acc, t);
            acc = f.add(&acc, &f.from_u64(c));
        }
        acc
    }

    pub fn derivative(&self) -> FpPoly {
        if self.coeffs.len() <= 1 {
            return FpPoly { fp: self.fp, coeffs: vec![] };
        }
        let mut c = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, &a) in self.coeffs.iter().enumerate().skip(1) {
            c.push(self.fp.mul(a, (i as u64) % self.fp.p));
        }
        let mut p = FpPoly { fp: self.fp, coeffs: c };
        p.trim();
        p
    }

    /// Multiplicity of t0 as a root (0 when not a root).
    pub fn root_multiplicity_fq(&self, f: &Fq, t0: &FqElem) -> usize {
        // repeated synthetic division over F_q
        let mut coeffs: Vec<FqElem> = self.coeffs.iter().map(|&c| f.from_u64(c)).collect();
        let mut mult = 0;
        loop {
            if coeffs.is_empty() {
                return mult;
            }
            // evaluate and divide by (t − t0) if root
            let mut acc = f.zero();
            for c in coeffs.iter().rev() {
                acc = f.add(&f.mul(&acc, t0), c);
            }
            if !f.is_zero(&acc) {
                return mult;
            }
            // synthetic division
            let mut quot: Vec<FqElem> = Vec::with_capacity(coeffs.len().saturating_sub(1));
            let mut carry = f.zero();
            for c in coeffs.iter().rev() {
                carry = f.add(&f.mul(&carry, t0), c);
                quot.push(carry.clone());
            }
            quot.pop();
            quot.reverse();
            coeffs = quot;
            mult += 1;
        }
    }
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} mod {}", self.coeffs, self.fp.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::fq::FqField;

    #[test]
    fn compose_and_flip() {
        // p(t) = t² + 1, t ↦ 2t + 3 gives 4t² + 12t + 10
        let p = QPoly::from_ints(&[1, 0, 1]);
        let q = p.compose_linear(&rint(2), &rint(3));
        assert_eq!(q, QPoly::from_ints(&[10, 12, 4]));
        // flip of t³ + 2t with shift 4: u + 2u³
        let r = QPoly::from_ints(&[0, 2, 0, 1]).reverse_into(4);
        assert_eq!(r, QPoly::from_ints(&[0, 1, 0, 2]));
    }

    #[test]
    fn reduce_and_multiplicity() {
        // (t−3)²(t+1) over F_7
        let p = QPoly::from_ints(&[-3, 1]).pow(2).mul(&QPoly::from_ints(&[1, 1]));
        let fp = Fp::new(7);
        let rp = p.reduce_mod(fp).unwrap();
        let f7 = FqField::new(7, 1).unwrap();
        assert_eq!(rp.root_multiplicity_fq(&f7, &f7.from_u64(3)), 2);
        assert_eq!(rp.root_multiplicity_fq(&f7, &f7.from_u64(6)), 1);
        assert_eq!(rp.root_multiplicity_fq(&f7, &f7.from_u64(2)), 0);
        // denominator 1/7 rejected mod 7
        let bad = QPoly { coeffs: vec![rat(1, 7)] };
        assert!(bad.reduce_mod(fp).is_err());
    }
}
