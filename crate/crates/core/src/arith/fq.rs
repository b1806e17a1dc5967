//! Finite fields F_q, q = p^k.
//!
//! The modulus for (p, k) is the first irreducible monic polynomial in the
//! fixed enumeration order: x^k + c_{k-1}x^{k-1} + ... + c_0 ordered by the
//! integer Σ c_i p^i, so representations are reproducible across runs.
//! Elements are little-endian coefficient vectors with entries in [0, p).
//!
//! The counting inner loops do not go through [`FqElem`]; they use the raw
//! [`Fp`] helper (k = 1) or packed F_{p²} arithmetic directly.

use crate::arith::{is_prime, mul_mod, pow_mod};
use crate::error::{Error, Result};
use std::fmt;
use std::sync::Arc;

/// Prime field helper with a Barrett-style reduction for p < 2^17.
/// Products of two reduced values fit in u64, and the multiply-shift
/// reduction avoids a hardware divide in the hot loops.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    pub p: u64,
    minv: u64, // floor(2^62 / p)
    small: bool,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        Fp { p, minv: if p < (1 << 17) { (1u64 << 62) / p } else { 0 }, small: p < (1 << 17) }
    }

    #[inline(always)]
    pub fn reduce(&self, r: u64) -> u64 {
        if self.small {
            let q = ((r as u128 * self.minv as u128) >> 62) as u64;
            let t = r - q * self.p;
            if t >= self.p {
                t - self.p
            } else {
                t
            }
        } else {
            r % self.p
        }
    }

    #[inline(always)]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.small {
            self.reduce(a * b)
        } else {
            mul_mod(a, b, self.p)
        }
    }

    #[inline(always)]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline(always)]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn pow(&self, b: u64, e: u64) -> u64 {
        pow_mod(b, e, self.p)
    }

    pub fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }

    /// Quadratic character table over F_p: table[a] ∈ {−1, 0, 1}.
    pub fn chi_table(&self) -> Vec<i8> {
        let p = self.p as usize;
        let mut t = vec![-1i8; p];
        t[0] = 0;
        let mut x = 1u64;
        // mark squares
        for i in 1..self.p {
            x = i;
            let sq = self.mul(x, x);
            t[sq as usize] = 1;
        }
        let _ = x;
        t
    }
}

/// A finite field F_{p^k} together with its fixed modulus.
#[derive(Clone, Debug)]
pub struct FqField {
    pub p: u64,
    pub k: usize,
    pub q: u64,
    /// Monic modulus, little-endian, length k+1 (modulus[k] = 1). For k = 1
    /// this is x itself and elements are plain residues.
    pub modulus: Vec<u64>,
    fp: Fp,
    /// x^k reduced: x^k ≡ Σ red[i] x^i.
    red: Vec<u64>,
}

pub type Fq = Arc<FqField>;

/// Element of F_q as k coefficients in [0, p).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FqElem {
    pub coords: Vec<u64>,
}

impl FqField {
    /// Build the field handle; the modulus choice is deterministic.
    pub fn new(p: u64, k: usize) -> Result<Fq> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 || k > 8 {
            return Err(Error::BadDegree(k));
        }
        let q = p.checked_pow(k as u32).ok_or(Error::BadDegree(k))?;
        let fp = Fp::new(p);
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            first_irreducible(fp, k)
        };
        let red: Vec<u64> = modulus[..k].iter().map(|&c| fp.neg(c)).collect();
        Ok(Arc::new(FqField { p, k, q, modulus, fp, red }))
    }

    pub fn zero(&self) -> FqElem {
        FqElem { coords: vec![0; self.k] }
    }

    pub fn one(&self) -> FqElem {
        self.from_u64(1)
    }

    /// Embed a residue of the prime field.
    pub fn from_u64(&self, a: u64) -> FqElem {
        let mut c = vec![0; self.k];
        c[0] = a % self.p;
        FqElem { coords: c }
    }

    pub fn from_i64(&self, a: i64) -> FqElem {
        let r = a.rem_euclid(self.p as i64) as u64;
        self.from_u64(r)
    }

    /// Element from its dense code Σ c_i p^i ∈ [0, q).
    pub fn from_code(&self, mut code: u64) -> FqElem {
        let mut c = vec![0; self.k];
        for ci in c.iter_mut() {
            *ci = code % self.p;
            code /= self.p;
        }
        FqElem { coords: c }
    }

    pub fn code(&self, x: &FqElem) -> u64 {
        let mut acc = 0u64;
        for &c in x.coords.iter().rev() {
            acc = acc * self.p + c;
        }
        acc
    }

    pub fn is_zero(&self, x: &FqElem) -> bool {
        x.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        FqElem {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(&x, &y)| self.fp.add(x, y))
                .collect(),
        }
    }

    pub fn sub(&self, a: &FqElem, b: &FqElem) -> FqElem {
        FqElem {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(&x, &y)| self.fp.sub(x, y))
                .collect(),
        }
    }

    pub fn neg(&self, a: &FqElem) -> FqElem {
        FqElem { coords: a.coords.iter().map(|&x| self.fp.neg(x)).collect() }
    }

    pub fn scalar_mul(&self, a: &FqElem, s: u64) -> FqElem {
        FqElem { coords: a.coords.iter().map(|&x| self.fp.mul(x, s)).collect() }
    }

    pub fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let k = self.k;
        if k == 1 {
            return FqElem { coords: vec![self.fp.mul(a.coords[0], b.coords[0])] };
        }
        // schoolbook product then reduce by x^k ≡ red
        let mut prod = vec![0u64; 2 * k - 1];
        for i in 0..k {
            if a.coords[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = self.fp.add(prod[i + j], self.fp.mul(a.coords[i], b.coords[j]));
            }
        }
        for d in (k..2 * k - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for i in 0..k {
                prod[d - k + i] = self.fp.add(prod[d - k + i], self.fp.mul(c, self.red[i]));
            }
        }
        prod.truncate(k);
        FqElem { coords: prod }
    }

    pub fn square(&self, a: &FqElem) -> FqElem {
        self.mul(a, a)
    }

    pub fn pow(&self, a: &FqElem, mut e: u128) -> FqElem {
        let mut acc = self.one();
        let mut b = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.square(&b);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &FqElem) -> FqElem {
        self.pow(a, (self.q - 2) as u128)
    }

    /// Quadratic character χ(a) ∈ {−1, 0, 1}. In characteristic 2 squaring
    /// is a bijection, so χ(a) = 1 for a ≠ 0.
    pub fn sqrt_exists(&self, a: &FqElem) -> i8 {
        if self.is_zero(a) {
            return 0;
        }
        if self.p == 2 {
            return 1;
        }
        let e = ((self.q - 1) / 2) as u128;
        let r = self.pow(a, e);
        if r == self.one() {
            1
        } else {
            -1
        }
    }

    /// Deterministic generator of F_q*: the first element in code order
    /// whose multiplicative order is q−1.
    pub fn generator(&self) -> FqElem {
        let factors = prime_factors(self.q - 1);
        'cand: for code in 2..self.q {
            let g = self.from_code(code);
            for &f in &factors {
                let e = ((self.q - 1) / f) as u128;
                if self.pow(&g, e) == self.one() {
                    continue 'cand;
                }
            }
            return g;
        }
        unreachable!("F_q* is cyclic");
    }

    /// {1} when q ≢ 1 mod 3, else the three cube roots of unity
    /// {1, z, z²} with z = g^((q−1)/3).
    pub fn cube_roots_of_unity(&self) -> Vec<FqElem> {
        if (self.q - 1) % 3 != 0 {
            return vec![self.one()];
        }
        let g = self.generator();
        let z = self.pow(&g, ((self.q - 1) / 3) as u128);
        let z2 = self.square(&z);
        vec![self.one(), z.clone(), z2]
    }

    /// Cubic-residue character exponent: for a ≠ 0 and q ≡ 1 mod 3 returns
    /// j ∈ {0,1,2} with a^((q−1)/3) = z^j, z the fixed primitive cube root.
    pub fn chi3_exp(&self, a: &FqElem, z: &FqElem) -> Result<u8> {
        let r = self.pow(a, ((self.q - 1) / 3) as u128);
        if r == self.one() {
            Ok(0)
        } else if r == *z {
            Ok(1)
        } else if r == self.square(z) {
            Ok(2)
        } else {
            Err(Error::InvalidArgument("chi3 of zero or bad cube class".into()))
        }
    }

    /// Roots of t² + t + 1 in F_q (empty unless q ≡ 1 mod 3); sorted by code
    /// so the choice of "first root" is deterministic.
    pub fn third_roots_of_unity_nontrivial(&self) -> Vec<FqElem> {
        let mut out: Vec<FqElem> = self
            .cube_roots_of_unity()
            .into_iter()
            .filter(|r| *r != self.one())
            .collect();
        out.sort_by_key(|r| self.code(r));
        out
    }

    /// Frobenius x ↦ x^p.
    pub fn frobenius(&self, a: &FqElem) -> FqElem {
        self.pow(a, self.p as u128)
    }

    pub fn fp(&self) -> Fp {
        self.fp
    }

    /// Quadratic character table indexed by element code; built by marking
    /// squares, O(q) multiplications.
    pub fn chi_table(&self) -> Vec<i8> {
        let mut t = vec![-1i8; self.q as usize];
        t[0] = 0;
        if self.p == 2 {
            for v in t.iter_mut().skip(1) {
                *v = 1;
            }
            return t;
        }
        for code in 1..self.q {
            let x = self.from_code(code);
            let sq = self.mul(&x, &x);
            t[self.code(&sq) as usize] = 1;
        }
        t
    }
}

impl fmt::Debug for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = vec![];
    let mut d = 2;
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

/// First irreducible monic polynomial of degree k over F_p in the fixed
/// enumeration order (integer value of the coefficient vector).
fn first_irreducible(fp: Fp, k: usize) -> Vec<u64> {
    let p = fp.p;
    let span = p.pow(k as u32);
    for m in 0..span {
        let mut poly = vec![0u64; k + 1];
        let mut code = m;
        for c in poly.iter_mut().take(k) {
            *c = code % p;
            code /= p;
        }
        poly[k] = 1;
        if poly_is_irreducible(fp, &poly) {
            return poly;
        }
    }
    unreachable!("irreducible polynomials of every degree exist");
}

/// Irreducibility over F_p: x^(p^k) ≡ x mod f and gcd(x^(p^(k/ℓ)) − x, f) = 1
/// for every prime ℓ | k.
fn poly_is_irreducible(fp: Fp, f: &[u64]) -> bool {
    let k = f.len() - 1;
    let xq = poly_pow_x_q(fp, f, k as u32);
    // x^(p^k) mod f must equal x
    let mut x = vec![0u64, 1];
    x.resize(k.max(2), 0);
    let mut xqv = xq.clone();
    xqv.resize(k.max(2), 0);
    if xqv != x {
        return false;
    }
    for l in prime_factors(k as u64) {
        let e = (k as u64 / l) as u32;
        let xe = poly_pow_x_q(fp, f, e);
        // gcd(x^(p^e) − x, f) must be 1
        let mut g = xe;
        if g.len() < 2 {
            g.resize(2, 0);
        }
        g[1] = fp.sub(g[1], 1);
        if poly_gcd_deg(fp, &g, f) != 0 {
            return false;
        }
    }
    true
}

/// x^(p^e) mod f by repeated p-th powering.
fn poly_pow_x_q(fp: Fp, f: &[u64], e: u32) -> Vec<u64> {
    let mut acc = vec![0u64, 1]; // x
    for _ in 0..e {
        acc = poly_pow_mod(fp, &acc, fp.p, f);
    }
    acc
}

fn poly_mul_mod(fp: Fp, a: &[u64], b: &[u64], f: &[u64]) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = fp.add(prod[i + j], fp.mul(x, y));
        }
    }
    poly_rem(fp, &mut prod, f);
    prod
}

fn poly_pow_mod(fp: Fp, base: &[u64], mut e: u64, f: &[u64]) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = base.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul_mod(fp, &acc, &b, f);
        }
        b = poly_mul_mod(fp, &b, &b, f);
        e >>= 1;
    }
    acc
}

/// In-place remainder by monic f.
fn poly_rem(fp: Fp, a: &mut Vec<u64>, f: &[u64]) {
    let k = f.len() - 1;
    while a.len() > k {
        let d = a.len() - 1;
        let c = a[d];
        a.pop();
        if c != 0 {
            for i in 0..k {
                let idx = d - k + i;
                let t = fp.mul(c, f[i]);
                a[idx] = fp.sub(a[idx], t);
            }
        }
        while a.len() > 1 && *a.last().unwrap() == 0 {
            a.pop();
        }
    }
}

fn poly_gcd_deg(fp: Fp, a: &[u64], b: &[u64]) -> usize {
    let trim = |v: &mut Vec<u64>| {
        while v.len() > 1 && *v.last().unwrap() == 0 {
            v.pop();
        }
        if v.is_empty() {
            v.push(0);
        }
    };
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !(b.len() == 1 && b[0] == 0) {
        // a mod b with b made monic
        let lead = *b.last().unwrap();
        let linv = fp.inv(lead);
        let bm: Vec<u64> = b.iter().map(|&c| fp.mul(c, linv)).collect();
        poly_rem(fp, &mut a, &bm);
        trim(&mut a);
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}
