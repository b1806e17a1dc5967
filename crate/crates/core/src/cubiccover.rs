//! The degree-3 base change t = φ(s) = (s³ − 3s² + 1)/(3s² − 3s) of the
//! projective line, its deck transformation σ: s ↦ (s−1)/s, and the induced
//! partition of F_q ∪ {∞} into the loci where Fr_q ∘ σ^i fixes the fibre.
//!
//! For finite t the preimages of t are the roots of
//!     m_t(x) = x³ − 3(t+1)x² + 3tx + 1,
//! and membership is decided by two power-mods per t:
//!   t ∈ K⁰ iff m_t | x^q − x (all three preimages rational),
//!   t ∈ K² iff m_t | x^(q+1) − x + 1 (σ acts as Frobenius: s^q = (s−1)/s),
//!   t ∈ K¹ otherwise (s^q = −1/(s−1)),
//! with t = ζ, ζ² (the branch locus, when rational) set aside. ∞ ∈ K⁰ always
//! since φ⁻¹(∞) = {∞, 0, 1}.

use crate::arith::fq::{Fp, Fq, FqElem};
use crate::error::{Error, Result};

/// Point of P¹ over the working field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum P1 {
    Fin(FqElem),
    Inf,
}

/// Class labels for finite t.
pub const CLASS_K0: u8 = 0;
pub const CLASS_K1: u8 = 1;
pub const CLASS_K2: u8 = 2;
pub const CLASS_RAM: u8 = 3;

#[derive(Clone)]
pub struct Partition {
    pub q: u64,
    /// classes[code(t)] ∈ {0,1,2,3} for finite t; ∞ is in K⁰ by definition.
    pub classes: Vec<u8>,
    /// Codes of the t-values ζ, ζ² when q ≡ 1 mod 3, sorted.
    pub ram_codes: Vec<u64>,
}

impl Partition {
    /// Sizes of the finite parts of K⁰, K¹, K².
    pub fn finite_sizes(&self) -> [usize; 3] {
        let mut s = [0usize; 3];
        for &c in &self.classes {
            if c < 3 {
                s[c as usize] += 1;
            }
        }
        s
    }

    pub fn class_of_code(&self, code: u64) -> u8 {
        self.classes[code as usize]
    }
}

/// The partition over F_q. Requires gcd(q, 3) = 1 (μ₃ must be étale); even q
/// is fine and is exercised by the characteristic-2 surfaces.
pub fn partition(field: &Fq) -> Result<Partition> {
    if field.p == 3 {
        return Err(Error::BadCharacteristic(field.q));
    }
    if field.k == 1 {
        return Ok(partition_prime(field.fp()));
    }
    let q = field.q;
    let mut classes = vec![CLASS_K1; q as usize];
    let ram = field.third_roots_of_unity_nontrivial();
    let ram_codes: Vec<u64> = ram.iter().map(|z| field.code(z)).collect();
    for &c in &ram_codes {
        classes[c as usize] = CLASS_RAM;
    }
    for code in 0..q {
        if classes[code as usize] == CLASS_RAM {
            continue;
        }
        let t = field.from_code(code);
        classes[code as usize] = classify_t(field, &t);
    }
    Ok(Partition { q, classes, ram_codes })
}

fn classify_t(field: &Fq, t: &FqElem) -> u8 {
    // m_t(x) = x³ + m2 x² + m1 x + m0
    let m2 = field.neg(&field.scalar_mul(&field.add(t, &field.one()), 3));
    let m1 = field.scalar_mul(t, 3);
    let m0 = field.one();
    let m = [m0, m1, m2];
    let xq = fq_pow_x_mod_cubic(field, &m, field.q);
    let x = [field.zero(), field.one(), field.zero()];
    if xq == x {
        return CLASS_K0;
    }
    // x^(q+1) = x·x^q; K² iff it equals x − 1
    let xq1 = cubic_mul_by_x(field, &m, &xq);
    let xm1 = [field.neg(&field.one()), field.one(), field.zero()];
    if xq1 == xm1 {
        CLASS_K2
    } else {
        CLASS_K1
    }
}

type Cubic = [FqElem; 3]; // residues r0 + r1 x + r2 x², modulus implicit

fn cubic_mul(field: &Fq, m: &Cubic, a: &Cubic, b: &Cubic) -> Cubic {
    let mut s: Vec<FqElem> = (0..5).map(|_| field.zero()).collect();
    for i in 0..3 {
        if field.is_zero(&a[i]) {
            continue;
        }
        for j in 0..3 {
            let t = field.mul(&a[i], &b[j]);
            s[i + j] = field.add(&s[i + j], &t);
        }
    }
    reduce_deg4(field, m, s)
}

fn reduce_deg4(field: &Fq, m: &Cubic, s: Vec<FqElem>) -> Cubic {
    // x³ ≡ e2x² + e1x + e0 with e_i = −m_i (monic cubic)
    let e0 = field.neg(&m[0]);
    let e1 = field.neg(&m[1]);
    let e2 = field.neg(&m[2]);
    // x⁴ ≡ e2·x³ + e1x² + e0x
    let f2 = field.add(&field.mul(&e2, &e2), &e1);
    let f1 = field.add(&field.mul(&e2, &e1), &e0);
    let f0 = field.mul(&e2, &e0);
    let mut r = [s[0].clone(), s[1].clone(), s[2].clone()];
    r[0] = field.add(&r[0], &field.add(&field.mul(&s[3], &e0), &field.mul(&s[4], &f0)));
    r[1] = field.add(&r[1], &field.add(&field.mul(&s[3], &e1), &field.mul(&s[4], &f1)));
    r[2] = field.add(&r[2], &field.add(&field.mul(&s[3], &e2), &field.mul(&s[4], &f2)));
    r
}

fn cubic_mul_by_x(field: &Fq, m: &Cubic, a: &Cubic) -> Cubic {
    let s = vec![field.zero(), a[0].clone(), a[1].clone(), a[2].clone(), field.zero()];
    reduce_deg4(field, m, s)
}

fn fq_pow_x_mod_cubic(field: &Fq, m: &Cubic, e: u64) -> Cubic {
    let mut acc = [field.one(), field.zero(), field.zero()];
    let mut base = [field.zero(), field.one(), field.zero()];
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = cubic_mul(field, m, &acc, &base);
        }
        base = cubic_mul(field, m, &base, &base);
        e >>= 1;
    }
    acc
}

/// Specialized u64 partition over F_p; this runs once per prime in an `ap`
/// sweep so it stays off the FqElem allocation path.
fn partition_prime(fp: Fp) -> Partition {
    let p = fp.p;
    let mut classes = vec![CLASS_K1; p as usize];
    let mut ram_codes: Vec<u64> = vec![];
    if p % 3 == 1 {
        for t in 0..p {
            if fp.add(fp.add(fp.mul(t, t), t), 1) == 0 {
                ram_codes.push(t);
                classes[t as usize] = CLASS_RAM;
            }
        }
    }
    for t in 0..p {
        if classes[t as usize] == CLASS_RAM {
            continue;
        }
        classes[t as usize] = classify_t_prime(fp, t);
    }
    Partition { q: p, classes, ram_codes }
}

fn classify_t_prime(fp: Fp, t: u64) -> u8 {
    let p = fp.p;
    let e2 = fp.mul(3, fp.add(t, 1)); // x³ ≡ e2x² + e1x + e0
    let e1 = fp.neg(fp.mul(3, t));
    let e0 = fp.neg(1);
    let f2 = fp.add(fp.mul(e2, e2), e1);
    let f1 = fp.add(fp.mul(e2, e1), e0);
    let f0 = fp.mul(e2, e0);
    let red = |s: [u64; 5]| -> [u64; 3] {
        [
            fp.add(s[0], fp.add(fp.mul(s[3], e0), fp.mul(s[4], f0))),
            fp.add(s[1], fp.add(fp.mul(s[3], e1), fp.mul(s[4], f1))),
            fp.add(s[2], fp.add(fp.mul(s[3], e2), fp.mul(s[4], f2))),
        ]
    };
    let mul = |a: [u64; 3], b: [u64; 3]| -> [u64; 3] {
        let mut s = [0u64; 5];
        for i in 0..3 {
            if a[i] == 0 {
                continue;
            }
            for j in 0..3 {
                s[i + j] = fp.add(s[i + j], fp.mul(a[i], b[j]));
            }
        }
        red(s)
    };
    let mut acc = [1u64, 0, 0];
    let mut base = [0u64, 1, 0];
    let mut e = p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        e >>= 1;
    }
    if acc == [0, 1, 0] {
        return CLASS_K0;
    }
    let xq1 = red([0, acc[0], acc[1], acc[2], 0]);
    if xq1 == [fp.neg(1), 1, 0] {
        CLASS_K2
    } else {
        CLASS_K1
    }
}

/// φ as a map on P¹: poles of φ are s ∈ {0, 1, ∞}, all mapping to ∞.
pub fn phi_point(field: &Fq, s: &P1) -> P1 {
    match s {
        P1::Inf => P1::Inf,
        P1::Fin(s) => {
            let s2 = field.square(s);
            let den = field.scalar_mul(&field.sub(&s2, s), 3);
            if field.is_zero(&den) {
                return P1::Inf;
            }
            let s3 = field.mul(&s2, s);
            let num = field.add(&field.sub(&s3, &field.scalar_mul(&s2, 3)), &field.one());
            P1::Fin(field.mul(&num, &field.inv(&den)))
        }
    }
}

/// σ: s ↦ (s−1)/s; σ(0) = ∞, σ(∞) = 1.
pub fn sigma_point(field: &Fq, s: &P1) -> P1 {
    match s {
        P1::Inf => P1::Fin(field.one()),
        P1::Fin(s) => {
            if field.is_zero(s) {
                P1::Inf
            } else {
                P1::Fin(field.mul(&field.sub(s, &field.one()), &field.inv(s)))
            }
        }
    }
}

/// Ramification data: pairs (s₀, t₀) with φ(s₀) = t₀ and σ(s₀) = s₀. Empty
/// when q ≡ 2 mod 3; otherwise the cover cubic at t₀ is the perfect cube
/// (x − (t₀+1))³, so s₀ = t₀ + 1 and s₀³ = −1.
pub fn ram_points(field: &Fq) -> Vec<(FqElem, FqElem)> {
    field
        .third_roots_of_unity_nontrivial()
        .into_iter()
        .map(|t0| {
            let s0 = field.add(&t0, &field.one());
            (s0, t0)
        })
        .collect()
}

/// The multiplier λ of σ on a uniformizer at the fixed point s₀:
/// (s − s₀)/(σ(s) − s₀) → λ as s → s₀, and λ = s₀² exactly (from
/// s₀² − s₀ + 1 = 0). σ acts on the minimalized fibre at s₀ by
/// (x, y) ↦ (λ²x, λ³y), with λ² = −s₀ of order 3 and λ³ = 1.
pub fn sigma_fibre_multiplier(field: &Fq, s0: &FqElem) -> FqElem {
    field.square(s0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::fq::FqField;

    /// Independent classification: brute factorization over F_q and, for
    /// irreducible cubics, the Frobenius direction on a root in F_{q³}.
    fn classify_brute(p: u64, tcode: u64) -> u8 {
        let f = FqField::new(p, 1).unwrap();
        let t = f.from_code(tcode);
        let chk = f.add(&f.add(&f.square(&t), &t), &f.one());
        if f.is_zero(&chk) {
            return CLASS_RAM;
        }
        let f3 = FqField::new(p, 3).unwrap();
        let t3 = f3.from_u64(tcode);
        let eval3 = |s: &FqElem| -> FqElem {
            let s2 = f3.square(s);
            let s3e = f3.mul(&s2, s);
            let mut v = f3.sub(&s3e, &f3.scalar_mul(&f3.mul(&s2, &f3.add(&t3, &f3.one())), 3));
            v = f3.add(&v, &f3.scalar_mul(&f3.mul(s, &t3), 3));
            f3.add(&v, &f3.one())
        };
        let mut rational_roots = 0;
        let mut verdict: Option<u8> = None;
        for code in 0..f3.q {
            let s = f3.from_code(code);
            if !f3.is_zero(&eval3(&s)) {
                continue;
            }
            let sq = f3.pow(&s, p as u128);
            if sq == s {
                rational_roots += 1;
                continue;
            }
            let sig = f3.mul(&f3.sub(&s, &f3.one()), &f3.inv(&s));
            if sq == sig {
                verdict = Some(CLASS_K2);
            } else {
                let sig2 = f3.neg(&f3.inv(&f3.sub(&s, &f3.one())));
                assert_eq!(sq, sig2, "Frobenius must act through the deck group");
                verdict = Some(CLASS_K1);
            }
        }
        if rational_roots == 3 {
            return CLASS_K0;
        }
        assert_eq!(rational_roots, 0, "cubic splits completely or not at all");
        verdict.expect("irreducible cubic has roots in F_(q^3)")
    }

    #[test]
    fn partition_f5_frozen() {
        let f = FqField::new(5, 1).unwrap();
        let part = partition(&f).unwrap();
        // Frozen from the brute oracle below; ∞ joins K⁰ implicitly.
        let brute: Vec<u8> = (0..5).map(|t| classify_brute(5, t)).collect();
        for t in 0..5u64 {
            assert_eq!(part.class_of_code(t), brute[t as usize], "t = {}", t);
        }
        let s = part.finite_sizes();
        assert_eq!(s[0] + s[1] + s[2], 5);
    }

    #[test]
    fn partition_small_primes_vs_brute() {
        for p in [7u64, 11, 13] {
            let f = FqField::new(p, 1).unwrap();
            let part = partition(&f).unwrap();
            for t in 0..p {
                assert_eq!(part.class_of_code(t), classify_brute(p, t), "p={} t={}", p, t);
            }
            let expected = if p % 3 == 1 { p - 2 } else { p };
            let s = part.finite_sizes();
            assert_eq!((s[0] + s[1] + s[2]) as u64, expected);
        }
    }

    #[test]
    fn partition_char2() {
        // q = 4 ≡ 1 mod 3: the two ramified t-values are rational
        let f = FqField::new(2, 2).unwrap();
        let part = partition(&f).unwrap();
        let s = part.finite_sizes();
        assert_eq!((s[0] + s[1] + s[2]) as u64, 2);
        assert_eq!(part.ram_codes.len(), 2);
        assert!(partition(&FqField::new(3, 1).unwrap()).is_err());
    }

    #[test]
    fn ram_point_structure() {
        for (p, k) in [(7u64, 1usize), (13, 1), (5, 2)] {
            let f = FqField::new(p, k).unwrap();
            let rams = ram_points(&f);
            assert_eq!(rams.len(), 2);
            for (s0, t0) in &rams {
                assert_eq!(phi_point(&f, &P1::Fin(s0.clone())), P1::Fin(t0.clone()));
                assert_eq!(sigma_point(&f, &P1::Fin(s0.clone())), P1::Fin(s0.clone()));
                let s03 = f.mul(&f.square(s0), s0);
                assert_eq!(s03, f.neg(&f.one()), "s0^3 = -1");
                let lam = sigma_fibre_multiplier(&f, s0);
                assert_eq!(f.mul(&f.square(&lam), &lam), f.one(), "lambda^3 = 1");
                // λ² = −s₀ is a primitive cube root of unity
                let g = f.neg(s0);
                assert_eq!(f.square(&lam), g);
                assert_ne!(g, f.one());
                assert_eq!(f.mul(&f.mul(&g, &g), &g), f.one());
            }
        }
        let f = FqField::new(5, 1).unwrap();
        assert!(ram_points(&f).is_empty());
    }

    #[test]
    fn sigma_has_order_three() {
        let f = FqField::new(11, 1).unwrap();
        for code in 0..11 {
            let s = P1::Fin(f.from_code(code));
            let s1 = sigma_point(&f, &s);
            let s2 = sigma_point(&f, &s1);
            let s3 = sigma_point(&f, &s2);
            assert_eq!(s3, s);
            assert_eq!(phi_point(&f, &s1), phi_point(&f, &s));
        }
        assert_eq!(sigma_point(&f, &P1::Inf), P1::Fin(f.one()));
    }

    #[test]
    fn k2_roots_satisfy_frobenius_relation() {
        // For t ∈ K², roots s of m_t in F_{q³} satisfy s^q = (s−1)/s;
        // for t ∈ K¹, s^q = −1/(s−1). Exercised inside classify_brute,
        // which partition_small_primes_vs_brute pins against production.
        let f = FqField::new(13, 1).unwrap();
        let part = partition(&f).unwrap();
        let sizes = part.finite_sizes();
        assert!(sizes[1] > 0 && sizes[2] > 0, "both twisted classes occur");
    }
}
