//! Elliptic surfaces as long Weierstrass models over Q[t]:
//!     y² + a₁xy + a₃y = x³ + a₂x² + a₄x + a₆,  a_i ∈ Q[t],
//! their reduction mod p, per-fibre point counts over F_q, classification of
//! multiplicative fibres (order of vanishing of Δ and splitness of the node),
//! and the two-parameter family that specializes to the built-in pair X, X′.
//!
//! The fibre above t = ∞ is counted on the model obtained by the coordinate
//! flip t → 1/u with the minimal twist (x, y) → (u^{2k}x, u^{3k}y), followed
//! by stripping common (u², u³) powers; the built-in surfaces are semistable
//! at ∞ so the stripped model has a nodal or smooth special fibre there.

use crate::arith::fq::{Fp, Fq, FqElem};
use crate::arith::qpoly::{rat, rint, FpPoly, QPoly};
use crate::cubiccover::P1;
use crate::error::{Error, Result};
use num_rational::BigRational;
use num_traits::{Pow, Signed, Zero};
use std::collections::BTreeSet;

/// Long Weierstrass model over Q[t]. `a` holds (a₁, a₂, a₃, a₄, a₆).
#[derive(Clone, Debug)]
pub struct SurfaceModel {
    pub label: String,
    pub a: [QPoly; 5],
}

/// Classification of a fibre of the reduced model.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FibreClass {
    Smooth,
    /// I_n with n = ord of vanishing of Δ; split records whether the two
    /// branches at the node are F_q-rational.
    Multiplicative { n: usize, split: bool },
    /// Additive reduction; v_disc is the order of vanishing of Δ.
    Additive { v_disc: usize },
}

impl SurfaceModel {
    pub fn new(label: &str, a1: QPoly, a2: QPoly, a3: QPoly, a4: QPoly, a6: QPoly) -> Self {
        SurfaceModel { label: label.to_string(), a: [a1, a2, a3, a4, a6] }
    }

    pub fn short(label: &str, a4: QPoly, a6: QPoly) -> Self {
        Self::new(label, QPoly::zero(), QPoly::zero(), QPoly::zero(), a4, a6)
    }

    fn b_invariants(&self) -> (QPoly, QPoly, QPoly, QPoly) {
        let [a1, a2, a3, a4, a6] = &self.a;
        let b2 = a1.mul(a1).add(&a2.scale(&rint(4)));
        let b4 = a4.scale(&rint(2)).add(&a1.mul(a3));
        let b6 = a3.mul(a3).add(&a6.scale(&rint(4)));
        let b8 = a1
            .mul(a1)
            .mul(a6)
            .add(&a2.mul(a6).scale(&rint(4)))
            .sub(&a1.mul(a3).mul(a4))
            .add(&a2.mul(&a3.mul(a3)))
            .sub(&a4.mul(a4));
        (b2, b4, b6, b8)
    }

    /// Discriminant Δ(t) ∈ Q[t].
    pub fn disc(&self) -> QPoly {
        let (b2, b4, b6, b8) = self.b_invariants();
        b2.mul(&b2)
            .mul(&b8)
            .neg()
            .sub(&b4.pow(3).scale(&rint(8)))
            .sub(&b6.mul(&b6).scale(&rint(27)))
            .add(&b2.mul(&b4).mul(&b6).scale(&rint(9)))
    }

    pub fn c4(&self) -> QPoly {
        let (b2, b4, _, _) = self.b_invariants();
        b2.mul(&b2).sub(&b4.scale(&rint(24)))
    }

    /// The model in the coordinate u = 1/t whose fibre at u = 0 is the fibre
    /// of this model at t = ∞.
    pub fn flip_at_infinity(&self) -> SurfaceModel {
        let weights = [1usize, 2, 3, 4, 6];
        let mut k = 1usize;
        for (ai, &w) in self.a.iter().zip(&weights) {
            if let Some(d) = ai.degree() {
                k = k.max(d.div_ceil(w));
            }
        }
        let mut flipped: Vec<QPoly> = self
            .a
            .iter()
            .zip(&weights)
            .map(|(ai, &w)| {
                if ai.is_zero() {
                    QPoly::zero()
                } else {
                    ai.reverse_into(w * k)
                }
            })
            .collect();
        // strip common (u², u³) scalings: divide each a_i by u^i while possible
        while flipped.iter().any(|ai| !ai.is_zero())
            && flipped
                .iter()
                .zip(&weights)
                .all(|(ai, &w)| ai.is_zero() || ai.coeffs.iter().take(w).all(|c| c.is_zero()))
        {
            for (ai, &w) in flipped.iter_mut().zip(&weights) {
                if !ai.is_zero() {
                    ai.coeffs.drain(..w);
                }
            }
        }
        SurfaceModel {
            label: format!("{}@inf", self.label),
            a: [
                flipped[0].clone(),
                flipped[1].clone(),
                flipped[2].clone(),
                flipped[3].clone(),
                flipped[4].clone(),
            ],
        }
    }

    /// Reduce both coordinate charts mod p.
    pub fn reduce(&self, p: u64) -> Result<ReducedSurface> {
        let fp = Fp::new(p);
        let chart = |m: &SurfaceModel| -> Result<ChartFq> {
            let a: Vec<FpPoly> = m
                .a
                .iter()
                .map(|ai| ai.reduce_mod(fp))
                .collect::<Result<_>>()?;
            let (b2, b4, b6, _) = m.b_invariants();
            Ok(ChartFq {
                fp,
                a: [a[0].clone(), a[1].clone(), a[2].clone(), a[3].clone(), a[4].clone()],
                b2: b2.reduce_mod(fp)?,
                b4: b4.reduce_mod(fp)?,
                b6: b6.reduce_mod(fp)?,
                c4: m.c4().reduce_mod(fp)?,
                disc: m.disc().reduce_mod(fp)?,
            })
        };
        let main = chart(self)?;
        let flip = chart(&self.flip_at_infinity())?;
        if main.disc.is_zero() {
            return Err(Error::DegenerateFibre(format!(
                "disc of {} vanishes identically mod {}",
                self.label, p
            )));
        }
        Ok(ReducedSurface { p, label: self.label.clone(), main, flip })
    }
}

/// One coordinate chart reduced mod p.
#[derive(Clone)]
pub struct ChartFq {
    pub fp: Fp,
    pub a: [FpPoly; 5],
    pub b2: FpPoly,
    pub b4: FpPoly,
    pub b6: FpPoly,
    pub c4: FpPoly,
    pub disc: FpPoly,
}

/// A surface reduced mod p: the affine chart plus the chart at infinity.
#[derive(Clone)]
pub struct ReducedSurface {
    pub p: u64,
    pub label: String,
    pub main: ChartFq,
    pub flip: ChartFq,
}

impl ReducedSurface {
    fn chart(&self, t: &P1) -> (&ChartFq, Option<FqElem>) {
        match t {
            P1::Inf => (&self.flip, None),
            P1::Fin(t0) => (&self.main, Some(t0.clone())),
        }
    }

    /// #fibre(F_q) of the projective Weierstrass fibre at t, the unique point
    /// at infinity included (and the node, when the fibre is singular).
    pub fn count_fibre(&self, field: &Fq, t: &P1, chi: &[i8]) -> u64 {
        let (chart, t0) = self.chart(t);
        let t0 = t0.unwrap_or_else(|| field.zero());
        if self.p >= 5 {
            // complete the square: count = q + 1 + Σ_x χ(4x³ + b2x² + 2b4x + b6)
            let b2 = chart.b2.eval_fq(field, &t0);
            let b4 = chart.b4.eval_fq(field, &t0);
            let b6 = chart.b6.eval_fq(field, &t0);
            let four = field.from_u64(4);
            let b4t2 = field.scalar_mul(&b4, 2);
            let mut total: i64 = 0;
            for code in 0..field.q {
                let x = field.from_code(code);
                let x2 = field.square(&x);
                let x3 = field.mul(&x2, &x);
                let mut h = field.mul(&four, &x3);
                h = field.add(&h, &field.mul(&b2, &x2));
                h = field.add(&h, &field.mul(&b4t2, &x));
                h = field.add(&h, &b6);
                total += chi[field.code(&h) as usize] as i64;
            }
            (field.q as i64 + 1 + total) as u64
        } else {
            // char 2/3: enumerate the affine plane directly
            let a1 = chart.a[0].eval_fq(field, &t0);
            let a2 = chart.a[1].eval_fq(field, &t0);
            let a3 = chart.a[2].eval_fq(field, &t0);
            let a4 = chart.a[3].eval_fq(field, &t0);
            let a6 = chart.a[4].eval_fq(field, &t0);
            let mut count = 1u64; // point at infinity
            for xc in 0..field.q {
                let x = field.from_code(xc);
                let x2 = field.square(&x);
                let rhs = field.add(
                    &field.add(&field.mul(&x2, &x), &field.mul(&a2, &x2)),
                    &field.add(&field.mul(&a4, &x), &a6),
                );
                let a1x_a3 = field.add(&field.mul(&a1, &x), &a3);
                for yc in 0..field.q {
                    let y = field.from_code(yc);
                    let lhs = field.add(&field.square(&y), &field.mul(&a1x_a3, &y));
                    if lhs == rhs {
                        count += 1;
                    }
                }
            }
            count
        }
    }

    /// Fibre classification at t over F_q; requires p ≥ 5.
    pub fn classify_fibre(&self, field: &Fq, t: &P1) -> Result<FibreClass> {
        if self.p < 5 {
            return Err(Error::BadPrime(self.p));
        }
        let (chart, t0) = self.chart(t);
        let t0 = t0.unwrap_or_else(|| field.zero());
        let n = chart.disc.root_multiplicity_fq(field, &t0);
        if n == 0 {
            return Ok(FibreClass::Smooth);
        }
        let c4v = chart.c4.eval_fq(field, &t0);
        if field.is_zero(&c4v) {
            return Ok(FibreClass::Additive { v_disc: n });
        }
        // node of y² = g(x), g = x³ + ax² + bx + c monic with a = b2/4,
        // b = b4/2, c = b6/4; double root r = (9c − ab)/(2(a² − 3b)),
        // simple root s = −a − 2r; split iff r − s is a square.
        let inv4 = field.inv(&field.from_u64(4));
        let a = field.mul(&chart.b2.eval_fq(field, &t0), &inv4);
        let b = field.mul(&chart.b4.eval_fq(field, &t0), &field.inv(&field.from_u64(2)));
        let c = field.mul(&chart.b6.eval_fq(field, &t0), &inv4);
        let disc2 = field.sub(&field.square(&a), &field.scalar_mul(&b, 3));
        if field.is_zero(&disc2) {
            return Err(Error::DegenerateFibre(format!(
                "{} has a cusp where c4 is nonzero at {:?}",
                self.label, t0
            )));
        }
        let num = field.sub(&field.scalar_mul(&c, 9), &field.mul(&a, &b));
        let r = field.mul(&num, &field.inv(&field.scalar_mul(&disc2, 2)));
        let s = field.sub(&field.neg(&a), &field.scalar_mul(&r, 2));
        let split = field.sqrt_exists(&field.sub(&r, &s)) == 1;
        Ok(FibreClass::Multiplicative { n, split })
    }

    /// Per-fibre counts for every t ∈ F_p, with the ∞ count appended (k = 1
    /// fast path): the cubic h(x) is advanced by third differences, so the
    /// inner loop is three modular additions and a character lookup.
    pub fn count_all_fibres_prime(&self, chi: &[i8]) -> Vec<u64> {
        assert!(self.p >= 5, "fast sweep needs p >= 5");
        let p = self.p;
        let fp = self.main.fp;
        let mut out = Vec::with_capacity(p as usize + 1);
        for t in 0..p {
            out.push(count_one_prime(fp, &self.main, t, chi));
        }
        out.push(count_one_prime(fp, &self.flip, 0, chi));
        out
    }
}

fn count_one_prime(fp: Fp, chart: &ChartFq, t: u64, chi: &[i8]) -> u64 {
    let p = fp.p;
    let b2 = chart.b2.eval_fp(t);
    let b4 = chart.b4.eval_fp(t);
    let b6 = chart.b6.eval_fp(t);
    let h = |x: u64| -> u64 {
        let x2 = fp.mul(x, x);
        let x3 = fp.mul(x2, x);
        fp.add(
            fp.add(fp.mul(4, x3), fp.mul(b2, x2)),
            fp.add(fp.mul(fp.mul(2, b4), x), b6),
        )
    };
    // third-difference advance of the cubic
    let (h0, h1, h2, h3) = (h(0), h(1), h(2), h(3));
    let mut hv = h0;
    let mut d1 = fp.sub(h1, h0);
    let mut d2 = fp.sub(fp.add(h2, h0), fp.add(h1, h1));
    let d3 = fp.sub(
        fp.add(h3, fp.mul(3, h1)),
        fp.add(fp.mul(3, h2), h0),
    );
    let mut total: i64 = 0;
    for _ in 0..p {
        total += chi[hv as usize] as i64;
        hv = fp.add(hv, d1);
        d1 = fp.add(d1, d2);
        d2 = fp.add(d2, d3);
    }
    (p as i64 + 1 + total) as u64
}

/// The two-parameter family: X is the rational surface with additive fibres
/// of type IV over the branch locus t² + t + 1 = 0,
///     y² = x³ − 3c₅²(t²+t+1)²x + (2c₅³t² + 2c₅³t + 3c₆²c₅ − c₅³)(t²+t+1)²,
/// and X′ the I₉-at-∞ surface re-coordinatized by t̃ = (6c₅t+3c₅+3c₆)/(2c₆).
/// Returns (X, X′, bad primes = prime divisors of the coincidence
/// discriminant 2¹²3¹⁰c₅⁶c₆⁶(3c₆²+c₅²)²(c₆−c₅)⁴(c₆+c₅)⁴).
pub fn family_specialize(
    c5: &BigRational,
    c6: &BigRational,
) -> Result<(SurfaceModel, SurfaceModel, BTreeSet<u64>)> {
    let disc_expr: BigRational = rint(2).pow(12i32)
        * rint(3).pow(10i32)
        * c5.pow(6i32)
        * c6.pow(6i32)
        * (rint(3) * c6 * c6 + c5 * c5).pow(2i32)
        * (c6 - c5).pow(4i32)
        * (c6 + c5).pow(4i32);
    if disc_expr.is_zero() {
        return Err(Error::DegenerateFamily(format!(
            "c5 = {}, c6 = {} collapses the singular fibres",
            c5, c6
        )));
    }
    // X: k1 = −3c5², k2 = k3 = 2c5³, k4 = 3c6²c5 − c5³
    let k1 = -(rint(3) * c5 * c5);
    let k2 = rint(2) * c5 * c5 * c5;
    let k4 = rint(3) * c6 * c6 * c5 - c5 * c5 * c5;
    let m2 = QPoly::from_ints(&[1, 1, 1]).pow(2);
    let a4 = m2.scale(&k1);
    let quad = QPoly { coeffs: vec![k4, k2.clone(), k2] };
    let a6 = quad.mul(&m2);
    let x = SurfaceModel::short("X", a4, a6);

    // X′ in t̃: y² = x³ − (t̃⁴/3 + 8t̃)x − (2t̃⁶/27 + 8t̃³/3 + 16),
    // then t̃ = (6c₅t + 3c₅ + 3c₆)/(2c₆).
    let a4t = QPoly {
        coeffs: vec![
            rint(0),
            rint(-8),
            rint(0),
            rint(0),
            -rat(1, 3),
        ],
    };
    let a6t = QPoly {
        coeffs: vec![
            rint(-16),
            rint(0),
            rint(0),
            -rat(8, 3),
            rint(0),
            rint(0),
            -rat(2, 27),
        ],
    };
    let lin_a = rint(6) * c5 / (rint(2) * c6);
    let lin_b = (rint(3) * c5 + rint(3) * c6) / (rint(2) * c6);
    let xp = SurfaceModel::short(
        "Xprime",
        a4t.compose_linear(&lin_a, &lin_b),
        a6t.compose_linear(&lin_a, &lin_b),
    );

    let mut bad = BTreeSet::new();
    for p in prime_divisors_of_rational(&disc_expr) {
        bad.insert(p);
    }
    Ok((x, xp, bad))
}

fn prime_divisors_of_rational(r: &BigRational) -> Vec<u64> {
    let mut out = BTreeSet::new();
    for part in [r.numer().abs(), r.denom().abs()] {
        let mut n: u128 = part.try_into().expect("family parameters stay machine-sized");
        let mut d: u128 = 2;
        while d * d <= n {
            if n % d == 0 {
                out.insert(d as u64);
                while n % d == 0 {
                    n /= d;
                }
            }
            d += 1;
        }
        if n > 1 {
            out.insert(n as u64);
        }
    }
    out.into_iter().collect()
}

/// The specialization c₅ = 3, c₆ = 1; only 2 and 3 are bad.
pub fn x_eq8() -> SurfaceModel {
    let (mut x, _, _) = family_specialize(&rint(3), &rint(1)).unwrap();
    x.label = "X-eq8".into();
    x
}

pub fn xprime_eq8() -> SurfaceModel {
    let (_, mut xp, _) = family_specialize(&rint(3), &rint(1)).unwrap();
    xp.label = "Xprime-eq8".into();
    xp
}

/// Look up a built-in named model.
pub fn builtin(name: &str) -> Option<SurfaceModel> {
    match name {
        "X-eq8" => Some(x_eq8()),
        "Xprime-eq8" => Some(xprime_eq8()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::fq::FqField;

    #[test]
    fn eq8_matches_displayed_equations() {
        // X: y² = x³ − 27(t²+t+1)²x + 18(3t²+3t−1)(t²+t+1)²
        let x = x_eq8();
        let m2 = QPoly::from_ints(&[1, 1, 1]).pow(2);
        assert_eq!(x.a[3], m2.scale(&rint(-27)));
        assert_eq!(x.a[4], QPoly::from_ints(&[-1, 3, 3]).scale(&rint(18)).mul(&m2));
        // X′: y² = x³ − 3(3t+2)(243t³+486t²+324t+80)x − 39366t⁶ − 157464t⁵
        //          − 262440t⁴ − 235224t³ − 120528t² − 33696t − 4048
        let xp = xprime_eq8();
        let a4 = QPoly::from_ints(&[2, 3])
            .mul(&QPoly::from_ints(&[80, 324, 486, 243]))
            .scale(&rint(-3));
        assert_eq!(xp.a[3], a4);
        let a6 = QPoly::from_ints(&[-4048, -33696, -120528, -235224, -262440, -157464, -39366]);
        assert_eq!(xp.a[4], a6);
    }

    #[test]
    fn family_bad_primes() {
        let (_, _, bad) = family_specialize(&rint(3), &rint(1)).unwrap();
        assert_eq!(bad.into_iter().collect::<Vec<_>>(), vec![2, 3]);
        assert!(family_specialize(&rint(2), &rint(2)).is_err());
    }

    #[test]
    fn disc_factorizations_eq8() {
        // deg Δ_X = 10 (I₂ at ∞), with the IV fibres contributing (t²+t+1)⁴
        // and the I₁ pair 3t²+3t+1.
        let x = x_eq8();
        let dx = x.disc();
        assert_eq!(dx.degree(), Some(10));
        let expected = QPoly::from_ints(&[1, 1, 1])
            .pow(4)
            .mul(&QPoly::from_ints(&[1, 3, 3]))
            .scale(&(rint(-16) * rint(-69984)));
        assert_eq!(dx, expected);
        // deg Δ_X′ = 3 (I₉ at ∞), roots at t = −1 and the roots of 3t²+3t+1
        let xp = xprime_eq8();
        let dxp = xp.disc();
        assert_eq!(dxp.degree(), Some(3));
        let lead = dxp.coeff(3);
        let expected_xp = QPoly::from_ints(&[1, 1])
            .mul(&QPoly::from_ints(&[1, 3, 3]))
            .scale(&(lead / rint(3)));
        assert_eq!(dxp, expected_xp);
    }

    #[test]
    fn count_n6_surface_at_p2() {
        // y² + txy + y = x³ + x² + x at t = 0 over F₂: 2 affine + ∞ = 3
        let s = SurfaceModel::new(
            "n6",
            QPoly::x(),
            QPoly::from_ints(&[1]),
            QPoly::from_ints(&[1]),
            QPoly::from_ints(&[1]),
            QPoly::zero(),
        );
        let rs = s.reduce(2).unwrap();
        let f2 = FqField::new(2, 1).unwrap();
        let chi = f2.chi_table();
        assert_eq!(rs.count_fibre(&f2, &P1::Fin(f2.zero()), &chi), 3);
    }

    #[test]
    fn hasse_bound_on_smooth_fibres() {
        let x = x_eq8();
        for p in [5u64, 7, 11, 13] {
            let rs = x.reduce(p).unwrap();
            let f = FqField::new(p, 1).unwrap();
            let chi = f.chi_table();
            for code in 0..p {
                let t = P1::Fin(f.from_code(code));
                if rs.classify_fibre(&f, &t).unwrap() == FibreClass::Smooth {
                    let n = rs.count_fibre(&f, &t, &chi) as i64;
                    let bound = 2.0 * (p as f64).sqrt();
                    assert!(((n - p as i64 - 1).abs() as f64) <= bound);
                }
            }
        }
    }

    #[test]
    fn fast_sweep_matches_generic() {
        let xp = xprime_eq8();
        for p in [5u64, 13] {
            let rs = xp.reduce(p).unwrap();
            let f = FqField::new(p, 1).unwrap();
            let chi = f.chi_table();
            let sweep = rs.count_all_fibres_prime(&chi);
            for code in 0..p {
                let t = P1::Fin(f.from_code(code));
                assert_eq!(sweep[code as usize], rs.count_fibre(&f, &t, &chi));
            }
            assert_eq!(sweep[p as usize], rs.count_fibre(&f, &P1::Inf, &chi));
        }
    }

    #[test]
    fn classify_eq8_inventory_mod_primes() {
        // X has I₂ at ∞; X′ has I₉ at ∞ and I₁ at t = −1; the IV fibres of X
        // sit at the roots of t² + t + 1 when those are rational.
        for p in [5u64, 7, 11, 13, 17, 19] {
            let f = FqField::new(p, 1).unwrap();
            let x = x_eq8().reduce(p).unwrap();
            let xp = xprime_eq8().reduce(p).unwrap();
            match x.classify_fibre(&f, &P1::Inf).unwrap() {
                FibreClass::Multiplicative { n: 2, .. } => {}
                other => panic!("X at inf mod {}: {:?}", p, other),
            }
            match xp.classify_fibre(&f, &P1::Inf).unwrap() {
                FibreClass::Multiplicative { n: 9, .. } => {}
                other => panic!("X' at inf mod {}: {:?}", p, other),
            }
            match xp.classify_fibre(&f, &P1::Fin(f.from_i64(-1))).unwrap() {
                FibreClass::Multiplicative { n: 1, .. } => {}
                other => panic!("X' at -1 mod {}: {:?}", p, other),
            }
            for z in f.third_roots_of_unity_nontrivial() {
                match x.classify_fibre(&f, &P1::Fin(z)).unwrap() {
                    FibreClass::Additive { v_disc: 4 } => {}
                    other => panic!("X at zeta mod {}: {:?}", p, other),
                }
            }
        }
    }

    #[test]
    fn split_vs_count_cross_check() {
        // multiplicative fibre count: q for split, q + 2 for non-split
        for p in [5u64, 7, 11, 13, 17, 19, 23] {
            let f = FqField::new(p, 1).unwrap();
            let chi = f.chi_table();
            for rs in [x_eq8().reduce(p).unwrap(), xprime_eq8().reduce(p).unwrap()] {
                let mut pts: Vec<P1> = (0..p).map(|c| P1::Fin(f.from_code(c))).collect();
                pts.push(P1::Inf);
                for t in pts {
                    if let FibreClass::Multiplicative { split, .. } =
                        rs.classify_fibre(&f, &t).unwrap()
                    {
                        let n = rs.count_fibre(&f, &t, &chi);
                        let expect = if split { p } else { p + 2 };
                        assert_eq!(n, expect, "{} mod {} at {:?}", rs.label, p, t);
                    }
                }
            }
        }
    }

    #[test]
    fn shared_singular_locations_mod_7() {
        // the X-side I₂ and X′-side I₉ share t = ∞; the I₁s share the roots
        // of 3t²+3t+1, rational mod 7 (t = 1 and t = 5)
        let f = FqField::new(7, 1).unwrap();
        let x = x_eq8().reduce(7).unwrap();
        let xp = xprime_eq8().reduce(7).unwrap();
        for r in [1u64, 5] {
            let t = P1::Fin(f.from_u64(r));
            assert!(matches!(
                x.classify_fibre(&f, &t).unwrap(),
                FibreClass::Multiplicative { n: 1, .. }
            ));
            assert!(matches!(
                xp.classify_fibre(&f, &t).unwrap(),
                FibreClass::Multiplicative { n: 1, .. }
            ));
        }
    }

    #[test]
    fn split_matches_extension_quadratic_twist() {
        // a non-split fibre over F_p becomes split over F_{p²}
        let xp = xprime_eq8();
        for p in [5u64, 7, 11, 13, 17] {
            let rs = xp.reduce(p).unwrap();
            let f1 = FqField::new(p, 1).unwrap();
            let f2 = FqField::new(p, 2).unwrap();
            if let FibreClass::Multiplicative { n, split } =
                rs.classify_fibre(&f1, &P1::Inf).unwrap()
            {
                let over_ext = rs.classify_fibre(&f2, &P1::Inf).unwrap();
                assert_eq!(over_ext, FibreClass::Multiplicative { n, split: true });
                let _ = split;
            } else {
                panic!("expected I9");
            }
        }
    }
}
