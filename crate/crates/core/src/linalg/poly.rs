//! Univariate polynomials over a finite field and their factorization.
//!
//! Factorization runs the classical three stages: squarefree decomposition,
//! distinct-degree splitting, then Cantor-Zassenhaus equal-degree splitting
//! (with the trace map in characteristic 2).

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ff::{Fe, Field};

/// Dense polynomial, lowest coefficient first, no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Fe>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let c = self.field.format(c);
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}x")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<Fe>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, field.one())
    }

    pub fn constant(field: &Field, c: Fe) -> Poly {
        Poly::new(field, vec![c])
    }

    pub fn x(field: &Field) -> Poly {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    /// `x - a`
    pub fn linear(field: &Field, a: Fe) -> Poly {
        Poly::new(field, vec![field.neg(a), field.one()])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == self.field.one()
    }

    /// Degree, with the zero polynomial reported as `-1`.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or(Fe::ZERO)
    }

    pub fn leading(&self) -> Fe {
        self.coeffs.last().copied().unwrap_or(Fe::ZERO)
    }

    pub fn scale(&self, c: Fe) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).expect("nonzero leading coefficient");
        self.scale(inv)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            f,
            (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            f,
            (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect(),
        )
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Quotient and remainder. Panics on division by the zero polynomial.
    pub fn divrem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let f = &self.field;
        let mut rem = self.coeffs.clone();
        let dd = divisor.coeffs.len() - 1;
        if rem.len() <= dd {
            return (Poly::zero(f), self.clone());
        }
        let inv_lead = f.inv(divisor.leading()).expect("nonzero leading coefficient");
        let mut quot = vec![f.zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = f.mul(rem[i + dd], inv_lead);
            quot[i] = c;
            if c.is_zero() {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = f.sub(rem[i + j], f.mul(c, d));
            }
        }
        rem.truncate(dd);
        (Poly::new(f, quot), Poly::new(f, rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.divrem(divisor).1
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let g = self.gcd(other);
        self.mul(other).divrem(&g).0.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`; `g` is not normalized.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        (r0, s0, t0)
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        Poly::new(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(c, f.from_int(i as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: Fe) -> Fe {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `self^e mod m`
    pub fn pow_mod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut base = self.rem(m);
        let mut acc = Poly::one(&self.field).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// Rabin-style test: no roots and no factor of degree `<= deg/2`.
    pub fn is_irreducible(&self) -> bool {
        let n = self.degree();
        if n < 1 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let f = self.monic();
        let q = self.field.order();
        let x = Poly::x(&self.field);
        let mut h = x.clone();
        for _ in 1..=(n / 2) {
            h = h.pow_mod(q, &f);
            if !h.sub(&x).gcd(&f).is_one() {
                return false;
            }
        }
        true
    }

    /// Coefficient-wise p-th root of a polynomial in `x^p`.
    fn pth_root(&self) -> Poly {
        let f = &self.field;
        let p = f.characteristic() as usize;
        let e = f.order() / f.characteristic();
        Poly::new(
            f,
            self.coeffs
                .iter()
                .step_by(p)
                .map(|&c| f.pow(c, e))
                .collect(),
        )
    }

    /// Squarefree decomposition: monic squarefree `(g, m)` with
    /// `monic(self) = prod g^m`.
    pub fn squarefree(&self) -> Vec<(Poly, u32)> {
        let f = self.monic();
        let mut out = Vec::new();
        sff(&f, 1, &mut out);
        out
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// pairs `(g, d)` where `g` is the product of all irreducible factors of
    /// degree `d`.
    pub fn distinct_degree(&self) -> Vec<(Poly, usize)> {
        let q = self.field.order();
        let x = Poly::x(&self.field);
        let mut f = self.monic();
        let mut out = Vec::new();
        let mut h = x.clone();
        let mut d = 1usize;
        while f.degree() >= 2 * d as isize {
            h = h.pow_mod(q, &f);
            let g = h.sub(&x).gcd(&f);
            if !g.is_one() {
                f = f.divrem(&g).0;
                h = h.rem(&f);
                out.push((g, d));
            }
            d += 1;
        }
        if f.degree() > 0 {
            let deg = f.degree() as usize;
            out.push((f, deg));
        }
        out
    }

    /// Splits a monic squarefree product of irreducibles of degree `d`.
    pub fn equal_degree(&self, d: usize, rng: &mut impl Rng) -> Vec<Poly> {
        let f = self.monic();
        let n = f.degree() as usize;
        if n == d {
            return vec![f];
        }
        let field = &self.field;
        let q = field.order();
        loop {
            let a = Poly::new(
                field,
                (0..n).map(|_| field.element(rng.gen_range(0..q))).collect(),
            );
            if a.degree() < 1 {
                continue;
            }
            let b = if field.characteristic() == 2 {
                // trace from GF(q^d) down to GF(2)
                let steps = field.degree() * d;
                let mut t = a.rem(&f);
                let mut acc = t.clone();
                for _ in 1..steps {
                    t = t.mul(&t).rem(&f);
                    acc = acc.add(&t);
                }
                acc
            } else {
                // a^((q^d - 1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q-1)/2)
                let mut frob = a.rem(&f);
                let mut norm = frob.clone();
                for _ in 1..d {
                    frob = frob.pow_mod(q, &f);
                    norm = norm.mul(&frob).rem(&f);
                }
                norm.pow_mod((q - 1) / 2, &f).sub(&Poly::one(field))
            };
            let g = b.gcd(&f);
            if g.degree() > 0 && g.degree() < n as isize {
                let h = f.divrem(&g).0;
                let mut out = g.equal_degree(d, rng);
                out.extend(h.equal_degree(d, rng));
                return out;
            }
        }
    }

    /// Complete factorization into monic irreducibles with multiplicities,
    /// sorted by degree then coefficients. The leading coefficient of `self`
    /// is dropped. Uses a fixed seed; see [`Poly::factor_with`].
    pub fn factor(&self) -> Vec<(Poly, u32)> {
        self.factor_with(&mut ChaCha8Rng::seed_from_u64(0x5eed))
    }

    pub fn factor_with(&self, rng: &mut impl Rng) -> Vec<(Poly, u32)> {
        assert!(!self.is_zero(), "cannot factor the zero polynomial");
        let mut out = Vec::new();
        for (sq, mult) in self.squarefree() {
            for (g, d) in sq.distinct_degree() {
                for h in g.equal_degree(d, rng) {
                    out.push((h, mult));
                }
            }
        }
        out.sort_by(|a, b| {
            a.0.degree()
                .cmp(&b.0.degree())
                .then_with(|| a.0.coeffs.cmp(&b.0.coeffs))
        });
        out
    }

    /// Roots in the field, with multiplicity.
    pub fn roots(&self) -> Vec<(Fe, u32)> {
        self.factor()
            .into_iter()
            .filter(|(g, _)| g.degree() == 1)
            .map(|(g, m)| (self.field.neg(g.coeff(0)), m))
            .collect()
    }
}

fn sff(f: &Poly, scale: u32, out: &mut Vec<(Poly, u32)>) {
    if f.degree() < 1 {
        return;
    }
    let d = f.derivative();
    if d.is_zero() {
        sff(&f.pth_root(), scale * f.field.characteristic() as u32, out);
        return;
    }
    let mut c = f.gcd(&d);
    let mut w = f.divrem(&c).0;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.divrem(&y).0;
        if fac.degree() > 0 {
            out.push((fac.monic(), i * scale));
        }
        i += 1;
        w = y;
        c = c.divrem(&w).0;
    }
    if c.degree() > 0 {
        sff(&c.pth_root(), scale * f.field.characteristic() as u32, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::Modulus;

    fn p(field: &Field, c: &[i64]) -> Poly {
        Poly::new(field, c.iter().map(|&x| field.from_int(x)).collect())
    }

    #[test]
    fn x2_plus_1_splits_mod_5() {
        let f = Field::prime(5).unwrap();
        let fac = p(&f, &[1, 0, 1]).factor();
        assert_eq!(fac, vec![(p(&f, &[2, 1]), 1), (p(&f, &[3, 1]), 1)]);
        // oracle: exhaustive root search
        let roots: Vec<i64> = (0..5).filter(|r| (r * r + 1) % 5 == 0).collect();
        assert_eq!(roots, vec![2, 3]);
    }

    #[test]
    fn x2_plus_1_irreducible_mod_7() {
        let f = Field::prime(7).unwrap();
        let g = p(&f, &[1, 0, 1]);
        assert!(g.is_irreducible());
        assert_eq!(g.factor(), vec![(g.clone(), 1)]);
        assert!((0..7).all(|r| (r * r + 1) % 7 != 0));
    }

    #[test]
    fn x_squared() {
        for q in [2u64, 3, 7] {
            let f = Field::prime(q).unwrap();
            assert_eq!(p(&f, &[0, 0, 1]).factor(), vec![(Poly::x(&f), 2)]);
        }
    }

    #[test]
    fn inseparable_powers() {
        // (x+1)^6 over GF(3): derivative-free part needs the p-th root step
        let f = Field::prime(3).unwrap();
        let g = p(&f, &[1, 1]).pow(6).mul(&p(&f, &[1, 0, 1]));
        let fac = g.factor();
        assert_eq!(fac, vec![(p(&f, &[1, 1]), 6), (p(&f, &[1, 0, 1]), 1)]);
    }

    #[test]
    fn characteristic_two_splitting() {
        let f = Field::new(2, 2, Modulus::Auto).unwrap();
        // x^4 + x = x^4 - x vanishes on all of GF(4)
        let h = p(&f, &[0, 1, 0, 0, 1]);
        let roots: Vec<Fe> = h.roots().into_iter().map(|(r, _)| r).collect();
        assert_eq!(roots.len(), 4);
        assert!(roots.iter().all(|&r| h.eval(r).is_zero()));
    }

    #[test]
    fn extension_field_factors() {
        let f = Field::new(5, 2, Modulus::Auto).unwrap();
        // 4 | 24 and 3 | 24, so both split completely over GF(25)
        assert_eq!(p(&f, &[-1, 0, 0, 0, 1]).factor().len(), 4);
        assert_eq!(p(&f, &[-1, 0, 0, 1]).factor().len(), 3);
        // but x^2 + x + 1 is irreducible over GF(5)
        let f5 = Field::prime(5).unwrap();
        assert!(p(&f5, &[1, 1, 1]).is_irreducible());
    }

    #[test]
    fn ext_gcd_bezout() {
        let f = Field::prime(7).unwrap();
        let a = p(&f, &[1, 2, 3, 1]);
        let b = p(&f, &[5, 0, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }
}
