//! Exact arithmetic in GF(p) and GF(p^k).
//!
//! Elements are packed into a `u64` as `c0 + c1*p + ... + c_{k-1}*p^(k-1)`,
//! where `c0 + c1*x + ...` is the polynomial-basis representative modulo the
//! field's defining polynomial. A [`Field`] is a cheap-to-clone handle; all
//! arithmetic goes through it.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::Poly;

/// Upper bound on the extension degree.
pub const MAX_DEGREE: usize = 16;
/// Characteristic must stay below this so products fit in a `u64`.
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;

/// A field element in packed polynomial-basis form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fe(pub(crate) u64);

impl Fe {
    pub const ZERO: Fe = Fe(0);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// The packed integer encoding. Stable across runs and used for ordering.
    pub fn raw(self) -> u64 {
        self.0
    }
}

/// How to choose the defining polynomial of an extension field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Modulus {
    /// Lexicographically smallest monic irreducible, comparing the
    /// coefficient list `[c0, c1, ..., c_{k-1}]`.
    Auto,
    /// Explicit coefficients `[c0, ..., ck]` (low to high, degree `k`).
    Given(Vec<u64>),
}

#[derive(Debug, PartialEq, Eq)]
struct FieldInner {
    p: u64,
    k: usize,
    /// Monic modulus `[c0..ck]`; empty for prime fields.
    modulus: Vec<u64>,
    order: u64,
}

/// The finite field GF(p^k).
#[derive(Clone, PartialEq, Eq)]
pub struct Field(Arc<FieldInner>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.k == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{}; {:?})", self.0.p, self.0.k, self.0.modulus)
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1, Modulus::Auto)
    }

    pub fn new(p: u64, k: usize, modulus: Modulus) -> Result<Field> {
        if !is_prime(p) || p >= MAX_CHARACTERISTIC {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if k == 0 || k > MAX_DEGREE || (p as f64).powi(k as i32) >= 2f64.powi(62) {
            return Err(Error::UnsupportedDegree(k));
        }
        let order = p.pow(k as u32);
        if k == 1 {
            return match modulus {
                Modulus::Given(m) if !m.is_empty() => Err(Error::ReducibleModulus(format!(
                    "prime fields take no modulus, got {m:?}"
                ))),
                _ => Ok(Field(Arc::new(FieldInner {
                    p,
                    k,
                    modulus: Vec::new(),
                    order,
                }))),
            };
        }
        let base = Field::prime(p)?;
        let modulus = match modulus {
            Modulus::Given(m) => {
                if m.len() != k + 1 || m.iter().any(|&c| c >= p) {
                    return Err(Error::ReducibleModulus(format!(
                        "modulus {m:?} is not a degree-{k} polynomial over GF({p})"
                    )));
                }
                let lead = base.elem(m[k]);
                if lead.is_zero() {
                    return Err(Error::ReducibleModulus(format!("modulus {m:?} has degree < {k}")));
                }
                let inv = base.inv(lead)?;
                let m: Vec<u64> = m.iter().map(|&c| base.mul(base.elem(c), inv).0).collect();
                if !is_irreducible_over_prime(&base, &m) {
                    return Err(Error::ReducibleModulus(format!("{m:?} is reducible over GF({p})")));
                }
                m
            }
            Modulus::Auto => smallest_irreducible(&base, k),
        };
        Ok(Field(Arc::new(FieldInner {
            p,
            k,
            modulus,
            order,
        })))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> usize {
        self.0.k
    }

    pub fn order(&self) -> u64 {
        self.0.order
    }

    /// Monic modulus coefficients `[c0..ck]`, empty for a prime field.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn zero(&self) -> Fe {
        Fe(0)
    }

    pub fn one(&self) -> Fe {
        Fe(1)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Fe {
        let p = self.0.p as i64;
        Fe(n.rem_euclid(p) as u64)
    }

    fn elem(&self, c: u64) -> Fe {
        Fe(c % self.0.p)
    }

    /// Builds an element from polynomial coefficients `[c0, c1, ...]`.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Fe> {
        if coeffs.len() > self.0.k {
            return Err(Error::InvalidElement(format!(
                "{coeffs:?} has more than {} coefficients",
                self.0.k
            )));
        }
        let mut v = 0u64;
        for &c in coeffs.iter().rev() {
            if c >= self.0.p {
                return Err(Error::InvalidElement(format!(
                    "coefficient {c} out of range for characteristic {}",
                    self.0.p
                )));
            }
            v = v * self.0.p + c;
        }
        Ok(Fe(v))
    }

    /// Length-`k` coefficient vector of `a`.
    pub fn coeffs(&self, a: Fe) -> Vec<u64> {
        let mut out = vec![0; self.0.k];
        let mut v = a.0;
        for c in out.iter_mut() {
            *c = v % self.0.p;
            v /= self.0.p;
        }
        out
    }

    /// Element with packed index `i` in `0..order`; used for enumeration.
    pub fn element(&self, i: u64) -> Fe {
        debug_assert!(i < self.0.order);
        Fe(i)
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.0.order).map(Fe)
    }

    fn digits(&self, a: Fe) -> [u64; MAX_DEGREE] {
        let mut out = [0u64; MAX_DEGREE];
        let mut v = a.0;
        for c in out.iter_mut().take(self.0.k) {
            *c = v % self.0.p;
            v /= self.0.p;
        }
        out
    }

    fn pack(&self, d: &[u64]) -> Fe {
        let mut v = 0u64;
        for &c in d[..self.0.k].iter().rev() {
            v = v * self.0.p + c;
        }
        Fe(v)
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        let p = self.0.p;
        if self.0.k == 1 {
            let s = a.0 + b.0;
            return Fe(if s >= p { s - p } else { s });
        }
        let (x, y) = (self.digits(a), self.digits(b));
        let mut z = [0u64; MAX_DEGREE];
        for i in 0..self.0.k {
            z[i] = (x[i] + y[i]) % p;
        }
        self.pack(&z)
    }

    pub fn neg(&self, a: Fe) -> Fe {
        let p = self.0.p;
        if self.0.k == 1 {
            return Fe(if a.0 == 0 { 0 } else { p - a.0 });
        }
        let x = self.digits(a);
        let mut z = [0u64; MAX_DEGREE];
        for i in 0..self.0.k {
            z[i] = (p - x[i]) % p;
        }
        self.pack(&z)
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        let p = self.0.p;
        let k = self.0.k;
        if k == 1 {
            return Fe(a.0 * b.0 % p);
        }
        if a.0 == 0 || b.0 == 0 {
            return Fe(0);
        }
        let (x, y) = (self.digits(a), self.digits(b));
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..k {
            if x[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
            }
        }
        // reduce by the monic modulus, top degree down
        let m = &self.0.modulus;
        for d in (k..2 * k - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for i in 0..k {
                let t = c * m[i] % p;
                prod[d - k + i] = (prod[d - k + i] + p - t) % p;
            }
        }
        self.pack(&prod)
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = self.0.p;
        if self.0.k == 1 {
            let (mut r0, mut r1) = (p as i64, a.0 as i64);
            let (mut t0, mut t1) = (0i64, 1i64);
            while r1 != 0 {
                let q = r0 / r1;
                (r0, r1) = (r1, r0 - q * r1);
                (t0, t1) = (t1, t0 - q * t1);
            }
            return Ok(self.from_int(t0));
        }
        let base = Field::prime(p)?;
        let lift = |d: &[u64]| Poly::new(&base, d.iter().map(|&c| Fe(c)).collect());
        let modulus = lift(&self.0.modulus);
        let elem = lift(&self.coeffs(a));
        let (g, s, _) = elem.ext_gcd(&modulus);
        // g is a nonzero constant since the modulus is irreducible
        let g0 = base.inv(g.coeff(0))?;
        let s = s.scale(g0);
        let mut d = [0u64; MAX_DEGREE];
        for (i, c) in s.coeffs().iter().enumerate() {
            d[i] = c.0;
        }
        Ok(self.pack(&d))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Fe, mut e: u64) -> Fe {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Signed power; negative exponents require `a != 0`.
    pub fn pow_signed(&self, a: Fe, e: i64) -> Result<Fe> {
        if e >= 0 {
            Ok(self.pow(a, e as u64))
        } else {
            Ok(self.pow(self.inv(a)?, e.unsigned_abs()))
        }
    }

    /// Embeds an element of the prime field GF(p) into this field's prime
    /// subfield.
    pub fn embed(&self, a: Fe, source: &Field) -> Result<Fe> {
        if source.characteristic() != self.characteristic() {
            return Err(Error::CharacteristicMismatch(
                source.characteristic(),
                self.characteristic(),
            ));
        }
        if source.degree() != 1 {
            return Embedding::new(source, self).map(|e| e.apply(a));
        }
        Ok(Fe(a.0))
    }

    /// Formats `a` as a coefficient list `[c0,c1,...]`.
    pub fn format(&self, a: Fe) -> String {
        let c = self.coeffs(a);
        let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
        format!("[{}]", parts.join(","))
    }

    /// A generator of the multiplicative group, found by deterministic search.
    pub fn primitive_element(&self) -> Fe {
        let n = self.0.order - 1;
        let primes = prime_factors(n);
        self.elements()
            .skip(1)
            .find(|&a| primes.iter().all(|&q| self.pow(a, n / q) != self.one()))
            .expect("finite fields have primitive elements")
    }

    /// A primitive `m`-th root of unity, if `m` divides `order - 1`.
    pub fn root_of_unity(&self, m: u64) -> Option<Fe> {
        let n = self.0.order - 1;
        if m == 0 || n % m != 0 {
            return None;
        }
        Some(self.pow(self.primitive_element(), n / m))
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
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

fn is_irreducible_over_prime(base: &Field, monic: &[u64]) -> bool {
    let f = Poly::new(base, monic.iter().map(|&c| Fe(c)).collect());
    if f.degree() < 1 {
        return false;
    }
    f.is_irreducible()
}

fn smallest_irreducible(base: &Field, k: usize) -> Vec<u64> {
    let p = base.characteristic();
    let mut c = vec![0u64; k];
    loop {
        let mut m = c.clone();
        m.push(1);
        if m[0] != 0 && is_irreducible_over_prime(base, &m) {
            return m;
        }
        // advance the lexicographic counter over [c0, ..., c_{k-1}]
        let mut i = k;
        loop {
            i -= 1;
            c[i] += 1;
            if c[i] < p {
                break;
            }
            c[i] = 0;
            assert!(i > 0, "irreducible polynomials exist in every degree");
        }
    }
}

/// A field embedding GF(p^a) -> GF(p^b) with `a | b`, determined by the image
/// of the source generator.
#[derive(Clone, Debug)]
pub struct Embedding {
    source: Field,
    target: Field,
    powers: Vec<Fe>,
}

impl Embedding {
    /// Picks the smallest root (in packed order) of the source modulus inside
    /// the target field.
    pub fn new(source: &Field, target: &Field) -> Result<Embedding> {
        if source.characteristic() != target.characteristic() {
            return Err(Error::CharacteristicMismatch(
                source.characteristic(),
                target.characteristic(),
            ));
        }
        if target.degree() % source.degree() != 0 {
            return Err(Error::NotASubfield {
                from: source.degree(),
                to: target.degree(),
            });
        }
        let image = if source.degree() == 1 {
            target.one()
        } else {
            let f = Poly::new(
                target,
                source.modulus().iter().map(|&c| target.elem(c)).collect(),
            );
            let mut roots: Vec<Fe> = f
                .factor()
                .into_iter()
                .filter(|(g, _)| g.degree() == 1)
                .map(|(g, _)| target.neg(g.coeff(0)))
                .collect();
            roots.sort();
            *roots.first().ok_or(Error::NotASubfield {
                from: source.degree(),
                to: target.degree(),
            })?
        };
        let mut powers = Vec::with_capacity(source.degree());
        let mut acc = target.one();
        for _ in 0..source.degree() {
            powers.push(acc);
            acc = target.mul(acc, image);
        }
        Ok(Embedding {
            source: source.clone(),
            target: target.clone(),
            powers,
        })
    }

    pub fn apply(&self, a: Fe) -> Fe {
        let t = &self.target;
        self.source
            .coeffs(a)
            .iter()
            .zip(&self.powers)
            .fold(t.zero(), |acc, (&c, &x)| t.add(acc, t.mul(t.elem(c), x)))
    }

    pub fn target(&self) -> &Field {
        &self.target
    }
}
