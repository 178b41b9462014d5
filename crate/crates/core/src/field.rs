//! Prime fields F_p, the dual numbers S = F_p + vF_p (v² = 0), and the
//! automorphisms θ_α(a + bv) = a + αbv of S.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};

/// A prime p. Residues modulo p are always stored in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct PrimeModulus(u32);

impl PrimeModulus {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(Self(p))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn reduce(self, x: u64) -> u32 {
        (x % self.0 as u64) as u32
    }

    #[inline]
    pub fn reduce_signed(self, x: i64) -> u32 {
        x.rem_euclid(self.0 as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        if s >= self.0 as u64 {
            (s - self.0 as u64) as u32
        } else {
            s as u32
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            (a as u64 + self.0 as u64 - b as u64) as u32
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    pub fn pow(self, base: u32, mut exp: u64) -> u32 {
        let mut result = 1 % self.0;
        let mut b = base % self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.mul(result, b);
            }
            b = self.mul(b, b);
            exp >>= 1;
        }
        result
    }

    /// Inverse via Fermat's little theorem.
    pub fn inv(self, a: u32) -> Result<u32> {
        if a % self.0 == 0 {
            return Err(Error::NotInvertible);
        }
        Ok(self.pow(a, self.0 as u64 - 2))
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
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

/// An element of F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    modulus: PrimeModulus,
}

impl Fp {
    pub fn new(value: i64, modulus: PrimeModulus) -> Self {
        Self {
            value: modulus.reduce_signed(value),
            modulus,
        }
    }

    pub fn zero(modulus: PrimeModulus) -> Self {
        Self { value: 0, modulus }
    }

    pub fn one(modulus: PrimeModulus) -> Self {
        Self { value: 1, modulus }
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn check(self, other: Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::IncompatibleModuli(
                self.modulus.get(),
                other.modulus.get(),
            ));
        }
        Ok(())
    }

    pub fn checked_add(self, other: Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            value: self.modulus.add(self.value, other.value),
            modulus: self.modulus,
        })
    }

    pub fn checked_mul(self, other: Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            value: self.modulus.mul(self.value, other.value),
            modulus: self.modulus,
        })
    }

    pub fn pow(self, exp: u64) -> Self {
        Self {
            value: self.modulus.pow(self.value, exp),
            modulus: self.modulus,
        }
    }

    /// Multiplicative inverse; `NotInvertible` for zero.
    pub fn inv(self) -> Result<Self> {
        Ok(Self {
            value: self.modulus.inv(self.value)?,
            modulus: self.modulus,
        })
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.checked_add(rhs).expect("F_p operands over different moduli")
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self + (-rhs)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp {
            value: self.modulus.neg(self.value),
            modulus: self.modulus,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.checked_mul(rhs).expect("F_p operands over different moduli")
    }
}

/// An element a + bv of S = F_p + vF_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DualScalar {
    a: Fp,
    b: Fp,
}

impl DualScalar {
    pub fn new(a: Fp, b: Fp) -> Result<Self> {
        a.check(b)?;
        Ok(Self { a, b })
    }

    pub fn from_parts(a: i64, b: i64, modulus: PrimeModulus) -> Self {
        Self {
            a: Fp::new(a, modulus),
            b: Fp::new(b, modulus),
        }
    }

    pub fn zero(modulus: PrimeModulus) -> Self {
        Self::from_parts(0, 0, modulus)
    }

    pub fn one(modulus: PrimeModulus) -> Self {
        Self::from_parts(1, 0, modulus)
    }

    /// The nilpotent generator v.
    pub fn v(modulus: PrimeModulus) -> Self {
        Self::from_parts(0, 1, modulus)
    }

    /// Unit part a.
    pub fn a(self) -> Fp {
        self.a
    }

    /// v-part b.
    pub fn b(self) -> Fp {
        self.b
    }

    pub fn modulus(self) -> PrimeModulus {
        self.a.modulus
    }

    pub fn is_zero(self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// (a+bv)(c+dv) = ac + (ad+bc)v.
    pub fn checked_mul(self, other: Self) -> Result<Self> {
        self.a.check(other.a)?;
        Ok(Self {
            a: self.a * other.a,
            b: self.a * other.b + self.b * other.a,
        })
    }

    pub fn checked_add(self, other: Self) -> Result<Self> {
        self.a.check(other.a)?;
        Ok(Self {
            a: self.a + other.a,
            b: self.b + other.b,
        })
    }

    /// Units of S are exactly the elements with nonzero unit part.
    pub fn is_unit(self) -> bool {
        !self.a.is_zero()
    }

    /// (a+bv)⁻¹ = a⁻¹ − a⁻²b·v.
    pub fn inv(self) -> Result<Self> {
        let ai = self.a.inv()?;
        Ok(Self {
            a: ai,
            b: -(ai * ai * self.b),
        })
    }

    /// Parse `a`, `bv`, `a+bv`, `v`, `a+v` (whitespace ignored).
    pub fn parse(s: &str, modulus: PrimeModulus) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty symbol".into()));
        }
        let bad = || Error::Parse(format!("cannot read dual symbol '{s}'"));
        let mut a: i64 = 0;
        let mut b: i64 = 0;
        // split into signed terms
        let mut terms = Vec::new();
        let mut cur = String::new();
        for (i, ch) in cleaned.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        for term in terms {
            let (sign, body) = match term.strip_prefix('-') {
                Some(rest) => (-1i64, rest),
                None => (1i64, term.strip_prefix('+').unwrap_or(&term)),
            };
            if let Some(coef) = body.strip_suffix('v') {
                let c: i64 = if coef.is_empty() {
                    1
                } else {
                    coef.trim_end_matches('*').parse().map_err(|_| bad())?
                };
                b += sign * c;
            } else {
                let c: i64 = body.parse().map_err(|_| bad())?;
                a += sign * c;
            }
        }
        Ok(Self::from_parts(a, b, modulus))
    }
}

impl fmt::Display for DualScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.value, self.b.value) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "v"),
            (0, b) => write!(f, "{b}v"),
            (a, 1) => write!(f, "{a}+v"),
            (a, b) => write!(f, "{a}+{b}v"),
        }
    }
}

impl PartialOrd for DualScalar {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on (a, b).
impl Ord for DualScalar {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.a.value, self.b.value).cmp(&(other.a.value, other.b.value))
    }
}

impl Add for DualScalar {
    type Output = DualScalar;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("dual operands over different moduli")
    }
}

impl Neg for DualScalar {
    type Output = DualScalar;
    fn neg(self) -> Self {
        Self {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Sub for DualScalar {
    type Output = DualScalar;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for DualScalar {
    type Output = DualScalar;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).expect("dual operands over different moduli")
    }
}

/// Least e ≥ 1 with alpha^e = 1.
pub fn automorphism_order(alpha: Fp) -> Result<u32> {
    if alpha.is_zero() {
        return Err(Error::NotAUnit);
    }
    let m = alpha.modulus();
    let mut acc = alpha.value();
    let mut e = 1;
    while acc != 1 {
        acc = m.mul(acc, alpha.value());
        e += 1;
    }
    Ok(e)
}

/// θ_α : a + bv ↦ a + αbv, together with its order e.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Automorphism {
    alpha: Fp,
    order: u32,
}

impl Automorphism {
    pub fn new(alpha: Fp) -> Result<Self> {
        let order = automorphism_order(alpha)?;
        Ok(Self { alpha, order })
    }

    /// Convenience constructor from raw integers.
    pub fn from_parts(p: u32, alpha: u32) -> Result<Self> {
        let m = PrimeModulus::new(p)?;
        Self::new(Fp::new(alpha as i64, m))
    }

    /// Like [`Automorphism::from_parts`], but insists on the skew setting:
    /// odd p and a non-identity twist (e > 1).
    pub fn skew(p: u32, alpha: u32) -> Result<Self> {
        let theta = Self::from_parts(p, alpha)?;
        theta.ensure_skew()?;
        Ok(theta)
    }

    pub fn ensure_skew(&self) -> Result<()> {
        if self.modulus().get() == 2 {
            return Err(Error::EvenCharacteristic(2));
        }
        if self.order == 1 {
            return Err(Error::IdentityAutomorphism(self.alpha.value()));
        }
        Ok(())
    }

    pub fn alpha(&self) -> Fp {
        self.alpha
    }

    pub fn alpha_inv(&self) -> Fp {
        self.alpha.inv().expect("alpha is a unit")
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.alpha.modulus()
    }

    pub fn is_identity(&self) -> bool {
        self.order == 1
    }

    pub fn apply(&self, x: DualScalar) -> DualScalar {
        DualScalar {
            a: x.a,
            b: self.alpha * x.b,
        }
    }

    /// θ^k.
    pub fn pow(&self, k: u64) -> Automorphism {
        Automorphism::new(self.alpha.pow(k)).expect("powers of a unit are units")
    }
}

/// A ring endomorphism of S, determined by the image x + yv of v.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Endomorphism {
    /// Unit part of the image of v (always 0 for a genuine endomorphism).
    pub image_unit: u32,
    /// v-part of the image of v: the map is a + bv ↦ a + byv.
    pub image_v: u32,
    pub is_automorphism: bool,
}

/// Brute-force census of unital ring endomorphisms of S = F_p + vF_p.
///
/// Each of the p² candidate images x + yv of v defines an F_p-linear map;
/// the candidate is kept when the map is additive and multiplicative on every
/// pair of elements of S. A kept map is an automorphism when it is injective.
pub fn enumerate_endomorphisms(p: PrimeModulus) -> Vec<Endomorphism> {
    let pv = p.get();
    let elements: Vec<DualScalar> = (0..pv)
        .flat_map(|a| (0..pv).map(move |b| DualScalar::from_parts(a as i64, b as i64, p)))
        .collect();
    let mut out = Vec::new();
    for x in 0..pv {
        for y in 0..pv {
            let image = DualScalar::from_parts(x as i64, y as i64, p);
            let map = |s: DualScalar| {
                DualScalar::from_parts(s.a().value() as i64, 0, p)
                    + DualScalar::from_parts(s.b().value() as i64, 0, p) * image
            };
            let homomorphic = elements.iter().all(|&s| {
                elements.iter().all(|&t| {
                    map(s + t) == map(s) + map(t) && map(s * t) == map(s) * map(t)
                })
            });
            if !homomorphic {
                continue;
            }
            let mut images: Vec<DualScalar> = elements.iter().map(|&s| map(s)).collect();
            images.sort();
            images.dedup();
            out.push(Endomorphism {
                image_unit: x,
                image_v: y,
                is_automorphism: images.len() == elements.len(),
            });
        }
    }
    out
}
