//! Dense polynomials over F_p, stored low-degree-first.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Fp, PrimeModulus};

/// A polynomial over F_p. `coeffs[i]` is the coefficient of x^i; there is never
/// a trailing zero, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    coeffs: Vec<u32>,
    modulus: PrimeModulus,
}

impl FpPoly {
    /// Builds a polynomial from raw coefficients, reducing each modulo p.
    pub fn new(coeffs: Vec<u32>, modulus: PrimeModulus) -> Self {
        let coeffs = coeffs.into_iter().map(|c| modulus.reduce(c as u64)).collect();
        let mut f = Self { coeffs, modulus };
        f.trim();
        f
    }

    pub fn from_signed(coeffs: &[i64], modulus: PrimeModulus) -> Self {
        let coeffs = coeffs.iter().map(|&c| modulus.reduce_signed(c)).collect();
        let mut f = Self { coeffs, modulus };
        f.trim();
        f
    }

    pub fn zero(modulus: PrimeModulus) -> Self {
        Self {
            coeffs: Vec::new(),
            modulus,
        }
    }

    pub fn one(modulus: PrimeModulus) -> Self {
        Self::constant(1, modulus)
    }

    pub fn constant(c: u32, modulus: PrimeModulus) -> Self {
        Self::new(vec![c], modulus)
    }

    /// c·x^k.
    pub fn monomial(c: u32, k: usize, modulus: PrimeModulus) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::new(coeffs, modulus)
    }

    pub fn x(modulus: PrimeModulus) -> Self {
        Self::monomial(1, 1, modulus)
    }

    /// x^n − 1.
    pub fn xn_minus_1(n: usize, modulus: PrimeModulus) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = modulus.neg(1);
        coeffs[n] = 1;
        Self::new(coeffs, modulus)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; handy for sizes.
    pub fn deg_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::IncompatibleModuli(
                self.modulus.get(),
                other.modulus.get(),
            ));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let m = self.modulus;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| m.add(self.coeff(i), other.coeff(i))).collect();
        let mut f = Self { coeffs, modulus: m };
        f.trim();
        Ok(f)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        self.checked_add(&other.neg_ref())
    }

    fn neg_ref(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|&c| self.modulus.neg(c)).collect(),
            modulus: self.modulus,
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.modulus));
        }
        let p = self.modulus.get() as u64;
        let mut acc = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u64 * b as u64) % p;
            }
        }
        let mut f = Self {
            coeffs: acc.into_iter().map(|c| c as u32).collect(),
            modulus: self.modulus,
        };
        f.trim();
        Ok(f)
    }

    /// Multiplies every coefficient by the scalar c.
    pub fn scale(&self, c: u32) -> Self {
        let m = self.modulus;
        Self::new(self.coeffs.iter().map(|&a| m.mul(a, c)).collect(), m)
    }

    /// Multiplies by x^k.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Self {
            coeffs,
            modulus: self.modulus,
        }
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut result = Self::one(self.modulus);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        result
    }

    /// Euclidean division: f = q·g + r with deg r < deg g.
    pub fn divmod(&self, g: &Self) -> Result<(Self, Self)> {
        self.check(g)?;
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let m = self.modulus;
        let dg = g.coeffs.len() - 1;
        if self.coeffs.len() <= dg {
            return Ok((Self::zero(m), self.clone()));
        }
        let lead_inv = m.inv(g.leading()).expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        let mut q = vec![0u32; r.len() - dg];
        for k in (0..q.len()).rev() {
            let c = m.mul(r[k + dg], lead_inv);
            q[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &gj) in g.coeffs.iter().enumerate() {
                r[k + j] = m.sub(r[k + j], m.mul(c, gj));
            }
        }
        r.truncate(dg);
        Ok((Self::new(q, m), Self::new(r, m)))
    }

    pub fn rem(&self, g: &Self) -> Result<Self> {
        Ok(self.divmod(g)?.1)
    }

    /// Exact quotient; panics if `g` does not divide `self`. Use for known divisors.
    pub fn exact_div(&self, g: &Self) -> Self {
        let (q, r) = self.divmod(g).expect("divisor is nonzero");
        assert!(r.is_zero(), "exact_div called with a non-divisor");
        q
    }

    /// Does `self` divide `other`? Zero divides only zero.
    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Scales to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self.modulus.inv(self.leading()).expect("nonzero");
        self.scale(inv)
    }

    /// Monic gcd; `Undefined` when both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::Undefined);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Monic lcm; zero if either input is zero.
    pub fn lcm(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.modulus));
        }
        let g = self.gcd(other)?;
        Ok((&self.exact_div(&g) * other).monic())
    }

    /// Coefficient i ↦ c^i · coefficient i.
    pub fn twist(&self, c: Fp) -> Result<Self> {
        if c.modulus() != self.modulus {
            return Err(Error::IncompatibleModuli(self.modulus.get(), c.modulus().get()));
        }
        if c.is_zero() {
            return Err(Error::NotAUnit);
        }
        Ok(self.twist_raw(c.value()))
    }

    /// [`FpPoly::twist`] for a raw nonzero residue.
    pub fn twist_raw(&self, c: u32) -> Self {
        let m = self.modulus;
        let mut pw = 1u32;
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for &a in &self.coeffs {
            coeffs.push(m.mul(a, pw));
            pw = m.mul(pw, c);
        }
        Self::new(coeffs, m)
    }

    pub fn derivative(&self) -> Self {
        let m = self.modulus;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| m.mul(c, m.reduce(i as u64)))
            .collect();
        Self::new(coeffs, m)
    }

    /// Reduction modulo x^n − 1 (fold exponents cyclically).
    pub fn reduce_cyclic(&self, n: usize) -> Self {
        let m = self.modulus;
        let mut coeffs = vec![0u32; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i % n] = m.add(coeffs[i % n], c);
        }
        Self::new(coeffs, m)
    }

    /// Coefficients of x^0..x^{len-1} padded with zeros.
    pub fn to_padded(&self, len: usize) -> Vec<u32> {
        (0..len).map(|i| self.coeff(i)).collect()
    }

    /// For f with f' = 0, returns g with g^p = f.
    fn pth_root(&self) -> Self {
        let p = self.modulus.get() as usize;
        let coeffs = self.coeffs.iter().step_by(p).copied().collect();
        Self::new(coeffs, self.modulus)
    }

    fn powmod(&self, mut k: u64, modulus_poly: &Self) -> Self {
        let mut result = Self::one(self.modulus).rem(modulus_poly).expect("nonzero");
        let mut base = self.rem(modulus_poly).expect("nonzero");
        while k > 0 {
            if k & 1 == 1 {
                result = (&result * &base).rem(modulus_poly).expect("nonzero");
            }
            base = (&base * &base).rem(modulus_poly).expect("nonzero");
            k >>= 1;
        }
        result
    }

    /// Irreducibility over F_p (Rabin's test).
    pub fn is_irreducible(&self) -> Result<bool> {
        let n = match self.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::DegreeTooSmall),
        };
        if n == 1 {
            return Ok(true);
        }
        let f = self.monic();
        let p = self.modulus.get() as u64;
        let x = Self::x(self.modulus);
        // frob[k] = x^{p^k} mod f
        let mut frob = Vec::with_capacity(n + 1);
        frob.push(x.rem(&f)?);
        for k in 1..=n {
            let next = frob[k - 1].powmod(p, &f);
            frob.push(next);
        }
        if frob[n] != x.rem(&f)? {
            return Ok(false);
        }
        for q in prime_divisors(n) {
            let h = frob[n / q].checked_sub(&x)?;
            if !f.gcd(&h)?.is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Irreducibility by dividing against every monic polynomial of degree
    /// at most deg/2. Exponential; meant as an independent check.
    pub fn is_irreducible_by_trial_division(&self) -> Result<bool> {
        let n = match self.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::DegreeTooSmall),
        };
        for d in 1..=n / 2 {
            for g in monic_polys_of_degree(d, self.modulus) {
                if g.divides(self) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Uniformly random polynomial with fewer than `len` coefficients.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, len: usize, modulus: PrimeModulus) -> Self {
        Self::new((0..len).map(|_| rng.gen_range(0..modulus.get())).collect(), modulus)
    }

    /// Parses the text forms accepted on the command line: expressions such as
    /// `x^4 - 1`, `2 + x`, `2*x^2`, products like `(x+2)(x^2+1)`, and
    /// coefficient lists `[2,1,2,1]` (low degree first).
    pub fn parse(s: &str, modulus: PrimeModulus) -> Result<Self> {
        let t = s.trim();
        if let Some(inner) = t.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| Error::Parse(format!("unterminated coefficient list '{s}'")))?;
            if inner.trim().is_empty() {
                return Ok(Self::zero(modulus));
            }
            let coeffs = inner
                .split(',')
                .map(|c| {
                    c.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad coefficient '{}'", c.trim())))
                })
                .collect::<Result<Vec<_>>>()?;
            return Ok(Self::from_signed(&coeffs, modulus));
        }
        let mut parser = Parser {
            chars: t.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
            modulus,
        };
        let f = parser.expr()?;
        if parser.pos != parser.chars.len() {
            return Err(Error::Parse(format!("unexpected input in '{s}'")));
        }
        Ok(f)
    }
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
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

/// All monic polynomials of the given degree, in lexicographic order of their
/// lower coefficients.
pub fn monic_polys_of_degree(d: usize, modulus: PrimeModulus) -> impl Iterator<Item = FpPoly> {
    let p = modulus.get() as u64;
    let count = p.pow(d as u32);
    (0..count).map(move |mut idx| {
        let mut coeffs = Vec::with_capacity(d + 1);
        for _ in 0..d {
            coeffs.push((idx % p) as u32);
            idx /= p;
        }
        coeffs.push(1);
        FpPoly::new(coeffs, modulus)
    })
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    modulus: PrimeModulus,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        let text: String = self.chars.iter().collect();
        Error::Parse(format!("{what} at position {} in '{text}'", self.pos))
    }

    fn expr(&mut self) -> Result<FpPoly> {
        let mut acc = FpPoly::zero(self.modulus);
        let mut first = true;
        loop {
            let negate = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    false
                }
                Some('-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => break,
            };
            let term = self.term()?;
            acc = if negate { &acc - &term } else { &acc + &term };
            first = false;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<FpPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some('(') | Some('x') => acc = &acc * &self.power()?,
                Some(c) if c.is_ascii_digit() => acc = &acc * &self.power()?,
                _ => break,
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<FpPoly> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let k = self.integer()?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("number too large"))
    }

    fn atom(&mut self) -> Result<FpPoly> {
        match self.peek() {
            Some('x') => {
                self.pos += 1;
                Ok(FpPoly::x(self.modulus))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let k = self.integer()?;
                Ok(FpPoly::constant(self.modulus.reduce(k), self.modulus))
            }
            _ => Err(self.err("expected x, a number or '('")),
        }
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}*x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl PartialOrd for FpPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by degree (zero first), then lexicographically by coefficients from
/// the constant term upward.
impl Ord for FpPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FpPoly> for &FpPoly {
            type Output = FpPoly;
            fn $method(self, rhs: &FpPoly) -> FpPoly {
                self.$checked(rhs).expect("polynomials over different moduli")
            }
        }
        impl $trait<FpPoly> for FpPoly {
            type Output = FpPoly;
            fn $method(self, rhs: FpPoly) -> FpPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

impl Neg for &FpPoly {
    type Output = FpPoly;
    fn neg(self) -> FpPoly {
        self.neg_ref()
    }
}

impl Neg for FpPoly {
    type Output = FpPoly;
    fn neg(self) -> FpPoly {
        self.neg_ref()
    }
}

/// A factorization unit · ∏ factor^multiplicity into distinct monic irreducibles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredPoly {
    pub unit: Fp,
    pub factors: Vec<(FpPoly, u32)>,
}

impl FactoredPoly {
    pub fn modulus(&self) -> PrimeModulus {
        self.unit.modulus()
    }

    /// Multiplies everything back out.
    pub fn expand(&self) -> FpPoly {
        let m = self.modulus();
        self.factors
            .iter()
            .fold(FpPoly::constant(self.unit.value(), m), |acc, (f, r)| {
                &acc * &f.pow(*r as u64)
            })
    }

    /// ∏ (r_i + 1).
    pub fn divisor_count(&self) -> u64 {
        self.factors.iter().map(|(_, r)| *r as u64 + 1).product()
    }

    pub fn multiplicities(&self) -> Vec<u32> {
        self.factors.iter().map(|(_, r)| *r).collect()
    }

    /// Monic divisors, one per exponent vector, in lexicographic order of the
    /// exponent vectors (first factor most significant).
    pub fn divisors(&self) -> Vec<FpPoly> {
        let m = self.modulus();
        let mut out = vec![FpPoly::one(m)];
        for (f, r) in self.factors.iter().rev() {
            let powers: Vec<FpPoly> = (0..=*r).map(|k| f.pow(k as u64)).collect();
            let mut next = Vec::with_capacity(out.len() * powers.len());
            for pw in &powers {
                for d in &out {
                    next.push(pw * d);
                }
            }
            out = next;
        }
        out
    }

    /// The exponent vector of a monic divisor, if it is one.
    pub fn exponents_of(&self, d: &FpPoly) -> Option<Vec<u32>> {
        if d.is_zero() {
            return None;
        }
        let mut rest = d.monic();
        let mut exps = Vec::with_capacity(self.factors.len());
        for (f, r) in &self.factors {
            let mut k = 0;
            while k < *r && f.divides(&rest) {
                rest = rest.exact_div(f);
                k += 1;
            }
            exps.push(k);
        }
        rest.is_one().then_some(exps)
    }
}

impl fmt::Display for FactoredPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.unit.value() != 1 || self.factors.is_empty() {
            write!(f, "{}", self.unit)?;
        }
        for (g, r) in &self.factors {
            write!(f, "({g})")?;
            if *r > 1 {
                write!(f, "^{r}")?;
            }
        }
        Ok(())
    }
}

/// Complete factorization of a nonzero polynomial into monic irreducibles,
/// with factors sorted by degree and then coefficients.
pub fn factor(f: &FpPoly) -> Result<FactoredPoly> {
    if f.is_zero() {
        return Err(Error::Undefined);
    }
    let m = f.modulus();
    let unit = Fp::new(f.leading() as i64, m);
    let mut factors: Vec<(FpPoly, u32)> = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d);
    for (sq, mult) in square_free(&f.monic()) {
        for (block, d) in distinct_degree(&sq) {
            for g in equal_degree(&block, d, &mut rng) {
                factors.push((g, mult));
            }
        }
    }
    factors.sort();
    // merge repeated irreducibles coming from different square-free layers
    let mut merged: Vec<(FpPoly, u32)> = Vec::new();
    for (g, r) in factors {
        match merged.last_mut() {
            Some((h, s)) if *h == g => *s += r,
            _ => merged.push((g, r)),
        }
    }
    Ok(FactoredPoly {
        unit,
        factors: merged,
    })
}

/// x^n − 1 factored over F_p.
pub fn factor_xn_minus_1(modulus: PrimeModulus, n: usize) -> FactoredPoly {
    factor(&FpPoly::xn_minus_1(n.max(1), modulus)).expect("x^n - 1 is nonzero")
}

/// Square-free decomposition of a monic f: pairs (g, m) with f = ∏ g^m and
/// each g square-free.
fn square_free(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let m = f.modulus();
    let p = m.get();
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let d = f.derivative();
    if d.is_zero() {
        for (g, k) in square_free(&f.pth_root()) {
            out.push((g, k * p));
        }
        return out;
    }
    let mut c = f.gcd(&d).expect("f nonzero");
    let mut w = f.exact_div(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c).expect("w nonzero");
        let fac = w.exact_div(&y);
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.exact_div(&w);
        i += 1;
    }
    if !c.is_one() {
        for (g, k) in square_free(&c.pth_root()) {
            out.push((g, k * p));
        }
    }
    out
}

/// Splits a square-free monic f into blocks whose irreducible factors all
/// share one degree.
fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let m = f.modulus();
    let p = m.get() as u64;
    let x = FpPoly::x(m);
    let mut out = Vec::new();
    let mut g = f.clone();
    let mut h = x.rem(&g).unwrap_or_else(|_| FpPoly::zero(m));
    let mut i = 1;
    while g.deg_or_zero() >= 2 * i {
        h = h.powmod(p, &g);
        let d = g.gcd(&(&h - &x)).expect("g nonzero");
        if !d.is_one() {
            out.push((d.clone(), i));
            g = g.exact_div(&d);
            h = h.rem(&g).expect("g nonzero");
        }
        i += 1;
    }
    if !g.is_constant() {
        let d = g.deg_or_zero();
        out.push((g, d));
    }
    out
}

/// Splits a product of distinct irreducibles of degree d (randomized,
/// deterministic for a fixed rng state).
fn equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let n = f.deg_or_zero();
    if n == d {
        return vec![f.clone()];
    }
    let m = f.modulus();
    let p = m.get() as u64;
    loop {
        let a = FpPoly::new((0..n).map(|_| rng.gen_range(0..m.get())).collect(), m);
        if a.is_constant() {
            continue;
        }
        let candidate = if p == 2 {
            // trace of a from F_{2^d} down to F_2
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..d {
                t = t.powmod(2, f);
                acc = &acc + &t;
            }
            acc
        } else {
            // a^{(p^d-1)/2} = (a^{1+p+...+p^{d-1}})^{(p-1)/2}
            let mut t = a.rem(f).expect("f nonzero");
            let mut norm = t.clone();
            for _ in 1..d {
                t = t.powmod(p, f);
                norm = (&norm * &t).rem(f).expect("f nonzero");
            }
            &norm.powmod((p - 1) / 2, f) - &FpPoly::one(m)
        };
        let g = f.gcd(&candidate).expect("f nonzero");
        if !g.is_one() && g.deg_or_zero() < n {
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&f.exact_div(&g), d, rng));
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(p: u32) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn poly(c: &[i64], p: u32) -> FpPoly {
        FpPoly::from_signed(c, m(p))
    }

    #[test]
    fn multiplication_examples() {
        let g = &poly(&[2, 1], 3) * &poly(&[1, 0, 1], 3);
        assert_eq!(g.coeffs(), &[2, 1, 2, 1]);
        assert!((&g * &FpPoly::zero(m(3))).is_zero());
        assert_eq!((&poly(&[1, 1], 3) * &poly(&[2, 1], 3)).coeffs(), &[2, 0, 1]);
        assert_eq!(
            poly(&[1], 3).checked_mul(&poly(&[1], 5)),
            Err(Error::IncompatibleModuli(3, 5))
        );
    }

    #[test]
    fn division_examples() {
        let (q, r) = FpPoly::xn_minus_1(4, m(3)).divmod(&poly(&[2, 1], 3)).unwrap();
        assert_eq!(q.coeffs(), &[1, 1, 1, 1]);
        assert!(r.is_zero());
        let (q, r) = poly(&[0, 0, 1], 3).divmod(&poly(&[2, 1], 3)).unwrap();
        assert_eq!(q, poly(&[1, 1], 3));
        assert_eq!(r, poly(&[1], 3));
        let f = poly(&[1, 2, 0, 1], 5);
        assert_eq!(f.divmod(&FpPoly::one(m(5))).unwrap(), (f.clone(), FpPoly::zero(m(5))));
        assert_eq!(f.divmod(&FpPoly::zero(m(5))), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_lcm_examples() {
        assert!(poly(&[1, 1], 3).gcd(&poly(&[2, 1], 3)).unwrap().is_one());
        assert_eq!(poly(&[2, 2], 3).gcd(&FpPoly::zero(m(3))).unwrap(), poly(&[1, 1], 3));
        let big = &poly(&[1, 1], 3) * &poly(&[1, 0, 1], 3);
        assert_eq!(poly(&[1, 1], 3).lcm(&big).unwrap(), big);
        assert_eq!(
            FpPoly::zero(m(3)).gcd(&FpPoly::zero(m(3))),
            Err(Error::Undefined)
        );
    }

    #[test]
    fn irreducibility_examples() {
        assert!(poly(&[1, 0, 1], 3).is_irreducible().unwrap());
        assert!(!poly(&[2, 0, 1], 3).is_irreducible().unwrap());
        assert!(poly(&[1, 1, 1], 5).is_irreducible().unwrap());
        assert_eq!(poly(&[2], 3).is_irreducible(), Err(Error::DegreeTooSmall));
        assert!(!poly(&[0, 0, 1], 3).is_irreducible().unwrap());
    }

    #[test]
    fn rabin_agrees_with_trial_division() {
        for p in [2u32, 3, 5] {
            for d in 1..=4 {
                for f in monic_polys_of_degree(d, m(p)) {
                    assert_eq!(
                        f.is_irreducible().unwrap(),
                        f.is_irreducible_by_trial_division().unwrap(),
                        "{f} over F_{p}"
                    );
                }
            }
        }
    }

    #[test]
    fn factor_examples() {
        let f = factor_xn_minus_1(m(3), 4);
        let gens: Vec<_> = f.factors.iter().map(|(g, r)| (g.coeffs().to_vec(), *r)).collect();
        assert_eq!(gens, vec![(vec![1, 1], 1), (vec![2, 1], 1), (vec![1, 0, 1], 1)]);
        let f = factor_xn_minus_1(m(5), 6);
        let gens: Vec<_> = f.factors.iter().map(|(g, _)| g.coeffs().to_vec()).collect();
        assert_eq!(gens, vec![vec![1, 1], vec![4, 1], vec![1, 1, 1], vec![1, 4, 1]]);
        let f = factor_xn_minus_1(m(3), 3);
        assert_eq!(f.factors, vec![(poly(&[2, 1], 3), 3)]);
    }

    #[test]
    fn factorization_reassembles_xn_minus_1() {
        for p in [2u32, 3, 5, 7] {
            for n in 1..=12 {
                let fac = factor_xn_minus_1(m(p), n);
                assert_eq!(fac.expand(), FpPoly::xn_minus_1(n, m(p)), "p={p} n={n}");
                for (g, _) in &fac.factors {
                    assert!(g.is_monic());
                    assert!(g.is_irreducible_by_trial_division().unwrap(), "{g}");
                }
                let mut sorted = fac.factors.clone();
                sorted.sort();
                sorted.dedup_by(|a, b| a.0 == b.0);
                assert_eq!(sorted, fac.factors);
            }
        }
    }

    #[test]
    fn factors_large_desk_cases() {
        for (p, n) in [(13u32, 29usize), (13, 30), (11, 23), (7, 30), (97, 30)] {
            let fac = factor_xn_minus_1(m(p), n);
            assert_eq!(fac.expand(), FpPoly::xn_minus_1(n, m(p)));
            for (g, _) in &fac.factors {
                assert!(g.is_irreducible().unwrap());
            }
        }
    }

    #[test]
    fn divisor_examples() {
        let f = factor_xn_minus_1(m(3), 4);
        assert_eq!(f.divisors().len(), 8);
        let f = factor_xn_minus_1(m(3), 3);
        let ds: Vec<_> = f.divisors();
        let expect: Vec<_> = (0..4).map(|k| poly(&[2, 1], 3).pow(k)).collect();
        assert_eq!(ds, expect);
        assert_eq!(factor_xn_minus_1(m(5), 6).divisors().len(), 16);
    }

    #[test]
    fn divisors_are_distinct_and_divide() {
        for (p, n) in [(3u32, 4usize), (3, 6), (5, 6), (7, 8), (3, 9)] {
            let fac = factor_xn_minus_1(m(p), n);
            let xn = FpPoly::xn_minus_1(n, m(p));
            let mut ds = fac.divisors();
            assert_eq!(ds.len() as u64, fac.divisor_count());
            assert!(ds.iter().all(|d| d.divides(&xn) && d.is_monic()));
            for d in &ds {
                let exps = fac.exponents_of(d).unwrap();
                assert_eq!(exps.len(), fac.factors.len());
            }
            ds.sort();
            ds.dedup();
            assert_eq!(ds.len() as u64, fac.divisor_count());
        }
    }

    #[test]
    fn twist_examples() {
        let f = poly(&[2, 1], 3);
        assert_eq!(f.twist(Fp::new(2, m(3))).unwrap(), poly(&[2, 2], 3));
        assert_eq!(f.twist(Fp::new(1, m(3))).unwrap(), f);
        let xn = FpPoly::xn_minus_1(4, m(3));
        assert_eq!(xn.twist(Fp::new(2, m(3))).unwrap(), xn);
        assert_eq!(f.twist(Fp::zero(m(3))), Err(Error::NotAUnit));
    }

    #[test]
    fn rendering_and_parsing() {
        let f = poly(&[2, 1, 2, 1], 3);
        assert_eq!(f.to_string(), "2 + x + 2*x^2 + x^3");
        assert_eq!(FpPoly::zero(m(3)).to_string(), "0");
        assert_eq!(FpPoly::parse("(x+2)(x^2+1)", m(3)).unwrap(), f);
        assert_eq!(FpPoly::parse("[2,1,2,1]", m(3)).unwrap(), f);
        assert_eq!(FpPoly::parse("x^4-1", m(3)).unwrap(), FpPoly::xn_minus_1(4, m(3)));
        assert_eq!(FpPoly::parse("2*x + 1", m(5)).unwrap(), poly(&[1, 2], 5));
        assert_eq!(FpPoly::parse("-x", m(5)).unwrap(), poly(&[0, 4], 5));
        assert_eq!(FpPoly::parse("3x^2", m(5)).unwrap(), poly(&[0, 0, 3], 5));
        assert_eq!(FpPoly::parse("[]", m(5)).unwrap(), FpPoly::zero(m(5)));
        assert!(FpPoly::parse("(x+1", m(5)).is_err());
        assert!(FpPoly::parse("y", m(5)).is_err());
        assert_eq!(FpPoly::parse(&f.to_string(), m(3)).unwrap(), f);
    }

    fn arb_poly(p: u32, max_len: usize) -> impl Strategy<Value = FpPoly> {
        prop::collection::vec(0..p, 0..max_len).prop_map(move |c| FpPoly::new(c, m(p)))
    }

    fn arb_case() -> impl Strategy<Value = (FpPoly, FpPoly)> {
        prop_oneof![Just(3u32), Just(5), Just(7), Just(13)]
            .prop_flat_map(|p| (arb_poly(p, 12), arb_poly(p, 8)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(2000))]

        #[test]
        fn divmod_roundtrip((f, g) in arb_case()) {
            prop_assume!(!g.is_zero());
            let (q, r) = f.divmod(&g).unwrap();
            prop_assert_eq!(&(&q * &g) + &r, f);
            prop_assert!(r.is_zero() || r.degree() < g.degree());
        }

        #[test]
        fn twist_is_multiplicative_and_invertible((f, g) in arb_case(), c in 1u32..13) {
            let md = f.modulus();
            let c = Fp::new(c as i64, md);
            prop_assume!(!c.is_zero());
            let ci = c.inv().unwrap();
            prop_assert_eq!((&f * &g).twist(c).unwrap(), &f.twist(c).unwrap() * &g.twist(c).unwrap());
            prop_assert_eq!(f.twist(c).unwrap().twist(ci).unwrap(), f);
        }

        #[test]
        fn gcd_divides_both((f, g) in arb_case()) {
            prop_assume!(!(f.is_zero() && g.is_zero()));
            let d = f.gcd(&g).unwrap();
            prop_assert!(d.divides(&f) && d.divides(&g));
            let l = f.lcm(&g).unwrap();
            prop_assert!(f.divides(&l) && g.divides(&l));
            if !f.is_zero() && !g.is_zero() {
                prop_assert_eq!(&d * &l, (&f * &g).monic());
            }
        }

        #[test]
        fn factorization_reassembles(f in arb_poly(5, 10)) {
            prop_assume!(!f.is_zero());
            let fac = factor(&f).unwrap();
            prop_assert_eq!(fac.expand(), f);
            for (g, _) in &fac.factors {
                prop_assert!(g.is_irreducible_by_trial_division().unwrap());
            }
        }
    }
}
