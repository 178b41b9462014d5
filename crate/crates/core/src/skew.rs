//! The skew polynomial ring R = S[x; θ] over S = F_p + vF_p.
//!
//! Elements are kept as f₁ + v·f₂ with v written on the left, so
//! x·v = αv·x turns into a coefficient twist when v is moved past f₁.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rand::Rng;

use crate::error::{Error, Result};
use crate::field::{Automorphism, DualScalar, PrimeModulus};
use crate::poly::FpPoly;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewPoly {
    f1: FpPoly,
    f2: FpPoly,
    theta: Automorphism,
}

impl SkewPoly {
    pub fn new(f1: FpPoly, f2: FpPoly, theta: Automorphism) -> Result<Self> {
        let m = theta.modulus();
        for f in [&f1, &f2] {
            if f.modulus() != m {
                return Err(Error::IncompatibleModuli(m.get(), f.modulus().get()));
            }
        }
        Ok(Self { f1, f2, theta })
    }

    /// f₁ with no v-part.
    pub fn from_unit_part(f1: FpPoly, theta: Automorphism) -> Self {
        let m = theta.modulus();
        Self::new(f1, FpPoly::zero(m), theta).expect("modulus matches theta")
    }

    /// v·f₂.
    pub fn from_v_part(f2: FpPoly, theta: Automorphism) -> Self {
        let m = theta.modulus();
        Self::new(FpPoly::zero(m), f2, theta).expect("modulus matches theta")
    }

    pub fn zero(theta: Automorphism) -> Self {
        Self::from_unit_part(FpPoly::zero(theta.modulus()), theta)
    }

    pub fn one(theta: Automorphism) -> Self {
        Self::from_unit_part(FpPoly::one(theta.modulus()), theta)
    }

    pub fn x(theta: Automorphism) -> Self {
        Self::from_unit_part(FpPoly::x(theta.modulus()), theta)
    }

    pub fn v(theta: Automorphism) -> Self {
        Self::from_v_part(FpPoly::one(theta.modulus()), theta)
    }

    /// s·x^k for a scalar s of S.
    pub fn term(s: DualScalar, k: usize, theta: Automorphism) -> Self {
        let m = theta.modulus();
        Self {
            f1: FpPoly::monomial(s.a().value(), k, m),
            f2: FpPoly::monomial(s.b().value(), k, m),
            theta,
        }
    }

    /// Random element with fewer than `len` coefficients in each part.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, len: usize, theta: Automorphism) -> Self {
        let m = theta.modulus();
        Self {
            f1: FpPoly::random(rng, len, m),
            f2: FpPoly::random(rng, len, m),
            theta,
        }
    }

    /// Unit part f₁.
    pub fn f1(&self) -> &FpPoly {
        &self.f1
    }

    /// v-part f₂.
    pub fn f2(&self) -> &FpPoly {
        &self.f2
    }

    pub fn theta(&self) -> Automorphism {
        self.theta
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.theta.modulus()
    }

    pub fn is_zero(&self) -> bool {
        self.f1.is_zero() && self.f2.is_zero()
    }

    /// max(deg f₁, deg f₂); `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.f1.degree().max(self.f2.degree())
    }

    /// Coefficient of x^i as an element of S.
    pub fn coeff(&self, i: usize) -> DualScalar {
        DualScalar::from_parts(self.f1.coeff(i) as i64, self.f2.coeff(i) as i64, self.modulus())
    }

    pub fn leading_coeff(&self) -> DualScalar {
        match self.degree() {
            Some(d) => self.coeff(d),
            None => DualScalar::zero(self.modulus()),
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.theta != other.theta {
            return Err(Error::IncompatibleRings);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            f1: &self.f1 + &other.f1,
            f2: &self.f2 + &other.f2,
            theta: self.theta,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            f1: &self.f1 - &other.f1,
            f2: &self.f2 - &other.f2,
            theta: self.theta,
        })
    }

    /// (f₁ + vf₂)(g₁ + vg₂) = f₁g₁ + v(twist(f₁, α)·g₂ + f₂g₁).
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let alpha = self.theta.alpha().value();
        let f2 = &(&self.f1.twist_raw(alpha) * &other.f2) + &(&self.f2 * &other.f1);
        Ok(Self {
            f1: &self.f1 * &other.f1,
            f2,
            theta: self.theta,
        })
    }

    /// The unique g' ∈ F_p[x] with v·g = g'·v, namely twist(g₁, α⁻¹).
    pub fn partaker(&self) -> FpPoly {
        self.f1.twist_raw(self.theta.alpha_inv().value())
    }

    /// Right division f = q·g + r with deg r < deg g.
    pub fn right_divmod(&self, g: &Self) -> Result<(Self, Self)> {
        self.check(g)?;
        let m = match g.degree() {
            Some(m) => m,
            None => return Err(Error::DivisionByZero),
        };
        let u = g.leading_coeff();
        if !u.is_unit() {
            return Err(Error::LeadingCoeffNotUnit);
        }
        let mut q = Self::zero(self.theta);
        let mut r = self.clone();
        while let Some(d) = r.degree() {
            if d < m {
                break;
            }
            let k = d - m;
            // (s x^k)(u x^m) = s θ^k(u) x^d
            let twisted = self.theta.pow(k as u64).apply(u);
            let s = r.coeff(d) * twisted.inv()?;
            let t = Self::term(s, k, self.theta);
            r = &r - &(&t * g);
            q = &q + &t;
        }
        Ok((q, r))
    }

    /// Units of R are exactly a + v·h with a ∈ F_p^*.
    pub fn is_unit(&self) -> bool {
        self.f1.degree() == Some(0)
    }

    /// (a + vh)⁻¹ = a⁻¹ − v·a⁻²h.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotInvertible);
        }
        let m = self.modulus();
        let a_inv = m.inv(self.f1.coeff(0))?;
        let f2 = self.f2.scale(m.neg(m.mul(a_inv, a_inv)));
        Ok(Self {
            f1: FpPoly::constant(a_inv, m),
            f2,
            theta: self.theta,
        })
    }

    /// Membership in the center F_p[x^e].
    pub fn in_center(&self) -> bool {
        let e = self.theta.order() as usize;
        self.f2.is_zero()
            && self
                .f1
                .coeffs()
                .iter()
                .enumerate()
                .all(|(i, &c)| c == 0 || i % e == 0)
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        &(self * other) == &(other * self)
    }

    /// Reduce both parts modulo x^n − 1 (meaningful when e | n, where
    /// x^n − 1 is central).
    pub fn reduce_cyclic(&self, n: usize) -> Self {
        Self {
            f1: self.f1.reduce_cyclic(n),
            f2: self.f2.reduce_cyclic(n),
            theta: self.theta,
        }
    }

    /// Parses `(<f1>) + v*(<f2>)`, a bare unit part `<f1>`, or `v*(<f2>)`.
    pub fn parse(s: &str, theta: Automorphism) -> Result<Self> {
        let m = theta.modulus();
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (unit, vpart) = match t.find("v*") {
            Some(pos) => {
                let head = t[..pos].strip_suffix('+').unwrap_or(&t[..pos]);
                (head.to_string(), t[pos + 2..].to_string())
            }
            None => (t.clone(), String::new()),
        };
        let f1 = if unit.is_empty() {
            FpPoly::zero(m)
        } else {
            FpPoly::parse(&unit, m)?
        };
        let f2 = if vpart.is_empty() {
            FpPoly::zero(m)
        } else {
            FpPoly::parse(&vpart, m)?
        };
        Self::new(f1, f2, theta)
    }
}

/// Irreducibility of a commutative polynomial viewed inside R, which agrees
/// with irreducibility over F_p.
pub fn is_irreducible_in_r(f: &FpPoly) -> Result<bool> {
    f.is_irreducible()
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + v*({})", self.f1, self.f2)
    }
}

macro_rules! skew_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&SkewPoly> for &SkewPoly {
            type Output = SkewPoly;
            fn $method(self, rhs: &SkewPoly) -> SkewPoly {
                self.$checked(rhs).expect("operands from different skew rings")
            }
        }
        impl $trait<SkewPoly> for SkewPoly {
            type Output = SkewPoly;
            fn $method(self, rhs: SkewPoly) -> SkewPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

skew_binop!(Add, add, checked_add);
skew_binop!(Sub, sub, checked_sub);
skew_binop!(Mul, mul, checked_mul);

impl Neg for &SkewPoly {
    type Output = SkewPoly;
    fn neg(self) -> SkewPoly {
        SkewPoly {
            f1: -&self.f1,
            f2: -&self.f2,
            theta: self.theta,
        }
    }
}
