//! Left ideals of R = S[x; θ]: descriptors, projections to F_p[x],
//! membership, and the maximal / prime / primary classification.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Automorphism;
use crate::linalg::Subspace;
use crate::poly::{factor, FpPoly};
use crate::skew::SkewPoly;

/// A left ideal of R.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealDescriptor {
    /// ⟨a1⟩ + v⟨a2⟩ with a2 | a1; zero generators stand for zero components.
    FirstType {
        a1: FpPoly,
        a2: FpPoly,
        theta: Automorphism,
    },
    /// R·f with f of unit leading coefficient.
    SecondTypePrincipal { f: SkewPoly },
    /// vF_p[x]·f2 + R·g with g of unit leading coefficient.
    SecondTypeMixed { f2: FpPoly, g: SkewPoly },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealType {
    First,
    Second,
}

impl IdealType {
    pub fn label(self) -> &'static str {
        match self {
            IdealType::First => "first",
            IdealType::Second => "second",
        }
    }
}

/// The shapes under which a first type ideal is certified primary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimaryForm {
    /// ⟨π^a⟩ + vF_p[x].
    PowerPlusFull,
    /// ⟨π^a⟩ + v⟨π^b⟩ with a ≥ b ≥ 1 and π | twist(π, α⁻¹).
    PowerPair,
    /// vF_p[x].
    VIdeal,
    /// The zero ideal.
    Zero,
}

impl PrimaryForm {
    pub fn label(self) -> &'static str {
        match self {
            PrimaryForm::PowerPlusFull => "i",
            PrimaryForm::PowerPair => "ii",
            PrimaryForm::VIdeal => "iii",
            PrimaryForm::Zero => "iv",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentStatus {
    Primary(PrimaryForm),
    NonClassified,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub ideal: IdealDescriptor,
    pub status: ComponentStatus,
}

fn unit_leading(g: &SkewPoly) -> Result<()> {
    if g.is_zero() {
        return Err(Error::InvalidIdeal("generator must be nonzero".into()));
    }
    if !g.leading_coeff().is_unit() {
        return Err(Error::LeadingCoeffNotUnit);
    }
    Ok(())
}

fn gcd_or_zero(f: &FpPoly, g: &FpPoly) -> FpPoly {
    f.gcd(g).unwrap_or_else(|_| FpPoly::zero(f.modulus()))
}

impl IdealDescriptor {
    /// ⟨a1⟩ + v⟨a2⟩; generators are made monic and a2 | a1 is enforced.
    pub fn first_type(a1: FpPoly, a2: FpPoly, theta: Automorphism) -> Result<Self> {
        let m = theta.modulus();
        if a1.modulus() != m || a2.modulus() != m {
            return Err(Error::IncompatibleRings);
        }
        let (a1, a2) = (a1.monic(), a2.monic());
        if !a2.divides(&a1) {
            return Err(Error::InvalidIdeal(format!(
                "v-part generator {a2} must divide unit-part generator {a1}"
            )));
        }
        Ok(IdealDescriptor::FirstType { a1, a2, theta })
    }

    /// The ideal vF_p[x].
    pub fn v_ideal(theta: Automorphism) -> Self {
        let m = theta.modulus();
        IdealDescriptor::FirstType {
            a1: FpPoly::zero(m),
            a2: FpPoly::one(m),
            theta,
        }
    }

    pub fn zero(theta: Automorphism) -> Self {
        let m = theta.modulus();
        IdealDescriptor::FirstType {
            a1: FpPoly::zero(m),
            a2: FpPoly::zero(m),
            theta,
        }
    }

    pub fn principal(f: SkewPoly) -> Result<Self> {
        unit_leading(&f)?;
        Ok(IdealDescriptor::SecondTypePrincipal { f })
    }

    pub fn mixed(f2: FpPoly, g: SkewPoly) -> Result<Self> {
        unit_leading(&g)?;
        if f2.modulus() != g.modulus() {
            return Err(Error::IncompatibleRings);
        }
        Ok(IdealDescriptor::SecondTypeMixed { f2: f2.monic(), g })
    }

    pub fn theta(&self) -> Automorphism {
        match self {
            IdealDescriptor::FirstType { theta, .. } => *theta,
            IdealDescriptor::SecondTypePrincipal { f } => f.theta(),
            IdealDescriptor::SecondTypeMixed { g, .. } => g.theta(),
        }
    }

    /// Monic generators of A_[1] and A_[2].
    pub fn projections(&self) -> (FpPoly, FpPoly) {
        match self {
            IdealDescriptor::FirstType { a1, a2, .. } => (a1.clone(), a2.clone()),
            IdealDescriptor::SecondTypePrincipal { f } => {
                (f.f1().monic(), gcd_or_zero(f.f1(), f.f2()))
            }
            IdealDescriptor::SecondTypeMixed { f2, g } => {
                let inner = gcd_or_zero(g.f1(), g.f2());
                (g.f1().monic(), gcd_or_zero(&inner, f2))
            }
        }
    }

    pub fn contains(&self, f: &SkewPoly) -> bool {
        match self {
            IdealDescriptor::FirstType { a1, a2, .. } => a1.divides(f.f1()) && a2.divides(f.f2()),
            IdealDescriptor::SecondTypePrincipal { f: g } => f
                .right_divmod(g)
                .map(|(_, r)| r.is_zero())
                .unwrap_or(false),
            IdealDescriptor::SecondTypeMixed { f2, g } => mixed_contains(f2, g, f),
        }
    }

    /// First type iff v·gen2 lies in the ideal.
    pub fn classify_type(&self) -> IdealType {
        if let IdealDescriptor::FirstType { .. } = self {
            return IdealType::First;
        }
        let (_, gen2) = self.projections();
        if self.contains(&SkewPoly::from_v_part(gen2, self.theta())) {
            IdealType::First
        } else {
            IdealType::Second
        }
    }

    /// The same ideal as a first type descriptor, when it is one.
    pub fn as_first_type(&self) -> Option<IdealDescriptor> {
        match self.classify_type() {
            IdealType::First => {
                let (a1, a2) = self.projections();
                Some(IdealDescriptor::FirstType {
                    a1,
                    a2,
                    theta: self.theta(),
                })
            }
            IdealType::Second => None,
        }
    }

    /// Proper iff A_[1] ≠ F_p[x]: an element with unit part 1 is a unit of R.
    pub fn is_proper(&self) -> bool {
        !self.projections().0.is_one()
    }

    pub fn is_maximal(&self) -> bool {
        match self.as_first_type() {
            Some(IdealDescriptor::FirstType { a1, a2, .. }) => {
                a2.is_one() && !a1.is_constant() && a1.is_irreducible().unwrap_or(false)
            }
            _ => false,
        }
    }

    pub fn is_prime(&self) -> bool {
        if self.is_maximal() {
            return true;
        }
        matches!(
            self.as_first_type(),
            Some(IdealDescriptor::FirstType { a1, a2, .. }) if a1.is_zero() && a2.is_one()
        )
    }

    pub fn is_primary(&self) -> (bool, Option<PrimaryForm>) {
        let Some(IdealDescriptor::FirstType { a1, a2, theta }) = self.as_first_type() else {
            return (false, None);
        };
        if a1.is_zero() {
            return match (a2.is_zero(), a2.is_one()) {
                (true, _) => (true, Some(PrimaryForm::Zero)),
                (_, true) => (true, Some(PrimaryForm::VIdeal)),
                _ => (false, None),
            };
        }
        if a1.is_one() {
            return (false, None);
        }
        let fac = factor(&a1).expect("nonzero");
        if fac.factors.len() != 1 {
            return (false, None);
        }
        let (pi, a) = &fac.factors[0];
        if a2.is_one() {
            return (true, Some(PrimaryForm::PowerPlusFull));
        }
        let b = fac.exponents_of(&a2).map(|e| e[0]).unwrap_or(0);
        if b >= 1 && b <= *a && contains_own_partaker(pi, theta) {
            return (true, Some(PrimaryForm::PowerPair));
        }
        (false, None)
    }

    /// Componentwise lcm of two first type ideals.
    pub fn intersect_first_type(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (
                IdealDescriptor::FirstType { a1, a2, theta },
                IdealDescriptor::FirstType {
                    a1: b1,
                    a2: b2,
                    theta: t2,
                },
            ) => {
                if theta != t2 {
                    return Err(Error::IncompatibleRings);
                }
                Ok(IdealDescriptor::FirstType {
                    a1: a1.lcm(b1)?,
                    a2: a2.lcm(b2)?,
                    theta: *theta,
                })
            }
            _ => Err(Error::WrongVariant),
        }
    }

    /// ⟨f·f̂⟩ + v⟨f⟩ with A_[1] = ⟨f⟩ and f̂ the partaker of f; this first type
    /// ideal sits inside A.
    pub fn minimal_first_type_inside(&self) -> Result<Self> {
        if let IdealDescriptor::FirstType { .. } = self {
            return Err(Error::WrongVariant);
        }
        let theta = self.theta();
        let (f, _) = self.projections();
        let hat = f.twist_raw(theta.alpha_inv().value());
        Ok(IdealDescriptor::FirstType {
            a1: (&f * &hat).monic(),
            a2: f,
            theta,
        })
    }

    /// Splits a first type ideal into prime-power components whose
    /// intersection is the ideal. Components outside the certified primary
    /// shapes are tagged `NonClassified`.
    pub fn primary_decomposition_first_type(&self) -> Result<Vec<Component>> {
        let IdealDescriptor::FirstType { a1, a2, theta } = self else {
            return Err(Error::WrongVariant);
        };
        let status_of = |ideal: &IdealDescriptor| match ideal.is_primary() {
            (true, Some(form)) => ComponentStatus::Primary(form),
            _ => ComponentStatus::NonClassified,
        };
        if a1.is_zero() {
            return Ok(vec![Component {
                ideal: self.clone(),
                status: status_of(self),
            }]);
        }
        let fac = factor(a1)?;
        let exps2 = fac
            .exponents_of(a2)
            .ok_or_else(|| Error::InvalidIdeal("a2 does not divide a1".into()))?;
        let mut out = Vec::new();
        for ((pi, a), b) in fac.factors.iter().zip(exps2) {
            let ideal = IdealDescriptor::FirstType {
                a1: pi.pow(*a as u64),
                a2: pi.pow(b as u64),
                theta: *theta,
            };
            let status = status_of(&ideal);
            out.push(Component { ideal, status });
        }
        Ok(out)
    }
}

/// Does π divide its own partaker twist(π, α⁻¹)? Equivalently, do all
/// exponents in the support of π agree modulo e?
pub fn contains_own_partaker(pi: &FpPoly, theta: Automorphism) -> bool {
    pi.divides(&pi.twist_raw(theta.alpha_inv().value()))
}

/// Exponents of the nonzero coefficients all lie in one class mod e.
pub fn support_in_single_class(f: &FpPoly, e: u32) -> bool {
    let mut classes = f
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, _)| i % e as usize);
    match classes.next() {
        Some(first) => classes.all(|c| c == first),
        None => true,
    }
}

/// Remainder of right division by g, as a vector of length 2·deg g.
fn remainder_vector(f: &SkewPoly, g: &SkewPoly, m: usize) -> Vec<u32> {
    let (_, r) = f.right_divmod(g).expect("g has unit leading coefficient");
    let mut v = r.f1().to_padded(m);
    v.extend(r.f2().to_padded(m));
    v
}

/// f ∈ vF_p[x]f2 + Rg iff the remainder of f mod g lies in the span of the
/// remainders of v·x^i·f2. Right division by g is linear with kernel Rg, and
/// those remainders are a Krylov sequence, so the span stops growing as soon
/// as one new vector is dependent.
fn mixed_contains(f2: &FpPoly, g: &SkewPoly, f: &SkewPoly) -> bool {
    let theta = g.theta();
    let m = g.degree().expect("nonzero generator");
    if m == 0 {
        return true;
    }
    let mut span = Subspace::zero(2 * m, theta.modulus());
    let mut i = 0;
    loop {
        let w = SkewPoly::from_v_part(f2.shift(i), theta);
        if !span.insert(&remainder_vector(&w, g, m)) || i > 2 * m {
            break;
        }
        i += 1;
    }
    span.contains(&remainder_vector(f, g, m))
}

impl fmt::Display for IdealDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealDescriptor::FirstType { a1, a2, .. } => write!(f, "<{a1}> + v<{a2}>"),
            IdealDescriptor::SecondTypePrincipal { f: g } => write!(f, "R({g})"),
            IdealDescriptor::SecondTypeMixed { f2, g } => write!(f, "vF_p[x]({f2}) + R({g})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::factor_xn_minus_1;
    use rand::Rng;

    fn th(p: u32, a: u32) -> Automorphism {
        Automorphism::from_parts(p, a).unwrap()
    }

    fn poly(c: &[i64], t: Automorphism) -> FpPoly {
        FpPoly::from_signed(c, t.modulus())
    }

    fn sk(f1: &[i64], f2: &[i64], t: Automorphism) -> SkewPoly {
        SkewPoly::new(poly(f1, t), poly(f2, t), t).unwrap()
    }

    fn first(a1: &[i64], a2: &[i64], t: Automorphism) -> IdealDescriptor {
        IdealDescriptor::first_type(poly(a1, t), poly(a2, t), t).unwrap()
    }

    #[test]
    fn projection_examples() {
        let t = th(3, 2);
        let a = IdealDescriptor::principal(sk(&[0, 1], &[1], t)).unwrap();
        assert_eq!(a.projections(), (poly(&[0, 1], t), poly(&[1], t)));
        assert_eq!(first(&[1, 1], &[1], t).projections(), (poly(&[1, 1], t), poly(&[1], t)));
        assert_eq!(
            IdealDescriptor::v_ideal(t).projections(),
            (FpPoly::zero(t.modulus()), poly(&[1], t))
        );
    }

    #[test]
    fn membership_examples() {
        let t = th(3, 2);
        let a = IdealDescriptor::principal(sk(&[0, 1], &[1], t)).unwrap();
        assert!(!a.contains(&SkewPoly::v(t)));
        assert!(a.contains(&sk(&[0, 1], &[1], t)));
        assert!(first(&[2, 1], &[2, 1], t).contains(&sk(&[2, 1], &[], t)));
        // R(x^3 - 1 + v) + vF_p[x](x - 1)
        let b = IdealDescriptor::mixed(poly(&[-1, 1], t), sk(&[-1, 0, 0, 1], &[1], t)).unwrap();
        assert!(!b.contains(&SkewPoly::v(t)));
        assert!(b.contains(&sk(&[], &[-1, 1], t)));
        assert!(b.contains(&sk(&[-1, 0, 0, 1], &[1], t)));
    }

    #[test]
    fn first_type_requires_divisibility() {
        let t = th(3, 2);
        assert!(IdealDescriptor::first_type(poly(&[1, 1], t), poly(&[2, 1], t), t).is_err());
        assert!(IdealDescriptor::first_type(poly(&[1, 1], t), FpPoly::zero(t.modulus()), t).is_err());
        assert_eq!(first(&[2, 2], &[2], t), first(&[1, 1], &[1], t));
    }

    #[test]
    fn type_examples() {
        let t = th(3, 2);
        let a = IdealDescriptor::principal(sk(&[0, 1], &[1], t)).unwrap();
        assert_eq!(a.classify_type(), IdealType::Second);
        let b = IdealDescriptor::principal(sk(&[1, 0, 1], &[1], t)).unwrap();
        assert_eq!(b.classify_type(), IdealType::Second);
        assert_eq!(first(&[1, 1], &[1], t).classify_type(), IdealType::First);
        let c = IdealDescriptor::principal(sk(&[1, 1], &[], t)).unwrap();
        assert_eq!(c.as_first_type(), Some(first(&[1, 1], &[1, 1], t)));
    }

    #[test]
    fn maximal_prime_primary_examples() {
        let t = th(3, 2);
        assert!(first(&[1, 1], &[1], t).is_maximal());
        assert!(!first(&[1, 2, 1], &[1], t).is_maximal());
        assert!(!first(&[1, 0, 1], &[1, 0, 1], t).is_maximal());
        assert!(IdealDescriptor::v_ideal(t).is_prime());
        assert!(first(&[1, 0, 1], &[1], t).is_prime());
        let a = IdealDescriptor::principal(sk(&[0, 1], &[1], t)).unwrap();
        assert!(!a.is_prime());
        assert_eq!(
            first(&[1, 2, 1], &[1], t).is_primary(),
            (true, Some(PrimaryForm::PowerPlusFull))
        );
        assert_eq!(first(&[0, 0, 1], &[0, 1], t).is_primary(), (true, Some(PrimaryForm::PowerPair)));
        assert_eq!(first(&[1, 2, 1], &[1, 1], t).is_primary(), (false, None));
        assert_eq!(IdealDescriptor::v_ideal(t).is_primary(), (true, Some(PrimaryForm::VIdeal)));
        assert_eq!(IdealDescriptor::zero(t).is_primary(), (true, Some(PrimaryForm::Zero)));
        assert_eq!(first(&[1], &[1], t).is_primary(), (false, None));
    }

    #[test]
    fn second_type_never_primary() {
        let t = th(3, 2);
        let a = IdealDescriptor::principal(sk(&[0, 1], &[1], t)).unwrap();
        assert_eq!(a.is_primary(), (false, None));
        let mut checked = 0;
        for f in crate::poly::monic_polys_of_degree(2, t.modulus()).chain(
            crate::poly::monic_polys_of_degree(3, t.modulus()),
        ) {
            let id = IdealDescriptor::principal(SkewPoly::new(f, poly(&[1], t), t).unwrap()).unwrap();
            if id.classify_type() == IdealType::Second {
                assert_eq!(id.is_primary(), (false, None));
                assert!(!id.is_prime() && !id.is_maximal());
                checked += 1;
            }
        }
        assert!(checked >= 20);
    }

    #[test]
    fn intersection_examples() {
        let t = th(3, 2);
        let a = first(&[1, 1], &[1], t);
        let b = first(&[2, 1], &[1], t);
        assert_eq!(a.intersect_first_type(&b).unwrap(), first(&[2, 0, 1], &[1], t));
        assert_eq!(a.intersect_first_type(&a).unwrap(), a);
        let c = first(&[1, 1], &[1, 1], t);
        assert_eq!(
            c.intersect_first_type(&IdealDescriptor::v_ideal(t)).unwrap(),
            IdealDescriptor::FirstType {
                a1: FpPoly::zero(t.modulus()),
                a2: poly(&[1, 1], t),
                theta: t
            }
        );
        assert_eq!(
            a.intersect_first_type(&first(&[1, 1], &[1], th(5, 2))),
            Err(Error::IncompatibleRings)
        );
    }

    #[test]
    fn minimal_first_type_examples() {
        let t = th(3, 2);
        let a = IdealDescriptor::principal(sk(&[0, 1], &[1], t)).unwrap();
        let inner = a.minimal_first_type_inside().unwrap();
        assert_eq!(inner, first(&[0, 0, 1], &[0, 1], t));
        for g in [sk(&[0, 0, 1], &[], t), sk(&[], &[0, 1], t)] {
            assert!(a.contains(&g));
        }
        let b = IdealDescriptor::principal(sk(&[1, 0, 1], &[1], t)).unwrap();
        let f = poly(&[1, 0, 1], t);
        let hat = f.twist_raw(2);
        assert_eq!(
            b.minimal_first_type_inside().unwrap(),
            IdealDescriptor::FirstType { a1: (&f * &hat).monic(), a2: f, theta: t }
        );
        let unit = IdealDescriptor::principal(sk(&[1], &[1], t)).unwrap();
        assert_eq!(unit.minimal_first_type_inside().unwrap(), first(&[1], &[1], t));
        assert_eq!(first(&[1], &[1], t).minimal_first_type_inside(), Err(Error::WrongVariant));
    }

    #[test]
    fn minimal_first_type_sits_inside() {
        let t = th(5, 2);
        for f in crate::poly::monic_polys_of_degree(2, t.modulus()) {
            for c in 0..5 {
                let g = SkewPoly::new(f.clone(), poly(&[c, 1], t), t).unwrap();
                let a = IdealDescriptor::principal(g).unwrap();
                let IdealDescriptor::FirstType { a1, a2, .. } = a.minimal_first_type_inside().unwrap() else {
                    unreachable!()
                };
                assert!(a.contains(&SkewPoly::from_unit_part(a1, t)));
                assert!(a.contains(&SkewPoly::from_v_part(a2, t)));
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        let t = th(3, 2);
        let a = first(&[2, 0, 1], &[1], t);
        let comps = a.primary_decomposition_first_type().unwrap();
        let ideals: Vec<_> = comps.iter().map(|c| c.ideal.clone()).collect();
        assert_eq!(ideals, vec![first(&[1, 1], &[1], t), first(&[2, 1], &[1], t)]);
        let b = first(&[1, 1], &[1, 1], t);
        let comps = b.primary_decomposition_first_type().unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].ideal, b);
        assert_eq!(comps[0].status, ComponentStatus::NonClassified);
        let v = IdealDescriptor::v_ideal(t);
        let comps = v.primary_decomposition_first_type().unwrap();
        assert_eq!(comps[0].ideal, v);
        assert_eq!(comps[0].status, ComponentStatus::Primary(PrimaryForm::VIdeal));
    }

    #[test]
    fn decomposition_reassembles() {
        for (p, a, n) in [(3u32, 2u32, 4usize), (3, 2, 6), (5, 4, 6), (5, 2, 8), (7, 6, 6)] {
            let t = th(p, a);
            let ds = factor_xn_minus_1(t.modulus(), n).divisors();
            for a1 in &ds {
                for a2 in ds.iter().filter(|d| d.divides(a1)) {
                    let id = IdealDescriptor::first_type(a1.clone(), a2.clone(), t).unwrap();
                    let comps = id.primary_decomposition_first_type().unwrap();
                    let total = comps.iter().fold(first(&[1], &[1], t), |acc, c| {
                        acc.intersect_first_type(&c.ideal).unwrap()
                    });
                    assert_eq!(total, id);
                    for c in &comps {
                        let certified = matches!(c.status, ComponentStatus::Primary(_));
                        assert_eq!(certified, c.ideal.is_primary().0);
                    }
                }
            }
        }
    }

    #[test]
    fn v_times_projection_stays_inside() {
        let t = th(3, 2);
        let ds = factor_xn_minus_1(t.modulus(), 4).divisors();
        let mut ideals = Vec::new();
        for a1 in &ds {
            for a2 in ds.iter().filter(|d| d.divides(a1)) {
                ideals.push(IdealDescriptor::first_type(a1.clone(), a2.clone(), t).unwrap());
            }
        }
        for f1 in &ds {
            for f2 in &ds {
                if let Ok(id) = IdealDescriptor::principal(SkewPoly::new(f1.clone(), f2.clone(), t).unwrap()) {
                    ideals.push(id);
                }
            }
        }
        for id in &ideals {
            let (g1, g2) = id.projections();
            assert!(g2.divides(&g1));
            assert!(id.contains(&SkewPoly::from_v_part(g1, t)));
        }
    }

    #[test]
    fn implication_chain_on_sweep() {
        let t = th(3, 2);
        let ds = factor_xn_minus_1(t.modulus(), 4).divisors();
        for a1 in &ds {
            for a2 in ds.iter().filter(|d| d.divides(a1)) {
                let id = IdealDescriptor::first_type(a1.clone(), a2.clone(), t).unwrap();
                if id.is_maximal() {
                    assert!(id.is_prime());
                }
                if id.is_prime() {
                    assert!(id.is_primary().0);
                }
            }
        }
    }

    #[test]
    fn partaker_coprimality() {
        for (p, a) in [(3u32, 2u32), (5, 2), (5, 4)] {
            let t = th(p, a);
            for n in (1..=8).filter(|n| n % t.order() as usize == 0) {
                for (pi, _) in factor_xn_minus_1(t.modulus(), n).factors {
                    let hat = pi.twist_raw(t.alpha_inv().value());
                    let g = pi.gcd(&hat).unwrap();
                    let single = support_in_single_class(&pi, t.order());
                    assert_eq!(g.is_one(), !single, "{pi}");
                    assert_eq!(contains_own_partaker(&pi, t), single);
                }
            }
        }
    }

    #[test]
    fn mixed_membership_matches_span_oracle() {
        // explicit F_p-span of generator multiples, wide enough that low-degree
        // members always have a representation inside it
        let t = th(3, 2);
        let m = t.modulus();
        let width = 24;
        let to_vec = |f: &SkewPoly| {
            let mut v = f.f1().to_padded(width);
            v.extend(f.f2().to_padded(width));
            v
        };
        let g = sk(&[2, 0, 1], &[1], t);
        let f2 = poly(&[2, 1], t);
        let id = IdealDescriptor::mixed(f2.clone(), g.clone()).unwrap();
        let mut span = Subspace::zero(2 * width, m);
        for i in 0..width - 1 {
            span.insert(&to_vec(&SkewPoly::from_v_part(f2.shift(i), t)));
        }
        for i in 0..width - 2 {
            let xi = SkewPoly::term(crate::DualScalar::one(m), i, t);
            let vxi = SkewPoly::from_v_part(FpPoly::monomial(1, i, m), t);
            span.insert(&to_vec(&(&xi * &g)));
            span.insert(&to_vec(&(&vxi * &g)));
        }
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(9);
        let mut hits = 0;
        for _ in 0..2000 {
            let mut f = SkewPoly::random(&mut rng, 6, t);
            if rng.gen_bool(0.5) {
                // push towards members
                let r = SkewPoly::random(&mut rng, 3, t);
                f = &(&r * &g) + &SkewPoly::from_v_part(&FpPoly::random(&mut rng, 3, m) * &f2, t);
            }
            let inside = id.contains(&f);
            hits += inside as u32;
            assert_eq!(inside, span.contains(&to_vec(&f)), "{f}");
        }
        assert!(hits > 500);
    }
}
