//! The finite ring R_n = R / (x^n − 1) for e | n, with its elements written as
//! vectors in F_p^{2n}: `[a_0..a_{n-1}, b_0..b_{n-1}]` for a(x) + v·b(x).
//!
//! Left ideals are F_p-subspaces closed under left multiplication, so every
//! ring-theoretic definition (prime, primary, maximal) can be checked by
//! finite linear algebra. These checks are the ground truth the closed-form
//! classification in [`crate::ideal`] is compared against.

use crate::error::{Error, Result};
use crate::field::{Automorphism, PrimeModulus};
use crate::linalg::Subspace;
use crate::poly::{factor_xn_minus_1, FpPoly};
use crate::skew::SkewPoly;

/// A principal left ideal Ra together with the generator a.
#[derive(Debug, Clone)]
pub struct Principal {
    pub generator: Vec<u32>,
    pub ideal: Subspace,
}

#[derive(Debug, Clone)]
pub struct QuotientRing {
    theta: Automorphism,
    n: usize,
    /// α^i for i < n.
    alpha_pows: Vec<u32>,
}

impl QuotientRing {
    pub fn new(theta: Automorphism, n: usize) -> Result<Self> {
        let e = theta.order();
        if n == 0 || n % e as usize != 0 {
            return Err(Error::UseCoprimeCase { e, n });
        }
        let m = theta.modulus();
        let alpha = theta.alpha().value();
        let mut alpha_pows = Vec::with_capacity(n);
        let mut acc = 1;
        for _ in 0..n {
            alpha_pows.push(acc);
            acc = m.mul(acc, alpha);
        }
        Ok(Self {
            theta,
            n,
            alpha_pows,
        })
    }

    pub fn theta(&self) -> Automorphism {
        self.theta
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.theta.modulus()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// F_p-dimension 2n.
    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn to_vec(&self, f: &SkewPoly) -> Vec<u32> {
        let r = f.reduce_cyclic(self.n);
        let mut v = r.f1().to_padded(self.n);
        v.extend(r.f2().to_padded(self.n));
        v
    }

    pub fn from_vec(&self, v: &[u32]) -> SkewPoly {
        let m = self.modulus();
        SkewPoly::new(
            FpPoly::new(v[..self.n].to_vec(), m),
            FpPoly::new(v[self.n..].to_vec(), m),
            self.theta,
        )
        .expect("same modulus")
    }

    /// Product in R_n: (a₁ + va₂)(b₁ + vb₂) = a₁b₁ + v(twist(a₁, α)b₂ + a₂b₁).
    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let n = self.n;
        let m = self.modulus();
        let p = m.get() as u64;
        let mut unit = vec![0u64; n];
        let mut vpart = vec![0u64; n];
        for i in 0..n {
            let a1 = a[i] as u64;
            let a1t = m.mul(a[i], self.alpha_pows[i]) as u64;
            let a2 = a[n + i] as u64;
            if a1 == 0 && a2 == 0 {
                continue;
            }
            for j in 0..n {
                let k = (i + j) % n;
                let b1 = b[j] as u64;
                let b2 = b[n + j] as u64;
                unit[k] = (unit[k] + a1 * b1) % p;
                vpart[k] = (vpart[k] + a1t * b2 + a2 * b1) % p;
            }
        }
        unit.into_iter().chain(vpart).map(|c| c as u32).collect()
    }

    /// The F_p-basis {x^i} ∪ {v·x^i}.
    pub fn basis(&self) -> Vec<Vec<u32>> {
        (0..self.dim())
            .map(|i| {
                let mut e = vec![0; self.dim()];
                e[i] = 1;
                e
            })
            .collect()
    }

    /// Left ideal generated by the given elements.
    pub fn left_ideal(&self, generators: &[Vec<u32>]) -> Subspace {
        let mut s = Subspace::zero(self.dim(), self.modulus());
        for g in generators {
            for r in self.basis() {
                s.insert(&self.mul(&r, g));
            }
        }
        s
    }

    /// Image of ⟨a1⟩ + v⟨a2⟩.
    pub fn first_type_ideal(&self, a1: &FpPoly, a2: &FpPoly) -> Subspace {
        let t = self.theta;
        let g1 = self.to_vec(&SkewPoly::from_unit_part(a1.clone(), t));
        let g2 = self.to_vec(&SkewPoly::from_v_part(a2.clone(), t));
        self.left_ideal(&[g1, g2])
    }

    /// Product of left ideals: the span of all pairwise products.
    pub fn product(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut s = Subspace::zero(self.dim(), self.modulus());
        for x in a.basis() {
            for y in b.basis() {
                s.insert(&self.mul(x, y));
                if s.is_full() {
                    return s;
                }
            }
        }
        s
    }

    /// Every principal left ideal, each listed once, ordered by dimension.
    ///
    /// Any element a₁ + va₂ generates the same left ideal as some d + vc with
    /// d a monic divisor of x^n − 1 and deg c < deg d: a₁ is a unit multiple
    /// of d = gcd(a₁, x^n − 1), and multiplying by the unit 1 − vh reduces c
    /// modulo d. When d = x^n − 1 the unit part vanishes and c is arbitrary.
    pub fn principal_ideals(&self) -> Vec<Principal> {
        let m = self.modulus();
        let p = m.get() as u64;
        let n = self.n;
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for d in factor_xn_minus_1(m, n).divisors() {
            let deg = d.deg_or_zero();
            let d_vec = if deg == n {
                vec![0; n]
            } else {
                d.to_padded(n)
            };
            for idx in 0..p.pow(deg as u32) {
                let mut a = d_vec.clone();
                let mut k = idx;
                for _ in 0..deg {
                    a.push((k % p) as u32);
                    k /= p;
                }
                a.resize(2 * n, 0);
                let ideal = self.left_ideal(std::slice::from_ref(&a));
                if seen.insert(ideal.clone()) {
                    out.push(Principal {
                        generator: a,
                        ideal,
                    });
                }
            }
        }
        out.sort_by_key(|pr| pr.ideal.rank());
        out
    }

    /// Minimal members of {Ra : Ra ⊄ Q}. Conditions of the form "for all
    /// a ∉ Q" that weaken as Ra shrinks only need checking on these.
    fn minimal_outside<'a>(&self, q: &Subspace, principals: &'a [Principal]) -> Vec<&'a Principal> {
        let mut chosen: Vec<&Principal> = Vec::new();
        for ra in principals {
            if ra.ideal.is_subspace_of(q) {
                continue;
            }
            if chosen.iter().any(|c| c.ideal.is_subspace_of(&ra.ideal)) {
                continue;
            }
            chosen.push(ra);
        }
        chosen
    }

    /// {b : a·r·b ∈ Q for all r}, the largest left ideal B with (Ra)B ⊆ Q.
    fn annihilator_into(&self, a: &[u32], q: &Subspace) -> Subspace {
        let ann_q = q.annihilator();
        let basis = self.basis();
        let mut constraints = Vec::new();
        for r in &basis {
            let ar = self.mul(a, r);
            let images: Vec<Vec<u32>> = basis.iter().map(|e| self.mul(&ar, e)).collect();
            for w in ann_q.basis() {
                let m = self.modulus();
                let row: Vec<u32> = images
                    .iter()
                    .map(|img| {
                        img.iter()
                            .zip(w)
                            .fold(0, |acc, (&x, &y)| m.add(acc, m.mul(x, y)))
                    })
                    .collect();
                constraints.push(row);
            }
        }
        crate::linalg::nullspace(&constraints, self.dim(), self.modulus())
    }

    fn is_proper(&self, q: &Subspace) -> bool {
        !q.is_full()
    }

    /// Q is prime: AB ⊆ Q forces A ⊆ Q or B ⊆ Q.
    pub fn is_prime_by_definition(&self, q: &Subspace, principals: &[Principal]) -> bool {
        if !self.is_proper(q) {
            return false;
        }
        self.minimal_outside(q, principals).iter().all(|ra| {
            self.annihilator_into(&ra.generator, q).is_subspace_of(q)
        })
    }

    /// Q is primary: AB ⊆ Q forces A ⊆ Q or B^k ⊆ Q for some k.
    pub fn is_primary_by_definition(&self, q: &Subspace, principals: &[Principal]) -> bool {
        if !self.is_proper(q) {
            return false;
        }
        self.minimal_outside(q, principals).iter().all(|ra| {
            let k = self.annihilator_into(&ra.generator, q);
            let mut power = k.clone();
            loop {
                if power.is_subspace_of(q) {
                    return true;
                }
                let next = self.product(&k, &power);
                if next == power {
                    return false;
                }
                power = next;
            }
        })
    }

    /// Q is maximal: Q + Ra = R_n for every a ∉ Q.
    pub fn is_maximal_by_definition(&self, q: &Subspace, principals: &[Principal]) -> bool {
        if !self.is_proper(q) {
            return false;
        }
        self.minimal_outside(q, principals)
            .iter()
            .all(|ra| q.sum(&ra.ideal).is_full())
    }
}
