//! Subspaces of F_p^d kept in reduced row-echelon form. Two subspaces are
//! equal exactly when their echelon bases are equal, which makes the basis a
//! canonical fingerprint.

use crate::field::PrimeModulus;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    dim: usize,
    modulus: PrimeModulus,
    /// Echelon rows ordered by pivot column.
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(dim: usize, modulus: PrimeModulus) -> Self {
        Self {
            dim,
            modulus,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(dim: usize, modulus: PrimeModulus) -> Self {
        let mut s = Self::zero(dim, modulus);
        for i in 0..dim {
            let mut e = vec![0; dim];
            e[i] = 1;
            s.insert(&e);
        }
        s
    }

    pub fn span<'a, I>(dim: usize, modulus: PrimeModulus, vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a Vec<u32>>,
    {
        let mut s = Self::zero(dim, modulus);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.dim
    }

    /// Residue of v after clearing every pivot column.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        debug_assert_eq!(v.len(), self.dim);
        let m = self.modulus;
        let mut w = v.to_vec();
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = w[piv];
            if c == 0 {
                continue;
            }
            for (wj, &rj) in w.iter_mut().zip(row).skip(piv) {
                if rj != 0 {
                    *wj = m.sub(*wj, m.mul(c, rj));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&c| c == 0)
    }

    /// Adds v to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let m = self.modulus;
        let mut w = self.reduce(v);
        let piv = match w.iter().position(|&c| c != 0) {
            Some(i) => i,
            None => return false,
        };
        let inv = m.inv(w[piv]).expect("nonzero pivot");
        for c in w.iter_mut() {
            *c = m.mul(*c, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[piv];
            if c == 0 {
                continue;
            }
            for (rj, &wj) in row.iter_mut().zip(&w).skip(piv) {
                if wj != 0 {
                    *rj = m.sub(*rj, m.mul(c, wj));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < piv);
        self.pivots.insert(at, piv);
        self.rows.insert(at, w);
        true
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r);
        }
        s
    }

    /// Vectors x with ⟨row, x⟩ = 0 for every basis row.
    pub fn annihilator(&self) -> Self {
        let m = self.modulus;
        let mut out = Self::zero(self.dim, m);
        let mut is_pivot = vec![false; self.dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.dim).filter(|&j| !is_pivot[j]) {
            let mut x = vec![0; self.dim];
            x[free] = 1;
            for (row, &piv) in self.rows.iter().zip(&self.pivots) {
                x[piv] = m.neg(row[free]);
            }
            out.insert(&x);
        }
        out
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.annihilator().sum(&other.annihilator()).annihilator()
    }
}

/// Basis of {x : A·x = 0} for a matrix given by its rows.
pub fn nullspace(rows: &[Vec<u32>], ncols: usize, modulus: PrimeModulus) -> Subspace {
    Subspace::span(ncols, modulus, rows).annihilator()
}

/// Rank of a matrix given by its rows.
pub fn rank(rows: &[Vec<u32>], ncols: usize, modulus: PrimeModulus) -> usize {
    Subspace::span(ncols, modulus, rows).rank()
}

/// A·Bᵀ over F_p.
pub fn mul_transpose(a: &[Vec<u32>], b: &[Vec<u32>], modulus: PrimeModulus) -> Vec<Vec<u32>> {
    a.iter()
        .map(|ra| {
            b.iter()
                .map(|rb| {
                    ra.iter()
                        .zip(rb)
                        .fold(0, |acc, (&x, &y)| modulus.add(acc, modulus.mul(x, y)))
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn m(p: u32) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn random_space(rng: &mut ChaCha8Rng, dim: usize, k: usize, p: u32) -> Subspace {
        let vs: Vec<Vec<u32>> = (0..k)
            .map(|_| (0..dim).map(|_| rng.gen_range(0..p)).collect())
            .collect();
        Subspace::span(dim, m(p), &vs)
    }

    #[test]
    fn echelon_is_canonical() {
        let a = Subspace::span(3, m(3), &[vec![1, 1, 0], vec![0, 1, 1]]);
        let b = Subspace::span(3, m(3), &[vec![1, 2, 1], vec![2, 0, 1]]);
        assert_eq!(a.rank(), 2);
        assert_eq!(a, b);
        assert!(a.contains(&[1, 0, 2]));
        assert!(!a.contains(&[1, 0, 0]));
    }

    #[test]
    fn annihilator_and_intersection_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for p in [2u32, 3, 5] {
            for _ in 0..200 {
                let dim = rng.gen_range(1..9);
                let (ka, kb) = (rng.gen_range(0..dim + 1), rng.gen_range(0..dim + 1));
                let a = random_space(&mut rng, dim, ka, p);
                let b = random_space(&mut rng, dim, kb, p);
                let ann = a.annihilator();
                assert_eq!(ann.rank() + a.rank(), dim);
                let prod = mul_transpose(a.basis(), ann.basis(), m(p));
                assert!(prod.iter().flatten().all(|&c| c == 0));
                assert_eq!(ann.annihilator(), a);
                let i = a.intersection(&b);
                assert!(i.is_subspace_of(&a) && i.is_subspace_of(&b));
                assert_eq!(i.rank() + a.sum(&b).rank(), a.rank() + b.rank());
            }
        }
    }

    #[test]
    fn full_and_zero() {
        assert!(Subspace::full(4, m(5)).is_full());
        assert_eq!(Subspace::zero(4, m(5)).rank(), 0);
        assert_eq!(nullspace(&[vec![1, 1, 1, 1]], 4, m(3)).rank(), 3);
    }
}
