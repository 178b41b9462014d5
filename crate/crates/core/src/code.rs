//! Skew cyclic codes of length n over S = F_p + vF_p.
//!
//! A word (c_0, …, c_{n-1}) with c_i = a_i + b_i·v is identified with the
//! vector `[a_0..a_{n-1}, b_0..b_{n-1}]` of F_p^{2n}, which is also the
//! element Σ a_i x^i + v·Σ b_i x^i of R_n. The skew shift is then left
//! multiplication by x.

use std::collections::HashSet;
use std::fmt;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Automorphism, DualScalar, PrimeModulus};
use crate::linalg::{mul_transpose, Subspace};
use crate::poly::{factor_xn_minus_1, FpPoly};

/// Exhaustive searches refuse codes with more than this many codewords.
pub const SEARCH_CAP: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Codeword {
    symbols: Vec<DualScalar>,
}

impl Codeword {
    pub fn new(symbols: Vec<DualScalar>) -> Self {
        Self { symbols }
    }

    pub fn zero(n: usize, modulus: PrimeModulus) -> Self {
        Self::new(vec![DualScalar::zero(modulus); n])
    }

    /// From the `[a | b]` layout.
    pub fn from_vector(v: &[u32], modulus: PrimeModulus) -> Self {
        let n = v.len() / 2;
        Self::new(
            (0..n)
                .map(|i| DualScalar::from_parts(v[i] as i64, v[n + i] as i64, modulus))
                .collect(),
        )
    }

    /// To the `[a | b]` layout.
    pub fn to_vector(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.symbols.iter().map(|s| s.a().value()).collect();
        v.extend(self.symbols.iter().map(|s| s.b().value()));
        v
    }

    pub fn symbols(&self) -> &[DualScalar] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Number of nonzero symbols.
    pub fn weight(&self) -> usize {
        self.symbols.iter().filter(|s| !s.is_zero()).count()
    }

    /// Number of nonzero F_p coordinates (each symbol counts up to twice).
    pub fn fp_weight(&self) -> usize {
        self.to_vector().iter().filter(|&&c| c != 0).count()
    }

    pub fn distance(&self, other: &Self) -> usize {
        self.symbols
            .iter()
            .zip(&other.symbols)
            .filter(|(a, b)| a != b)
            .count()
    }

    /// Reads whitespace- or comma-separated symbols such as `1 2v 1+v 0`.
    pub fn parse(s: &str, modulus: PrimeModulus) -> Result<Self> {
        let symbols = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| DualScalar::parse(t, modulus))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(symbols))
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// (c_0, …, c_{n-1}) ↦ (θ(c_{n-1}), θ(c_0), …, θ(c_{n-2})).
pub fn skew_shift(c: &Codeword, theta: Automorphism) -> Codeword {
    let n = c.len();
    Codeword::new(
        (0..n)
            .map(|i| theta.apply(c.symbols[(i + n - 1) % n]))
            .collect(),
    )
}

fn shift_vector(v: &[u32], alpha: u32, modulus: PrimeModulus) -> Vec<u32> {
    let n = v.len() / 2;
    let mut out = vec![0; 2 * n];
    for i in 0..n {
        let src = (i + n - 1) % n;
        out[i] = v[src];
        out[n + i] = modulus.mul(alpha, v[n + src]);
    }
    out
}

/// Multiplication of every symbol by v: (a, b) ↦ (0, a).
fn v_scale_vector(v: &[u32]) -> Vec<u32> {
    let n = v.len() / 2;
    let mut out = vec![0; 2 * n];
    out[n..].copy_from_slice(&v[..n]);
    out
}

fn rotate_vector(v: &[u32], d: usize) -> Vec<u32> {
    let n = v.len() / 2;
    let mut out = vec![0; 2 * n];
    for i in 0..n {
        out[(i + d) % n] = v[i];
        out[n + (i + d) % n] = v[n + i];
    }
    out
}

fn close_under<F>(mut span: Subspace, start: Vec<Vec<u32>>, maps: F) -> Subspace
where
    F: Fn(&[u32]) -> Vec<Vec<u32>>,
{
    let mut queue = start;
    while let Some(v) = queue.pop() {
        if span.insert(&v) {
            queue.extend(maps(&v));
        }
    }
    span
}

/// The smallest F_p-subspace of F_p^{2n} containing the generators and
/// closed under the skew shift and under multiplication by v, returned as its
/// echelon basis. This is the left R_n-submodule the generators span.
pub fn submodule_closure(theta: Automorphism, n: usize, generators: &[Codeword]) -> Subspace {
    let m = theta.modulus();
    let alpha = theta.alpha().value();
    close_under(
        Subspace::zero(2 * n, m),
        generators.iter().map(Codeword::to_vector).collect(),
        |v| vec![shift_vector(v, alpha, m), v_scale_vector(v)],
    )
}

/// Closure under the skew shift alone (F_p-linear, not necessarily S-linear).
pub fn shift_closure(theta: Automorphism, n: usize, generators: &[Vec<u32>]) -> Subspace {
    let m = theta.modulus();
    let alpha = theta.alpha().value();
    close_under(Subspace::zero(2 * n, m), generators.to_vec(), |v| {
        vec![shift_vector(v, alpha, m)]
    })
}

/// Is the subspace mapped into itself by the skew shift?
pub fn is_shift_closed(theta: Automorphism, space: &Subspace) -> bool {
    let m = theta.modulus();
    let alpha = theta.alpha().value();
    space
        .basis()
        .iter()
        .all(|v| space.contains(&shift_vector(v, alpha, m)))
}

/// Is the subspace closed under the skew shift and under v-scaling?
pub fn is_submodule(theta: Automorphism, space: &Subspace) -> bool {
    is_shift_closed(theta, space) && space.basis().iter().all(|v| space.contains(&v_scale_vector(v)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeCase {
    /// e | n: the code is a left ideal of R_n.
    Divides,
    /// e ∤ n: the code is a shift-invariant C₁ ⊕ vC₂.
    CoprimeShift,
}

impl CodeCase {
    pub fn label(self) -> &'static str {
        match self {
            CodeCase::Divides => "divides",
            CodeCase::CoprimeShift => "coprime_shift",
        }
    }
}

/// The code ⟨fg⟩ + v⟨f⟩ of length n, i.e. all a + v·b with fg | a and f | b
/// modulo x^n − 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewCyclicCode {
    theta: Automorphism,
    n: usize,
    fg: FpPoly,
    f: FpPoly,
    case: CodeCase,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeMatrices {
    pub g1: Vec<Vec<u32>>,
    pub g2: Vec<Vec<u32>>,
    pub h1: Vec<Vec<u32>>,
    pub h2: Vec<Vec<u32>>,
}

fn generator_rows(g: &FpPoly, n: usize) -> Vec<Vec<u32>> {
    let k = n - g.deg_or_zero();
    (0..k).map(|i| g.shift(i).to_padded(n)).collect()
}

/// Rows are shifts of the reversed check polynomial (x^n − 1)/g.
fn parity_rows(g: &FpPoly, n: usize) -> Vec<Vec<u32>> {
    let m = g.modulus();
    let h = FpPoly::xn_minus_1(n, m).exact_div(g);
    let mut rev: Vec<u32> = h.coeffs().to_vec();
    rev.reverse();
    (0..g.deg_or_zero())
        .map(|i| {
            let mut row = vec![0; n];
            for (j, &c) in rev.iter().enumerate() {
                row[i + j] = c;
            }
            row
        })
        .collect()
}

fn check_skew(theta: Automorphism) -> Result<()> {
    theta.ensure_skew()
}

/// ⟨fg⟩ + v⟨f⟩ for e | n, with f | fg | x^n − 1.
pub fn build_code(theta: Automorphism, n: usize, fg: &FpPoly, f: &FpPoly) -> Result<SkewCyclicCode> {
    check_skew(theta)?;
    let e = theta.order();
    if n == 0 || n % e as usize != 0 {
        return Err(Error::UseCoprimeCase { e, n });
    }
    let m = theta.modulus();
    let xn = FpPoly::xn_minus_1(n, m);
    let (fg, f) = (fg.monic(), f.monic());
    if fg.is_zero() || !fg.divides(&xn) || !f.divides(&fg) {
        return Err(Error::NotADivisorChain);
    }
    let code = SkewCyclicCode {
        theta,
        n,
        fg,
        f,
        case: CodeCase::Divides,
    };
    if 2 * n <= 64 && !is_submodule(theta, &code.span()) {
        return Err(Error::InvalidIdeal("generated set is not shift-closed".into()));
    }
    Ok(code)
}

/// C₁ ⊕ vC₂ for e ∤ n, with C₁ = ⟨c1⟩ and C₂ = ⟨c2⟩ cyclic codes over F_p.
pub fn build_pair_code(theta: Automorphism, n: usize, c1: &FpPoly, c2: &FpPoly) -> Result<SkewCyclicCode> {
    check_skew(theta)?;
    let e = theta.order();
    if n == 0 || n % e as usize == 0 {
        return Err(Error::UseDividesCase { e, n });
    }
    let xn = FpPoly::xn_minus_1(n, theta.modulus());
    let (c1, c2) = (c1.monic(), c2.monic());
    if c1.is_zero() || c2.is_zero() || !c1.divides(&xn) || !c2.divides(&xn) {
        return Err(Error::NotADivisorChain);
    }
    Ok(SkewCyclicCode {
        theta,
        n,
        fg: c1,
        f: c2,
        case: CodeCase::CoprimeShift,
    })
}

impl SkewCyclicCode {
    pub fn theta(&self) -> Automorphism {
        self.theta
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.theta.modulus()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Generator of the unit-part code.
    pub fn fg(&self) -> &FpPoly {
        &self.fg
    }

    /// Generator of the v-part code.
    pub fn f(&self) -> &FpPoly {
        &self.f
    }

    pub fn case(&self) -> CodeCase {
        self.case
    }

    pub fn dim_unit(&self) -> usize {
        self.n - self.fg.deg_or_zero()
    }

    pub fn dim_v(&self) -> usize {
        self.n - self.f.deg_or_zero()
    }

    /// F_p-dimension; the code has p^dim words.
    pub fn dim(&self) -> usize {
        self.dim_unit() + self.dim_v()
    }

    pub fn size(&self) -> u128 {
        (self.modulus().get() as u128).saturating_pow(self.dim() as u32)
    }

    pub fn matrices(&self) -> CodeMatrices {
        let n = self.n;
        let out = CodeMatrices {
            g1: generator_rows(&self.fg, n),
            g2: generator_rows(&self.f, n),
            h1: parity_rows(&self.fg, n),
            h2: parity_rows(&self.f, n),
        };
        let m = self.modulus();
        assert!(mul_transpose(&out.g1, &out.h1, m).iter().flatten().all(|&c| c == 0));
        assert!(mul_transpose(&out.g2, &out.h2, m).iter().flatten().all(|&c| c == 0));
        out
    }

    /// Generator rows in the `[a | b]` layout: unit-part rows first.
    pub fn generator_vectors(&self) -> Vec<Vec<u32>> {
        let n = self.n;
        let mut rows = Vec::with_capacity(self.dim());
        for r in generator_rows(&self.fg, n) {
            let mut v = r;
            v.resize(2 * n, 0);
            rows.push(v);
        }
        for r in generator_rows(&self.f, n) {
            let mut v = vec![0; n];
            v.extend(r);
            rows.push(v);
        }
        rows
    }

    /// The code as an F_p-subspace of F_p^{2n}.
    pub fn span(&self) -> Subspace {
        Subspace::span(2 * self.n, self.modulus(), &self.generator_vectors())
    }

    pub fn contains(&self, c: &Codeword) -> bool {
        if c.len() != self.n {
            return false;
        }
        let (a, b) = split(&c.to_vector());
        let m = self.modulus();
        self.fg.divides(&FpPoly::new(a, m)) && self.f.divides(&FpPoly::new(b, m))
    }

    /// Codeword with unit parts m1·G1 and v-parts m2·G2.
    pub fn encode(&self, m1: &[u32], m2: &[u32]) -> Result<Codeword> {
        if m1.len() != self.dim_unit() {
            return Err(Error::BadMessageLength {
                expected: self.dim_unit(),
                got: m1.len(),
            });
        }
        if m2.len() != self.dim_v() {
            return Err(Error::BadMessageLength {
                expected: self.dim_v(),
                got: m2.len(),
            });
        }
        let m = self.modulus();
        let msg: Vec<u32> = m1.iter().chain(m2).map(|&c| m.reduce(c as u64)).collect();
        Ok(Codeword::from_vector(&combine(&self.generator_vectors(), &msg, m, 2 * self.n), m))
    }

    fn ensure_searchable(&self) -> Result<()> {
        if self.size() > SEARCH_CAP {
            return Err(Error::TooLarge(self.size()));
        }
        Ok(())
    }

    /// Visits every codeword (as an `[a | b]` vector) together with its
    /// message index, in odometer order over the messages.
    fn for_each_word<F: FnMut(u64, &[u32])>(&self, mut visit: F) {
        let m = self.modulus();
        let p = m.get();
        let rows = self.generator_vectors();
        let k = rows.len();
        let mut digits = vec![0u32; k];
        let mut word = vec![0u32; 2 * self.n];
        let total = self.size() as u64;
        for idx in 0..total {
            visit(idx, &word);
            // increment the odometer; a digit wrapping from p-1 to 0 has seen
            // its row added p times, which cancels mod p
            for (j, row) in rows.iter().enumerate() {
                for (w, &r) in word.iter_mut().zip(row) {
                    *w = m.add(*w, r);
                }
                digits[j] += 1;
                if digits[j] < p {
                    break;
                }
                digits[j] = 0;
            }
        }
    }

    /// Minimum number of nonzero symbols over nonzero codewords, by
    /// exhaustive enumeration.
    pub fn min_distance(&self) -> Result<usize> {
        self.min_weight(|w| symbol_weight(w))
    }

    /// Minimum number of nonzero F_p coordinates over nonzero codewords.
    pub fn min_distance_fp(&self) -> Result<usize> {
        self.min_weight(|w| w.iter().filter(|&&c| c != 0).count())
    }

    fn min_weight<W: Fn(&[u32]) -> usize>(&self, weight: W) -> Result<usize> {
        if self.dim() == 0 {
            return Err(Error::NoNonzeroWords);
        }
        self.ensure_searchable()?;
        let mut best = usize::MAX;
        self.for_each_word(|idx, w| {
            if idx != 0 {
                best = best.min(weight(w));
            }
        });
        Ok(best)
    }

    /// Every codeword, in message order.
    pub fn codewords(&self) -> Result<Vec<Codeword>> {
        self.ensure_searchable()?;
        let m = self.modulus();
        let mut out = Vec::with_capacity(self.size() as usize);
        self.for_each_word(|_, w| out.push(Codeword::from_vector(w, m)));
        Ok(out)
    }

    /// Splits a message index into (m1, m2).
    fn messages_of(&self, mut idx: u64) -> (Vec<u32>, Vec<u32>) {
        let p = self.modulus().get() as u64;
        let mut digits: Vec<u32> = Vec::with_capacity(self.dim());
        for _ in 0..self.dim() {
            digits.push((idx % p) as u32);
            idx /= p;
        }
        let m2 = digits.split_off(self.dim_unit());
        (digits, m2)
    }

    pub fn decoder(&self) -> Result<CodebookDecoder> {
        CodebookDecoder::new(self)
    }

    /// Nearest-codeword decoding; see [`CodebookDecoder::decode`].
    pub fn decode(&self, received: &Codeword) -> Result<Decoded> {
        self.decoder()?.decode(received)
    }
}

fn split(v: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let n = v.len() / 2;
    (v[..n].to_vec(), v[n..].to_vec())
}

fn combine(rows: &[Vec<u32>], coeffs: &[u32], m: PrimeModulus, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for (row, &c) in rows.iter().zip(coeffs) {
        if c == 0 {
            continue;
        }
        for (o, &r) in out.iter_mut().zip(row) {
            *o = m.add(*o, m.mul(c, r));
        }
    }
    out
}

fn symbol_weight(v: &[u32]) -> usize {
    let n = v.len() / 2;
    (0..n).filter(|&i| v[i] != 0 || v[n + i] != 0).count()
}

/// Symbols interleaved as (a_0, b_0, a_1, b_1, …) so that slice ordering is
/// the lexicographic order on words over S.
fn symbol_key(v: &[u32]) -> Vec<u32> {
    let n = v.len() / 2;
    (0..n).flat_map(|i| [v[i], v[n + i]]).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub codeword: Codeword,
    pub m1: Vec<u32>,
    pub m2: Vec<u32>,
    /// Symbol positions where the received word differs from `codeword`.
    pub errors: usize,
}

/// A decoder that stores the whole codebook in lexicographic order and
/// returns the first word at minimum distance.
#[derive(Debug, Clone)]
pub struct CodebookDecoder {
    code: SkewCyclicCode,
    /// (interleaved symbol key, message index), sorted by key.
    book: Vec<(Vec<u32>, u64)>,
}

impl CodebookDecoder {
    pub fn new(code: &SkewCyclicCode) -> Result<Self> {
        code.ensure_searchable()?;
        let mut book = Vec::with_capacity(code.size() as usize);
        code.for_each_word(|idx, w| book.push((symbol_key(w), idx)));
        book.sort();
        Ok(Self {
            code: code.clone(),
            book,
        })
    }

    pub fn code(&self) -> &SkewCyclicCode {
        &self.code
    }

    /// Nearest codeword in symbol Hamming distance; ties go to the
    /// lexicographically smallest codeword.
    pub fn decode(&self, received: &Codeword) -> Result<Decoded> {
        let n = self.code.n;
        if received.len() != n {
            return Err(Error::BadWordLength {
                expected: n,
                got: received.len(),
            });
        }
        let target = symbol_key(&received.to_vector());
        let mut best: Option<(usize, usize)> = None;
        for (pos, (key, _)) in self.book.iter().enumerate() {
            let d = (0..n)
                .filter(|&i| key[2 * i] != target[2 * i] || key[2 * i + 1] != target[2 * i + 1])
                .count();
            if best.is_none_or(|(bd, _)| d < bd) {
                best = Some((d, pos));
                if d == 0 {
                    break;
                }
            }
        }
        let (errors, pos) = best.expect("codebook contains the zero word");
        let (key, idx) = &self.book[pos];
        let m = self.code.modulus();
        let symbols = (0..n)
            .map(|i| DualScalar::from_parts(key[2 * i] as i64, key[2 * i + 1] as i64, m))
            .collect();
        let (m1, m2) = self.code.messages_of(*idx);
        Ok(Decoded {
            codeword: Codeword::new(symbols),
            m1,
            m2,
            errors,
        })
    }
}

/// Every first type code ⟨fg⟩ + v⟨f⟩ with f | fg | x^n − 1, one per distinct
/// codeword set. Ordered by fg then f, both in divisor order.
pub fn enumerate_first_type(theta: Automorphism, n: usize) -> Result<Vec<SkewCyclicCode>> {
    check_skew(theta)?;
    let e = theta.order();
    if n == 0 || n % e as usize != 0 {
        return Err(Error::UseCoprimeCase { e, n });
    }
    let divisors = factor_xn_minus_1(theta.modulus(), n).divisors();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for fg in &divisors {
        for f in divisors.iter().filter(|f| f.divides(fg)) {
            let code = build_code(theta, n, fg, f)?;
            let fingerprint = submodule_closure(
                theta,
                n,
                &code
                    .generator_vectors()
                    .iter()
                    .map(|v| Codeword::from_vector(v, theta.modulus()))
                    .collect::<Vec<_>>(),
            );
            if seen.insert(fingerprint) {
                out.push(code);
            }
        }
    }
    Ok(out)
}

/// ∏ (r_i + 1)² over the factorization x^n − 1 = ∏ p_i^{r_i}, for e ∤ n.
pub fn count_codes(theta: Automorphism, n: usize) -> Result<u64> {
    check_skew(theta)?;
    let e = theta.order();
    if n == 0 || n % e as usize == 0 {
        return Err(Error::UseDividesCase { e, n });
    }
    let fac = factor_xn_minus_1(theta.modulus(), n);
    Ok(fac
        .multiplicities()
        .iter()
        .map(|&r| (r as u64 + 1).pow(2))
        .product())
}

/// Brute-force count for e ∤ n: every pair of cyclic codes C₁ = ⟨d₁⟩,
/// C₂ = ⟨d₂⟩ over F_p gives the subspace C₁ ⊕ vC₂; those closed under the
/// skew shift are kept and counted up to equality.
pub fn count_codes_by_enumeration(theta: Automorphism, n: usize) -> Result<usize> {
    check_skew(theta)?;
    let e = theta.order();
    if n == 0 || n % e as usize == 0 {
        return Err(Error::UseDividesCase { e, n });
    }
    let m = theta.modulus();
    let divisors = factor_xn_minus_1(m, n).divisors();
    let mut seen = HashSet::new();
    for d1 in &divisors {
        for d2 in &divisors {
            let mut rows = Vec::new();
            for r in generator_rows(d1, n) {
                let mut v = r;
                v.resize(2 * n, 0);
                rows.push(v);
            }
            for r in generator_rows(d2, n) {
                let mut v = vec![0; n];
                v.extend(r);
                rows.push(v);
            }
            let space = Subspace::span(2 * n, m, &rows);
            if is_shift_closed(theta, &space) {
                seen.insert(space);
            }
        }
    }
    Ok(seen.len())
}

/// d = gcd(n, e) for e ∤ n, after checking on `samples` random codes that
/// plain rotation by d maps each code into itself.
pub fn quasi_cyclic_index(theta: Automorphism, n: usize, samples: usize, seed: u64) -> Result<usize> {
    check_skew(theta)?;
    let e = theta.order() as usize;
    if n == 0 || n % e == 0 {
        return Err(Error::UseDividesCase { e: e as u32, n });
    }
    let d = gcd(n, e);
    let m = theta.modulus();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let gens: Vec<Codeword> = (0..rng.gen_range(1..=2))
            .map(|_| {
                let v: Vec<u32> = (0..2 * n).map(|_| rng.gen_range(0..m.get())).collect();
                Codeword::from_vector(&v, m)
            })
            .collect();
        let code = submodule_closure(theta, n, &gens);
        if !code.basis().iter().all(|v| code.contains(&rotate_vector(v, d))) {
            return Err(Error::QuasiCyclicViolation(d));
        }
    }
    Ok(d)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// How the cross term of a T_n product is formed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossTerm {
    /// (a + bv)(c + dv) = ac + (ad + b·twist(c, α⁻¹))v, the correct rule.
    Twisted,
    /// Drops the twist; used to check that the round trip can fail.
    Untwisted,
}

/// ψ: R_n → T_n, f₁ + v·f₂ ↦ f₁ + twist(f₂, α⁻¹)·v, as a pair (unit, right v-part).
pub fn psi(theta: Automorphism, v: &[u32]) -> (FpPoly, FpPoly) {
    let m = theta.modulus();
    let (a, b) = split(v);
    (
        FpPoly::new(a, m),
        FpPoly::new(b, m).twist_raw(theta.alpha_inv().value()),
    )
}

/// ψ⁻¹: T_n → R_n.
pub fn psi_inverse(theta: Automorphism, n: usize, t: &(FpPoly, FpPoly)) -> Vec<u32> {
    let mut v = t.0.reduce_cyclic(n).to_padded(n);
    v.extend(
        t.1.twist_raw(theta.alpha().value())
            .reduce_cyclic(n)
            .to_padded(n),
    );
    v
}

fn tn_mul(theta: Automorphism, n: usize, x: &(FpPoly, FpPoly), y: &(FpPoly, FpPoly), cross: CrossTerm) -> (FpPoly, FpPoly) {
    let c = match cross {
        CrossTerm::Twisted => y.0.twist_raw(theta.alpha_inv().value()),
        CrossTerm::Untwisted => y.0.clone(),
    };
    let unit = (&x.0 * &y.0).reduce_cyclic(n);
    let vpart = (&(&x.0 * &y.1) + &(&x.1 * &c)).reduce_cyclic(n);
    (unit, vpart)
}

/// Multiplies random pairs of codewords in R_n and in T_n and checks that ψ
/// carries one product to the other, and that ψ⁻¹ undoes ψ.
pub fn psi_roundtrip_with(code: &SkewCyclicCode, trials: usize, seed: u64, cross: CrossTerm) -> bool {
    let theta = code.theta;
    let n = code.n;
    let m = code.modulus();
    let ring = match crate::quotient::QuotientRing::new(theta, n) {
        Ok(r) => r,
        Err(_) => return false,
    };
    let rows = code.generator_vectors();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let random_word = |rng: &mut ChaCha8Rng| {
        let coeffs: Vec<u32> = (0..rows.len()).map(|_| rng.gen_range(0..m.get())).collect();
        combine(&rows, &coeffs, m, 2 * n)
    };
    for _ in 0..trials {
        let u = random_word(&mut rng);
        let w = random_word(&mut rng);
        let (pu, pw) = (psi(theta, &u), psi(theta, &w));
        if psi_inverse(theta, n, &pu) != u {
            return false;
        }
        let lhs = psi(theta, &ring.mul(&u, &w));
        let rhs = tn_mul(theta, n, &pu, &pw, cross);
        let norm = |t: (FpPoly, FpPoly)| (t.0.reduce_cyclic(n), t.1.reduce_cyclic(n));
        if norm(lhs) != norm(rhs) {
            return false;
        }
    }
    true
}

pub fn psi_roundtrip(code: &SkewCyclicCode, trials: usize, seed: u64) -> bool {
    psi_roundtrip_with(code, trials, seed, CrossTerm::Twisted)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimulationReport {
    pub trials: usize,
    pub successes: usize,
    pub errors_per_trial: usize,
    pub burst: bool,
}

impl SimulationReport {
    pub fn rate(&self) -> f64 {
        if self.trials == 0 {
            1.0
        } else {
            self.successes as f64 / self.trials as f64
        }
    }
}

/// Encodes random messages, corrupts `k` symbols (distinct random positions,
/// or a cyclic run of `k` positions when `burst`), decodes, and counts the
/// trials whose messages come back intact.
pub fn simulate(
    code: &SkewCyclicCode,
    k: usize,
    trials: usize,
    burst: bool,
    seed: u64,
) -> Result<SimulationReport> {
    let n = code.n;
    if k >= n {
        return Err(Error::InvalidArgument(format!(
            "error count {k} must be smaller than the length {n}"
        )));
    }
    let decoder = code.decoder()?;
    let m = code.modulus();
    let p = m.get();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut successes = 0;
    for _ in 0..trials {
        let m1: Vec<u32> = (0..code.dim_unit()).map(|_| rng.gen_range(0..p)).collect();
        let m2: Vec<u32> = (0..code.dim_v()).map(|_| rng.gen_range(0..p)).collect();
        let sent = code.encode(&m1, &m2)?;
        let positions: Vec<usize> = if burst {
            let start = rng.gen_range(0..n);
            (0..k).map(|i| (start + i) % n).collect()
        } else {
            sample(&mut rng, n, k).into_vec()
        };
        let mut symbols = sent.symbols().to_vec();
        for pos in positions {
            // add a nonzero error symbol
            let e = loop {
                let e = DualScalar::from_parts(rng.gen_range(0..p) as i64, rng.gen_range(0..p) as i64, m);
                if !e.is_zero() {
                    break e;
                }
            };
            symbols[pos] = symbols[pos] + e;
        }
        let out = decoder.decode(&Codeword::new(symbols))?;
        if out.m1 == m1 && out.m2 == m2 {
            successes += 1;
        }
    }
    Ok(SimulationReport {
        trials,
        successes,
        errors_per_trial: k,
        burst,
    })
}
