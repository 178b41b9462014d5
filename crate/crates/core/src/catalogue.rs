//! Published reference values for the length-4 codes over F_3 + vF_3 and the
//! worked example code, kept next to the computed values so the two can be
//! compared.

use crate::code::{build_code, enumerate_first_type, SkewCyclicCode};
use crate::error::Result;
use crate::field::Automorphism;
use crate::poly::FpPoly;

/// One published entry: label plus (fg, f) in product notation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogueEntry {
    pub label: &'static str,
    pub fg: &'static str,
    pub f: &'static str,
}

const fn entry(label: &'static str, fg: &'static str, f: &'static str) -> CatalogueEntry {
    CatalogueEntry { label, fg, f }
}

/// The 24 published first type codes of length 4 over F_3 + vF_3.
///
/// C20 is printed as ⟨x^4 − 1⟩ + v⟨x + 1⟩, a repeat of C18; it is read here
/// as ⟨x^4 − 1⟩ + v⟨x + 2⟩, the only pair of that shape otherwise missing.
pub const LENGTH4_F3: [CatalogueEntry; 24] = [
    entry("C1", "1", "1"),
    entry("C2", "x+2", "1"),
    entry("C3", "x+1", "1"),
    entry("C4", "x^2+1", "1"),
    entry("C5", "x+2", "x+2"),
    entry("C6", "x+1", "x+1"),
    entry("C7", "x^2+1", "x^2+1"),
    entry("C8", "(x+1)(x^2+1)", "1"),
    entry("C9", "(x+1)(x+2)", "1"),
    entry("C10", "(x+2)(x^2+1)", "1"),
    entry("C11", "(x+1)(x^2+1)", "x+1"),
    entry("C12", "(x+2)(x+1)", "x+1"),
    entry("C13", "(x+2)(x^2+1)", "x+2"),
    entry("C14", "(x+1)(x+2)", "x+2"),
    entry("C15", "(x+2)(x^2+1)", "x^2+1"),
    entry("C16", "(x+1)(x^2+1)", "x^2+1"),
    entry("C17", "x^4-1", "1"),
    entry("C18", "x^4-1", "x+1"),
    entry("C19", "x^4-1", "x^2+1"),
    entry("C20", "x^4-1", "x+2"),
    entry("C21", "x^4-1", "(x+1)(x^2+1)"),
    entry("C22", "x^4-1", "(x^2+1)(x+2)"),
    entry("C23", "x^4-1", "(x+1)(x+2)"),
    entry("C24", "x^4-1", "x^4-1"),
];

/// Published minimum distance of the worked example ⟨(x+2)(x^2+1)⟩ + v⟨x+2⟩.
pub const CLAIMED_EXAMPLE_DISTANCE: usize = 4;

/// Published single-row H2 of the worked example.
pub const CLAIMED_EXAMPLE_H2: [u32; 4] = [1, 2, 2, 1];

/// Published number of first type codes of length 6 over F_5 + vF_5.
pub const CLAIMED_LENGTH6_F5_COUNT: usize = 65;

/// θ(v) = 2v over F_3.
pub fn length4_theta() -> Automorphism {
    Automorphism::skew(3, 2).expect("2 has order 2 mod 3")
}

/// The worked example ⟨(x+2)(x^2+1)⟩ + v⟨x+2⟩ of length 4.
pub fn example_code() -> SkewCyclicCode {
    let t = length4_theta();
    let m = t.modulus();
    build_code(
        t,
        4,
        &FpPoly::parse("(x+2)(x^2+1)", m).expect("literal"),
        &FpPoly::parse("x+2", m).expect("literal"),
    )
    .expect("valid divisor chain")
}

impl CatalogueEntry {
    pub fn code(&self) -> Result<SkewCyclicCode> {
        let t = length4_theta();
        let m = t.modulus();
        build_code(t, 4, &FpPoly::parse(self.fg, m)?, &FpPoly::parse(self.f, m)?)
    }
}

/// Computed code matched against the published list.
#[derive(Debug, Clone)]
pub struct CatalogueMatch {
    pub code: SkewCyclicCode,
    /// `None` for codes missing from the published list.
    pub label: Option<&'static str>,
}

/// Every first type code of length 4 over F_3 + vF_3, each tagged with its
/// published label when it has one.
pub fn match_length4() -> Result<Vec<CatalogueMatch>> {
    let published: Vec<(SkewCyclicCode, &'static str)> = LENGTH4_F3
        .iter()
        .map(|e| e.code().map(|c| (c, e.label)))
        .collect::<Result<_>>()?;
    Ok(enumerate_first_type(length4_theta(), 4)?
        .into_iter()
        .map(|code| {
            let label = published
                .iter()
                .find(|(c, _)| c.span() == code.span())
                .map(|(_, l)| *l);
            CatalogueMatch { code, label }
        })
        .collect())
}
