//! JSON records for codes, ideal descriptors, factorizations and
//! classification verdicts. Polynomials are coefficient arrays, low degree
//! first.

use serde::{Deserialize, Serialize};

use crate::code::{CodeMatrices, SkewCyclicCode};
use crate::error::{Error, Result};
use crate::field::{Automorphism, PrimeModulus};
use crate::ideal::IdealDescriptor;
use crate::poly::{FactoredPoly, FpPoly};
use crate::skew::SkewPoly;

pub fn coeffs(f: &FpPoly) -> Vec<u32> {
    f.coeffs().to_vec()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorRecord {
    pub poly: Vec<u32>,
    pub text: String,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationRecord {
    pub p: u32,
    pub n: usize,
    pub unit: u32,
    pub factors: Vec<FactorRecord>,
    pub divisor_count: u64,
}

impl FactorizationRecord {
    pub fn new(n: usize, fac: &FactoredPoly) -> Self {
        Self {
            p: fac.modulus().get(),
            n,
            unit: fac.unit.value(),
            factors: fac
                .factors
                .iter()
                .map(|(g, r)| FactorRecord {
                    poly: coeffs(g),
                    text: g.to_string(),
                    multiplicity: *r,
                })
                .collect(),
            divisor_count: fac.divisor_count(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRecord {
    pub p: u32,
    pub alpha: u32,
    pub n: usize,
    pub case: String,
    pub fg: Vec<u32>,
    pub f: Vec<u32>,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub min_distance: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub min_distance_fp: Option<usize>,
    #[serde(rename = "G1")]
    pub g1: Vec<Vec<u32>>,
    #[serde(rename = "G2")]
    pub g2: Vec<Vec<u32>>,
    #[serde(rename = "H1")]
    pub h1: Vec<Vec<u32>>,
    #[serde(rename = "H2")]
    pub h2: Vec<Vec<u32>>,
}

impl CodeRecord {
    pub fn new(code: &SkewCyclicCode, distances: Option<(usize, usize)>) -> Self {
        let CodeMatrices { g1, g2, h1, h2 } = code.matrices();
        let t = code.theta();
        Self {
            p: t.modulus().get(),
            alpha: t.alpha().value(),
            n: code.n(),
            case: code.case().label().to_string(),
            fg: coeffs(code.fg()),
            f: coeffs(code.f()),
            dim: code.dim(),
            min_distance: distances.map(|d| d.0),
            min_distance_fp: distances.map(|d| d.1),
            g1,
            g2,
            h1,
            h2,
        }
    }
}

/// A polynomial given either as a coefficient array or as text.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyInput {
    Coeffs(Vec<i64>),
    Text(String),
}

impl PolyInput {
    pub fn to_poly(&self, m: PrimeModulus) -> Result<FpPoly> {
        match self {
            PolyInput::Coeffs(c) => Ok(FpPoly::from_signed(c, m)),
            PolyInput::Text(s) => FpPoly::parse(s, m),
        }
    }
}

/// A skew polynomial f1 + v·f2, as an object or as text `(f1) + v*(f2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SkewInput {
    Parts {
        f1: PolyInput,
        #[serde(default = "zero_input")]
        f2: PolyInput,
    },
    Text(String),
}

fn zero_input() -> PolyInput {
    PolyInput::Coeffs(Vec::new())
}

impl SkewInput {
    pub fn to_skew(&self, theta: Automorphism) -> Result<SkewPoly> {
        let m = theta.modulus();
        match self {
            SkewInput::Parts { f1, f2 } => SkewPoly::new(f1.to_poly(m)?, f2.to_poly(m)?, theta),
            SkewInput::Text(s) => SkewPoly::parse(s, theta),
        }
    }

    pub fn from_skew(f: &SkewPoly) -> Self {
        SkewInput::Parts {
            f1: PolyInput::Coeffs(f.f1().coeffs().iter().map(|&c| c as i64).collect()),
            f2: PolyInput::Coeffs(f.f2().coeffs().iter().map(|&c| c as i64).collect()),
        }
    }
}

/// Wire form of [`IdealDescriptor`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescriptorRecord {
    #[serde(rename = "type")]
    pub kind: String,
    pub p: u32,
    pub alpha: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gen1: Option<PolyInput>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gen2: Option<PolyInput>,
    /// Generator of R·f, or the v-part multiplier f2 of vF_p[x]·f2 + R·g.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub f: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub g: Option<SkewInput>,
}

fn missing(field: &str, kind: &str) -> Error {
    Error::Parse(format!("descriptor of type {kind} needs field \"{field}\""))
}

fn value_to<T: serde::de::DeserializeOwned>(v: &serde_json::Value) -> Result<T> {
    serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))
}

impl DescriptorRecord {
    pub fn parse(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn theta(&self) -> Result<Automorphism> {
        Automorphism::from_parts(self.p, self.alpha)
    }

    pub fn to_descriptor(&self) -> Result<IdealDescriptor> {
        let theta = self.theta()?;
        let m = theta.modulus();
        let kind = self.kind.as_str();
        match kind {
            "first" => {
                let a1 = self.gen1.as_ref().ok_or_else(|| missing("gen1", kind))?.to_poly(m)?;
                let a2 = self.gen2.as_ref().ok_or_else(|| missing("gen2", kind))?.to_poly(m)?;
                IdealDescriptor::first_type(a1, a2, theta)
            }
            "second_principal" => {
                let f: SkewInput = value_to(self.f.as_ref().ok_or_else(|| missing("f", kind))?)?;
                IdealDescriptor::principal(f.to_skew(theta)?)
            }
            "second_mixed" => {
                let f2: PolyInput = value_to(self.f.as_ref().ok_or_else(|| missing("f", kind))?)?;
                let g = self.g.as_ref().ok_or_else(|| missing("g", kind))?;
                IdealDescriptor::mixed(f2.to_poly(m)?, g.to_skew(theta)?)
            }
            other => Err(Error::Parse(format!(
                "unknown descriptor type \"{other}\" (expected first, second_principal or second_mixed)"
            ))),
        }
    }

    pub fn from_descriptor(d: &IdealDescriptor) -> Self {
        let t = d.theta();
        let base = |kind: &str| DescriptorRecord {
            kind: kind.to_string(),
            p: t.modulus().get(),
            alpha: t.alpha().value(),
            gen1: None,
            gen2: None,
            f: None,
            g: None,
        };
        let arr = |f: &FpPoly| PolyInput::Coeffs(f.coeffs().iter().map(|&c| c as i64).collect());
        match d {
            IdealDescriptor::FirstType { a1, a2, .. } => DescriptorRecord {
                gen1: Some(arr(a1)),
                gen2: Some(arr(a2)),
                ..base("first")
            },
            IdealDescriptor::SecondTypePrincipal { f } => DescriptorRecord {
                f: Some(serde_json::to_value(SkewInput::from_skew(f)).expect("plain data")),
                ..base("second_principal")
            },
            IdealDescriptor::SecondTypeMixed { f2, g } => DescriptorRecord {
                f: Some(serde_json::to_value(arr(f2)).expect("plain data")),
                g: Some(SkewInput::from_skew(g)),
                ..base("second_mixed")
            },
        }
    }

    /// The first type ideal ⟨fg⟩ + v⟨f⟩ underlying a code.
    pub fn for_code(code: &SkewCyclicCode) -> Self {
        let t = code.theta();
        Self::from_descriptor(&IdealDescriptor::FirstType {
            a1: code.fg().clone(),
            a2: code.f().clone(),
            theta: t,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyRecord {
    #[serde(rename = "type")]
    pub kind: String,
    pub ideal: String,
    pub gen1: Vec<u32>,
    pub gen2: Vec<u32>,
    pub proper: bool,
    pub maximal: bool,
    pub prime: bool,
    pub primary: bool,
    pub form: Option<String>,
    pub witness: String,
}

impl ClassifyRecord {
    pub fn new(d: &IdealDescriptor) -> Self {
        let (g1, g2) = d.projections();
        let kind = d.classify_type();
        let v_g2 = SkewPoly::from_v_part(g2.clone(), d.theta());
        let witness = match kind {
            crate::ideal::IdealType::First => format!("v*({g2}) lies in the ideal"),
            crate::ideal::IdealType::Second => format!("v*({g2}) does not lie in the ideal"),
        };
        debug_assert_eq!(d.contains(&v_g2), kind == crate::ideal::IdealType::First);
        let (primary, form) = d.is_primary();
        Self {
            kind: kind.label().to_string(),
            ideal: d.to_string(),
            gen1: coeffs(&g1),
            gen2: coeffs(&g2),
            proper: d.is_proper(),
            maximal: d.is_maximal(),
            prime: d.is_prime(),
            primary,
            form: form.map(|f| f.label().to_string()),
            witness,
        }
    }
}
