//! Exact algebra over R = (F_p + vF_p)[x; θ] with v² = 0 and θ(v) = αv:
//! skew polynomial arithmetic, left ideals and their classification, and
//! skew cyclic codes with brute-force oracles for everything.

pub mod catalogue;
pub mod cli;
pub mod code;
pub mod error;
pub mod field;
pub mod ideal;
pub mod json;
pub mod linalg;
pub mod poly;
pub mod quotient;
pub mod skew;

pub use error::{Error, Result};
pub use field::{Automorphism, DualScalar, Fp, PrimeModulus};
pub use ideal::{IdealDescriptor, IdealType, PrimaryForm};
pub use poly::{FactoredPoly, FpPoly};
pub use skew::SkewPoly;
