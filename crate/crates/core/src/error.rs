use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("element is not invertible")]
    NotInvertible,
    #[error("operands live over different moduli ({0} vs {1})")]
    IncompatibleModuli(u32, u32),
    #[error("operands live in different skew rings")]
    IncompatibleRings,
    #[error("expected a unit of F_p, got 0")]
    NotAUnit,
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    Undefined,
    #[error("polynomial must have degree at least 1")]
    DegreeTooSmall,
    #[error("leading coefficient of the divisor is not a unit of F_p + vF_p")]
    LeadingCoeffNotUnit,
    #[error("a skew ring needs an odd prime p (got {0})")]
    EvenCharacteristic(u32),
    #[error("alpha = {0} gives the identity automorphism; a non-trivial twist is required")]
    IdentityAutomorphism(u32),
    #[error("ideal descriptor has the wrong variant for this operation")]
    WrongVariant,
    #[error("invalid ideal: {0}")]
    InvalidIdeal(String),
    #[error("order {e} of theta does not divide n = {n}; use the coprime-shift case")]
    UseCoprimeCase { e: u32, n: usize },
    #[error("order {e} of theta divides n = {n}; use the divides case")]
    UseDividesCase { e: u32, n: usize },
    #[error("f does not divide fg, or fg does not divide x^n - 1")]
    NotADivisorChain,
    #[error("message length {got} does not match dimension {expected}")]
    BadMessageLength { expected: usize, got: usize },
    #[error("received word has length {got}, code length is {expected}")]
    BadWordLength { expected: usize, got: usize },
    #[error("exhaustive search over {0} codewords exceeds the cap")]
    TooLarge(u128),
    #[error("the zero code has no nonzero codewords")]
    NoNonzeroWords,
    #[error("quasi-cyclic check failed: rotation by {0} left the code")]
    QuasiCyclicViolation(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
