use std::fmt;

/// Everything that can go wrong in field construction, row builders, and
/// claim checkers. Checkers distinguish a violated hypothesis (the claim says
/// nothing there) from a wrong residue class (the claim is about other primes)
/// so scan reports can separate vacuous cases from evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Modulus is not an odd prime.
    NotOddPrime(u64),
    /// Modulus is too large for the fast product path (needs p < 2^31).
    PrimeTooLarge(u64),
    /// c ≡ 0 (mod p) but the operation needs c to be invertible.
    NonInvertibleC { c: i64, p: u64 },
    /// Coefficient index outside the row.
    IndexOutOfRange { k: i64, max_abs: u64 },
    /// The claim only speaks about primes in another residue class.
    WrongResidueClass { p: u64, needed: &'static str },
    /// Requested size exceeds a documented guard.
    BoundExceeded { value: u64, bound: u64 },
    /// The claim's hypothesis fails at these parameters.
    HypothesisViolated { p: u64, hypothesis: &'static str },
    /// The predictor does not cover this prime.
    UncoveredPrime(u64),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::NotOddPrime(n) => write!(f, "{n} is not an odd prime"),
            Error::PrimeTooLarge(n) => write!(f, "{n} exceeds the supported modulus bound 2^31"),
            Error::NonInvertibleC { c, p } => write!(f, "c = {c} is not invertible mod {p}"),
            Error::IndexOutOfRange { k, max_abs } => {
                write!(f, "index {k} outside |k| <= {max_abs}")
            }
            Error::WrongResidueClass { p, needed } => {
                write!(f, "p = {p} is not {needed}")
            }
            Error::BoundExceeded { value, bound } => {
                write!(f, "{value} exceeds the supported bound {bound}")
            }
            Error::HypothesisViolated { p, hypothesis } => {
                write!(f, "hypothesis {hypothesis} fails at p = {p}")
            }
            Error::UncoveredPrime(p) => write!(f, "p = {p} is not covered"),
        }
    }
}

impl std::error::Error for Error {}
