use alloc::string::String;
use core::fmt;

/// Errors shared across the crate. Failed *checks* are not errors; they
/// are reported through [`crate::verify::CheckReport`]. These variants
/// signal misuse or malformed data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Error {
    /// Series division requires a denominator with constant term ±1.
    NonUnitDenominator(i64),
    /// Reflection-group enumeration refused: order exceeds the bound.
    GroupTooLarge(u128),
    /// The enumerated length generating function disagrees with the
    /// exponent product, which can only be an internal bug.
    ExponentMismatch(String),
    /// Catalog parameters outside the supported desk-scale range.
    UnsupportedParams(String),
    /// The stored odd-root partition disagrees with the one computed from
    /// the hyperplane functional.
    PartitionMismatch(String),
    /// A lattice-condition violation: the weight is not integral for the
    /// factor it was handed to.
    NonIntegralWeight(String),
    /// Weyl dimension requested for a non-dominant weight.
    NonDominant(String),
    /// The census refuses subset spaces above 2^22.
    TooManySubsets(usize),
    /// A polynomial identity that is part of a type's contract failed.
    IdentityViolation(String),
    /// An exhaustively checked proposition failed; carries a counterexample.
    PropositionViolated(String),
    /// No embedding/parabolic reduction is defined for this family.
    NoEmbeddingDefined(String),
    /// A user catalog entry failed validation; names the failing invariant.
    InvariantViolation(String),
    /// Malformed input (algebra name, weight string, catalog file).
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonUnitDenominator(c) => {
                write!(f, "series division needs a unit constant term, got {c}")
            }
            Error::GroupTooLarge(n) => write!(f, "reflection group too large: order {n}"),
            Error::ExponentMismatch(s) => write!(f, "exponent product mismatch: {s}"),
            Error::UnsupportedParams(s) => write!(f, "unsupported parameters: {s}"),
            Error::PartitionMismatch(s) => write!(f, "odd-root partition mismatch: {s}"),
            Error::NonIntegralWeight(s) => write!(f, "non-integral weight: {s}"),
            Error::NonDominant(s) => write!(f, "weight is not dominant: {s}"),
            Error::TooManySubsets(n) => write!(f, "census over 2^{n} subsets refused"),
            Error::IdentityViolation(s) => write!(f, "identity violation: {s}"),
            Error::PropositionViolated(s) => write!(f, "proposition violated: {s}"),
            Error::NoEmbeddingDefined(s) => write!(f, "no embedding defined: {s}"),
            Error::InvariantViolation(s) => write!(f, "invariant violation: {s}"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
        }
    }
}
