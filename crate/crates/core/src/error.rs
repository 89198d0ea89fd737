//! Error types shared across the crate.

use crate::rational::Rational;
use thiserror::Error;

/// Everything that can go wrong when building instances or evaluating.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A denominator factor `x_i + k` is zero; the instance is outside the
    /// identity's domain. `knot_index` is 0 for the single-pole identity.
    #[error("pole at k = {k}: knot x_{knot_index} = {knot} satisfies x + k = 0")]
    Pole {
        knot_index: usize,
        knot: Rational,
        k: u32,
    },

    /// An evaluation point hits a pole of a residue expansion.
    #[error("evaluation point {point} hits the pole of knot x_{knot_index}")]
    EvalPole { knot_index: usize, point: Rational },

    /// Two knots are exactly equal.
    #[error("duplicate knot {value} at positions {first} and {second}")]
    DuplicateKnot {
        first: usize,
        second: usize,
        value: Rational,
    },

    /// A knot set must contain at least one knot.
    #[error("knot set is empty")]
    EmptyKnots,

    /// Value list length does not match the knot count.
    #[error("expected {expected} values for {expected} knots, got {got}")]
    ValueCountMismatch { expected: usize, got: usize },

    /// The stability lab requires degree(f) <= n so the exact reference is
    /// pinned by the identity itself.
    #[error("degree {degree} exceeds the bound n = {bound}")]
    DegreeTooHigh { degree: usize, bound: u32 },

    /// The exact value is zero, so relative errors are undefined.
    #[error("exact value is zero; relative error undefined")]
    ZeroExactValue,

    /// A float intermediate left the binary64 range.
    #[error("intermediate overflowed binary64 at term k = {k}")]
    OverflowToInfinity { k: u32 },

    /// Rejection sampling exhausted its attempt budget.
    #[error("instance sampling failed after {attempts} attempts")]
    SamplingExhausted { attempts: u32 },

    /// Malformed rational text.
    #[error("cannot parse rational from {input:?}: expected \"p\" or \"p/q\" with q > 0")]
    ParseRational { input: String },

    /// Malformed polynomial text.
    #[error("cannot parse polynomial coefficient {index}: {source}")]
    ParsePolynomial { index: usize, source: Box<Error> },
}

pub type Result<T> = std::result::Result<T, Error>;
