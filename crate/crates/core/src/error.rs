//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Everything that can go wrong when building or analyzing a semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A generating set must contain at least one element.
    #[error("generator list is empty")]
    EmptyGenerators,

    /// Generators are elements of a numerical semigroup, hence positive.
    #[error("generator {0} is not a positive integer")]
    ZeroGenerator(i64),

    /// Outside the range this crate commits to handling without overflow
    /// (see [`crate::semigroup::MAX_GENERATOR`]), or below the minimum a
    /// specific formula requires.
    #[error("generator {0} is outside the supported range")]
    GeneratorOutOfRange(i64),

    /// A set with gcd > 1 generates a monoid with infinite complement,
    /// which is not a numerical semigroup.
    #[error("generators share common factor {0}; the complement would be infinite")]
    NonCoprime(i64),

    /// Apery sets are only defined with respect to a nonzero element of
    /// the semigroup.
    #[error("{0} is not a nonzero element of the semigroup")]
    NotAnElement(i64),

    /// The operation degenerates on the full semigroup of natural numbers.
    #[error("operation is undefined for the full semigroup N")]
    FullSemigroup,

    /// The requested alpha index lies outside the meaningful window.
    #[error("alpha = {alpha} is outside the valid range {lo}..={hi}")]
    AlphaOutOfRange { alpha: i64, lo: i64, hi: i64 },

    /// An Apery element index larger than m - 1 was requested.
    #[error("Apery index {index} is out of range for multiplicity {m}")]
    IndexOutOfRange { index: usize, m: i64 },

    /// Genus-bounded enumeration refuses silly bounds up front.
    #[error("genus bound {0} exceeds the supported maximum of {max}", max = crate::tree::MAX_GENUS)]
    GenusBoundTooLarge(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
