//! Numerical semigroup analysis centered on the Wilf inequality
//! `nu * n >= c`.
//!
//! The crate is organized in four layers:
//!
//! * [`semigroup`] builds semigroups from generators and computes the
//!   classical invariants (multiplicity, Frobenius number, genus, Apery
//!   sets, pseudo-Frobenius numbers);
//! * [`intervals`] decomposes the segment below the conductor into
//!   length-m intervals and derives the eta statistics that turn the Wilf
//!   inequality into an exact accounting identity over the Apery set;
//! * [`conditions`] evaluates a family of sufficient conditions for the
//!   inequality, all in cleared-denominator integer arithmetic;
//! * [`tree`] enumerates every numerical semigroup up to a genus bound by
//!   walking the semigroup tree, with partition support for running
//!   disjoint subtrees in parallel.
//!
//! [`bruteforce`] holds intentionally naive reference implementations
//! that the test suites compare against.

pub mod bruteforce;
pub mod conditions;
pub mod error;
pub mod intervals;
pub mod semigroup;
pub mod tree;

pub use conditions::{evaluate_conditions, ConditionReport};
pub use error::{Error, Result};
pub use intervals::IntervalProfile;
pub use semigroup::{sylvester_frobenius, AperyDecomposition, GeneratorSet, NumericalSemigroup};
pub use tree::{EnumerationConfig, EnumerationSummary, TreeNode};

#[cfg(test)]
mod tests {
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn core_types_are_shareable_across_threads() {
        assert_send_sync::<crate::NumericalSemigroup>();
        assert_send_sync::<crate::TreeNode>();
        assert_send_sync::<crate::EnumerationConfig>();
    }
}
