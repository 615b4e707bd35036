//! Exact counting of permutations that descend in some consecutive blocks, ascend in
//! the others, and have no fixed points.
//!
//! A problem instance is a [`BlockSpec`]: block sizes `(a₁, …, aₖ)` and the set `S`
//! of descending blocks. The number of `(A, S)`-derangements is available five ways:
//!
//! - [`counters::count_sum`]: a closed alternating sum of multinomials,
//! - [`counters::count_recursion`]: a memoized recursion that peels fixed points off
//!   one block at a time,
//! - [`series::count_genfunc`]: a coefficient of a truncated multivariate series,
//! - [`oracle::count_derangements_oracle`]: direct enumeration,
//! - [`ornaments::count_satisfactory`]: counting colored cycle multisets.
//!
//! [`lambda`] and the weighted scans in [`oracle`] cover the cycle-weight identities
//! linking these counts to sums over the whole symmetric group.
//!
//! Exhaustive scans run on rayon when the `parallel` feature (default) is enabled.

pub mod blocks;
pub mod counters;
pub mod density;
pub mod error;
pub mod lambda;
pub mod oracle;
pub mod ornaments;
pub mod par;
pub mod perm;
pub mod series;
pub mod verify;

pub use blocks::BlockSpec;
pub use error::{Error, Result};
pub use oracle::Limits;
pub use par::Execution;
pub use perm::Permutation;

/// The `((8,10),{1})`-permutation used as a worked example throughout the tests and
/// by the `fixture figure1` command.
pub fn figure1_permutation() -> (BlockSpec, Permutation) {
    let spec = BlockSpec::new(vec![8, 10], [1]).expect("valid spec");
    let p = Permutation::new(vec![18, 17, 15, 14, 13, 12, 11, 9, 1, 2, 3, 4, 5, 6, 7, 8, 10, 16])
        .expect("valid permutation");
    (spec, p)
}
