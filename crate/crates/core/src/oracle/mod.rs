//! Independent brute-force counts from the permutation definition.

pub mod brute;
pub mod hurwitz;
pub mod perm;
pub mod sweep;

pub use brute::{brute_count, brute_count_spec, HypermapSpec, DEFAULT_CAP};
pub use hurwitz::{
    check_duality, check_mgk_hurwitz, hurwitz_strict, hurwitz_strict_exhaustive,
    hurwitz_strict_from, mgk_from_hurwitz,
};
pub use perm::{class_size, for_each_in_class, transitivity, Permutation};
pub use sweep::{hurwitz_suite, oracle_equivalence, partitions};
