//! Exact induced characters of the symmetric group.
//!
//! Every Young subgroup `S_λ1 × … × S_λp` of `S_n` induces a permutation
//! character `φ^λ` from its trivial character. Its value on the class `ρ`
//! counts the ordered set partitions of shape `λ` fixed blockwise by any
//! element of `ρ`. This crate evaluates `φ^λ_ρ` two ways (a quotient of
//! orders and a sum of multinomial products over distributions) and checks
//! both against brute-force enumeration at small `n`.
//!
//! All arithmetic is exact; big values are [`num_bigint::BigUint`].

pub mod caput;
pub mod error;
pub mod induced;
pub mod oracle;
pub mod partitions;
pub mod sym_group;
pub mod verify;
pub mod young;

pub use caput::{caput_combinations, caput_combinations_all_sizes, caput_variations, CaputAnswer, CaputQuery};
pub use error::{Error, Result};
pub use induced::{
    character_matrix, character_matrix_with, induced_value_multinomial, induced_value_quotient, CharacterMatrix,
};
pub use partitions::{cycle_type_to_partition, enumerate_partitions, partition_to_cycle_type, CycleType, Partition};
pub use sym_group::{binomial, class_size, classes, factorial, group_order, ClassInfo};
pub use young::{enumerate_distributions, intersection_count, young_order, Distribution, YoungSubgroup};
