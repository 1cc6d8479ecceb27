//! Partitions, compositions, permutations, tableaux and ribbons.

mod group;
mod partition;
mod perm;
mod ribbon;
mod tableau;

pub use group::{SymGroup, MAX_N};
pub use partition::{
    compositions, partition_index, partitions, Composition, Partition, PartitionStats,
};
pub use perm::{
    coset_representatives, longest_in_young, zeta_permutation, CosetMode, CosetSide, Permutation,
};
pub use ribbon::{ribbon_compatible, RibbonShape};
pub use tableau::{standard_tableaux, StandardTableau};

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}
