//! Finite permutation groups and their minimally transitive representations.
//!
//! A transitive action of `G` on the cosets `G:A` is minimally transitive when
//! no proper subgroup of `G` (modulo the kernel) is still transitive. This
//! crate computes subgroup lattices, cores, coset actions and the usual
//! solvable-group machinery, and on top of it decides minimal transitivity,
//! runs the reduction and splitting constructions, classifies degree `pq`
//! actions and enumerates small-degree censuses.

pub mod bitset;
pub mod catalog;
pub mod census;
pub mod cli;
pub mod error;
pub mod group;
pub mod perm;
pub mod relabel;
pub mod structure;
pub mod theory;
pub mod verify;

pub use error::{Error, Result};
pub use group::{GroupRef, Limits, OrbitSystem, PermGroup};
pub use perm::Permutation;
pub use structure::SubgroupHandle;
