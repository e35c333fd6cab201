//! Structural subgroup computations over groups small enough for a full
//! multiplication table.

pub mod coset;
pub mod lattice;
pub mod primes;
pub mod setops;
pub mod special;
pub mod subgroup;

pub use coset::{core_of_subgroup, coset_action, induced_block_action, quotient_group, CosetActionRecord, Quotient};
pub use lattice::{all_subgroups, lattice, maximal_subgroups, Lattice};
pub use primes::{factorize, is_prime, is_square_free, multiplicative_order, p_part, PrimeSet};
pub use special::{
    fitting_subgroup, frattini_subgroup, group_predicates, hall_subgroup, hall_subgroups, p_core, sylow_subgroup,
    GroupPredicates,
};
pub use subgroup::SubgroupHandle;
