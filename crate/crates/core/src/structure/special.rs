//! Sylow, Hall, Fitting and Frattini subgroups, and whole-group predicates.

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::GroupRef;

use super::lattice::lattice;
use super::primes::{is_prime, p_part, PrimeSet};
use super::setops;
use super::subgroup::SubgroupHandle;

/// First lattice entry of the given order: the one with the lexicographically
/// least element list.
fn first_of_order(g: &GroupRef, order: usize) -> Result<Option<SubgroupHandle>> {
    let lat = lattice(g)?;
    Ok((0..lat.len())
        .find(|&i| lat.order(i) == order)
        .map(|i| lat.handle(g, i)))
}

pub fn sylow_subgroup(g: &GroupRef, p: usize) -> Result<SubgroupHandle> {
    if !is_prime(p) {
        return Err(Error::InvalidPermutation(format!("{} is not prime", p)));
    }
    let target = p_part(g.order(), p);
    first_of_order(g, target)?.ok_or_else(|| Error::Internal(format!("no Sylow {}-subgroup", p)))
}

/// Sylow p-subgroup of a subgroup X of g, chosen deterministically.
pub fn sylow_within(g: &GroupRef, x: &SubgroupHandle, p: usize) -> Result<SubgroupHandle> {
    let lat = lattice(g)?;
    let target = p_part(x.order(), p);
    let found = lat.within(x.set()).find(|&i| lat.order(i) == target);
    found
        .map(|i| lat.handle(g, i))
        .ok_or_else(|| Error::Internal(format!("no Sylow {}-subgroup", p)))
}

pub fn hall_subgroup(g: &GroupRef, pi: &PrimeSet) -> Result<SubgroupHandle> {
    if !group_predicates(g)?.is_solvable {
        return Err(Error::NotSolvable);
    }
    let target = pi.part_of(g.order());
    first_of_order(g, target)?.ok_or_else(|| Error::Internal(format!("solvable group without Hall {}-subgroup", pi)))
}

/// All Hall π-subgroups of g (every subgroup of order |G|_π).
pub fn hall_subgroups(g: &GroupRef, pi: &PrimeSet) -> Result<Vec<SubgroupHandle>> {
    let lat = lattice(g)?;
    let target = pi.part_of(g.order());
    Ok((0..lat.len())
        .filter(|&i| lat.order(i) == target)
        .map(|i| lat.handle(g, i))
        .collect())
}

/// O_p(G): the intersection of all Sylow p-subgroups.
pub fn p_core(g: &GroupRef, p: usize) -> Result<SubgroupHandle> {
    let s = sylow_subgroup(g, p)?;
    let t = g.table()?;
    let core = setops::core_in(t, s.set(), &ElementSet::full(g.order()));
    let gens = setops::generating_set(t, &core);
    Ok(SubgroupHandle::from_parts(g.clone(), core, gens))
}

/// F(G) as the product of the p-cores.
pub fn fitting_subgroup(g: &GroupRef) -> Result<SubgroupHandle> {
    let mut f = SubgroupHandle::trivial(g);
    for p in PrimeSet::of(g.order()).iter() {
        f = f.join(&p_core(g, p)?);
    }
    Ok(f)
}

/// Φ(G): the intersection of all maximal subgroups (G itself when trivial).
pub fn frattini_subgroup(g: &GroupRef) -> Result<SubgroupHandle> {
    let lat = lattice(g)?;
    let mut set = ElementSet::full(g.order());
    for &m in lat.maximal() {
        set.intersect_with(lat.set(m));
    }
    let i = lat.find(&set).expect("intersection of subgroups is a subgroup");
    Ok(lat.handle(g, i))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupPredicates {
    pub order: usize,
    pub is_abelian: bool,
    pub is_elementary_abelian: bool,
    pub is_nilpotent: bool,
    pub is_solvable: bool,
    pub is_simple: bool,
    pub prime_set: PrimeSet,
}

pub fn group_predicates(g: &GroupRef) -> Result<GroupPredicates> {
    let t = g.table()?;
    Ok(set_predicates(t, &ElementSet::full(g.order())))
}

/// Predicates of a subgroup given as an element set.
pub fn set_predicates(t: &crate::group::Table, set: &ElementSet) -> GroupPredicates {
    let order = set.count();
    GroupPredicates {
        order,
        is_abelian: setops::is_abelian(t, set),
        is_elementary_abelian: order > 1 && setops::is_elementary_abelian(t, set),
        is_nilpotent: setops::is_nilpotent(t, set),
        is_solvable: setops::is_solvable(t, set),
        is_simple: setops::is_simple(t, set),
        prime_set: PrimeSet::of(order),
    }
}
