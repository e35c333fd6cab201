use std::fmt;
use std::sync::Arc;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::{GroupRef, PermGroup};
use crate::perm::Permutation;

use super::setops;

/// A subgroup of a fixed parent group, identified by its element set within
/// the parent's closure.
#[derive(Clone)]
pub struct SubgroupHandle {
    parent: GroupRef,
    set: ElementSet,
    gens: Vec<usize>,
}

impl SubgroupHandle {
    /// Wraps a set already known to be a subgroup.
    pub(crate) fn from_parts(parent: GroupRef, set: ElementSet, gens: Vec<usize>) -> Self {
        debug_assert_eq!(set.universe(), parent.order());
        assert_eq!(
            parent.order() % set.count(),
            0,
            "subgroup order must divide the group order"
        );
        SubgroupHandle { parent, set, gens }
    }

    /// Validates that `set` is a subgroup of `parent`.
    pub fn from_set(parent: &GroupRef, set: ElementSet) -> Result<Self> {
        let t = parent.table()?;
        if set.universe() != parent.order() || !t.is_subgroup(&set) {
            return Err(Error::NotSubgroup);
        }
        let gens = setops::generating_set(t, &set);
        Ok(Self::from_parts(parent.clone(), set, gens))
    }

    /// The subgroup generated by the given elements, each of which must lie in `parent`.
    pub fn generated(parent: &GroupRef, perms: &[Permutation]) -> Result<Self> {
        let t = parent.table()?;
        let gens: Vec<usize> = perms
            .iter()
            .map(|p| parent.index_of(p).ok_or(Error::NotSubgroup))
            .collect::<Result<_>>()?;
        let set = t.closure(gens.iter().copied());
        Ok(Self::from_parts(parent.clone(), set, gens))
    }

    pub fn generated_by_indices(parent: &GroupRef, gens: &[usize]) -> Result<Self> {
        let t = parent.table()?;
        let set = t.closure(gens.iter().copied());
        Ok(Self::from_parts(parent.clone(), set, gens.to_vec()))
    }

    pub fn whole(parent: &GroupRef) -> Self {
        let gens = parent
            .generators()
            .iter()
            .filter_map(|g| parent.index_of(g))
            .filter(|&i| i != 0)
            .collect();
        Self::from_parts(parent.clone(), ElementSet::full(parent.order()), gens)
    }

    pub fn trivial(parent: &GroupRef) -> Self {
        Self::from_parts(parent.clone(), ElementSet::from_indices(parent.order(), [0]), vec![])
    }

    pub fn parent(&self) -> &GroupRef {
        &self.parent
    }

    pub fn set(&self) -> &ElementSet {
        &self.set
    }

    /// Element indices within the parent, in increasing order.
    pub fn indices(&self) -> Vec<usize> {
        self.set.to_vec()
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.gens
    }

    pub fn generators(&self) -> Vec<Permutation> {
        self.gens.iter().map(|&i| self.parent.element(i).clone()).collect()
    }

    pub fn elements(&self) -> Vec<Permutation> {
        self.set.iter().map(|i| self.parent.element(i).clone()).collect()
    }

    pub fn order(&self) -> usize {
        self.set.count()
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent.order()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.parent.index_of(p).is_some_and(|i| self.set.contains(i))
    }

    pub fn is_subgroup_of(&self, other: &SubgroupHandle) -> bool {
        self.same_parent(other) && self.set.is_subset(&other.set)
    }

    pub fn same_parent(&self, other: &SubgroupHandle) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) || self.parent.same_group(&other.parent)
    }

    pub fn belongs_to(&self, g: &PermGroup) -> bool {
        self.parent.same_group(g)
    }

    pub fn intersection(&self, other: &SubgroupHandle) -> SubgroupHandle {
        let set = self.set.intersection(&other.set);
        let t = self.parent.table().expect("table exists for handles");
        let gens = setops::generating_set(t, &set);
        Self::from_parts(self.parent.clone(), set, gens)
    }

    /// The subgroup generated by both.
    pub fn join(&self, other: &SubgroupHandle) -> SubgroupHandle {
        let t = self.parent.table().expect("table exists for handles");
        let set = t.extend(&self.set, &self.gens, &other.gens);
        let mut gens = self.gens.clone();
        gens.extend(&other.gens);
        Self::from_parts(self.parent.clone(), set, gens)
    }

    /// Is this subgroup normalized by every element of `ambient`?
    pub fn is_normal_in(&self, ambient: &SubgroupHandle) -> bool {
        let t = self.parent.table().expect("table exists for handles");
        setops::is_normalized_by(t, &self.set, &self.gens, &ambient.gens)
    }

    pub fn is_normal(&self) -> bool {
        self.is_normal_in(&SubgroupHandle::whole(&self.parent))
    }

    /// This subgroup as a permutation group in its own right.
    pub fn as_group(&self) -> PermGroup {
        self.parent.subgroup_as_group(&self.set, &self.gens)
    }

    /// The same subgroup inside `target`, which must contain all its elements.
    pub fn transfer_to(&self, target: &GroupRef) -> Result<SubgroupHandle> {
        let indices = self
            .elements()
            .iter()
            .map(|p| target.index_of(p).ok_or(Error::NotSubgroup))
            .collect::<Result<Vec<_>>>()?;
        let set = ElementSet::from_indices(target.order(), indices);
        let gens = self
            .generators()
            .iter()
            .map(|p| target.index_of(p).expect("generator transferred"))
            .collect();
        Ok(Self::from_parts(target.clone(), set, gens))
    }
}

impl PartialEq for SubgroupHandle {
    fn eq(&self, other: &Self) -> bool {
        self.same_parent(other) && self.set == other.set
    }
}

impl Eq for SubgroupHandle {}

impl fmt::Debug for SubgroupHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, gens {:?})", self.order(), self.generators())
    }
}
