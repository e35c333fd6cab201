//! Full subgroup lattices by cyclic extension.
//!
//! Starting from the trivial group, every known subgroup is extended by each
//! cyclic subgroup it does not contain; results are deduplicated by element
//! set. Every subgroup is a join of cyclic subgroups, so the search is complete.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::bitset::ElementSet;
use crate::error::Result;
use crate::group::{GroupRef, PermGroup, Table};

use super::setops;
use super::subgroup::SubgroupHandle;

pub struct Lattice {
    sets: Vec<ElementSet>,
    gens: Vec<Vec<usize>>,
    orders: Vec<usize>,
    normal: Vec<bool>,
    index: HashMap<ElementSet, usize>,
    maximal: OnceLock<Vec<usize>>,
    cores: OnceLock<Vec<usize>>,
    /// Per subgroup: a product-criterion witness against minimal transitivity, if any.
    pub(crate) mt_witness: OnceLock<Vec<Option<usize>>>,
}

impl Lattice {
    pub(crate) fn build(g: &PermGroup, t: &Table) -> Lattice {
        let n = g.order();
        // distinct cyclic subgroups with a generator each
        let mut cyclic: Vec<(ElementSet, usize)> = Vec::new();
        let mut cyclic_seen: HashMap<ElementSet, ()> = HashMap::new();
        for x in 1..n {
            let c = t.closure([x]);
            if cyclic_seen.insert(c.clone(), ()).is_none() {
                cyclic.push((c, x));
            }
        }

        let mut sets = vec![ElementSet::from_indices(n, [0])];
        let mut gens: Vec<Vec<usize>> = vec![vec![]];
        let mut index: HashMap<ElementSet, usize> = HashMap::new();
        index.insert(sets[0].clone(), 0);
        let mut head = 0;
        while head < sets.len() {
            let base = sets[head].clone();
            let base_gens = gens[head].clone();
            head += 1;
            for (c, x) in &cyclic {
                if c.is_subset(&base) {
                    continue;
                }
                let next = t.extend(&base, &base_gens, &[*x]);
                if !index.contains_key(&next) {
                    index.insert(next.clone(), sets.len());
                    let mut ng = base_gens.clone();
                    ng.push(*x);
                    sets.push(next);
                    gens.push(ng);
                }
            }
        }

        let mut order: Vec<usize> = (0..sets.len()).collect();
        order.sort_by(|&a, &b| {
            sets[a]
                .count()
                .cmp(&sets[b].count())
                .then_with(|| sets[a].cmp_elements(&sets[b]))
        });
        let sets: Vec<ElementSet> = order.iter().map(|&i| sets[i].clone()).collect();
        let gens: Vec<Vec<usize>> = order.iter().map(|&i| gens[i].clone()).collect();
        let orders = sets.iter().map(|s| s.count()).collect();
        let index = sets.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        let group_gens: Vec<usize> = g.generators().iter().filter_map(|p| g.index_of(p)).collect();
        let normal = sets
            .iter()
            .zip(&gens)
            .map(|(s, sg)| setops::is_normalized_by(t, s, sg, &group_gens))
            .collect();
        Lattice {
            sets,
            gens,
            orders,
            normal,
            index,
            maximal: OnceLock::new(),
            cores: OnceLock::new(),
            mt_witness: OnceLock::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn set(&self, i: usize) -> &ElementSet {
        &self.sets[i]
    }

    pub fn gens(&self, i: usize) -> &[usize] {
        &self.gens[i]
    }

    pub fn order(&self, i: usize) -> usize {
        self.orders[i]
    }

    pub fn is_normal(&self, i: usize) -> bool {
        self.normal[i]
    }

    /// Index of the whole group.
    pub fn top(&self) -> usize {
        self.sets.len() - 1
    }

    pub fn find(&self, set: &ElementSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    pub fn normal_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.normal[i])
    }

    /// Indices of subgroups contained in `set`.
    pub fn within<'a>(&'a self, set: &'a ElementSet) -> impl Iterator<Item = usize> + 'a {
        let bound = set.count();
        (0..self.len()).filter(move |&i| self.orders[i] <= bound && self.sets[i].is_subset(set))
    }

    /// Indices of subgroups containing `set`.
    pub fn containing<'a>(&'a self, set: &'a ElementSet) -> impl Iterator<Item = usize> + 'a {
        let bound = set.count();
        (0..self.len()).filter(move |&i| self.orders[i] >= bound && set.is_subset(&self.sets[i]))
    }

    /// Maximal subgroups of the subgroup `x` (given by lattice index).
    pub fn maximal_within(&self, x: usize) -> Vec<usize> {
        let xs = &self.sets[x];
        let proper: Vec<usize> = self.within(xs).filter(|&i| i != x).collect();
        proper
            .iter()
            .copied()
            .filter(|&m| {
                !proper.iter().any(|&l| {
                    l != m
                        && self.orders[l] > self.orders[m]
                        && self.orders[l].is_multiple_of(self.orders[m])
                        && self.sets[m].is_subset(&self.sets[l])
                })
            })
            .collect()
    }

    /// Maximal subgroups of the whole group.
    pub fn maximal(&self) -> &[usize] {
        self.maximal.get_or_init(|| self.maximal_within(self.top()))
    }

    /// Lattice index of the core of each subgroup: the largest normal subgroup inside it.
    pub fn cores(&self) -> &[usize] {
        self.cores.get_or_init(|| {
            let normals: Vec<usize> = self.normal_indices().collect();
            (0..self.len())
                .map(|i| {
                    normals
                        .iter()
                        .rev()
                        .copied()
                        .find(|&n| self.orders[n] <= self.orders[i] && self.sets[n].is_subset(&self.sets[i]))
                        .expect("trivial subgroup is normal")
                })
                .collect()
        })
    }

    pub fn handle(&self, parent: &GroupRef, i: usize) -> SubgroupHandle {
        SubgroupHandle::from_parts(parent.clone(), self.sets[i].clone(), self.gens[i].clone())
    }
}

/// The cached subgroup lattice of `g`.
pub fn lattice(g: &PermGroup) -> Result<Arc<Lattice>> {
    let t = g.table()?;
    Ok(g.lattice.get_or_init(|| Arc::new(Lattice::build(g, t))).clone())
}

/// Every subgroup of `g` exactly once, sorted by (order, element list).
pub fn all_subgroups(g: &GroupRef) -> Result<Vec<SubgroupHandle>> {
    let lat = lattice(g)?;
    Ok((0..lat.len()).map(|i| lat.handle(g, i)).collect())
}

/// The maximal elements of the proper-subgroup poset.
pub fn maximal_subgroups(g: &GroupRef) -> Result<Vec<SubgroupHandle>> {
    let lat = lattice(g)?;
    Ok(lat.maximal().iter().map(|&i| lat.handle(g, i)).collect())
}
