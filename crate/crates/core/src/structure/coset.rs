//! Cores, coset actions and quotients.

use std::sync::Arc;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::{GroupRef, OrbitSystem, PermGroup};
use crate::perm::Permutation;

use super::setops;
use super::subgroup::SubgroupHandle;

fn check_member(g: &GroupRef, a: &SubgroupHandle) -> Result<()> {
    if a.belongs_to(g) {
        Ok(())
    } else {
        Err(Error::NotSubgroup)
    }
}

/// K_{G:A}: the intersection of all conjugates of A.
pub fn core_of_subgroup(g: &GroupRef, a: &SubgroupHandle) -> Result<SubgroupHandle> {
    check_member(g, a)?;
    let t = g.table()?;
    let core = setops::core_in(t, a.set(), &ElementSet::full(g.order()));
    let gens = setops::generating_set(t, &core);
    Ok(SubgroupHandle::from_parts(g.clone(), core, gens))
}

/// A transitive action of a group, recorded on all its elements.
///
/// For a coset action on G:A the points are the right cosets Ag, ordered by
/// their least element; point 0 is the coset A itself.
#[derive(Clone)]
pub struct CosetActionRecord {
    pub source: GroupRef,
    pub point_stabilizer: SubgroupHandle,
    pub degree: usize,
    pub image: GroupRef,
    pub kernel: SubgroupHandle,
    /// For each source element index, the index of its image in `image`.
    pub element_map: Vec<usize>,
    /// A representative (source element index) for each point, carrying point 0 to it.
    pub coset_labels: Vec<usize>,
}

impl std::fmt::Debug for CosetActionRecord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CosetActionRecord")
            .field("degree", &self.degree)
            .field("source_order", &self.source.order())
            .field("image_order", &self.image.order())
            .field("kernel_order", &self.kernel.order())
            .finish()
    }
}

impl CosetActionRecord {
    /// Image permutation of the source element with index `g`.
    pub fn image_of(&self, g: usize) -> &Permutation {
        self.image.element(self.element_map[g])
    }

    /// Builds a record from the image permutation of every source element.
    fn from_images(source: &GroupRef, images: Vec<Permutation>, labels: Vec<usize>) -> Result<Self> {
        let degree = images[0].degree();
        let t = source.table()?;
        let gen_images: Vec<Permutation> = source
            .generators()
            .iter()
            .map(|p| images[source.index_of(p).expect("generator in group")].clone())
            .collect();
        let image = Arc::new(PermGroup::from_elements_unchecked(
            degree,
            gen_images,
            images.clone(),
            source.limits(),
        ));
        let element_map: Vec<usize> = images
            .iter()
            .map(|p| image.index_of(p).expect("image element"))
            .collect();
        let kernel_set = ElementSet::from_indices(source.order(), (0..source.order()).filter(|&i| element_map[i] == 0));
        let stab_set =
            ElementSet::from_indices(source.order(), (0..source.order()).filter(|&i| images[i].apply(0) == 0));
        let kernel_gens = setops::generating_set(t, &kernel_set);
        let stab_gens = setops::generating_set(t, &stab_set);
        Ok(CosetActionRecord {
            source: source.clone(),
            point_stabilizer: SubgroupHandle::from_parts(source.clone(), stab_set, stab_gens),
            degree,
            image,
            kernel: SubgroupHandle::from_parts(source.clone(), kernel_set, kernel_gens),
            element_map,
            coset_labels: labels,
        })
    }

    /// The same action restricted to the subgroup `sub`, viewed as a group of its own.
    pub fn restrict(&self, sub: &SubgroupHandle, sub_group: &GroupRef) -> Result<CosetActionRecord> {
        let images: Vec<Permutation> = sub_group
            .elements()
            .iter()
            .map(|p| {
                let i = self.source.index_of(p).ok_or(Error::NotSubgroup)?;
                if !sub.set().contains(i) {
                    return Err(Error::NotSubgroup);
                }
                Ok(self.image_of(i).clone())
            })
            .collect::<Result<_>>()?;
        let labels = (0..self.degree)
            .map(|pt| {
                (0..images.len())
                    .find(|&i| images[i].apply(0) == pt)
                    .unwrap_or(usize::MAX)
            })
            .collect();
        Self::from_images(sub_group, images, labels)
    }

    pub fn is_transitive(&self) -> bool {
        self.image.is_transitive()
    }
}

/// The action of G on the right cosets of A.
pub fn coset_action(g: &GroupRef, a: &SubgroupHandle) -> Result<CosetActionRecord> {
    check_member(g, a)?;
    let t = g.table()?;
    let n = g.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut labels = Vec::new();
    let a_elems: Vec<usize> = a.set().iter().collect();
    for x in 0..n {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let pt = labels.len();
        labels.push(x);
        for &y in &a_elems {
            coset_of[t.mul(y, x)] = pt;
        }
    }
    let degree = labels.len();
    let images: Vec<Permutation> = (0..n)
        .map(|x| Permutation::from_images_unchecked(labels.iter().map(|&r| coset_of[t.mul(r, x)] as u32).collect()))
        .collect();
    debug_assert_eq!(degree, a.index());
    CosetActionRecord::from_images(g, images, labels)
}

/// The action induced on a block system of `record`'s points. Blocks are
/// ordered by least point, so block 0 contains point 0.
pub fn induced_block_action(record: &CosetActionRecord, blocks: &OrbitSystem) -> Result<CosetActionRecord> {
    let mut block_of = vec![0usize; record.degree];
    for (b, block) in blocks.blocks.iter().enumerate() {
        for &p in block {
            block_of[p] = b;
        }
    }
    let nb = blocks.blocks.len();
    let mut images = Vec::with_capacity(record.source.order());
    for x in 0..record.source.order() {
        let p = record.image_of(x);
        let mut img = vec![u32::MAX; nb];
        for (b, block) in blocks.blocks.iter().enumerate() {
            let target = block_of[p.apply(block[0])];
            if block.iter().any(|&q| block_of[p.apply(q)] != target) {
                return Err(Error::Internal("orbits do not form a block system".into()));
            }
            img[b] = target as u32;
        }
        let perm = Permutation::from_images(img.into_iter().map(|v| v as usize).collect())
            .map_err(|_| Error::Internal("block images are not a permutation".into()))?;
        images.push(perm);
    }
    let labels = (0..nb)
        .map(|b| {
            (0..images.len())
                .find(|&i| images[i].apply(0) == b)
                .expect("transitive")
        })
        .collect();
    CosetActionRecord::from_images(&record.source, images, labels)
}

/// G/N realized as the image of the coset action on G:N, with the projection map.
pub struct Quotient {
    pub group: GroupRef,
    /// Source element index to quotient element index.
    pub projection: Vec<usize>,
    pub record: CosetActionRecord,
}

impl Quotient {
    /// The image of a subgroup of the source.
    pub fn project(&self, a: &SubgroupHandle) -> SubgroupHandle {
        let set = ElementSet::from_indices(self.group.order(), a.set().iter().map(|i| self.projection[i]));
        let gens = a
            .generator_indices()
            .iter()
            .map(|&i| self.projection[i])
            .filter(|&i| i != 0)
            .collect();
        SubgroupHandle::from_parts(self.group.clone(), set, gens)
    }

    /// Full preimage of a quotient subgroup.
    pub fn preimage(&self, sub: &SubgroupHandle) -> SubgroupHandle {
        let src = &self.record.source;
        let set = ElementSet::from_indices(
            src.order(),
            (0..src.order()).filter(|&i| sub.set().contains(self.projection[i])),
        );
        let t = src.table().expect("source has a table");
        let gens = setops::generating_set(t, &set);
        SubgroupHandle::from_parts(src.clone(), set, gens)
    }
}

pub fn quotient_group(g: &GroupRef, n: &SubgroupHandle) -> Result<Quotient> {
    check_member(g, n)?;
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let record = coset_action(g, n)?;
    Ok(Quotient {
        group: record.image.clone(),
        projection: record.element_map.clone(),
        record,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::lattice::all_subgroups;

    fn grp(degree: usize, gens: &[&str]) -> GroupRef {
        Arc::new(PermGroup::from_cycle_strings(degree, gens).unwrap())
    }

    fn sub(g: &GroupRef, gens: &[&str]) -> SubgroupHandle {
        let perms: Vec<Permutation> = gens
            .iter()
            .map(|s| Permutation::parse(s, g.degree()).unwrap())
            .collect();
        SubgroupHandle::generated(g, &perms).unwrap()
    }

    #[test]
    fn core_examples() {
        let s3 = grp(3, &["(1 2 3)", "(1 2)"]);
        let c2 = sub(&s3, &["(1 2)"]);
        // oracle: intersect the three conjugates explicitly
        let mut inter: Vec<Permutation> = s3.elements().to_vec();
        for x in s3.elements() {
            let conj: Vec<Permutation> = c2.elements().iter().map(|a| a.conjugate_by(x)).collect();
            inter.retain(|p| conj.contains(p));
        }
        assert_eq!(inter, vec![Permutation::identity(3)]);
        assert!(core_of_subgroup(&s3, &c2).unwrap().is_trivial());

        let whole = SubgroupHandle::whole(&s3);
        assert_eq!(core_of_subgroup(&s3, &whole).unwrap(), whole);
        let c3 = sub(&s3, &["(1 2 3)"]);
        assert_eq!(core_of_subgroup(&s3, &c3).unwrap(), c3);
    }

    #[test]
    fn core_is_largest_normal_subgroup_inside() {
        let s4 = grp(4, &["(1 2 3 4)", "(1 2)"]);
        let subs = all_subgroups(&s4).unwrap();
        for a in &subs {
            let core = core_of_subgroup(&s4, a).unwrap();
            let best = subs
                .iter()
                .filter(|n| n.is_normal() && n.is_subgroup_of(a))
                .max_by_key(|n| n.order())
                .unwrap();
            assert_eq!(&core, best);
            assert!(core.is_normal());
        }
    }

    #[test]
    fn coset_action_examples() {
        let s3 = grp(3, &["(1 2 3)", "(1 2)"]);
        let c2 = sub(&s3, &["(1 2)"]);
        let rec = coset_action(&s3, &c2).unwrap();
        assert_eq!(rec.degree, 3);
        assert!(rec.kernel.is_trivial());
        assert_eq!(rec.image.order(), 6);
        assert!(rec.is_transitive());
        assert_eq!(rec.point_stabilizer, c2);
        assert_eq!(rec.coset_labels[0], 0);

        let reg = coset_action(&s3, &SubgroupHandle::trivial(&s3)).unwrap();
        assert_eq!(reg.degree, 6);
        assert_eq!(reg.image.order(), 6);

        let c3 = sub(&s3, &["(1 2 3)"]);
        let rec = coset_action(&s3, &c3).unwrap();
        assert_eq!(rec.kernel, c3);
        assert_eq!(rec.image.order(), 2);
    }

    #[test]
    fn kernel_equals_core_across_lattice() {
        let g = grp(4, &["(1 2 3 4)", "(1 3)"]);
        for a in all_subgroups(&g).unwrap() {
            let rec = coset_action(&g, &a).unwrap();
            assert_eq!(rec.kernel, core_of_subgroup(&g, &a).unwrap());
            assert_eq!(rec.image.order() * rec.kernel.order(), g.order());
            assert!(rec.is_transitive());
        }
    }

    #[test]
    fn quotient_examples() {
        let s3 = grp(3, &["(1 2 3)", "(1 2)"]);
        let c3 = sub(&s3, &["(1 2 3)"]);
        assert_eq!(quotient_group(&s3, &c3).unwrap().group.order(), 2);
        assert_eq!(
            quotient_group(&s3, &SubgroupHandle::trivial(&s3))
                .unwrap()
                .group
                .order(),
            6
        );
        assert_eq!(
            quotient_group(&s3, &SubgroupHandle::whole(&s3)).unwrap().group.order(),
            1
        );
        let c2 = sub(&s3, &["(1 2)"]);
        assert!(matches!(quotient_group(&s3, &c2), Err(Error::NotNormal)));
    }

    #[test]
    fn projection_is_a_homomorphism_with_kernel_n() {
        let g = grp(4, &["(1 2 3 4)", "(1 2)"]);
        let v4 = sub(&g, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let q = quotient_group(&g, &v4).unwrap();
        let t = g.table().unwrap();
        let qt = q.group.table().unwrap();
        for a in 0..g.order() {
            for b in 0..g.order() {
                assert_eq!(q.projection[t.mul(a, b)], qt.mul(q.projection[a], q.projection[b]));
            }
            assert_eq!(q.projection[a] == 0, v4.set().contains(a));
        }
        assert_eq!(q.group.order(), 6);
    }
}
