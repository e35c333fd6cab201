//! Reductions along normal subgroups and quotients.

use crate::error::{Error, Result};
use crate::group::{GroupRef, OrbitSystem};
use crate::perm::Permutation;
use crate::structure::lattice::lattice;
use crate::structure::setops;
use crate::structure::{
    core_of_subgroup, coset_action, induced_block_action, quotient_group, CosetActionRecord, Quotient, SubgroupHandle,
};

use super::equivalence::actions_equivalent;
use super::mt::{is_mt_index, is_mt_stabilizer};

#[derive(Debug, Clone)]
pub struct NormalReduction {
    /// B = AH.
    pub b: SubgroupHandle,
    /// G acting on G:B.
    pub orbit_action: CosetActionRecord,
    /// G acting on the H-orbits of G:A.
    pub h_orbit_action: CosetActionRecord,
    /// B is an mt-stabilizer.
    pub mt_ok: bool,
    /// B ≠ A.
    pub larger_ok: bool,
    /// The two actions above are permutationally equivalent.
    pub equivalent_ok: bool,
}

impl NormalReduction {
    pub fn holds(&self) -> bool {
        self.mt_ok && self.larger_ok && self.equivalent_ok
    }
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::inapplicable(what))
    }
}

/// The action of G on the orbits of the normal subgroup `h` on the points of `record`.
pub fn orbit_quotient_action(record: &CosetActionRecord, h: &SubgroupHandle) -> Result<CosetActionRecord> {
    if !h.belongs_to(&record.source) {
        return Err(Error::NotSubgroup);
    }
    if !h.is_normal() {
        return Err(Error::NotNormal);
    }
    let gens: Vec<Permutation> = h
        .generator_indices()
        .iter()
        .map(|&i| record.image_of(i).clone())
        .collect();
    let orbits = OrbitSystem::from_generators(record.degree, &gens);
    induced_block_action(record, &orbits)
}

/// Given A ⊂ₘ G and a normal subgroup H with K ⊊ H ⊊ G, forms B = AH and
/// checks that B ⊂ₘ G, B ≠ A, and that G on G:B is G on the H-orbits of G:A.
pub fn reduce_by_normal(g: &GroupRef, a: &SubgroupHandle, h: &SubgroupHandle) -> Result<NormalReduction> {
    if !a.belongs_to(g) || !h.belongs_to(g) {
        return Err(Error::NotSubgroup);
    }
    require(h.is_normal(), "H is not normal in G")?;
    require(!h.is_whole(), "H = G")?;
    let k = core_of_subgroup(g, a)?;
    require(
        k.is_subgroup_of(h) && k != *h,
        "H does not properly contain the core of A",
    )?;
    require(is_mt_stabilizer(g, a)?.holds, "A is not an mt-stabilizer")?;

    let lat = lattice(g)?;
    let t = g.table()?;
    let bset = setops::product_set(t, a.set(), h.set());
    let bi = lat
        .find(&bset)
        .ok_or_else(|| Error::Internal("AH is not a subgroup for normal H".into()))?;
    let b = lat.handle(g, bi);
    let orbit_action = coset_action(g, &b)?;
    let h_orbit_action = orbit_quotient_action(&coset_action(g, a)?, h)?;
    let equivalent_ok = actions_equivalent(&orbit_action, &h_orbit_action).is_some();
    Ok(NormalReduction {
        mt_ok: is_mt_index(&lat, bi),
        larger_ok: b != *a,
        equivalent_ok,
        b,
        orbit_action,
        h_orbit_action,
    })
}

#[derive(Debug, Clone)]
pub struct OrbitActionReport {
    /// Action on the H-orbits.
    pub action: CosetActionRecord,
    /// The action on H-orbits is minimally transitive modulo its kernel.
    pub mt_ok: bool,
}

/// For a minimally transitive G (given by a faithful mt coset action) and a
/// proper normal subgroup H, checks that G is minimally transitive on the H-orbits.
pub fn orbit_action_check(g: &GroupRef, a: &SubgroupHandle, h: &SubgroupHandle) -> Result<OrbitActionReport> {
    require(
        h.belongs_to(g) && h.is_normal() && !h.is_whole(),
        "H is not a proper normal subgroup",
    )?;
    require(core_of_subgroup(g, a)?.is_trivial(), "the action is not faithful")?;
    require(is_mt_stabilizer(g, a)?.holds, "the action is not minimally transitive")?;
    let action = orbit_quotient_action(&coset_action(g, a)?, h)?;
    let mt_ok = is_mt_stabilizer(g, &action.point_stabilizer)?.holds;
    Ok(OrbitActionReport { action, mt_ok })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuotientTransfer {
    pub mt_in_quotient: bool,
    pub mt_in_g: bool,
    pub biconditional_ok: bool,
}

/// Compares A/N ⊂ₘ G/N with A ⊂ₘ G for N ⊴ G, N ⊆ A.
pub fn quotient_transfer(g: &GroupRef, n: &SubgroupHandle, a: &SubgroupHandle) -> Result<QuotientTransfer> {
    require(n.belongs_to(g) && a.belongs_to(g), "subgroups of another group")?;
    require(n.is_normal(), "N is not normal in G")?;
    let q = quotient_group(g, n)?;
    quotient_transfer_with(&q, g, n, a)
}

/// As [`quotient_transfer`] with a precomputed quotient G/N.
pub fn quotient_transfer_with(
    q: &Quotient,
    g: &GroupRef,
    n: &SubgroupHandle,
    a: &SubgroupHandle,
) -> Result<QuotientTransfer> {
    require(n.is_subgroup_of(a), "N is not contained in A")?;
    let aq = q.project(a);
    let mt_in_quotient = is_mt_stabilizer(&q.group, &aq)?.holds;
    let mt_in_g = is_mt_stabilizer(g, a)?.holds;
    Ok(QuotientTransfer {
        mt_in_quotient,
        mt_in_g,
        biconditional_ok: mt_in_quotient == mt_in_g,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::PermGroup;
    use crate::structure::all_subgroups;
    use std::sync::Arc;

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
    fn klein_reduces_to_degree_two() {
        let g = grp(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let h = sub(&g, &["(1 2)(3 4)"]);
        let r = reduce_by_normal(&g, &SubgroupHandle::trivial(&g), &h).unwrap();
        assert_eq!(r.b, h);
        assert_eq!(r.orbit_action.degree, 2);
        assert!(r.holds());
    }

    #[test]
    fn cyclic_reduces_to_degree_two() {
        let g = grp(4, &["(1 2 3 4)"]);
        let h = sub(&g, &["(1 3)(2 4)"]);
        let r = reduce_by_normal(&g, &SubgroupHandle::trivial(&g), &h).unwrap();
        assert_eq!(r.b.order(), 2);
        assert_eq!(r.orbit_action.degree, 2);
        assert!(r.holds());
    }

    #[test]
    fn reduction_preconditions() {
        let g = grp(4, &["(1 2 3 4)", "(1 2)"]);
        let one = SubgroupHandle::trivial(&g);
        let non_normal = sub(&g, &["(1 2)"]);
        assert!(reduce_by_normal(&g, &one, &non_normal).unwrap_err().is_inapplicable());
        assert!(reduce_by_normal(&g, &one, &SubgroupHandle::whole(&g))
            .unwrap_err()
            .is_inapplicable());
        assert!(reduce_by_normal(&g, &one, &one).unwrap_err().is_inapplicable());
    }

    #[test]
    fn reduction_holds_on_all_triples_of_small_groups() {
        for g in [
            grp(4, &["(1 2 3 4)", "(1 3)"]),
            grp(4, &["(1 2 3)", "(1 2)(3 4)"]),
            grp(6, &["(1 2 3 4 5 6)", "(1 6)(2 5)(3 4)"]),
        ] {
            let subs = all_subgroups(&g).unwrap();
            let mut tested = 0;
            for a in &subs {
                for h in subs.iter().filter(|h| h.is_normal()) {
                    match reduce_by_normal(&g, a, h) {
                        Ok(r) => {
                            assert!(r.holds());
                            tested += 1;
                        }
                        Err(e) => assert!(e.is_inapplicable()),
                    }
                }
            }
            assert!(tested > 0);
        }
    }

    #[test]
    fn orbit_action_examples() {
        let g = grp(4, &["(1 2 3 4)"]);
        let h = sub(&g, &["(1 3)(2 4)"]);
        let r = orbit_action_check(&g, &SubgroupHandle::trivial(&g), &h).unwrap();
        assert_eq!(r.action.degree, 2);
        assert!(r.mt_ok);
    }

    #[test]
    fn quotient_transfer_examples() {
        let g = grp(4, &["(1 2 3 4)", "(1 3)"]);
        for a in all_subgroups(&g).unwrap() {
            let r = quotient_transfer(&g, &SubgroupHandle::trivial(&g), &a).unwrap();
            assert!(r.biconditional_ok);
            if a.is_normal() {
                let r = quotient_transfer(&g, &a, &a).unwrap();
                assert!(r.mt_in_quotient && r.mt_in_g);
            }
        }
        let n = sub(&g, &["(1 3)(2 4)"]);
        for a in all_subgroups(&g).unwrap().iter().filter(|a| n.is_subgroup_of(a)) {
            assert!(quotient_transfer(&g, &n, a).unwrap().biconditional_ok);
        }
    }
}
